"""Worked examples: an integer matrix ring, a triangular quotient, a U_2 witness, localization."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import numpy as np

from .. import structure as st
from ..constructions import Finding, build_matrix_subring
from ..errors import UnknownExample
from ..matrices import encode
from ..properties import check_property, replay_witness
from ..ring import FiniteRing, cyclic_ring, direct_product, finite_field, is_isomorphic, quotient_ring
from ..verdict import Verdict
from .report import Report, make_report
from .specs import ring_from_spec, strict_upper_mask

EXAMPLE_IDS = ("e2_7", "triangular_quotient", "u2_witness", "localization")


@dataclass(frozen=True)
class IntMat2:
    """2 x 2 matrix over the integers with exact arithmetic."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def of(cls, rows) -> "IntMat2":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    def __add__(self, o: "IntMat2") -> "IntMat2":
        return IntMat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __matmul__(self, o: "IntMat2") -> "IntMat2":
        return IntMat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __pow__(self, n: int) -> "IntMat2":
        out = IntMat2(1, 0, 0, 1)
        for _ in range(n):
            out = out @ self
        return out

    def is_zero(self) -> bool:
        return self.a == self.b == self.c == self.d == 0

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def in_congruence_ring(self) -> bool:
        """Entries satisfy a = d and b = c modulo 2."""
        return (self.a - self.d) % 2 == 0 and (self.b - self.c) % 2 == 0


class _Assertions:
    def __init__(self):
        self.items = []
        self.findings: list[Finding] = []

    def check(self, name: str, passed: bool, value=None):
        self.items.append({"name": name, "passed": bool(passed), "value": value})
        return passed

    @property
    def ok(self) -> bool:
        return all(i["passed"] for i in self.items)

    def verdict(self, trace: str) -> Verdict:
        extra = {"assertions": self.items, "findings": [f.to_dict() for f in self.findings]}
        if self.ok:
            return Verdict.holds(trace, **extra)
        failed = [i["name"] for i in self.items if not i["passed"]]
        return Verdict.fails((), f"failed: {', '.join(failed)}", **extra)


def example_integer_matrices(N: int = 16) -> Verdict:
    P = IntMat2.of([[2, 2], [0, 0]])
    Q = IntMat2.of([[0, 2], [0, -2]])
    C = IntMat2.of([[3, 4], [0, 1]])
    K = IntMat2.of([[4, 0], [0, 0]])
    A = _Assertions()
    for name, M in (("P", P), ("Q", Q), ("C", C), ("K", K)):
        A.check(f"{name} in congruence ring", M.in_congruence_ring(), M.rows())
    A.check("unity in congruence ring", IntMat2(1, 0, 0, 1).in_congruence_ring())
    A.check("PQ = 0", (P @ Q).is_zero(), (P @ Q).rows())
    pcq = P @ C @ Q
    A.check("PCQ = [[0,-8],[0,0]]", pcq == IntMat2(0, -8, 0, 0), pcq.rows())
    Kn = IntMat2(1, 0, 0, 1)
    for n in range(1, N + 1):
        Kn = Kn @ K
        A.check(f"K^{n} = diag(4^{n},0)", Kn == IntMat2(4**n, 0, 0, 0))
        right, left = pcq @ Kn, Kn @ pcq
        A.check(f"PCQ K^{n} = 0", right.is_zero())
        A.check(f"K^{n} PCQ = [[0,-8*4^{n}],[0,0]] != 0", left == IntMat2(0, -8 * 4**n, 0, 0) and not left.is_zero(),
                left.rows())
    # idempotents with small entries: only 0 and the unity
    found = []
    for a, b, c, d in itertools.product(range(-4, 5), repeat=4):
        M = IntMat2(a, b, c, d)
        if M.in_congruence_ring() and M @ M == M:
            found.append(M.rows())
    A.check("idempotents with entries in [-4,4] are 0 and I", found == [[[0, 0], [0, 0]], [[1, 0], [0, 1]]], found)
    return A.verdict(
        f"checked n = 1..{N}; for all n the entry -8*4^n is a nonzero integer, so K^n PCQ never vanishes"
    )


def _matrix_index(R: FiniteRing, rows) -> int:
    """Index of the matrix with the given base-ring entries inside a matrix ring R."""
    code = int(encode(np.array([rows], dtype=np.int64), R.matrix.base.size)[0])
    codes = encode(R.matrix.entries, R.matrix.base.size)
    i = int(np.searchsorted(codes, code))
    if i >= len(codes) or codes[i] != code:
        raise KeyError(f"{rows} is not an element of {R.name}")
    return i


def example_triangular_quotient() -> Verdict:
    R = build_matrix_subring("T_n", finite_field(2), 3)
    A = _Assertions()
    A.check("|R| = 64", R.size == 64, R.size)
    v = check_property(R, "h_semicommutative")
    A.check("R is not H-semicommutative", v.failed, v.render(R.labels))
    A.check("lexicographic witness replays", replay_witness(R, "h_semicommutative", v))
    # the stated witness with c = 1, the only nonzero value over GF(2)
    a = _matrix_index(R, [[0, 1, 1], [0, 0, 0], [0, 0, 0]])  # -1 = 1 in GF(2)
    b = _matrix_index(R, [[0, 0, 0], [0, 0, 1], [0, 0, 1]])
    x = _matrix_index(R, [[0, 0, 0], [0, 0, 0], [0, 0, 1]])
    A.check("AB = 0", R.mul[a, b] == 0)
    c1 = _matrix_index(R, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    acb1 = int(R.mul[R.mul[a, c1], b])
    if acb1 == 0:
        A.findings.append(
            Finding(
                "Tn(GF(2),3)",
                "ACB = E13 for C with (3,3) entry c and X = cE33, c != 0",
                "ACB = (1-c)E13, which vanishes at c = 1; the witness needs C with (3,3) entry 0",
                "paper-discrepancy",
                ("A=" + R.labels[a], "B=" + R.labels[b], "C=" + R.labels[c1]),
            )
        )
    c0 = _matrix_index(R, [[1, 1, 0], [0, 1, 0], [0, 0, 0]])
    acb0 = int(R.mul[R.mul[a, c0], b])
    stated = Verdict.fails([("u", a), ("v", b), ("r", c0), ("x", x)])
    A.check("ACB = E13 with (3,3) entry of C set to 0", R.labels[acb0] == "E13", R.labels[acb0])
    A.check("(A, B, C, X) replays as an H-semicommutativity failure", replay_witness(R, "h_semicommutative", stated))
    I = strict_upper_mask(R)
    A.check("I is a two-sided ideal", st.ideal_generated_mask(R, I, "two_sided").sum() == I.sum())
    A.check("I is inside Nil(R)", bool((st.nil_mask(R) | ~I).all()))
    A.check("I^3 = 0 and I^2 != 0", st.ideal_nilpotency_index(R, I) == 3, st.ideal_nilpotency_index(R, I))
    Q, _ = quotient_ring(R, I)
    A.check("|R/I| = 8", Q.size == 8, Q.size)
    F3 = direct_product(finite_field(2), direct_product(finite_field(2), finite_field(2)))
    A.check("R/I is isomorphic to GF(2)^3", is_isomorphic(Q, F3))
    A.check("R/I is H-semicommutative", check_property(Q, "h_semicommutative").ok)
    return A.verdict("T_3(GF(2)) modulo its strictly upper triangular ideal")


def example_u2_witness() -> Verdict:
    U = build_matrix_subring("U_n", cyclic_ring(16), 2)
    A = _Assertions()
    idx = {}
    for name, rows in (
        ("A", [[2, 8], [0, 8]]),
        ("B", [[8, 8], [0, 2]]),
        ("C", [[0, 1], [0, 0]]),
        ("M", [[2, 0], [0, 0]]),
    ):
        try:
            idx[name] = _matrix_index(U, rows)
            A.check(f"{name} in U_2(Z16)", True)
        except KeyError:
            A.check(f"{name} in U_2(Z16)", False, rows)
            return A.verdict("matrix outside U_2(Z16)")
    a, b, c, m = idx["A"], idx["B"], idx["C"], idx["M"]
    acb = int(U.mul[U.mul[a, c], b])
    A.check("AB = 0", U.mul[a, b] == 0)
    A.check("ACB = [[0,4],[0,0]]", acb == _matrix_index(U, [[0, 4], [0, 0]]), U.labels[acb])
    A.check("ACB M = 0", U.mul[acb, m] == 0)
    A.check("M ACB = [[0,8],[0,0]]", U.mul[m, acb] == _matrix_index(U, [[0, 8], [0, 0]]), U.labels[U.mul[m, acb]])
    stated = Verdict.fails([("u", a), ("v", b), ("r", c), ("x", m)])
    A.check("(A, B, C, M) replays as a central semicommutativity failure",
            replay_witness(U, "central_semicommutative", stated))
    v = check_property(U, "central_semicommutative")
    A.check("U_2(Z16) is not central semicommutative", v.failed, v.render(U.labels))
    A.check("lexicographic witness replays", replay_witness(U, "central_semicommutative", v))
    A.check("U_2(Z16) is H-semicommutative", check_property(U, "h_semicommutative").ok)
    return A.verdict("U_2(Z16) with a = c = 2")


def central_regular_non_units(R: FiniteRing) -> list[int]:
    """Central elements that are not zero divisors yet have no inverse."""
    Z = st.center_mask(R)
    out = []
    for s in np.flatnonzero(Z):
        regular = not (R.mul[s, 1:] == 0).any() and not (R.mul[1:, s] == 0).any()
        if regular and not (R.mul[s] == R.one).any():
            out.append(int(s))
    return out


def example_localization(catalog=None) -> Verdict:
    from .catalog import build_catalog

    catalog = build_catalog() if catalog is None else catalog
    A = _Assertions()
    for entry in catalog:
        R = entry.ring
        if not R.is_unital or R.size == 1:
            continue
        bad = central_regular_non_units(R)
        A.check(f"{entry.name}: central regular elements are units", not bad, [R.labels[s] for s in bad])
    return A.verdict("in a finite ring a central regular element permutes R, so it is a unit and S^-1 R = R")


def paper_example(example_id: str, N: int = 16, catalog=None) -> Report:
    t0 = time.perf_counter()
    if example_id == "e2_7":
        v, ring = example_integer_matrices(N), "IntMat2"
    elif example_id == "triangular_quotient":
        v, ring = example_triangular_quotient(), "Tn(GF(2),3)"
    elif example_id == "u2_witness":
        v, ring = example_u2_witness(), "Un(Z16,2)"
    elif example_id == "localization":
        v, ring = example_localization(catalog), "catalog"
    else:
        raise UnknownExample(f"unknown example {example_id!r}; known: {', '.join(EXAMPLE_IDS)}")
    ms = (time.perf_counter() - t0) * 1000
    return make_report(_NO_LABELS, ring, example_id, None, v, ms)


class _Labels:
    labels = ()


_NO_LABELS = _Labels()

__all__ = ["EXAMPLE_IDS", "IntMat2", "paper_example", "ring_from_spec"]
