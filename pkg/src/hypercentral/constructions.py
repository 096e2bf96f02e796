"""Upper-triangular matrix subrings and bounded-degree polynomial checks."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import structure as st
from .errors import ConstructionNotARing, DegreeOverflow, PreconditionViolated, SizeCapExceeded
from .ring import DEFAULT_SIZE_CAP, FiniteRing, ideal_violation, ring_from_matrices
from .verdict import Verdict

FAMILIES = ("T_n", "S_n", "S_prime_n", "T_R_n", "T_prime_R_n", "A_n", "B_n", "U_n")

# spec-string keyword for each family
FAMILY_KEYWORDS = {
    "T_n": "Tn",
    "S_n": "Sn",
    "S_prime_n": "Sprime",
    "T_R_n": "TRn",
    "T_prime_R_n": "TprimeRn",
    "A_n": "An",
    "B_n": "Bn",
    "U_n": "Un",
}

DEFAULT_PAIR_BUDGET = 1 << 26


@dataclass(frozen=True)
class Slot:
    """One summand: coefficients drawn from R or N(R) times a 0/1 pattern matrix."""

    over: str  # "R" or "N(R)"
    pattern: str  # "E12", "I", "V^2", ...
    cells: tuple[tuple[int, int], ...]  # 1-based positions holding the coefficient


@dataclass(frozen=True)
class Finding:
    subject: str
    claim: str
    observed: str
    severity: str = "paper-discrepancy"
    witness: tuple = ()

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "claim": self.claim,
            "observed": self.observed,
            "severity": self.severity,
            "witness": list(self.witness),
        }


def _e(over, i, j) -> Slot:
    return Slot(over, f"E{i}{j}", ((i, j),))


def _v_power(over, n, k) -> Slot:
    return Slot(over, f"V^{k}", tuple((i, i + k) for i in range(1, n - k + 1)))


def _identity(n) -> Slot:
    return Slot("R", "I", tuple((i, i) for i in range(1, n + 1)))


def _nil_diagonal(n) -> list[Slot]:
    return [_e("N(R)", i, i) for i in range(1, n + 1)]


def family_slots(family: str, n: int) -> list[Slot]:
    """Evaluate a family's defining sum at size n, dropping empty ranges."""
    if n < 2:
        raise PreconditionViolated("matrix subring families need n >= 2")
    h, h1 = n // 2, (n + 1) // 2
    strict = [_e("R", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if family == "T_n":
        return [_e("R", i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    if family == "S_n":
        return [_identity(n)] + strict
    if family == "S_prime_n":
        return _nil_diagonal(n) + strict
    if family == "T_R_n":
        return [_identity(n)] + [_v_power("R", n, l - 1) for l in range(2, n + 1)]
    if family == "T_prime_R_n":
        return _nil_diagonal(n) + [_v_power("R", n, l - 1) for l in range(2, n + 1)]
    if family == "A_n":
        shifts = [_v_power("R", n, l - 1) for l in range(2, h + 1)]
        block = [_e("R", i, j) for i in range(1, h1 + 1) for j in range(h + i, n + 1)]
        return _nil_diagonal(n) + shifts + block
    if family == "B_n":
        shifts = [_v_power("R", n, l - 2) for l in range(3, h + 1)]
        block = [
            _e("R", i, j) for i in range(1, min(h1 + 1, n) + 1) for j in range(max(h + i - 1, 1), n + 1)
        ]
        return _nil_diagonal(n) + shifts + block
    if family == "U_n":
        k = (n - 1) // 2
        # the inner sum over j carries only a lower limit; it is read as one term
        middle = [_e("R", i, h + 1) for i in range(1, k + 1)]
        last = [_e("R", k + 1, j) for j in range(k + 2, n + 1)]
        return _nil_diagonal(n) + middle + last
    raise KeyError(f"unknown family {family!r}")


def index_trace(slots: list[Slot], n: int) -> dict:
    """Which positions are free over R, over N(R), tied to a shift/identity, or zero."""
    cells = {}
    for s in slots:
        kind = s.over if len(s.cells) == 1 else f"tied:{s.pattern}"
        for i, j in s.cells:
            cells.setdefault(f"{i}{j}", []).append(kind)
    positions = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            kinds = cells.get(f"{i}{j}", [])
            if "R" in kinds:
                positions[f"{i}{j}"] = "R"
            elif kinds:
                positions[f"{i}{j}"] = "+".join(sorted(set(kinds)))
            else:
                positions[f"{i}{j}"] = "0"
    return {"slots": [f"{s.over}*{s.pattern}" for s in slots], "positions": positions}


def _ni_witness(R: FiniteRing):
    bad = ideal_violation(R, st.nil_mask(R), "additive")
    if bad is None:
        return None
    return bad[1]


def slot_elements(R: FiniteRing, slots: list[Slot], n: int, cap: int = DEFAULT_SIZE_CAP, name: str = "") -> np.ndarray:
    """All matrices obtained as a sum of one coefficient per slot, deduplicated.

    The set only grows slot by slot, so it stops as soon as it passes ``cap``.
    """
    nil = np.flatnonzero(st.nil_mask(R))
    full = np.arange(R.size)
    acc = np.zeros((1, n, n), dtype=np.int64)
    for s in slots:
        coeffs = full if s.over == "R" else nil
        nxt = np.repeat(acc, len(coeffs), axis=0)
        c = np.tile(coeffs, len(acc))
        for i, j in s.cells:
            nxt[:, i - 1, j - 1] = R.add[nxt[:, i - 1, j - 1], c]
        flat = nxt.reshape(len(nxt), -1)
        _, keep = np.unique(flat, axis=0, return_index=True)
        acc = nxt[np.sort(keep)]
        if len(acc) > cap:
            raise SizeCapExceeded(len(acc), cap, name or "matrix subring")
    return acc


def build_matrix_subring(family: str, R: FiniteRing, n: int, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    """Ring on the literal element set of a family; raises ConstructionNotARing if not closed."""
    slots = family_slots(family, n)
    name = f"{FAMILY_KEYWORDS[family]}({R.name},{n})"
    if any(s.over == "N(R)" for s in slots):
        w = _ni_witness(R)
        if w is not None:
            raise ConstructionNotARing(
                f"{name}: nilpotents of {R.name} are not closed under addition", ("nil_sum",) + tuple(w)
            )
    entries = slot_elements(R, slots, n, cap, name)
    S = ring_from_matrices(R, entries, name=name)
    S.memo["index_trace"] = index_trace(slots, n)
    return S


def v_matrix(R: FiniteRing, n: int) -> np.ndarray:
    """The shift matrix with the unity on the superdiagonal, as base-ring indices."""
    if n < 2:
        raise PreconditionViolated("n >= 2 required")
    if not R.is_unital:
        raise PreconditionViolated("the shift matrix needs a unity")
    V = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 1):
        V[i, i + 1] = R.one
    return V


def matmul(R: FiniteRing, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    for k in range(n):
        out = R.add[out, R.mul[A[:, k][:, None], B[k, :][None, :]]]
    return out


# -- bounded polynomials -------------------------------------------------------


@dataclass(frozen=True)
class BoundedPoly:
    ring: FiniteRing = field(repr=False)
    coeffs: tuple[int, ...]
    bound: int

    def __post_init__(self):
        if len(self.coeffs) > self.bound + 1:
            raise DegreeOverflow(f"{len(self.coeffs) - 1} coefficients past degree bound {self.bound}")

    @property
    def degree(self) -> int:
        nz = [i for i, c in enumerate(self.coeffs) if c != 0]
        return nz[-1] if nz else -1

    def is_zero(self) -> bool:
        return self.degree < 0

    def normalized(self) -> tuple[int, ...]:
        return self.coeffs[: self.degree + 1]


def poly_mul(f: BoundedPoly, g: BoundedPoly) -> BoundedPoly:
    R = f.ring
    bound = max(f.bound, g.bound)
    if f.is_zero() or g.is_zero():
        return BoundedPoly(R, (), bound)
    if f.degree + g.degree > bound:
        raise DegreeOverflow(f"degree {f.degree} + {g.degree} exceeds bound {bound}")
    out = [0] * (f.degree + g.degree + 1)
    for i, a in enumerate(f.normalized()):
        for j, b in enumerate(g.normalized()):
            out[i + j] = int(R.add[out[i + j], R.mul[a, b]])
    return BoundedPoly(R, tuple(out), bound)


def _all_polys(R: FiniteRing, d: int) -> np.ndarray:
    """Every coefficient vector (c_0..c_d), in lexicographic order."""
    return np.array(list(itertools.product(range(R.size), repeat=d + 1)), dtype=np.int64)


def _budget(R: FiniteRing, d: int, budget: int, what: str) -> np.ndarray:
    count = R.size ** (d + 1)
    if count * count > budget:
        raise SizeCapExceeded(count * count, budget, what)
    return _all_polys(R, d)


def _zero_product_partners(R: FiniteRing, f: np.ndarray, G: np.ndarray) -> np.ndarray:
    """Indices of rows g of G with f*g = 0, filtering one coefficient at a time."""
    d = len(f) - 1
    alive = np.arange(len(G))
    for t in range(2 * d + 1):
        c = np.zeros(len(alive), dtype=np.int64)
        for i in range(max(0, t - d), min(t, d) + 1):
            c = R.add[c, R.mul[f[i], G[alive, t - i]]]
        alive = alive[c == 0]
        if not len(alive):
            break
    return alive


def armendariz_check(R: FiniteRing, d: int, budget: int = DEFAULT_PAIR_BUDGET) -> Verdict:
    """f*g = 0 with deg f, deg g <= d forces every f_l g_k = 0."""
    if d < 0:
        raise PreconditionViolated("degree bound must be non-negative")
    if st.nil_mask(R)[1:].sum() == 0:
        return Verdict.holds("reduced rings have no zero-product pairs with nonzero coefficient products")
    G = _budget(R, d, budget, f"armendariz degree {d}")
    for f in G:
        partners = _zero_product_partners(R, f, G)
        if not len(partners):
            continue
        cross = R.mul[f[None, :, None], G[partners][:, None, :]]
        bad = (cross != 0).reshape(len(partners), -1).any(axis=1)
        if bad.any():
            g = G[partners[np.argmax(bad)]]
            l, k = np.argwhere(R.mul[f[:, None], g[None, :]] != 0)[0]
            return Verdict.fails(
                [("f_l", f[l]), ("g_k", g[k])],
                "f*g = 0 but the coefficient product f_l g_k is nonzero",
                f=[int(c) for c in f],
                g=[int(c) for c in g],
                l=int(l),
                k=int(k),
            )
    return Verdict.holds(f"all zero-product pairs up to degree {d} have vanishing coefficient products")


def polyext_h_check(R: FiniteRing, d: int, budget: int = DEFAULT_PAIR_BUDGET) -> Verdict:
    """Coefficientwise test: f*g = 0 implies every coefficient of f r g is hypercentral."""
    T = st.hypercenter_mask(R)
    if T.all():
        return Verdict.holds("every element is hypercentral")
    G = _budget(R, d, budget, f"polynomial surrogate degree {d}")
    for f in G:
        partners = _zero_product_partners(R, f, G)
        if not len(partners):
            continue
        fr = R.mul[f[:, None], np.arange(R.size)[None, :]]  # fr[i, r] = f_i r
        for gi in partners:
            g = G[gi]
            coeff = np.zeros((2 * d + 1, R.size), dtype=np.int64)
            for i in range(d + 1):
                for j in range(d + 1):
                    coeff[i + j] = R.add[coeff[i + j], R.mul[fr[i], g[j]]]
            bad = ~T[coeff]
            if bad.any():
                t, r = np.argwhere(bad)[0]
                return Verdict.fails(
                    [("r", r), ("c", coeff[t, r])],
                    "f*g = 0 but a coefficient of f r g is not hypercentral",
                    f=[int(c) for c in f],
                    g=[int(c) for c in g],
                    t=int(t),
                )
    return Verdict.holds(f"all coefficients hypercentral up to degree {d}")
