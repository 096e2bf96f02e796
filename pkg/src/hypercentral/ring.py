"""Finite rings as validated addition/multiplication tables.

Element 0 is always the additive zero.  Rings are immutable once built; the
``memo`` dict only caches values derived from the tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Iterable

import numpy as np

from . import matrices
from .errors import (
    AxiomViolation,
    NotAnIdeal,
    NotCentral,
    NotIdempotent,
    ParseError,
    SizeCapExceeded,
    UnityMismatch,
    UnsupportedOrder,
)

DEFAULT_SIZE_CAP = 65536
# Constructors re-run the exhaustive O(n^3) validation up to this size and a
# seeded random spot check above it.
SELF_CHECK_LIMIT = 256
ISOMORPHISM_LIMIT = 16


@dataclass(frozen=True)
class MatrixMeta:
    base: "FiniteRing"
    n: int
    entries: np.ndarray


@dataclass(frozen=True, eq=False)
class FiniteRing:
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    one: int | None = None
    labels: tuple[str, ...] = ()
    name: str = ""
    matrix: MatrixMeta | None = None
    memo: dict = field(default_factory=dict, repr=False)

    @property
    def size(self) -> int:
        return self.add.shape[0]

    @property
    def is_unital(self) -> bool:
        return self.one is not None

    def label(self, x: int) -> str:
        return self.labels[x]

    def is_commutative(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def same_tables(self, other: "FiniteRing") -> bool:
        return (
            self.size == other.size
            and self.one == other.one
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.mul, other.mul)
        )

    def __repr__(self) -> str:
        unit = "unital" if self.is_unital else "non-unital"
        return f"FiniteRing({self.name or '?'}, size={self.size}, {unit})"


def _freeze(a) -> np.ndarray:
    a = np.array(a, dtype=np.int32)
    a.setflags(write=False)
    return a


def _first(bad: np.ndarray) -> tuple[int, ...]:
    return tuple(int(i) for i in np.unravel_index(np.argmax(bad), bad.shape))


def _scan_triples(size: int, bad_slice) -> tuple[int, int, int] | None:
    for x in range(size):
        bad = bad_slice(x)
        if bad.any():
            return (x, *_first(bad))
    return None


def axiom_violations(add: np.ndarray, mul: np.ndarray, *, stop_at_first=False):
    """Every failed ring law with its lexicographically first witness."""
    n = add.shape[0]
    ar = np.arange(n)
    found: list[tuple[str, tuple[int, ...]]] = []

    def record(name, witness):
        if witness is not None:
            found.append((name, witness))
        return stop_at_first and bool(found)

    bad = (add[0] != ar) | (add[:, 0] != ar)
    if record("additive_identity", (0, int(np.argmax(bad))) if bad.any() else None):
        return found
    bad = add != add.T
    if record("additive_commutativity", _first(bad) if bad.any() else None):
        return found
    w = _scan_triples(n, lambda x: add[add[x][:, None], ar[None, :]] != add[x][add])
    if record("additive_associativity", w):
        return found
    bad = ~(add == 0).any(axis=1)
    if record("additive_inverse", (int(np.argmax(bad)),) if bad.any() else None):
        return found
    w = _scan_triples(n, lambda x: mul[mul[x][:, None], ar[None, :]] != mul[x][mul])
    if record("multiplicative_associativity", w):
        return found
    w = _scan_triples(n, lambda x: mul[x][add] != add[mul[x][:, None], mul[x][None, :]])
    if record("left_distributivity", w):
        return found
    w = _scan_triples(n, lambda x: mul[add[x]] != add[mul[x][None, :], mul])
    record("right_distributivity", w)
    return found


def _check_shape(size: int, add, mul) -> tuple[np.ndarray, np.ndarray]:
    if not isinstance(size, int) or size < 1:
        raise ParseError(f"size must be a positive integer, got {size!r}")
    try:
        a = np.array(add, dtype=np.int64)
        m = np.array(mul, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"tables are not integer matrices: {exc}") from None
    for name, t in (("add", a), ("mul", m)):
        if t.shape != (size, size):
            raise ParseError(f"{name} table has shape {t.shape}, expected {(size, size)}")
        if size and (t.min() < 0 or t.max() >= size):
            raise ParseError(f"{name} table has entries outside [0, {size})")
    return a, m


def validate_tables(size, add, mul, one=None, labels=None, *, name="", matrix=None, check=True) -> FiniteRing:
    """Build a FiniteRing, checking every ring law exhaustively.

    Raises AxiomViolation listing each failed law, or UnityMismatch if the
    claimed unity is not a two-sided identity.
    """
    a, m = _check_shape(size, add, mul)
    if check:
        violations = axiom_violations(a, m)
        if violations:
            raise AxiomViolation(violations)
    if one is not None:
        if not (0 <= one < size):
            raise ParseError(f"unity index {one} out of range")
        ar = np.arange(size)
        bad = (m[one] != ar) | (m[:, one] != ar)
        if bad.any():
            raise UnityMismatch(one, int(np.argmax(bad)))
        if one == 0 and size > 1:
            raise UnityMismatch(0, 1)
    neg = np.argmax(a == 0, axis=1)
    if labels is None:
        labels = [str(i) for i in range(size)]
    if len(labels) != size:
        raise ParseError(f"expected {size} labels, got {len(labels)}")
    return FiniteRing(
        add=_freeze(a),
        mul=_freeze(m),
        neg=_freeze(neg),
        one=None if one is None else int(one),
        labels=tuple(str(s) for s in labels),
        name=name,
        matrix=matrix,
    )


def _spot_check(add: np.ndarray, mul: np.ndarray, samples: int = 4096, seed: int = 0) -> None:
    rng = np.random.default_rng(seed)
    x, y, z = rng.integers(0, add.shape[0], size=(3, samples))
    laws = {
        "additive_associativity": add[add[x, y], z] != add[x, add[y, z]],
        "multiplicative_associativity": mul[mul[x, y], z] != mul[x, mul[y, z]],
        "left_distributivity": mul[x, add[y, z]] != add[mul[x, y], mul[x, z]],
        "right_distributivity": mul[add[x, y], z] != add[mul[x, z], mul[y, z]],
    }
    violations = []
    for law, bad in laws.items():
        if bad.any():
            i = int(np.argmax(bad))
            violations.append((law, (int(x[i]), int(y[i]), int(z[i]))))
    if violations:
        raise AxiomViolation(violations)


def _build(add, mul, one=None, labels=None, *, name="", matrix=None) -> FiniteRing:
    """Constructor path: exhaustive validation for small rings, spot check above."""
    size = len(add)
    small = size <= SELF_CHECK_LIMIT
    if not small:
        _spot_check(np.asarray(add), np.asarray(mul))
    return validate_tables(size, add, mul, one, labels, name=name, matrix=matrix, check=small)


def find_identity(mul: np.ndarray) -> int | None:
    ar = np.arange(mul.shape[0])
    ok = (mul == ar[None, :]).all(axis=1) & (mul == ar[:, None]).all(axis=0)
    if ok.any():
        return int(np.argmax(ok))
    return None


# -- constructors -----------------------------------------------------------


def cyclic_ring(n: int) -> FiniteRing:
    if n < 1:
        raise ValueError("n must be >= 1")
    ar = np.arange(n)
    add = (ar[:, None] + ar[None, :]) % n
    mul = (ar[:, None] * ar[None, :]) % n
    return _build(add, mul, one=1 if n > 1 else 0, name=f"Z{n}")


# modulus coefficients: x^k = sum(c_i x^i) for the defining irreducible polynomial
_FIELDS = {
    2: (2, 1, ()),
    3: (3, 1, ()),
    5: (5, 1, ()),
    7: (7, 1, ()),
    4: (2, 2, (1, 1)),  # x^2 + x + 1
    8: (2, 3, (1, 1, 0)),  # x^3 + x + 1
    9: (3, 2, (2, 0)),  # x^2 + 1
}


def _field_label(coeffs: tuple[int, ...]) -> str:
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        if deg == 0:
            terms.append(str(c))
        else:
            var = "a" if deg == 1 else f"a^{deg}"
            terms.append(var if c == 1 else f"{c}{var}")
    return "+".join(terms) or "0"


def finite_field(q: int) -> FiniteRing:
    if q not in _FIELDS:
        raise UnsupportedOrder(f"no field of order {q} is supported (choose from {sorted(_FIELDS)})")
    p, k, red = _FIELDS[q]
    elems = list(product(range(p), repeat=k))
    elems = [e[::-1] for e in elems]  # little-endian coefficients, index = sum c_i p^i
    index = {e: sum(c * p**i for i, c in enumerate(e)) for e in elems}
    elems.sort(key=index.__getitem__)

    def mult(a, b):
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for i, r in enumerate(red):
                    prod[deg - k + i] = (prod[deg - k + i] + c * r) % p
        return tuple(prod[:k])

    add = [[index[tuple((x + y) % p for x, y in zip(a, b))] for b in elems] for a in elems]
    mul = [[index[mult(a, b)] for b in elems] for a in elems]
    labels = [str(i) for i in range(q)] if k == 1 else [_field_label(e) for e in elems]
    return _build(add, mul, one=1, labels=labels, name=f"GF({q})")


def ring_from_matrices(base: FiniteRing, entries: np.ndarray, *, name: str = "") -> FiniteRing:
    """Ring on a set of n x n matrices over ``base`` with the ambient operations.

    The set is sorted by matrix code; raises ConstructionNotARing if it is not
    closed under addition and multiplication.
    """
    entries = np.asarray(entries, dtype=np.int64)
    n = entries.shape[1]
    codes = matrices.encode(entries, base.size)
    order = np.argsort(codes, kind="stable")
    entries = entries[order]
    codes = codes[order]
    if len(codes) > 1 and (np.diff(codes) == 0).any():
        keep = np.concatenate(([True], np.diff(codes) != 0))
        entries = entries[keep]
    add, mul = matrices.matrix_tables(base, entries)
    one = find_identity(mul)
    labels = [matrices.matrix_label(base, m) for m in entries]
    entries.setflags(write=False)
    meta = MatrixMeta(base=base, n=n, entries=entries)
    return _build(add, mul, one=one, labels=labels, name=name, matrix=meta)


def matrix_ring(R: FiniteRing, n: int, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    size = R.size ** (n * n)
    if size > cap:
        raise SizeCapExceeded(size, cap, f"M{n}({R.name})")
    return ring_from_matrices(R, matrices.all_matrices(R.size, n), name=f"M{n}({R.name})")


def direct_product(A: FiniteRing, B: FiniteRing, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    size = A.size * B.size
    if size > cap:
        raise SizeCapExceeded(size, cap, "product")
    idx = np.arange(size)
    ia, ib = idx // B.size, idx % B.size
    add = A.add[ia[:, None], ia[None, :]] * B.size + B.add[ib[:, None], ib[None, :]]
    mul = A.mul[ia[:, None], ia[None, :]] * B.size + B.mul[ib[:, None], ib[None, :]]
    one = None
    if A.is_unital and B.is_unital:
        one = A.one * B.size + B.one
    labels = [f"({A.labels[a]},{B.labels[b]})" for a, b in zip(ia, ib)]
    return _build(add, mul, one=one, labels=labels, name=f"prod({A.name},{B.name})")


def opposite_ring(R: FiniteRing) -> FiniteRing:
    return FiniteRing(
        add=R.add,
        mul=_freeze(R.mul.T),
        neg=R.neg,
        one=R.one,
        labels=R.labels,
        name=f"op({R.name})",
    )


# -- subsets and ideals -----------------------------------------------------


def as_mask(R: FiniteRing, X) -> np.ndarray:
    if isinstance(X, Subset):
        X = X.members
    if isinstance(X, np.ndarray) and X.dtype == bool:
        return X
    mask = np.zeros(R.size, dtype=bool)
    mask[list(X)] = True
    return mask


def ideal_violation(R: FiniteRing, X, side: str = "two_sided") -> tuple[str, tuple[int, ...]] | None:
    """First reason X fails to be an ideal of the given side, or None."""
    mask = as_mask(R, X)
    if not mask[0]:
        return ("missing_zero", (0,))
    m = np.flatnonzero(mask)
    bad = ~mask[R.add[np.ix_(m, m)]]
    if bad.any():
        i, j = _first(bad)
        return ("sum", (int(m[i]), int(m[j])))
    if side in ("left", "two_sided"):
        bad = ~mask[R.mul[:, m]]
        if bad.any():
            r, i = _first(bad)
            return ("left_multiple", (r, int(m[i])))
    if side in ("right", "two_sided"):
        bad = ~mask[R.mul[m, :]]
        if bad.any():
            i, r = _first(bad)
            return ("right_multiple", (int(m[i]), r))
    if side == "subring":
        bad = ~mask[R.mul[np.ix_(m, m)]]
        if bad.any():
            i, j = _first(bad)
            return ("product", (int(m[i]), int(m[j])))
    return None


@dataclass(frozen=True)
class Subset:
    """A set of element indices with closure flags computed from the ring."""

    members: tuple[int, ...]
    additive_subgroup: bool = False
    left_ideal: bool = False
    right_ideal: bool = False
    subring: bool = False
    contains_one: bool = False

    @classmethod
    def of(cls, R: FiniteRing, X) -> "Subset":
        mask = as_mask(R, X)
        members = tuple(int(i) for i in np.flatnonzero(mask))
        additive = ideal_violation(R, mask, "additive") is None
        return cls(
            members=members,
            additive_subgroup=additive,
            left_ideal=additive and ideal_violation(R, mask, "left") is None,
            right_ideal=additive and ideal_violation(R, mask, "right") is None,
            subring=additive and ideal_violation(R, mask, "subring") is None,
            contains_one=R.one is not None and bool(mask[R.one]),
        )

    @property
    def two_sided(self) -> bool:
        return self.left_ideal and self.right_ideal

    def mask(self, size: int) -> np.ndarray:
        out = np.zeros(size, dtype=bool)
        out[list(self.members)] = True
        return out

    def __contains__(self, x) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


# -- quotients, corners -----------------------------------------------------


def _restrict(R: FiniteRing, members: np.ndarray, one, *, name: str) -> FiniteRing:
    pos = np.full(R.size, -1, dtype=np.int64)
    pos[members] = np.arange(len(members))
    add = pos[R.add[np.ix_(members, members)]]
    mul = pos[R.mul[np.ix_(members, members)]]
    if (add < 0).any() or (mul < 0).any():
        raise NotAnIdeal("subset is not closed under the ring operations")
    labels = [R.labels[m] for m in members]
    new_one = None if one is None else int(pos[one])
    return _build(add, mul, one=new_one, labels=labels, name=name)


def quotient_ring(R: FiniteRing, I, *, name: str = "") -> tuple[FiniteRing, np.ndarray]:
    """Coset ring R/I and the projection map as an index array."""
    mask = as_mask(R, I)
    bad = ideal_violation(R, mask, "two_sided")
    if bad is not None:
        raise NotAnIdeal(f"not a two-sided ideal ({bad[0]} at {bad[1]})", bad[1])
    m = np.flatnonzero(mask)
    cid = R.add[:, m].min(axis=1)
    reps = np.unique(cid)
    proj = np.searchsorted(reps, cid)
    add = proj[R.add[np.ix_(reps, reps)]]
    mul = proj[R.mul[np.ix_(reps, reps)]]
    one = None if R.one is None else int(proj[R.one])
    labels = [f"[{R.labels[r]}]" for r in reps]
    Q = _build(add, mul, one=one, labels=labels, name=name or f"{R.name}/I")
    if R.size <= SELF_CHECK_LIMIT:
        ar = np.arange(R.size)
        assert (proj[R.add] == Q.add[proj[:, None], proj[None, :]]).all()
        assert (proj[R.mul] == Q.mul[proj[:, None], proj[None, :]]).all()
        assert len(np.unique(proj[ar])) == Q.size
    proj.setflags(write=False)
    return Q, proj


def corner_ring(R: FiniteRing, e: int) -> FiniteRing:
    """The ring eR with unity e, for a central idempotent e of a unital ring."""
    if R.mul[e, e] != e:
        raise NotIdempotent(f"element {e} ({R.labels[e]}) is not idempotent")
    bad = R.mul[e] != R.mul[:, e]
    if bad.any():
        raise NotCentral(e, int(np.argmax(bad)))
    members = np.unique(R.mul[e])
    return _restrict(R, members, e, name=f"corner({R.name},{R.labels[e]})")


# -- isomorphism (tiny rings only) ------------------------------------------


def find_isomorphism(A: FiniteRing, B: FiniteRing) -> dict[int, int] | None:
    """Brute-force bijection search; only permitted up to 16 elements."""
    if max(A.size, B.size) > ISOMORPHISM_LIMIT:
        raise SizeCapExceeded(max(A.size, B.size), ISOMORPHISM_LIMIT, "isomorphism search")
    if A.size != B.size:
        return None

    def signature(R):
        sq = R.mul[np.arange(R.size), np.arange(R.size)]
        order = [_additive_order(R, x) for x in range(R.size)]
        return [(order[x], int(sq[x] == x), int(sq[x] == 0)) for x in range(R.size)]

    sa, sb = signature(A), signature(B)
    if sorted(sa) != sorted(sb):
        return None
    Aa, Am, Ba, Bm = A.add.tolist(), A.mul.tolist(), B.add.tolist(), B.mul.tolist()
    n = A.size
    image = [-1] * n
    used = [False] * n
    image[0], used[0] = 0, True

    def consistent(x):
        for y in range(n):
            if image[y] < 0:
                continue
            for ta, tb in ((Aa, Ba), (Am, Bm)):
                for s, t in ((x, y), (y, x)):
                    r = ta[s][t]
                    if image[r] >= 0 and image[r] != tb[image[s]][image[t]]:
                        return False
        return True

    def extend(x):
        if x == n:
            return True
        for cand in range(n):
            if used[cand] or sa[x] != sb[cand]:
                continue
            image[x], used[cand] = cand, True
            if consistent(x) and extend(x + 1):
                return True
            image[x], used[cand] = -1, False
        return False

    if not extend(1):
        return None
    return dict(enumerate(image))


def _additive_order(R: FiniteRing, x: int) -> int:
    k, acc = 1, x
    while acc != 0:
        acc = int(R.add[acc, x])
        k += 1
    return k


def is_isomorphic(A: FiniteRing, B: FiniteRing) -> bool:
    return find_isomorphism(A, B) is not None


# -- file format ------------------------------------------------------------


def ring_to_dict(R: FiniteRing) -> dict:
    return {
        "size": R.size,
        "one": R.one,
        "add": R.add.tolist(),
        "mul": R.mul.tolist(),
        "labels": list(R.labels),
    }


def save_ring(R: FiniteRing, path) -> None:
    Path(path).write_text(json.dumps(ring_to_dict(R)) + "\n", encoding="utf-8")


def ring_from_dict(data: dict, *, name: str = "") -> FiniteRing:
    if not isinstance(data, dict):
        raise ParseError("ring file must contain a JSON object")
    for key in ("size", "add", "mul"):
        if key not in data:
            raise ParseError(f"missing field {key!r}")
    size = data["size"]
    add, mul = _check_shape(size, data["add"], data["mul"])
    one = data.get("one")
    if one is not None and not isinstance(one, int):
        raise ParseError("'one' must be an integer index or null")
    labels = data.get("labels")
    ar = np.arange(size)
    zeros = np.flatnonzero((add == ar[None, :]).all(axis=1))
    if len(zeros) and zeros[0] != 0:
        # reorder so the additive identity sits at index 0
        z = int(zeros[0])
        perm = ar.copy()
        perm[[0, z]] = perm[[z, 0]]
        add = perm[add[np.ix_(perm, perm)]]
        mul = perm[mul[np.ix_(perm, perm)]]
        if one is not None:
            one = int(perm[one])
        if labels is not None:
            labels = [labels[p] for p in perm]
    return validate_tables(size, add, mul, one, labels, name=name)


def load_ring(path) -> FiniteRing:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    return ring_from_dict(data, name=f"@{path}")


def elements_where(R: FiniteRing, mask: np.ndarray) -> list[int]:
    return [int(i) for i in np.flatnonzero(mask)]


def subset(R: FiniteRing, X: Iterable[int]) -> Subset:
    return Subset.of(R, X)
