"""Structural invariants: centers, radicals, annihilators, ideals, power profiles.

Most functions here come in two layers: a ``*_mask`` helper returning a
boolean numpy mask (memoised on the ring) and a public function wrapping it
into a Subset.  All scans run in ascending element order so the first
witness found is the lexicographically least one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptySet, NotAnIdeal, NotApplicable
from .ring import FiniteRing, Subset, as_mask, ideal_violation, opposite_ring, quotient_ring
from .verdict import Verdict


def _memo(R: FiniteRing, key, compute):
    if key not in R.memo:
        R.memo[key] = compute()
    return R.memo[key]


def _frozen(mask: np.ndarray) -> np.ndarray:
    mask.setflags(write=False)
    return mask


# -- powers, nilpotents -----------------------------------------------------


def power_table(R: FiniteRing) -> np.ndarray:
    """Array P with P[k, x] = x^(k+1).

    Rows stop once the whole vector of powers repeats an earlier row, and
    never exceed |R|; either way every distinct power of every x appears.
    """

    def compute():
        ar = np.arange(R.size)
        rows = [ar.astype(np.int32)]
        seen = {rows[0].tobytes()}
        while len(rows) < R.size:
            nxt = R.mul[rows[-1], ar]
            key = nxt.tobytes()
            if key in seen:
                break
            seen.add(key)
            rows.append(nxt)
        return _frozen(np.array(rows))

    return _memo(R, "powers", compute)


def distinct_powers(R: FiniteRing, x: int) -> np.ndarray:
    return np.unique(power_table(R)[:, x])


def nil_mask(R: FiniteRing) -> np.ndarray:
    return _memo(R, "nil", lambda: _frozen((power_table(R) == 0).any(axis=0)))


@dataclass(frozen=True)
class PowerProfile:
    element: int
    index: int
    period: int
    nilpotency_index: int | None
    satisfies_P: bool


def power_profile(R: FiniteRing, x: int) -> PowerProfile:
    seq = [x]
    first_seen = {x: 1}
    while True:
        nxt = int(R.mul[seq[-1], x])
        if nxt in first_seen:
            index = first_seen[nxt]
            period = len(seq) + 1 - index
            break
        seq.append(nxt)
        first_seen[nxt] = len(seq)
    nil_index = first_seen.get(0)
    return PowerProfile(
        element=x,
        index=index,
        period=period,
        nilpotency_index=nil_index,
        satisfies_P=index == 1,
    )


# -- center and hypercenter -------------------------------------------------


def commute_matrix(R: FiniteRing) -> np.ndarray:
    return _memo(R, "commute", lambda: _frozen(R.mul == R.mul.T))


def center_mask(R: FiniteRing) -> np.ndarray:
    return _memo(R, "center", lambda: _frozen(commute_matrix(R).all(axis=1)))


def hypercenter_mask(R: FiniteRing) -> np.ndarray:
    """a is hypercentral iff every x has a power x^n, 1 <= n <= |R|, commuting with a."""

    def compute():
        C = commute_matrix(R)
        P = power_table(R)
        mask = np.ones(R.size, dtype=bool)
        for x in range(R.size):
            mask &= C[:, np.unique(P[:, x])].any(axis=1)
        return _frozen(mask)

    return _memo(R, "hypercenter", compute)


def hypercentral_blocker(R: FiniteRing, a: int) -> int | None:
    """Least x none of whose powers commutes with a, or None if a is hypercentral."""
    C = commute_matrix(R)
    P = power_table(R)
    ok = C[a][P].any(axis=0)
    if ok.all():
        return None
    return int(np.argmin(ok))


def center(R: FiniteRing) -> Subset:
    return Subset.of(R, center_mask(R))


def hypercenter(R: FiniteRing) -> Subset:
    return Subset.of(R, hypercenter_mask(R))


@dataclass(frozen=True)
class CenterPair:
    center: Subset
    hypercenter: Subset


def center_pair(R: FiniteRing) -> CenterPair:
    return CenterPair(center(R), hypercenter(R))


# -- additive spans and principal ideals ------------------------------------


def cyclic_subgroup(R: FiniteRing, g: int) -> list[int]:
    out = [0]
    acc = g
    while acc != 0:
        out.append(acc)
        acc = int(R.add[acc, g])
    return out


def additive_span(R: FiniteRing, X) -> np.ndarray:
    """Additive subgroup generated by X, grown one cyclic subgroup at a time."""
    H = np.zeros(R.size, dtype=bool)
    H[0] = True
    for g in np.flatnonzero(as_mask(R, X)):
        if H[g]:
            continue
        h = np.flatnonzero(H)
        H[R.add[np.ix_(h, cyclic_subgroup(R, int(g)))].ravel()] = True
    return H


def _principal(R: FiniteRing, x: int, side: str) -> np.ndarray:
    gens = np.zeros(R.size, dtype=bool)
    gens[x] = True
    if side in ("left", "two_sided"):
        gens[R.mul[:, x]] = True
    if side in ("right", "two_sided"):
        gens[R.mul[x, :]] = True
    if side == "two_sided":
        gens[R.mul[np.ix_(np.unique(R.mul[:, x]), np.arange(R.size))].ravel()] = True
    return additive_span(R, gens)


def principal_ideal_mask(R: FiniteRing, x: int, side: str) -> np.ndarray:
    table = _memo(R, ("principal", side), dict)
    if x not in table:
        table[x] = _frozen(_principal(R, x, side))
    return table[x]


def principal_matrix(R: FiniteRing, side: str) -> np.ndarray:
    """Row x is the principal ideal of the given side generated by x."""
    return _memo(
        R,
        ("principal_matrix", side),
        lambda: _frozen(np.array([principal_ideal_mask(R, x, side) for x in range(R.size)])),
    )


def ideal_generated_mask(R: FiniteRing, X, side: str) -> np.ndarray:
    mask = np.zeros(R.size, dtype=bool)
    mask[0] = True
    for x in np.flatnonzero(as_mask(R, X)):
        mask |= principal_ideal_mask(R, int(x), side)
    return additive_span(R, mask)


def ideal_generated(R: FiniteRing, X, side: str = "two_sided") -> Subset:
    if side not in ("left", "right", "two_sided"):
        raise ValueError(f"unknown side {side!r}")
    return Subset.of(R, ideal_generated_mask(R, X, side))


def ideal_product_mask(R: FiniteRing, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    a, b = np.flatnonzero(A), np.flatnonzero(B)
    prods = np.zeros(R.size, dtype=bool)
    prods[R.mul[np.ix_(a, b)].ravel()] = True
    return additive_span(R, prods)


def ideal_nilpotency_index(R: FiniteRing, I: np.ndarray) -> int | None:
    """Least k with I^k = 0, or None when the powers of I stabilise above 0."""
    cur = as_mask(R, I)
    k = 1
    while True:
        if not cur[1:].any():
            return k
        nxt = ideal_product_mask(R, cur, I)
        if np.array_equal(nxt, cur):
            return None
        cur, k = nxt, k + 1


# -- radicals ---------------------------------------------------------------


def quasi_regular_mask(R: FiniteRing) -> np.ndarray:
    """a with some b satisfying a + b - ab = 0."""

    def compute():
        circle = R.add[R.add, R.neg[R.mul]]
        return _frozen((circle == 0).any(axis=1))

    return _memo(R, "quasi_regular", compute)


def jacobson_mask(R: FiniteRing) -> np.ndarray:
    """Largest two-sided ideal made of quasi-regular elements."""

    def compute():
        qr = quasi_regular_mask(R)
        mask = np.zeros(R.size, dtype=bool)
        for a in np.flatnonzero(qr):
            mask[a] = qr[principal_ideal_mask(R, int(a), "two_sided")].all()
        return _frozen(mask)

    return _memo(R, "jacobson", compute)


def prime_radical_mask(R: FiniteRing) -> np.ndarray:
    """x whose generated two-sided ideal is nilpotent."""

    def compute():
        nil = nil_mask(R)
        mask = np.zeros(R.size, dtype=bool)
        verdicts: dict[bytes, bool] = {}
        for x in np.flatnonzero(nil):
            I = principal_ideal_mask(R, int(x), "two_sided")
            if not nil[I].all():
                continue
            key = I.tobytes()
            if key not in verdicts:
                verdicts[key] = ideal_nilpotency_index(R, I) is not None
            mask[x] = verdicts[key]
        return _frozen(mask)

    return _memo(R, "prime_radical", compute)


@dataclass(frozen=True)
class RadicalSet:
    nilpotents: Subset
    jacobson: Subset
    prime_radical: Subset
    is_nil_ring: bool
    prime_equals_jacobson: bool | None


def radicals(R: FiniteRing) -> RadicalSet:
    nil = nil_mask(R)
    J = jacobson_mask(R)
    P = prime_radical_mask(R)
    return RadicalSet(
        nilpotents=Subset.of(R, nil),
        jacobson=Subset.of(R, J),
        prime_radical=Subset.of(R, P),
        is_nil_ring=bool(nil.all()),
        prime_equals_jacobson=bool(np.array_equal(J, P)) if R.is_unital else None,
    )


# -- annihilators -----------------------------------------------------------


def left_annihilator_mask(R: FiniteRing, X) -> np.ndarray:
    m = np.flatnonzero(as_mask(R, X))
    return (R.mul[:, m] == 0).all(axis=1)


def right_annihilator_mask(R: FiniteRing, X) -> np.ndarray:
    m = np.flatnonzero(as_mask(R, X))
    return (R.mul[m, :] == 0).all(axis=0)


def annihilator(R: FiniteRing, X, side: str = "left") -> Subset:
    mask = as_mask(R, X)
    if not mask.any():
        raise EmptySet("annihilator of the empty set")
    if side == "left":
        return Subset.of(R, left_annihilator_mask(R, mask))
    if side == "right":
        return Subset.of(R, right_annihilator_mask(R, mask))
    raise ValueError(f"unknown side {side!r}")


# -- essential and singular -------------------------------------------------


def _essential_rows(R: FiniteRing, ideals: np.ndarray, side: str) -> np.ndarray:
    """For each row I: does every nonzero principal ideal of the side meet I beyond 0?"""
    P = principal_matrix(R, side)[1:, 1:].astype(np.float32)
    hits = P @ ideals[:, 1:].T.astype(np.float32)
    return (hits > 0).all(axis=0)


def is_essential(R: FiniteRing, I, side: str = "right") -> Verdict:
    mask = as_mask(R, I)
    bad = ideal_violation(R, mask, side)
    if bad is not None:
        raise NotAnIdeal(f"not a {side} ideal ({bad[0]} at {bad[1]})", bad[1])
    P = principal_matrix(R, side)
    meets = (P[:, 1:] & mask[None, 1:]).any(axis=1)
    meets[0] = True
    if meets.all():
        return Verdict.holds(f"every nonzero {side} ideal meets the ideal")
    x = int(np.argmin(meets))
    return Verdict.fails([("x", x)], f"{side} ideal generated by x meets the ideal only in 0")


def singular_masks(R: FiniteRing) -> tuple[np.ndarray, np.ndarray]:
    """(left singular ideal, right singular ideal) as masks."""

    def compute():
        ar = np.arange(R.size)
        left_anns = np.array([R.mul[:, x] == 0 for x in ar])
        right_anns = np.array([R.mul[x, :] == 0 for x in ar])
        Zl = _essential_rows(R, left_anns, "left")
        Zr = _essential_rows(R, right_anns, "right")
        return _frozen(Zl), _frozen(Zr)

    return _memo(R, "singular", compute)


def singular_ideals(R: FiniteRing) -> tuple[Subset, Subset]:
    Zl, Zr = singular_masks(R)
    return Subset.of(R, Zl), Subset.of(R, Zr)


# -- maximal one-sided ideals -----------------------------------------------


def _maximal_left_masks(R: FiniteRing) -> list[np.ndarray]:
    """Maximal left ideals, found in R/J and pulled back.

    Every maximal left ideal of a unital finite ring contains J, so the search
    runs over left ideals of R/J: starting from 0, grow by adding principal
    left ideals while the result stays proper; an ideal with no proper
    extension is maximal.
    """
    J = jacobson_mask(R)
    Q, proj = quotient_ring(R, J)
    size = Q.size
    left_principal = principal_matrix(Q, "left")
    start = np.zeros(size, dtype=bool)
    start[0] = True
    seen = {start.tobytes()}
    frontier = [start]
    found: dict[bytes, np.ndarray] = {}
    while frontier:
        nxt = []
        for L in frontier:
            grew = False
            members = np.flatnonzero(L)
            for x in range(size):
                if L[x]:
                    continue
                bigger = np.zeros(size, dtype=bool)
                bigger[Q.add[np.ix_(members, np.flatnonzero(left_principal[x]))].ravel()] = True
                if bigger.all():
                    continue
                grew = True
                key = bigger.tobytes()
                if key not in seen:
                    seen.add(key)
                    nxt.append(bigger)
            if not grew and size > 1:
                found[L.tobytes()] = L
        frontier = nxt
    lifted = [L[proj] for L in found.values()]
    lifted.sort(key=lambda m: tuple(np.flatnonzero(m)))
    return lifted


def maximal_ideal_masks(R: FiniteRing, side: str = "left") -> list[np.ndarray]:
    if not R.is_unital:
        raise NotApplicable("maximal one-sided ideals are only searched in unital rings")
    if side == "left":
        return _memo(R, "maximal_left", lambda: [_frozen(m) for m in _maximal_left_masks(R)])
    if side == "right":
        return _memo(R, "maximal_right", lambda: maximal_ideal_masks(_opposite(R), "left"))
    raise ValueError(f"unknown side {side!r}")


def maximal_one_sided_ideals(R: FiniteRing, side: str = "left") -> list[Subset]:
    return [Subset.of(R, m) for m in maximal_ideal_masks(R, side)]


def _opposite(R: FiniteRing) -> FiniteRing:
    return _memo(R, "opposite", lambda: opposite_ring(R))
