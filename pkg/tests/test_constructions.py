import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as hs

from hypercentral import structure as st
from hypercentral.constructions import (
    FAMILIES,
    BoundedPoly,
    armendariz_check,
    build_matrix_subring,
    family_slots,
    index_trace,
    matmul,
    poly_mul,
    polyext_h_check,
    v_matrix,
)
from hypercentral.errors import ConstructionNotARing, DegreeOverflow, PreconditionViolated, SizeCapExceeded
from hypercentral.properties import check_property, replay_witness
from hypercentral.ring import axiom_violations, cyclic_ring, finite_field
from oracles import Oracle

F2 = finite_field(2)
Z4 = cyclic_ring(4)


class TestFamilies:
    @pytest.mark.parametrize(
        "family, base, n, size",
        [
            ("T_n", F2, 3, 64),
            ("T_n", F2, 2, 8),
            ("S_prime_n", Z4, 2, 16),
            ("U_n", Z4, 2, 16),
            ("T_R_n", F2, 2, 4),
            ("S_n", F2, 3, 16),
            ("A_n", Z4, 3, 512),
        ],
    )
    def test_sizes(self, family, base, n, size):
        assert build_matrix_subring(family, base, n).size == size

    def test_u2_index_evaluation(self):
        trace = index_trace(family_slots("U_n", 2), 2)
        assert trace["slots"] == ["N(R)*E11", "N(R)*E22", "R*E12"]
        assert trace["positions"] == {"11": "N(R)", "12": "R", "21": "0", "22": "N(R)"}

    def test_t_r_n_is_polynomials_in_v(self):
        R = build_matrix_subring("T_R_n", F2, 2)
        got = {tuple(map(tuple, M)) for M in R.matrix.entries.tolist()}
        assert got == {((a, b), (0, a)) for a in (0, 1) for b in (0, 1)}

    def test_every_built_ring_is_valid(self):
        for family in FAMILIES:
            for base in (F2, Z4):
                for n in (2, 3):
                    try:
                        R = build_matrix_subring(family, base, n, cap=600)
                    except (ConstructionNotARing, SizeCapExceeded):
                        continue
                    if R.size <= 256:
                        assert not axiom_violations(R.add, R.mul, stop_at_first=True), R.name

    def test_elements_lie_in_their_slots(self):
        nil = set(np.flatnonzero(st.nil_mask(Z4)).tolist())
        R = build_matrix_subring("S_prime_n", Z4, 3)
        for M in R.matrix.entries.tolist():
            assert all(M[i][i] in nil for i in range(3))
            assert M[1][0] == M[2][0] == M[2][1] == 0

    def test_non_closure_is_reported(self):
        with pytest.raises(ConstructionNotARing) as info:
            build_matrix_subring("U_n", Z4, 3)
        assert "leaves the element set" in str(info.value)

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            build_matrix_subring("T_n", Z4, 3, cap=1000)

    def test_unknown_family_and_small_n(self):
        with pytest.raises((KeyError, ValueError, PreconditionViolated)):
            build_matrix_subring("Q_n", F2, 2)
        with pytest.raises(PreconditionViolated):
            build_matrix_subring("T_n", F2, 1)

    def test_nil_families_over_ni_bases_are_h(self):
        for base in (F2, Z4, cyclic_ring(8)):
            S = build_matrix_subring("S_prime_n", base, 2)
            assert st.nil_mask(S).all()
            assert check_property(S, "h_semicommutative").ok

    def test_triangular_rings_are_not_h(self):
        for base in (F2, finite_field(3), Z4):
            for n in (2, 3):
                assert check_property(build_matrix_subring("T_n", base, n), "h_semicommutative").failed


class TestShiftMatrix:
    def test_examples(self):
        V = v_matrix(F2, 2)
        assert V.tolist() == [[0, 1], [0, 0]]
        assert not matmul(F2, V, V).any()
        V = v_matrix(F2, 3)
        V2 = matmul(F2, V, V)
        assert V2.tolist() == [[0, 0, 1], [0, 0, 0], [0, 0, 0]]
        assert not matmul(F2, V2, V).any()

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_nilpotency_index(self, n):
        for base in (F2, Z4):
            V = v_matrix(base, n)
            P = V
            for _ in range(n - 2):
                P = matmul(base, P, V)
            assert P.any()
            assert not matmul(base, P, V).any()


def poly(R, *coeffs, bound=4):
    return BoundedPoly(R, tuple(coeffs), bound)


class TestPolynomials:
    def test_examples(self):
        assert poly_mul(poly(F2, 1, 1), poly(F2, 1, 1)).normalized() == (1, 0, 1)
        assert poly_mul(poly(Z4, 2, 2), poly(Z4, 2, 2)).is_zero()
        assert poly_mul(poly(Z4, 3, 1), poly(Z4)).is_zero()

    def test_degree_overflow(self):
        with pytest.raises(DegreeOverflow):
            poly_mul(poly(F2, 1, 1, bound=2), poly(F2, 0, 0, 1, bound=2))
        with pytest.raises(DegreeOverflow):
            BoundedPoly(F2, (1, 1, 1), 1)

    @settings(max_examples=100, deadline=None)
    @given(
        hs.lists(hs.integers(0, 3), min_size=1, max_size=3),
        hs.lists(hs.integers(0, 3), min_size=1, max_size=3),
        hs.lists(hs.integers(0, 3), min_size=1, max_size=3),
    )
    def test_associative_and_distributive(self, a, b, c):
        f, g, h = (poly(Z4, *x, bound=6) for x in (a, b, c))
        lhs = poly_mul(poly_mul(f, g), h).normalized()
        rhs = poly_mul(f, poly_mul(g, h)).normalized()
        assert lhs == rhs
        # distributivity against coefficientwise addition
        gh = [(x + y) % 4 for x, y in itertools.zip_longest(b, c, fillvalue=0)]
        left = poly_mul(f, poly(Z4, *gh, bound=6)).normalized()
        fg, fh = poly_mul(f, g), poly_mul(f, h)
        summed = [
            (x + y) % 4 for x, y in itertools.zip_longest(fg.coeffs, fh.coeffs, fillvalue=0)
        ]
        assert left == poly(Z4, *summed, bound=6).normalized()


def naive_polyext(R, d):
    O = Oracle(R)
    T = O.hypercenter()
    polys = list(itertools.product(range(R.size), repeat=d + 1))
    m, a = O.m, O.a
    for f in polys:
        for g in polys:
            prod = [0] * (2 * d + 1)
            for i, x in enumerate(f):
                for j, y in enumerate(g):
                    prod[i + j] = a[prod[i + j]][m[x][y]]
            if any(prod):
                continue
            for r in range(R.size):
                frg = [0] * (2 * d + 1)
                for i, x in enumerate(f):
                    for j, y in enumerate(g):
                        frg[i + j] = a[frg[i + j]][m[m[x][r]][y]]
                if any(c not in T for c in frg):
                    return False
    return True


class TestArmendariz:
    def test_examples(self, t2):
        assert armendariz_check(finite_field(4), 3).ok
        assert armendariz_check(Z4, 2).ok
        v = armendariz_check(t2, 1)
        assert v.failed
        f, g, l, k = (v.extra[key] for key in ("f", "g", "l", "k"))
        assert t2.mul[f[l], g[k]] != 0
        assert replay_witness(t2, "armendariz_bounded", v)

    def test_budget(self):
        with pytest.raises(SizeCapExceeded):
            armendariz_check(cyclic_ring(16), 3, budget=1 << 20)

    def test_polyext_examples(self, t2):
        assert polyext_h_check(finite_field(4), 2).ok
        assert polyext_h_check(Z4, 2).ok
        assert polyext_h_check(t2, 1).failed

    def test_polyext_against_naive(self, small_rings):
        for e in small_rings:
            if e.ring.size <= 8:
                assert polyext_h_check(e.ring, 1).ok == naive_polyext(e.ring, 1), e.name
