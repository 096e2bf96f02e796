import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as hs

from hypercentral import structure as st
from hypercentral.constructions import build_matrix_subring
from hypercentral.errors import (
    AxiomViolation,
    NotAnIdeal,
    NotCentral,
    NotIdempotent,
    ParseError,
    SizeCapExceeded,
    UnityMismatch,
    UnsupportedOrder,
)
from hypercentral.ring import (
    axiom_violations,
    corner_ring,
    cyclic_ring,
    direct_product,
    finite_field,
    find_isomorphism,
    is_isomorphic,
    load_ring,
    matrix_ring,
    opposite_ring,
    quotient_ring,
    ring_from_dict,
    save_ring,
    validate_tables,
)
from oracles import labelled, naive_axiom_violation


def z4_tables():
    Z = cyclic_ring(4)
    return Z.add.tolist(), Z.mul.tolist()


class TestValidation:
    def test_z4_valid(self):
        add, mul = z4_tables()
        R = validate_tables(4, add, mul, 1)
        assert R.size == 4 and R.one == 1

    def test_corrupted_entry_reports_first_law(self):
        add, mul = z4_tables()
        mul[2][3] = 1
        with pytest.raises(AxiomViolation) as info:
            validate_tables(4, add, mul, 1)
        # independent triple loop agrees on law and witness
        assert (info.value.axiom, info.value.witness) == naive_axiom_violation(add, mul)
        assert info.value.axiom == "multiplicative_associativity"
        assert info.value.witness == (2, 2, 3)
        x, y, z = info.value.witness
        assert mul[mul[x][y]][z] != mul[x][mul[y][z]]

    def test_every_single_corruption_matches_naive_scan(self):
        add, mul = z4_tables()
        for i in range(4):
            for j in range(4):
                for v in range(4):
                    if v == mul[i][j]:
                        continue
                    bad = [row[:] for row in mul]
                    bad[i][j] = v
                    found = axiom_violations(np.array(add), np.array(bad), stop_at_first=True)
                    expected = naive_axiom_violation(add, bad)
                    got = found[0] if found else None
                    assert got == expected, (i, j, v)

    def test_zero_ring_with_one_zero(self):
        R = validate_tables(1, [[0]], [[0]], 0)
        assert R.is_unital and R.one == 0

    def test_one_equal_zero_rejected_above_size_one(self):
        add, mul = z4_tables()
        with pytest.raises(UnityMismatch):
            validate_tables(4, add, mul, 0)

    def test_wrong_unity(self):
        add, mul = z4_tables()
        with pytest.raises(UnityMismatch):
            validate_tables(4, add, mul, 3)

    def test_neg_inverts_add(self):
        for R in (cyclic_ring(9), finite_field(8), matrix_ring(finite_field(2), 2)):
            assert (R.add[np.arange(R.size), R.neg] == 0).all()


class TestConstructors:
    def test_cyclic(self):
        Z6 = cyclic_ring(6)
        assert Z6.size == 6 and Z6.one == 1 and Z6.is_commutative()
        assert cyclic_ring(1).size == 1
        assert list(np.flatnonzero(st.nil_mask(cyclic_ring(4)))) == [0, 2]

    def test_fields(self):
        assert finite_field(2).same_tables(cyclic_ring(2))
        F4 = finite_field(4)
        assert F4.size == 4
        for x in range(1, 4):
            assert (F4.mul[x] == F4.one).any()
            assert F4.mul[F4.mul[x, x], x] == F4.one
        with pytest.raises(UnsupportedOrder):
            finite_field(6)

    def test_every_field_is_a_field(self):
        for q in (2, 3, 4, 5, 7, 8, 9):
            F = finite_field(q)
            assert F.is_commutative()
            assert all((F.mul[x] == F.one).any() for x in range(1, q))

    def test_matrix_rings(self, m2):
        assert m2.size == 16 and m2.is_unital and not m2.is_commutative()
        assert matrix_ring(cyclic_ring(4), 2).size == 256
        with pytest.raises(SizeCapExceeded):
            matrix_ring(cyclic_ring(4), 3)

    def test_direct_product(self):
        assert is_isomorphic(direct_product(cyclic_ring(2), cyclic_ring(3)), cyclic_ring(6))
        F2 = finite_field(2)
        F8 = direct_product(F2, direct_product(F2, F2))
        assert F8.size == 8 and F8.is_commutative()
        assert st.nil_mask(F8).sum() == 1
        P = direct_product(validate_tables(1, [[0]], [[0]], 0), F2)
        assert P.size == 2 and P.is_unital

    def test_product_with_non_unital_factor(self):
        S = build_matrix_subring("S_prime_n", cyclic_ring(4), 2)
        assert not S.is_unital
        assert not direct_product(S, cyclic_ring(2)).is_unital


class TestQuotientsAndCorners:
    def test_triangular_quotient(self):
        from hypercentral.harness.specs import strict_upper_mask

        T3 = build_matrix_subring("T_n", finite_field(2), 3)
        Q, proj = quotient_ring(T3, strict_upper_mask(T3))
        F2 = finite_field(2)
        assert Q.size == 8
        assert is_isomorphic(Q, direct_product(F2, direct_product(F2, F2)))
        assert len(proj) == 64

    def test_quotient_is_homomorphic_image(self, z4):
        Q, proj = quotient_ring(z4, [0, 2])
        assert Q.same_tables(cyclic_ring(2)) or is_isomorphic(Q, cyclic_ring(2))
        for x in range(4):
            for y in range(4):
                assert proj[z4.add[x, y]] == Q.add[proj[x], proj[y]]
                assert proj[z4.mul[x, y]] == Q.mul[proj[x], proj[y]]

    def test_quotient_by_non_ideal(self, z4):
        with pytest.raises(NotAnIdeal):
            quotient_ring(z4, [0, 1])

    def test_corners(self, z6, t2):
        C = corner_ring(z6, 3)
        assert C.labels == ("0", "3") and C.labels[C.one] == "3"
        assert is_isomorphic(C, cyclic_ring(2))
        C = corner_ring(z6, 4)
        assert C.labels == ("0", "2", "4") and C.labels[C.one] == "4"
        assert is_isomorphic(C, cyclic_ring(3))
        with pytest.raises(NotCentral):
            corner_ring(t2, *labelled(t2, "E22"))
        with pytest.raises(NotIdempotent):
            corner_ring(z6, 2)


class TestOppositeAndIsomorphism:
    def test_opposite(self, z6, t2):
        assert opposite_ring(z6).same_tables(z6)
        assert opposite_ring(opposite_ring(t2)).same_tables(t2)
        assert not opposite_ring(t2).same_tables(t2)

    def test_annihilator_swaps_sides(self, t2):
        (e12,) = labelled(t2, "E12")
        left = st.left_annihilator_mask(t2, [e12])
        right_op = st.right_annihilator_mask(opposite_ring(t2), [e12])
        assert np.array_equal(left, right_op)

    def test_t2_is_anti_isomorphic_to_itself(self, t2):
        assert is_isomorphic(t2, opposite_ring(t2))

    def test_isomorphism_map_respects_tables(self):
        A = direct_product(cyclic_ring(3), cyclic_ring(2))
        phi = find_isomorphism(A, cyclic_ring(6))
        B = cyclic_ring(6)
        for x in range(6):
            for y in range(6):
                assert phi[int(A.add[x, y])] == B.add[phi[x], phi[y]]
                assert phi[int(A.mul[x, y])] == B.mul[phi[x], phi[y]]

    def test_non_isomorphic(self):
        assert not is_isomorphic(cyclic_ring(4), finite_field(4))
        assert not is_isomorphic(cyclic_ring(8), direct_product(cyclic_ring(4), cyclic_ring(2)))


class TestFiles:
    def test_round_trip(self, tmp_path, z4):
        path = tmp_path / "z4.json"
        save_ring(z4, path)
        assert load_ring(path).same_tables(z4)

    def test_non_unital_file(self, tmp_path):
        S = build_matrix_subring("S_prime_n", cyclic_ring(4), 2)
        path = tmp_path / "s.json"
        save_ring(S, path)
        data = json.loads(path.read_text())
        assert data["one"] is None
        R = load_ring(path)
        assert not R.is_unital and R.same_tables(S)

    def test_non_unital_file_must_satisfy_axioms(self, tmp_path):
        add, mul = z4_tables()
        mul[2][3] = 1
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"size": 4, "one": None, "add": add, "mul": mul}))
        with pytest.raises(AxiomViolation):
            load_ring(path)

    def test_ragged_table(self):
        add, mul = z4_tables()
        with pytest.raises(ParseError):
            ring_from_dict({"size": 4, "add": add + [[0, 1, 2, 3]], "mul": mul})

    def test_bad_json(self, tmp_path):
        path = tmp_path / "x.json"
        path.write_text("{not json")
        with pytest.raises(ParseError):
            load_ring(path)

    def test_zero_moved_to_index_zero(self):
        # Z3 listed as (1, 0, 2): the additive identity is the second element
        perm = [1, 0, 2]
        inv = {p: i for i, p in enumerate(perm)}
        add = [[inv[(perm[i] + perm[j]) % 3] for j in range(3)] for i in range(3)]
        mul = [[inv[(perm[i] * perm[j]) % 3] for j in range(3)] for i in range(3)]
        R = ring_from_dict({"size": 3, "one": 0, "add": add, "mul": mul})
        assert is_isomorphic(R, cyclic_ring(3))
        assert R.labels is not None and R.add[0, 1] == 1


@settings(max_examples=40, deadline=None)
@given(hs.sampled_from([2, 3, 4, 5, 6, 8, 9]), hs.sampled_from([2, 3, 4]))
def test_products_are_rings_with_componentwise_unity(m, k):
    A, B = cyclic_ring(m), cyclic_ring(k)
    P = direct_product(A, B)
    assert P.size == m * k
    assert not axiom_violations(P.add, P.mul, stop_at_first=True)
    assert (P.mul[P.one] == np.arange(P.size)).all()


@settings(max_examples=30, deadline=None)
@given(hs.sampled_from([4, 6, 8, 9, 12]), hs.data())
def test_quotient_of_cyclic_by_multiples(n, data):
    d = data.draw(hs.sampled_from([d for d in range(1, n + 1) if n % d == 0]))
    Q, _ = quotient_ring(cyclic_ring(n), list(range(0, n, d)))
    assert is_isomorphic(Q, cyclic_ring(d))
