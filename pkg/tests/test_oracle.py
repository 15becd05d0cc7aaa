"""Skew-derivation pairing oracle: zero tests, coordinates, Lie membership."""
from itertools import product

import pytest

from nichols import (BRAIDED, MINUS, NCPolynomial, RootFraction, catalog,
                     coordinates, dim_component, embed, generator, get_oracle,
                     in_L, is_zero_in_nichols, lie_space_basis, minus_bracket,
                     nonzero_by_order_criterion, power_pairing, q_factorial,
                     skew_derive, span_membership)
from nichols.catalog import quantum_linear

R = RootFraction
CATALOG = catalog()
CHAIN2 = CATALOG["chain-2-q2"]
CHAIN3 = CATALOG["chain-3-q2"]
QL33 = CATALOG["ql-2-ord3-ord3"]


class TestSkewDerivation:
    def test_single_letter(self):
        o = get_oracle(CHAIN2)
        got = o.skew_derive(1, generator(1, 2))
        assert got == NCPolynomial.unit(2)
        assert o.skew_derive(2, generator(1, 2)).is_zero()

    def test_prefactor_accumulates_inverse_entries(self):
        # Deleting the second occurrence crosses x2 and x1 first, so it picks
        # up q_12^{-1} q_11^{-1}.
        o = get_oracle(CHAIN2)
        out = o.derive_word(1, (2, 1))
        assert out == [((2,), CHAIN2.entry(1, 2).inverse())]
        out = o.derive_word(1, (1, 2, 1))
        assert out[0] == ((2, 1), R(0, 1))
        assert out[1] == ((1, 2),
                          (CHAIN2.entry(1, 1) * CHAIN2.entry(1, 2)).inverse())

    def test_skew_derive_is_linear(self):
        o = get_oracle(CHAIN2)
        a = NCPolynomial.from_word((1, 2), 2)
        b = NCPolynomial.from_word((2, 1), 2).scale(R(1, 4))
        assert o.skew_derive(2, a + b) == (
            o.skew_derive(2, a) + o.skew_derive(2, b))

    def test_module_wrapper(self):
        assert skew_derive(1, generator(1, 2), CHAIN2) == NCPolynomial.unit(2)


class TestZeroDetection:
    def test_square_dies_at_order_two(self):
        m = quantum_linear((R(1, 2),))
        assert is_zero_in_nichols(NCPolynomial.from_word((1, 1), 1), m)
        assert not is_zero_in_nichols(NCPolynomial.from_word((1,), 1), m)

    def test_cube_survives_at_order_three(self):
        m = quantum_linear((R(1, 3),))
        assert not is_zero_in_nichols(NCPolynomial.from_word((1, 1), 1), m)
        assert is_zero_in_nichols(NCPolynomial.from_word((1, 1, 1), 1), m)

    def test_quantum_linear_commutator_vanishes(self):
        x1, x2 = generator(1, 2), generator(2, 2)
        rel = x2 * x1 - (x1 * x2).scale(QL33.entry(2, 1))
        assert is_zero_in_nichols(rel, QL33)

    def test_chain_commutator_survives(self):
        from nichols import braided_bracket
        x1, x2 = generator(1, 2), generator(2, 2)
        assert not is_zero_in_nichols(braided_bracket(x1, x2, CHAIN2), CHAIN2)

    def test_zero_polynomial(self):
        assert is_zero_in_nichols(NCPolynomial.zero(2), CHAIN2)

    def test_inhomogeneous_input_is_tested_blockwise(self):
        m = quantum_linear((R(1, 2),))
        mixed = NCPolynomial.from_word((1,), 1) + NCPolynomial.from_word((1, 1), 1)
        assert not is_zero_in_nichols(mixed, m)


class TestCoordinates:
    def test_generator_coordinates(self):
        coords = coordinates(generator(1, 2), CHAIN2)
        assert coords.degree == (1, 0)
        assert set(coords.entries) == {(1,)}

    def test_faithfulness_matches_is_zero(self):
        o = get_oracle(CHAIN2)
        for length in range(1, 5):
            for word in product((1, 2), repeat=length):
                poly = NCPolynomial.from_word(word, 2)
                assert o.is_zero(poly) == coordinates(poly, CHAIN2).is_zero()

    def test_requires_homogeneous_polynomial(self):
        mixed = generator(1, 2) + NCPolynomial.from_word((1, 1), 2)
        with pytest.raises(ValueError):
            coordinates(mixed, CHAIN2)


class TestDimComponent:
    def test_rank_two_chain_profile(self):
        # PBW exponents over the three positive roots, all of height 2:
        # degrees 0..4 carry dimensions 1, 2, 2, 2, 1 and nothing above.
        assert [dim_component(CHAIN2, d) for d in range(6)] == [1, 2, 2, 2, 1, 0]

    def test_quantum_linear_profile(self):
        m = CATALOG["ql-2-ord2-ord2"]
        assert [dim_component(m, d) for d in range(4)] == [1, 2, 1, 0]


class TestLieMembership:
    def test_generators_always_belong(self):
        assert in_L((1,), CHAIN2, BRAIDED)
        assert in_L((1,), CHAIN2, MINUS)

    def test_connected_word_in_braided_lie(self):
        assert in_L((1, 2), CHAIN2, BRAIDED)

    def test_disconnected_word_not_in_braided_lie(self):
        assert not in_L((1, 2), QL33, BRAIDED)

    def test_pure_powers_leave_the_minus_lie(self):
        m = quantum_linear((R(1, 3),))
        assert not in_L((1, 1), m, MINUS)

    def test_zero_image_is_trivially_inside(self):
        m = quantum_linear((R(1, 2),))
        assert in_L((1, 1), m, BRAIDED)

    def test_membership_propagates_along_shared_letters(self):
        # With x2x1 and x2x3 inside, longer mixed products built on the same
        # connected support stay inside.
        o = get_oracle(CHAIN3)
        assert o.in_L((2, 1), BRAIDED) and o.in_L((2, 3), BRAIDED)
        for word in ((2, 1, 3), (1, 2, 1)):
            assert not o.is_zero(NCPolynomial.from_word(word, 3))
            assert o.in_L(word, BRAIDED)

    def test_cap_guard(self):
        with pytest.raises(ValueError):
            in_L((1, 2, 1, 2, 1, 2, 1), CHAIN2, BRAIDED)
        assert in_L((1, 2, 1, 2, 1, 2, 1, 2), CHAIN2, BRAIDED, cap=8) in (True, False)

    def test_unknown_variant_rejected(self):
        with pytest.raises(ValueError):
            lie_space_basis(CHAIN2, 2, "other")


class TestLieSpaceBasis:
    def test_level_one_is_the_generators(self):
        basis = lie_space_basis(CHAIN2, 1, BRAIDED)
        assert basis == [generator(1, 2), generator(2, 2)]

    def test_level_two_on_a_chain(self):
        # Both bracket orders survive and are independent: the whole
        # 2-dimensional degree-2 component lies in the braided Lie algebra.
        basis = lie_space_basis(CHAIN2, 2, BRAIDED)
        assert len(basis) == 2
        assert {b.degree_vector() for b in basis} == {(1, 1)}

    def test_trivial_cross_entries_kill_the_minus_level(self):
        # With q_12 = q_21 = 1 the two generators commute in the quotient, so
        # the plain bracket has nothing to produce at degree 2.
        assert lie_space_basis(QL33, 2, MINUS) == []

    def test_sign_cross_entries_feed_the_minus_levels(self):
        m = quantum_linear((R(1, 3), R(1, 5)), off=R(1, 2))
        by_level = {d: lie_space_basis(m, d, MINUS) for d in (2, 3, 4)}
        assert [len(by_level[d]) for d in (2, 3, 4)] == [1, 2, 1]
        assert by_level[2][0].degree_vector() == (1, 1)
        assert {b.degree_vector() for b in by_level[3]} == {(1, 2), (2, 1)}
        assert by_level[4][0].degree_vector() == (1, 3)

    def test_degree_guards(self):
        with pytest.raises(ValueError):
            lie_space_basis(CHAIN2, 0, BRAIDED)
        with pytest.raises(ValueError):
            lie_space_basis(CHAIN2, 9, BRAIDED)


class TestSpanMembership:
    def test_scaled_copy_is_inside(self):
        p = NCPolynomial.from_word((1, 2), 2)
        assert span_membership(p.scale(R(1, 4)), [p], CHAIN2)

    def test_independent_word_is_outside(self):
        p = NCPolynomial.from_word((1, 2), 2)
        q = NCPolynomial.from_word((2, 1), 2)
        assert not span_membership(q, [p], CHAIN2)
        assert span_membership(q, [p, minus_bracket(generator(1, 2),
                                                    generator(2, 2))], CHAIN2)

    def test_degree_mismatch_rejected(self):
        p = NCPolynomial.from_word((1, 2), 2)
        with pytest.raises(ValueError):
            span_membership(generator(1, 2), [p], CHAIN2)


class TestPowerPairing:
    def test_iterated_derivation_on_a_pure_power(self):
        # At q_11 = -1 the square vanishes, and so does its full pairing:
        # the coefficient is the q-factorial of 2 at q = -1, which is zero.
        m = quantum_linear((R(1, 2),))
        got = power_pairing(1, 2, NCPolynomial.from_word((1, 1), 1), m)
        assert got.is_zero()

    def test_full_pairing_value_is_the_q_factorial(self):
        m = quantum_linear((R(1, 3),))
        q = embed(m.entry(1, 1).inverse())
        got = power_pairing(1, 2, NCPolynomial.from_word((1, 1), 1), m)
        assert got == NCPolynomial.unit(1).scale(q_factorial(2, q))

    def test_single_step_matches_skew_derive(self):
        p = NCPolynomial.from_word((2, 1), 2)
        assert power_pairing(1, 1, p, CHAIN2) == skew_derive(1, p, CHAIN2)

    def test_prefactor_on_a_leading_bystander(self):
        # Deleting x1 behind a leading x2 costs q_12^{-1}.
        got = power_pairing(1, 1, NCPolynomial.from_word((2, 1), 2), CHAIN2)
        assert got == generator(2, 2).scale(CHAIN2.entry(1, 2).inverse())


class TestOrderCriterion:
    def test_order_exceeds_multiplicity(self):
        m = quantum_linear((R(1, 2),))
        assert nonzero_by_order_criterion((1,), m)
        assert not nonzero_by_order_criterion((1, 1), m)

    def test_entry_one_never_blocks(self):
        m = quantum_linear((R(0, 1),))
        assert nonzero_by_order_criterion((1, 1, 1), m)

    def test_sufficiency_for_nonvanishing(self):
        for name in ("chain-2-q3", "mixed-2-ptilde3", "ql-2-ord3-ord4"):
            m = CATALOG[name]
            o = get_oracle(m)
            for length in range(1, 5):
                for word in product(range(1, m.n + 1), repeat=length):
                    if o.nonzero_by_order_criterion(word):
                        assert not o.is_zero(NCPolynomial.from_word(word, m.n))


class TestOracleCache:
    def test_get_oracle_returns_one_instance_per_matrix(self):
        assert get_oracle(CHAIN2) is get_oracle(CHAIN2)
