"""Commuting families, ladder brackets, rank-2 bases, and decision procedures."""
from itertools import product

import pytest

from nichols import (BRAIDED, MINUS, CommutingFamily, CycNumber, NCPolynomial,
                     RootFraction, all_bracketings, apply_bracketing, catalog,
                     closed_form_left_normed, decide_lie_variants_coincide,
                     decide_minus_lie_complement, dim_component, embed,
                     generator, get_oracle, in_L, ladder_closed_form,
                     ladder_expansion, ladder_monomial, left_normed_minus,
                     lie_space_basis, minus_bracket, quantum_linear_rank2_basis,
                     rank2_membership, verify_connectivity_criterion,
                     verify_disconnected_brackets_vanish)
from nichols.catalog import quantum_linear

R = RootFraction
CATALOG = catalog()

# Two generators of orders 3 and 5 whose off-diagonal entries are -1: the
# running rank-2 example throughout this suite.
GOLDEN = quantum_linear((R(1, 3), R(1, 5)), off=R(1, 2))

GOLDEN_PAIRS = {
    (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (3, 1), (3, 2), (4, 1),
}


def _gens(matrix):
    return [generator(i, matrix.n) for i in range(1, matrix.n + 1)]


class TestCommutingFamily:
    def test_generators_of_a_quantum_linear_matrix(self):
        fam = CommutingFamily(_gens(GOLDEN), GOLDEN)
        assert len(fam) == 2
        assert fam.ratio(1, 2) == R(1, 2)
        assert fam.ratio(2, 1) == R(1, 2)
        assert fam.ratio(1, 1) == R(0, 1)

    def test_ratio_against_accumulates(self):
        m = CATALOG["ql-3-ord2-ord3-ord4"]
        fam = CommutingFamily(_gens(m), m)
        assert fam.ratio_against(1, (2, 3)) == fam.ratio(1, 2) * fam.ratio(1, 3)

    def test_non_commuting_members_rejected(self):
        chain = CATALOG["chain-2-q2"]
        with pytest.raises(ValueError):
            CommutingFamily(_gens(chain), chain)

    def test_inhomogeneous_member_rejected(self):
        mixed = generator(1, 2) + NCPolynomial.from_word((1, 1), 2)
        with pytest.raises(ValueError):
            CommutingFamily([mixed], GOLDEN)

    def test_empty_family_rejected(self):
        with pytest.raises(ValueError):
            CommutingFamily([], GOLDEN)


class TestClosedFormLeftNormed:
    def test_two_member_coefficient_is_one_minus_ratio(self):
        fam = CommutingFamily(_gens(GOLDEN), GOLDEN)
        coeff, prod = closed_form_left_normed(fam)
        # r_12 = -1, so the bracket doubles the reversed product.
        assert coeff == CycNumber.from_rational(2)
        assert prod == generator(2, 2) * generator(1, 2)

    def test_matches_direct_expansion_in_quotient(self):
        for name in ("ql-2-ord3-ord3", "ql-2-ord3-ord4", "ql-3-ord2-ord3-ord4",
                     "ql-3-ord3-ord3-ord3-neg"):
            m = CATALOG[name]
            fam = CommutingFamily(_gens(m), m)
            coeff, prod = closed_form_left_normed(fam)
            direct = left_normed_minus(fam.members)
            assert get_oracle(m).is_zero(direct - prod.scale(coeff)), name

    def test_repeated_members_are_allowed(self):
        x1, x2 = _gens(GOLDEN)
        fam = CommutingFamily([x2, x1, x1], GOLDEN)
        coeff, prod = closed_form_left_normed(fam)
        direct = left_normed_minus([x2, x1, x1])
        assert get_oracle(GOLDEN).is_zero(direct - prod.scale(coeff))


class TestLadder:
    def test_two_member_ladder_coefficient(self):
        # Each application of [x2, .]^- contributes 1 - r_21 = 2; three
        # applications cube it.
        fam = CommutingFamily(_gens(GOLDEN), GOLDEN)
        coeff, lambdas = ladder_closed_form(fam, (3,))
        assert lambdas == [CycNumber.from_rational(2)]
        assert coeff == CycNumber.from_rational(8)

    def test_closed_form_equals_expansion_in_quotient(self):
        m = CATALOG["ql-3-ord3-ord3-ord3-neg"]
        fam = CommutingFamily(_gens(m), m)
        o = get_oracle(m)
        for ms in product((1, 2), repeat=2):
            coeff, _ = ladder_closed_form(fam, ms)
            direct = ladder_expansion(fam, ms)
            reference = ladder_monomial(fam, ms).scale(coeff)
            assert o.is_zero(direct - reference), ms

    def test_multiplicity_validation(self):
        fam = CommutingFamily(_gens(GOLDEN), GOLDEN)
        with pytest.raises(ValueError):
            ladder_closed_form(fam, ())
        with pytest.raises(ValueError):
            ladder_closed_form(fam, (0,))

    def test_monomial_shape(self):
        fam = CommutingFamily(_gens(GOLDEN), GOLDEN)
        mono = ladder_monomial(fam, (2,))
        assert mono == NCPolynomial.from_word((1, 2, 2), 2)


class TestRank2Membership:
    def test_golden_matrix_divisibility(self):
        fam = CommutingFamily(_gens(GOLDEN), GOLDEN)
        assert rank2_membership(1, 1, fam)
        assert rank2_membership(2, 1, fam)
        assert not rank2_membership(2, 2, fam)
        assert not rank2_membership(0, 2, fam)

    def test_agrees_with_oracle_membership(self):
        fam = CommutingFamily(_gens(GOLDEN), GOLDEN)
        o = get_oracle(GOLDEN)
        for a1 in range(3):
            for a2 in range(5):
                if a1 + a2 < 1 or a1 + a2 > 5:
                    continue
                word = (1,) * a1 + (2,) * a2
                if o.is_zero(NCPolynomial.from_word(word, 2)):
                    continue
                assert rank2_membership(a1, a2, fam) == o.in_L(word, MINUS), (a1, a2)

    def test_vanishing_monomial_rejected(self):
        fam = CommutingFamily(_gens(GOLDEN), GOLDEN)
        with pytest.raises(ValueError):
            rank2_membership(3, 0, fam)

    def test_family_shape_validated(self):
        m = CATALOG["ql-3-ord2-ord3-ord4"]
        fam3 = CommutingFamily(_gens(m), m)
        with pytest.raises(ValueError):
            rank2_membership(1, 1, fam3)
        squares = CommutingFamily([g * g for g in _gens(GOLDEN)], GOLDEN)
        with pytest.raises(ValueError):
            rank2_membership(1, 1, squares)


class TestRank2Basis:
    def test_golden_eight_monomials(self):
        basis = quantum_linear_rank2_basis(GOLDEN)
        assert set(basis.pairs) == GOLDEN_PAIRS
        assert not basis.truncated

    def test_pairs_are_sorted(self):
        basis = quantum_linear_rank2_basis(GOLDEN)
        assert list(basis.pairs) == sorted(basis.pairs)

    def test_non_quantum_linear_rejected(self):
        with pytest.raises(ValueError):
            quantum_linear_rank2_basis(CATALOG["chain-2-q2"])
        with pytest.raises(ValueError):
            quantum_linear_rank2_basis(CATALOG["ql-3-ord2-ord3-ord4"])

    def test_infinite_direction_truncates(self):
        m = quantum_linear((R(0, 1), R(1, 3)), off=R(1, 2))
        basis = quantum_linear_rank2_basis(m, degree_cap=6)
        assert basis.truncated
        assert all(a2 + a1 <= 6 for a2, a1 in basis.pairs if (a2, a1) != (0, 1))
        # Doubly even exponent pairs fall outside; anything with an odd
        # coordinate stays.
        assert (1, 2) in basis.pairs and (2, 1) in basis.pairs
        assert (2, 2) not in basis.pairs and (2, 4) not in basis.pairs


class TestDecisionProcedures:
    def test_variants_coincide_only_for_sign_diagonals_with_trivial_offdiag(self):
        assert decide_lie_variants_coincide(CATALOG["ql-2-ord2-ord2"])
        assert not decide_lie_variants_coincide(CATALOG["ql-2-ord2-ord2-neg"])
        assert not decide_lie_variants_coincide(CATALOG["ql-2-ord3-ord3"])
        assert not decide_lie_variants_coincide(CATALOG["chain-2-q2"])

    def test_variants_coincide_matches_levelwise_emptiness(self):
        for name in ("ql-2-ord2-ord2", "ql-2-ord2-ord2-neg", "ql-2-ord3-ord3",
                     "mixed-2-diag1", "mixed-3-isolated"):
            m = CATALOG[name]
            decision = decide_lie_variants_coincide(m)
            brute = all(
                not lie_space_basis(m, d, variant)
                for d in (2, 3, 4) for variant in (BRAIDED, MINUS))
            assert decision == brute, name

    def test_minus_complement_needs_sign_diagonal(self):
        assert decide_minus_lie_complement(CATALOG["ql-2-ord2-ord2-neg"])
        assert not decide_minus_lie_complement(CATALOG["ql-2-ord2-ord2"])
        assert not decide_minus_lie_complement(CATALOG["ql-2-ord3-ord3"])
        assert not decide_minus_lie_complement(CATALOG["chain-2-q2"])

    def test_minus_complement_matches_graded_dimensions(self):
        # The quotient splits as scalars + Lie part exactly when the graded
        # dimensions agree in every positive degree up to the top.
        for name in ("ql-2-ord2-ord2", "ql-2-ord2-ord2-neg"):
            m = CATALOG[name]
            top = sum(m.entry(i, i).order - 1 for i in range(1, m.n + 1))
            brute = all(
                dim_component(m, d) == len(lie_space_basis(m, d, MINUS, cap=top))
                for d in range(1, top + 1))
            assert decide_minus_lie_complement(m) == brute, name


class TestBracketings:
    def test_catalan_counts(self):
        assert [len(all_bracketings(m)) for m in (1, 2, 3, 4, 5)] == [1, 1, 2, 5, 14]

    def test_apply_bracketing_on_two_letters(self):
        tree = all_bracketings(2)[0]
        got = apply_bracketing(tree, (1, 2), 2)
        assert got == minus_bracket(generator(1, 2), generator(2, 2))

    def test_leaves_index_word_positions(self):
        for tree in all_bracketings(3):
            got = apply_bracketing(tree, (1, 2, 1), 2)
            assert got.degree_vector() in ((2, 1), None)


class TestSweeps:
    def test_connectivity_criterion_reports_counts(self):
        report = verify_connectivity_criterion(CATALOG["chain-2-q2"], max_len=3)
        assert report.ok
        assert report.checked > 0
        json = report.to_json()
        assert json["ok"] and json["violations"] == []
        assert json["checked"] == report.checked

    def test_connectivity_criterion_skips_trivial_diagonal_support(self):
        report = verify_connectivity_criterion(CATALOG["mixed-2-diag1"], max_len=3)
        assert report.ok
        assert report.skipped > 0

    def test_disconnected_brackets_vanish_on_diagonal_matrix(self):
        report = verify_disconnected_brackets_vanish(
            CATALOG["mixed-3-isolated"], max_len=4)
        assert report.ok
        assert report.checked > 0

    def test_disconnected_brackets_vanish_on_one_sided_matrix(self):
        report = verify_disconnected_brackets_vanish(
            CATALOG["ql-2-ord2-ord2-neg"], max_len=4)
        assert report.ok
