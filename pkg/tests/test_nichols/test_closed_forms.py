"""
Tests for nichols/closed_forms.py
"""

import pytest

from algebra.cyclotomic import CycScalar
from algebra.exceptions import BadIndex
from algebra.suzuki import SuzukiParams
from nichols.braided import check_braid_equation, detect_diagonal, extract_rack, is_type_D, match_vabe
from nichols.closed_forms import (
    ae_over_b_squared,
    closed_form,
    compare_braidings,
    de_exponents,
    diagonal_closed_form,
    gh_parameters,
    i_braiding,
    k_braiding,
    k_table,
)
from nichols.yd import braiding_of, build_family, family_indices


@pytest.mark.unit
@pytest.mark.nichols
class TestDiagonalForms:
    """Test suite for the diagonal closed forms."""

    def test_a_family(self):
        """Should give omega^{8nks} on a single vertex."""
        params = SuzukiParams(2, 1)
        q = diagonal_closed_form("A", params, {"i": 0, "j": 0, "k": 1, "p": 0, "s": 1})
        assert q.dim == 1
        assert q[0, 0] == -1

    def test_b_family_is_constant(self, smallest_params):
        """Should repeat one scalar over the 2 x 2 matrix."""
        q = diagonal_closed_form("B", smallest_params, {"i": 0, "j": 1, "k": 0, "s": 1})
        assert q.entries == [[1, 1], [1, 1]]

    def test_de_exponents(self, small_params):
        """Should reduce alpha and beta modulo M."""
        idx = {"j": 2, "k": 0, "p": 0, "s": 1, "t": 0}
        assert de_exponents("D", small_params, idx) == (12, 4)
        assert de_exponents("E", small_params, idx) == (0, 0)

    def test_de_exponents_other_families(self, small_params):
        """Should raise BadIndex outside D and E."""
        with pytest.raises(BadIndex):
            de_exponents("A", small_params, {})

    def test_no_diagonal_form(self, small_params):
        """Should raise BadIndex for a family without a diagonal form."""
        with pytest.raises(BadIndex):
            diagonal_closed_form("K", small_params, {"p": 0, "j": 2, "k": 0, "s": 1})


@pytest.mark.unit
@pytest.mark.nichols
class TestNonDiagonalForms:
    """Test suite for the P, G, H, I and K closed forms."""

    def test_p_family_is_vabe(self, smallest_params):
        """Should give V_qqq."""
        space = closed_form("P", smallest_params, {"i": 0, "j": 0, "k": 0, "p": 0, "s": 1, "t": 0})
        a, b, e = match_vabe(space)
        assert a == b == e

    def test_gh_parameters_need_g_or_h(self, smallest_params):
        """Should raise BadIndex for other families."""
        with pytest.raises(BadIndex):
            gh_parameters("P", smallest_params, {})

    def test_gh_have_no_full_form(self, twisted_params):
        """Should return None where only invariants are printed."""
        idx = family_indices("G", twisted_params)[0]
        assert closed_form("G", twisted_params, idx) is None

    def test_i_braiding_at_n_one_is_diagonal(self, smallest_params):
        """Should give a diagonal braiding for n = 1."""
        space = i_braiding(smallest_params, {"p": 0, "j": 2, "k": 0, "s": 1})
        assert detect_diagonal(space) is not None
        assert check_braid_equation(space).passed

    def test_i_braiding_at_n_two_is_a_rack(self, small_params):
        """Should give a rack braiding on w1, w2, m1, m2 without a type D witness."""
        space = i_braiding(small_params, {"p": 0, "j": 2, "k": 0, "s": 1})
        rack, _ = extract_rack(space)
        assert rack.size == 4
        assert rack.op(0, 2) == 3
        assert is_type_D(rack) is None

    def test_i_braiding_beyond_n_two(self):
        """Should raise BadIndex for n = 3 and return None from closed_form."""
        params = SuzukiParams(1, 3)
        idx = {"p": 0, "j": 2, "k": 0, "s": 1}
        with pytest.raises(BadIndex):
            i_braiding(params, idx)
        assert closed_form("I", params, idx) is None

    @pytest.mark.parametrize("p", [0, 1])
    @pytest.mark.parametrize("j", [2, 4])
    def test_k_formula_matches_table_for_n_one(self, smallest_params, p, j):
        """Should reproduce the printed 2 x 2 table."""
        idx = {"p": p, "j": j, "k": 0, "s": 1}
        assert compare_braidings(k_braiding(smallest_params, idx), k_table(smallest_params, idx)) == []

    @pytest.mark.parametrize("shape", [(1, 2), (1, 3), (2, 2)])
    def test_k_formula_matches_tables(self, shape):
        """Should reproduce the printed 4 x 4 and 6 x 6 tables for every K module and sign choice."""
        compared = 0
        for mu in (1, -1):
            for lam in (1, -1):
                params = SuzukiParams(*shape, mu, lam)
                for idx in family_indices("K", params):
                    assert compare_braidings(k_braiding(params, idx), k_table(params, idx)) == [], (mu, lam, idx)
                    compared += 1
        assert compared > 0

    def test_ae_over_b_squared_of_p_is_one(self, smallest_params):
        """Should give 1 for the V_qqq shape of P."""
        idx = {"i": 0, "j": 0, "k": 0, "p": 0, "s": 1, "t": 0}
        assert ae_over_b_squared("P", smallest_params, idx) == 1

    def test_k_table_limit(self):
        """Should raise BadIndex for n > 3."""
        with pytest.raises(BadIndex):
            k_table(SuzukiParams(1, 4), {"p": 0, "j": 2, "k": 0, "s": 1})


@pytest.mark.unit
@pytest.mark.nichols
class TestCompareBraidings:
    """Test suite for compare_braidings."""

    def test_identical(self, a2_braiding):
        """Should return no mismatches."""
        assert compare_braidings(a2_braiding, a2_braiding) == []

    def test_dimension_mismatch(self, a2_braiding, rank_one_g4):
        """Should report the two dimensions."""
        assert compare_braidings(a2_braiding, rank_one_g4) == [{"dim": [2, 1]}]

    def test_reports_exponents(self):
        """Should list differing entries as monomial exponents."""
        params = SuzukiParams(2, 1)
        expected = closed_form("A", params, {"i": 0, "j": 0, "k": 1, "p": 0, "s": 1})
        actual = closed_form("A", params, {"i": 0, "j": 0, "k": 0, "p": 0, "s": 1})
        mismatches = compare_braidings(actual, expected)
        assert mismatches == [{"source": ["w", "w"], "actual": [["w", "w", 0]], "expected": [["w", "w", 8]]}]


@pytest.mark.integration
@pytest.mark.nichols
class TestAgainstConstruction:
    """Test suite comparing closed forms with braidings extracted from the box product."""

    @pytest.mark.parametrize("N,n", [(1, 1), (2, 1), (1, 2)])
    def test_a_family(self, N, n):
        """Should match the A family entry by entry."""
        params = SuzukiParams(N, n)
        for idx in family_indices("A", params):
            actual = braiding_of(build_family("A", params, **idx))
            assert compare_braidings(actual, closed_form("A", params, idx)) == []

    def test_one_dimensional_braidings_are_scalars(self, smallest_params):
        """Should give monomial scalars for every one-dimensional module."""
        for tag in ("A", "Abar"):
            for idx in family_indices(tag, smallest_params):
                space = braiding_of(build_family(tag, smallest_params, **idx))
                [(k, l, c)] = space.image(0, 0)
                assert (k, l) == (0, 0)
                assert isinstance(c, CycScalar)
                assert c**smallest_params.M == 1
