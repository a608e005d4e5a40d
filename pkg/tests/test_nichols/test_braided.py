"""
Tests for nichols/braided.py
"""

import pytest

from algebra.cyclotomic import CycScalar, root_of_unity
from algebra.exceptions import MalformedInput, ZeroParameter
from nichols.braided import (
    BraidedSpace,
    Rack,
    analyze,
    check_braid_equation,
    connected_components,
    detect_diagonal,
    diagonal_eigenbasis,
    dynkin,
    extract_rack,
    is_invertible,
    is_type_D,
    make_vabe,
    match_vabe,
)
from algebra.suzuki import SuzukiParams
from nichols.closed_forms import i_braiding, k_table
from tests.utils import braiding_payload


def rack_braiding(size, op):
    """Set-theoretic braiding c(e_x e_y) = e_{x > y} e_x."""
    one = CycScalar.one()
    constants = {(x, y): [(op(x, y), x, one)] for x in range(size) for y in range(size)}
    return BraidedSpace(size, 1, constants)


def dihedral_rack(size):
    return Rack(size, {(x, y): (2 * x - y) % size for x in range(size) for y in range(size)})


@pytest.mark.unit
@pytest.mark.nichols
class TestBraidedSpace:
    """Test suite for BraidedSpace and its JSON form."""

    def test_default_labels(self, a1xa1_braiding):
        """Should label the basis e1..ed."""
        assert a1xa1_braiding.labels == ["e1", "e2"]

    def test_label_count_must_match(self):
        """Should raise MalformedInput when labels and dimension disagree."""
        with pytest.raises(MalformedInput):
            BraidedSpace(2, 1, {}, ["x"])

    def test_from_json(self):
        """Should read constants and lift the order to the lcm of the scalars."""
        space = BraidedSpace.from_json(braiding_payload(2, [[0, 0, 0, 0, 1], [1, 1, 1, 1, 2]], order=4))
        assert space.order == 4
        assert space.image(0, 0) == [(0, 0, root_of_unity(4, 1))]
        assert space.image(0, 1) == []

    @pytest.mark.parametrize(
        "payload",
        [
            {"constants": []},
            {"dim": 2, "constants": [[0, 0, 2, 0, {"order": 1, "exp": 0}]]},
            {"dim": 2, "constants": [[0, 0, 0]]},
            {"dim": "two", "constants": []},
        ],
    )
    def test_from_json_rejects(self, payload):
        """Should raise MalformedInput on missing fields and out-of-range indices."""
        with pytest.raises(MalformedInput):
            BraidedSpace.from_json(payload)

    def test_exp_only(self):
        """Should accept only exponent scalars when asked to."""
        payload = {"dim": 1, "constants": [[0, 0, 0, 0, CycScalar(5, [1, 1]).to_json()]]}
        with pytest.raises(MalformedInput):
            BraidedSpace.from_json(payload, exp_only=True)

    def test_matrix_and_invertibility(self, a2_braiding):
        """Should build the d^2 x d^2 matrix of c."""
        assert a2_braiding.matrix().rows == 4
        assert is_invertible(a2_braiding)


@pytest.mark.unit
@pytest.mark.nichols
class TestBraidEquation:
    """Test suite for check_braid_equation."""

    def test_diagonal_braidings_pass(self, a1xa1_braiding, a2_braiding, rank_one_g4):
        """Should accept every diagonal braiding."""
        for space in (a1xa1_braiding, a2_braiding, rank_one_g4):
            report = check_braid_equation(space)
            assert report.passed
            assert report.triples == space.dim**3

    def test_rack_braiding_passes(self):
        """Should accept the braiding of the dihedral rack."""
        assert check_braid_equation(rack_braiding(6, lambda x, y: (2 * x - y) % 6)).passed

    def test_non_distributive_operation_fails(self):
        """Should report a mismatch for x > y = x + y mod 3."""
        report = check_braid_equation(rack_braiding(3, lambda x, y: (x + y) % 3))
        assert not report.passed
        assert len(report.mismatch["triple"]) == 3


@pytest.mark.unit
@pytest.mark.nichols
class TestDiagonal:
    """Test suite for detect_diagonal and dynkin."""

    def test_detects_standard_basis(self, a2_braiding):
        """Should read q off a diagonal braiding."""
        q = detect_diagonal(a2_braiding)
        assert q.basis == "standard"
        assert q[0, 1] == root_of_unity(3, 2)

    def test_vabe_eigenbasis(self):
        """Should diagonalize V_abe when ae = b^2."""
        w = root_of_unity(3, 1)
        q = detect_diagonal(make_vabe(w, w, w))
        assert q.basis == "vabe-eigenbasis"
        assert q.entries == [[w, -w], [-w, w]]

    def test_general_vabe_is_not_diagonal(self, vabe_m_squared):
        """Should return None when ae != b^2."""
        assert detect_diagonal(vabe_m_squared) is None

    def test_dynkin_diagram(self, a1xa1_braiding, a2_braiding):
        """Should draw an edge exactly when q_ij q_ji != 1."""
        assert dynkin(detect_diagonal(a1xa1_braiding)).edges == {}
        diagram = dynkin(detect_diagonal(a2_braiding))
        assert diagram.edges == {(0, 1): root_of_unity(3, 2)}
        assert connected_components(diagram) == [[0, 1]]


@pytest.mark.unit
@pytest.mark.nichols
class TestVabe:
    """Test suite for make_vabe and match_vabe."""

    def test_round_trip(self, vabe_four_m):
        """Should recover (a, b, e) from the constructed space."""
        a, b, e = match_vabe(vabe_four_m)
        assert a == root_of_unity(3, 1)
        assert b == -1
        assert e == 1

    def test_zero_parameter(self):
        """Should raise ZeroParameter for a = 0."""
        with pytest.raises(ZeroParameter):
            make_vabe(0, 1, 1)

    def test_match_needs_dimension_two(self, rank_one_g4):
        """Should return None in other dimensions."""
        assert match_vabe(rank_one_g4) is None


@pytest.mark.unit
@pytest.mark.nichols
class TestRacks:
    """Test suite for extract_rack and is_type_D."""

    def test_diagonal_braiding_has_trivial_rack(self, a2_braiding):
        """Should extract x > y = y from a diagonal braiding."""
        rack, cocycle = extract_rack(a2_braiding)
        assert all(rack.op(x, y) == y for x in range(2) for y in range(2))
        assert cocycle[(0, 1)] == root_of_unity(3, 2)

    def test_vabe_is_not_a_rack_braiding(self, vabe_m_squared):
        """Should return None when c(e_x e_y) does not end in e_x."""
        assert extract_rack(vabe_m_squared) is None

    def test_dihedral_rack_of_order_six_is_type_d(self):
        """Should find the witness 0 > (1 > (0 > 1)) = 3 in the even/odd split."""
        witness = is_type_D(dihedral_rack(6))
        assert witness["method"] == "exhaustive"
        assert witness["part"] == ["0", "2", "4"]
        assert (witness["r"], witness["s"], witness["value"]) == ("0", "1", "3")

    def test_dihedral_rack_of_order_four_is_not_type_d(self):
        """Should return None for the dihedral rack of order 4."""
        assert is_type_D(dihedral_rack(4)) is None

    def test_trivial_rack_is_not_type_d(self, a1xa1_braiding):
        """Should return None for the trivial rack."""
        rack, _ = extract_rack(a1xa1_braiding)
        assert is_type_D(rack) is None

    def test_rack_axioms(self):
        """Should check bijectivity and self-distributivity."""
        assert dihedral_rack(5).self_distributive()
        assert dihedral_rack(5).translations_bijective()
        broken = Rack(2, {(0, 0): 0, (0, 1): 0, (1, 0): 1, (1, 1): 1})
        assert not broken.translations_bijective()


@pytest.mark.unit
@pytest.mark.nichols
class TestDiagonalEigenbasis:
    """Test suite for diagonal_eigenbasis."""

    def test_standard_basis_of_a_diagonal_braiding(self, a2_braiding):
        """Should keep the given basis when it already diagonalizes c."""
        q = diagonal_eigenbasis(a2_braiding)
        assert q.entries == detect_diagonal(a2_braiding).entries
        assert q.vectors == [{0: CycScalar.one()}, {1: CycScalar.one()}]

    def test_dihedral_i_module(self):
        """Should find w1 +- w2, m1 +- m2 and two A2 components at q = -1."""
        space = i_braiding(SuzukiParams(1, 2), {"p": 1, "j": 4, "k": 0, "s": 1})
        q = detect_diagonal(space)
        assert q.basis == "eigenbasis"
        assert sorted(sorted(v) for v in q.vectors) == [[0, 1], [0, 1], [2, 3], [2, 3]]
        assert all(q[i, i] == -1 for i in range(4))
        assert [len(c) for c in connected_components(dynkin(q))] == [2, 2]

    @pytest.mark.parametrize("j", [2, 4])
    def test_dihedral_k_module(self, j):
        """Should pair w1 with w3 and w2 with w4."""
        q = diagonal_eigenbasis(k_table(SuzukiParams(1, 2), {"p": 1, "j": j, "k": 0, "s": 1}))
        assert sorted(sorted(v) for v in q.vectors) == [[0, 2], [0, 2], [1, 3], [1, 3]]
        assert [len(c) for c in connected_components(dynkin(q))] == [2, 2]

    def test_d4_rack_has_no_eigenbasis(self):
        """Should return None when the common eigenvectors do not span."""
        space = i_braiding(SuzukiParams(1, 2), {"p": 1, "j": 2, "k": 0, "s": 1})
        assert diagonal_eigenbasis(space) is None
        assert detect_diagonal(space) is None

    def test_vabe_off_the_diagonal_locus(self, vabe_m_squared):
        """Should return None for V_abe with ae != b^2."""
        assert diagonal_eigenbasis(vabe_m_squared) is None

    def test_json_carries_vectors(self):
        """Should list the basis vectors in the JSON payload."""
        space = i_braiding(SuzukiParams(1, 2), {"p": 1, "j": 4, "k": 0, "s": 1})
        payload = detect_diagonal(space).to_json()
        assert payload["basis"] == "eigenbasis"
        assert len(payload["vectors"]) == 4


@pytest.mark.unit
@pytest.mark.nichols
class TestAnalyze:
    """Test suite for analyze."""

    def test_diagonal_report(self, a1xa1_braiding):
        """Should report the q-matrix and the trivial rack."""
        report = analyze(a1xa1_braiding)
        assert set(report) == {"dim", "braid_equation", "diagonal", "qmatrix", "dynkin", "vabe", "rack", "type_d"}
        assert report["diagonal"] is True
        assert report["braid_equation"]["passed"] is True
        assert report["vabe"] is None
        assert report["type_d"] is None

    def test_vabe_report(self, vabe_four_m):
        """Should report a, b, e and the product ae."""
        report = analyze(vabe_four_m)
        assert report["diagonal"] is False
        assert report["vabe"]["ae"] == {"order": 3, "exp": 1}
        assert report["rack"] is None

    def test_rack_report(self):
        """Should carry the type D witness."""
        report = analyze(rack_braiding(6, lambda x, y: (2 * x - y) % 6))
        assert report["rack"]["size"] == 6
        assert report["type_d"]["value"] == "e4"
