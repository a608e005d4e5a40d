"""
Tests for nichols/classifier.py

Verdicts from the rank-two table, the V_abe case list and the per-family
conditions, plus the cross-check between the two routes.
"""

import pytest

from algebra.cyclotomic import CycScalar, root_of_unity
from algebra.exceptions import BadIndex, MalformedInput, NotDiagonal, ZeroParameter
from algebra.suzuki import SuzukiParams
from nichols.braided import QMatrix
from nichols.classifier import (
    PRESETS,
    DimVerdict,
    braiding_verdict,
    corollary_check,
    cross_check,
    de_cases,
    diagonal_verdict,
    gh_search,
    lemma_verdict,
    rank2_table_lookup,
    sweep,
    vabe_verdict,
)

W3 = root_of_unity(3, 1)
ONE = CycScalar.one()
MINUS = CycScalar.rational(-1)


def q2(q00, q01, q10, q11):
    return QMatrix([[q00, q01], [q10, q11]])


@pytest.mark.unit
@pytest.mark.nichols
class TestDimVerdict:
    """Test suite for DimVerdict."""

    def test_labels(self):
        """Should render Finite(n), Finite(type-only), Infinite and Unknown."""
        assert DimVerdict.finite(27, "A2", "x").label == "Finite(27)"
        assert DimVerdict.finite(None, "ufo8", "x").label == "Finite(type-only)"
        assert DimVerdict.infinite("x").label == "Infinite"
        assert DimVerdict.unknown("x").label == "Unknown"
        assert DimVerdict.unclassified("x").label == "Unclassified"

    def test_unknown_type_tag(self):
        """Should refuse type tags outside the fixed list."""
        with pytest.raises(MalformedInput):
            DimVerdict.finite(4, "B2", "x")

    def test_same_answer(self):
        """Should compare outcome and value, ignoring reasons and provenance."""
        lemma = DimVerdict.finite(4, "A1xA1", "lemma reason")
        pipeline = DimVerdict.finite(4, "A1xA1", "table reason", provenance="pipeline")
        assert lemma.same_answer(pipeline)
        assert not lemma.same_answer(DimVerdict.finite(27, "A2", "x"))
        assert not lemma.same_answer(DimVerdict.infinite("x"))
        assert DimVerdict.finite(None, "ufo8", "a").same_answer(DimVerdict.finite(None, "ufo8", "b"))

    def test_as_dict(self):
        """Should expose every field with the rendered verdict."""
        payload = DimVerdict.finite(4, "A1xA1", "x", flags=("A2",)).as_dict()
        assert set(payload) == {"outcome", "verdict", "value", "type_tag", "reason", "provenance", "flags", "diagram"}
        assert payload["verdict"] == "Finite(4)"
        assert payload["flags"] == ["A2"]


@pytest.mark.unit
@pytest.mark.nichols
class TestRankTwoTable:
    """Test suite for rank2_table_lookup and diagonal_verdict."""

    def test_disconnected_minus_ones(self):
        """Should give A1 x A1 of dimension 4."""
        verdict = rank2_table_lookup(q2(MINUS, ONE, ONE, MINUS))
        assert (verdict.value, verdict.type_tag) == (4, "A1xA1")

    def test_cartan_a2(self):
        """Should give 27 for q in G_3 with q~ = q^-1."""
        verdict = rank2_table_lookup(q2(W3, W3**2, ONE, W3))
        assert (verdict.value, verdict.type_tag) == (27, "A2")

    def test_super_a2(self):
        """Should give a type-only SuperA2 verdict for vertices -1, -1."""
        verdict = rank2_table_lookup(q2(MINUS, root_of_unity(4, 1), ONE, MINUS))
        assert verdict.type_tag == "SuperA2"
        assert verdict.type_only

    def test_ufo8(self):
        """Should recognise vertices -zeta^2 with edge zeta in G_12."""
        zeta = root_of_unity(12, 1)
        vertex = -(zeta * zeta)
        verdict = rank2_table_lookup(q2(vertex, zeta, ONE, vertex))
        assert verdict.type_tag == "ufo8"
        assert verdict.label == "Finite(type-only)"

    def test_cartan_a2_at_minus_one(self):
        """Should give 8 for Cartan type A2 at q = -1."""
        verdict = rank2_table_lookup(q2(MINUS, MINUS, ONE, MINUS))
        assert (verdict.value, verdict.type_tag) == (8, "A2")

    def test_cartan_a2_at_order_four(self):
        """Should give ord(q)^3 for Cartan type A2 at a primitive fourth root."""
        i = root_of_unity(4, 1)
        verdict = rank2_table_lookup(q2(i, i**3, ONE, i))
        assert (verdict.value, verdict.type_tag) == (64, "A2")

    def test_disconnected_pair_of_mixed_orders(self):
        """Should tag any disconnected pair A1xA1 and multiply the vertex orders."""
        verdict = rank2_table_lookup(q2(W3, ONE, ONE, MINUS))
        assert (verdict.value, verdict.type_tag) == (6, "A1xA1")

    def test_vertex_one_is_infinite(self):
        """Should return Infinite when a vertex equals 1."""
        assert rank2_table_lookup(q2(ONE, ONE, ONE, MINUS)).label == "Infinite"

    def test_rank_one(self):
        """Should give ord(q) in rank one."""
        verdict = rank2_table_lookup(QMatrix([[root_of_unity(4, 1)]]))
        assert (verdict.value, verdict.type_tag) == (4, "A1")

    def test_unclassified_carries_diagram(self):
        """Should attach the diagram to patterns outside the table."""
        verdict = rank2_table_lookup(q2(W3, W3, ONE, MINUS))
        assert verdict.label == "Unclassified"
        assert verdict.diagram["vertices"] == [W3.to_json(), MINUS.to_json()]

    def test_rejects_non_diagonal_and_large(self):
        """Should raise NotDiagonal for None and MalformedInput above rank two."""
        with pytest.raises(NotDiagonal):
            rank2_table_lookup(None)
        with pytest.raises(MalformedInput):
            rank2_table_lookup(QMatrix([[MINUS] * 3] * 3))

    def test_components_multiply(self):
        """Should multiply the verdicts of disconnected components."""
        q = QMatrix([[MINUS, ONE, ONE], [ONE, MINUS, ONE], [ONE, ONE, MINUS]])
        verdict = diagonal_verdict(q)
        assert verdict.value == 8

    def test_braiding_verdict(self, a2_braiding, vabe_four_m):
        """Should read verdicts straight off braidings."""
        assert braiding_verdict(a2_braiding).value == 27
        assert braiding_verdict(vabe_four_m).value == 12


@pytest.mark.unit
@pytest.mark.nichols
class TestVabeVerdict:
    """Test suite for vabe_verdict."""

    @pytest.mark.parametrize(
        "a,b,e,label,tag",
        [
            (ONE, MINUS, ONE, "Finite(4)", "A1xA1"),
            (W3, W3, W3, "Finite(27)", "A2"),
            (MINUS, root_of_unity(4, 1), ONE, "Infinite", None),
            (W3, MINUS, ONE, "Finite(12)", "Vabe4m"),
            (W3, W3, W3**2, "Finite(9)", "VabeM2"),
            (root_of_unity(5, 3), root_of_unity(5, 1), ONE, "Infinite", None),
            (W3, ONE, ONE, "Infinite", None),
            (W3, W3, ONE, "Unknown", None),
            (CycScalar.rational(2), MINUS, ONE, "Unknown", None),
        ],
    )
    def test_cases(self, a, b, e, label, tag):
        """Should walk the V_abe cases in order."""
        verdict = vabe_verdict(a, b, e)
        assert verdict.label == label
        assert verdict.type_tag == tag

    def test_zero_parameter(self):
        """Should raise ZeroParameter for e = 0."""
        with pytest.raises(ZeroParameter):
            vabe_verdict(1, 1, 0)

    def test_depends_on_ae_only(self):
        """Should give the same verdict for (a, e) and (ae, 1)."""
        a, e = root_of_unity(6, 1), root_of_unity(6, 1)
        assert vabe_verdict(a, MINUS, e).same_answer(vabe_verdict(a * e, MINUS, ONE))


@pytest.mark.unit
@pytest.mark.nichols
class TestLemmaVerdict:
    """Test suite for the per-family conditions."""

    def test_a_family(self, smallest_params):
        """Should be Infinite when N | ks and N/(N, ks) otherwise."""
        assert lemma_verdict("A", smallest_params, {"i": 0, "j": 0, "k": 0, "p": 0, "s": 1}).label == "Infinite"
        verdict = lemma_verdict("A", SuzukiParams(2, 1), {"i": 0, "j": 0, "k": 1, "p": 0, "s": 1})
        assert (verdict.value, verdict.type_tag) == (2, "A1")

    def test_b_family(self):
        """Should give 4 when N | 2ks and 27 when N | 3ks."""
        idx = {"i": 0, "j": 1, "k": 1, "s": 1}
        assert lemma_verdict("B", SuzukiParams(2, 1), idx).value == 4
        assert lemma_verdict("B", SuzukiParams(3, 1), idx).value == 27
        assert lemma_verdict("B", SuzukiParams(5, 1), idx).label == "Infinite"

    def test_i_family_n_one(self, smallest_params):
        """Should give 4 for q = -1 and Infinite for q = 1."""
        assert lemma_verdict("I", smallest_params, {"p": 1, "j": 2, "k": 0, "s": 1}).value == 4
        assert lemma_verdict("I", smallest_params, {"p": 0, "j": 2, "k": 0, "s": 1}).label == "Infinite"

    def test_i_family_n_two(self, dihedral_params):
        """Should give 64 for q = -1, lambda = 1 with the tag depending on j."""
        d4 = lemma_verdict("I", dihedral_params, {"p": 1, "j": 2, "k": 0, "s": 1})
        a2 = lemma_verdict("I", dihedral_params, {"p": 1, "j": 4, "k": 0, "s": 1})
        assert (d4.value, d4.type_tag) == (64, "D4rack")
        assert (a2.value, a2.type_tag) == (64, "A2xA2")
        assert lemma_verdict("I", dihedral_params, {"p": 0, "j": 2, "k": 0, "s": 1}).label == "Infinite"

    def test_i_family_large_n(self):
        """Should be Infinite for n > 2."""
        verdict = lemma_verdict("I", SuzukiParams(1, 3), {"p": 1, "j": 2, "k": 0, "s": 1})
        assert verdict.label == "Infinite"

    def test_k_family_twisted_n_two(self, twisted_params):
        """Should be Unknown with a flag when only the necessary condition holds."""
        verdict = lemma_verdict("K", twisted_params, {"p": 1, "j": 1, "k": 0, "s": 1})
        assert verdict.label == "Unknown"
        assert verdict.flags == ("necessary-condition-met",)
        assert lemma_verdict("K", twisted_params, {"p": 0, "j": 1, "k": 0, "s": 1}).label == "Infinite"

    def test_duplicates_and_non_strict(self, smallest_params):
        """Should raise BadIndex outside the classification list."""
        with pytest.raises(BadIndex):
            lemma_verdict("M", smallest_params, {"i": 0, "j": 0, "k": 0, "s": 1})
        with pytest.raises(BadIndex):
            lemma_verdict("B", smallest_params, {"i": 1, "j": 0, "k": 0, "s": 1})

    def test_ufo8_case_is_exclusive(self):
        """Should report ufo(8) as the only matching D case at N = 48, n = 8, k = 1, s = 18."""
        params = SuzukiParams(48, 8)
        idx = {"j": 2, "k": 1, "p": 0, "s": 18, "t": 0}
        assert [name for name, _ in de_cases("D", params, idx)] == ["ufo8"]
        assert lemma_verdict("D", params, idx).type_tag == "ufo8"


@pytest.mark.integration
@pytest.mark.nichols
class TestCrossCheck:
    """Test suite for cross_check."""

    def test_agree_on_infinite(self, smallest_params):
        """Should agree when both routes say Infinite."""
        report = cross_check("A", smallest_params, {"i": 0, "j": 0, "k": 0, "p": 0, "s": 1})
        assert report["agreement"] == "agree"
        assert report["engine"] is None

    @pytest.mark.parametrize(("tag", "j"), [("I", 4), ("K", 2), ("K", 4)])
    def test_dihedral_modules_agree_through_an_eigenbasis(self, dihedral_params, tag, j):
        """Should read A2 x A2 and 64 off a diagonalizing basis of the dihedral modules."""
        report = cross_check(tag, dihedral_params, {"p": 1, "j": j, "k": 0, "s": 1})
        assert report["agreement"] == "agree"
        assert (report["pipeline"]["value"], report["pipeline"]["type_tag"]) == (64, "A2xA2")

    def test_d4_rack_module_stays_lemma_only(self, dihedral_params):
        """Should leave the D4 rack module without a pipeline verdict."""
        report = cross_check("I", dihedral_params, {"p": 1, "j": 2, "k": 0, "s": 1})
        assert report["agreement"] == "lemma-only"
        assert report["pipeline"]["reason"] == "rack without a type D witness"

    def test_agree_and_confirm(self):
        """Should confirm a small finite verdict with the symmetrizer engine."""
        report = cross_check("A", SuzukiParams(2, 1), {"i": 0, "j": 0, "k": 1, "p": 0, "s": 1}, confirm=True)
        assert report["agreement"] == "agree"
        assert report["pipeline"]["verdict"] == "Finite(2)"
        assert report["engine"]["dims"] == [1, 1, 0]
        assert report["engine"]["total"] == 2


@pytest.mark.unit
@pytest.mark.nichols
class TestCorollariesAndSweeps:
    """Test suite for corollary_check, sweep and the presets."""

    @pytest.mark.parametrize("params", [SuzukiParams(1, 1), SuzukiParams(1, 1, 1, -1), SuzukiParams(3, 1), SuzukiParams(5, 2)])
    def test_corollaries_agree(self, params):
        """Should agree with the closed corollary predictions."""
        rows = corollary_check(params)
        assert rows
        assert all(row["agree"] for row in rows)

    def test_corollary_rows_for_lambda_minus(self):
        """Should predict Finite(2) for Abar when N = 1, lambda = -1 and n is odd."""
        rows = [row for row in corollary_check(SuzukiParams(1, 1, 1, -1)) if row["family"] == "Abar"]
        assert {row["prediction"] for row in rows} == {"Finite(2)"}

    def test_sweep_skips_non_strict(self, smallest_params):
        """Should only visit listed tuples and feed the sink."""
        seen = []
        ranges = {"i": [0, 1], "j": [0, 1], "k": [0], "p": [0, 1], "s": [1]}
        records = list(sweep("A", smallest_params, ranges, sink=seen.append))
        assert len(records) == 4
        assert seen == records
        assert all(r["i"] == r["j"] for r in records)

    def test_sweep_predicate(self):
        """Should drop records the predicate rejects."""
        ranges = {"i": [0], "j": [0], "k": [0, 1], "p": [0], "s": [1, 2]}
        records = list(sweep("A", SuzukiParams(2, 1), ranges, predicate=lambda v: v.outcome == "finite"))
        assert [(r["k"], r["s"]) for r in records] == [(1, 1)]

    def test_sweep_needs_every_range(self, smallest_params):
        """Should raise MalformedInput when an index range is missing."""
        with pytest.raises(MalformedInput):
            list(sweep("A", smallest_params, {"i": [0]}))

    def test_gh_search_target(self):
        """Should reject unknown targets."""
        with pytest.raises(MalformedInput):
            gh_search("b-one")

    def test_presets(self):
        """Should expose the ufo(8) and G/H presets."""
        assert set(PRESETS) == {"ufo8-D", "ufo8-E", "ufo8-necessary", "gh-ae-one", "gh-b-minus-one"}

    @pytest.mark.slow
    def test_ufo8_d_preset(self):
        """Should list only ufo(8) rows and include k = 1, s = 18, t = 0."""
        result = PRESETS["ufo8-D"]()
        assert all(row["type_tag"] == "ufo8" for row in result["rows"])
        assert (1, 18, 0) in {(row["k"], row["s"], row["t"]) for row in result["rows"]}

    def test_ufo8_necessary_condition(self):
        """Should find no violation on a small grid."""
        result = PRESETS["ufo8-necessary"](max_N=4, max_n=4)
        assert result["violations"] == []
