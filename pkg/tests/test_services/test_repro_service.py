"""
Tests for services/repro_service.py

The light presets run in full; the sweeps and the dihedral prefixes are
marked slow.
"""

import pytest

from algebra.exceptions import AxiomFailure, Disagreement, MalformedInput
from services import repro_service
from services.repro_service import REPRO_PRESETS, preset_path, read_triples, run_preset


@pytest.mark.unit
@pytest.mark.services
class TestGoldenTables:
    """Test suite for preset_path and read_triples."""

    def test_fixture_tables_exist(self):
        """Should ship the D and E golden tables."""
        for tag in ("D", "E"):
            assert preset_path(f"ufo8_{tag}.csv").exists()

    def test_read_triples(self, tmp_path):
        """Should read (k, s, t) rows."""
        path = tmp_path / "table.csv"
        path.write_text("k,s,t\n1,18,0\n1,18,0\n0,2,1\n", encoding="utf-8")
        assert read_triples(path) == {(1, 18, 0), (0, 2, 1)}

    def test_read_triples_rejects(self, tmp_path):
        """Should raise MalformedInput for missing files and columns."""
        with pytest.raises(MalformedInput):
            read_triples(tmp_path / "missing.csv")
        path = tmp_path / "bad.csv"
        path.write_text("k,s\n1,2\n", encoding="utf-8")
        with pytest.raises(MalformedInput):
            read_triples(path)


@pytest.mark.unit
@pytest.mark.services
class TestRunPreset:
    """Test suite for run_preset."""

    def test_preset_names(self):
        """Should offer every reproduction preset."""
        assert set(REPRO_PRESETS) == {
            "ufo8-tables",
            "hopf-audit",
            "yd-census",
            "type-d",
            "vabe-corollary",
            "dihedral-64",
            "open-k3",
            "braiding-conformance",
        }

    def test_unknown_preset(self):
        """Should raise MalformedInput."""
        with pytest.raises(MalformedInput):
            run_preset("no-such-preset")

    def test_vabe_corollary(self):
        """Should give Infinite for every b of order at least 5."""
        outcome = run_preset("vabe-corollary")
        assert outcome["ok"] is True
        assert outcome["failure"] is Disagreement
        rows = outcome["outputs"]["vabe_corollary"]["rows"]
        assert {row["order"] for row in rows} == {4, 5, 6, 7}

    def test_type_d_at_n_two(self):
        """Should find no type D witness for the I-family rack at n = 2."""
        outcome = repro_service.type_d(ns=(2,))
        [row] = outcome["outputs"]["type_d"]["rows"]
        assert row["rack_size"] == 4
        assert row["witness"] is False
        assert outcome["ok"] is True

    def test_failure_is_reported(self, monkeypatch):
        """Should pass ok=False through with the failure class."""
        monkeypatch.setitem(REPRO_PRESETS, "hopf-audit", lambda: {"outputs": {}, "ok": False, "failure": AxiomFailure})
        outcome = run_preset("hopf-audit")
        assert outcome["ok"] is False
        assert outcome["failure"] is AxiomFailure


@pytest.mark.slow
@pytest.mark.integration
@pytest.mark.services
class TestSlowPresets:
    """Test suite for the presets that sweep or run the symmetrizer."""

    def test_type_d(self):
        """Should find witnesses exactly for n > 2."""
        assert run_preset("type-d")["ok"] is True

    def test_ufo8_tables(self):
        """Should reproduce both golden tables."""
        outcome = run_preset("ufo8-tables")
        assert outcome["ok"] is True
        assert outcome["outputs"]["ufo8_D"]["missing"] == []

    def test_dihedral_64(self):
        """Should follow the A2 x A2 series through degree 4 in all four cases."""
        outcome = run_preset("dihedral-64", kmax=4)
        rows = outcome["outputs"]["dihedral_64"]["rows"]
        assert [row["lemma_tag"] for row in rows] == ["D4rack", "A2xA2", "A2xA2", "A2xA2"]
        assert all(row["dims"] == [1, 4, 8, 12, 14] for row in rows)
        assert all(row["matches_series"] is True for row in rows if row["lemma_tag"] == "A2xA2")
        assert rows[0]["matches_series"] is None
        assert [row["type_tag"] for row in rows[1:]] == ["A2xA2", "A2xA2", "A2xA2"]
        assert [row["relations_failed"] for row in rows] == [0, 0, 0, 0]
        assert outcome["ok"] is True

    def test_dihedral_64_fails_on_a_wrong_series(self, monkeypatch):
        """Should fail an A2 x A2 case whose prefix leaves the series."""
        monkeypatch.setitem(repro_service.DIHEDRAL_SERIES, "A2xA2", [1, 4, 8, 12, 15, 12, 8, 4, 1])
        monkeypatch.setattr(repro_service, "DIHEDRAL_CASES", (("K", 4, ()),))
        outcome = run_preset("dihedral-64", kmax=4)
        row = outcome["outputs"]["dihedral_64"]["rows"][0]
        assert row["matches_series"] is False
        assert row["ok"] is False
        assert outcome["ok"] is False

    def test_open_k3(self):
        """Should report prefixes for the two K tuples with q = -1 and beta^2 = 1."""
        outcome = run_preset("open-k3", kmax=2)
        rows = outcome["outputs"]["open_k3"]["rows"]
        assert [(row["p"], row["j"]) for row in rows] == [(1, 2), (1, 4)]
        assert all(row["dims"][:2] == [1, 6] for row in rows)
        assert all(row["relations"] == 15 for row in rows)
        assert outcome["failure"] is AxiomFailure
