"""
Tests for the braided management command.
"""

import hashlib

import pytest

from tests.utils import braiding_payload, diagonal_payload, run_command, run_json_command, write_json


@pytest.mark.integration
@pytest.mark.commands
class TestAnalyze:
    """Test suite for braided analyze."""

    def test_diagonal_input(self, tmp_path):
        """Should analyze a braiding read from JSON and digest the input."""
        path = write_json(tmp_path / "a1xa1.json", diagonal_payload([[2, 0], [0, 2]], 4))
        outcome = run_json_command("braided", "analyze", "--input", path)
        assert outcome["returncode"] == 0
        result = outcome["artifact"]["result"]
        assert result["diagonal"] is True
        assert result["braid_equation"]["passed"] is True
        manifest = outcome["artifact"]["manifest"]
        assert manifest["params"] == {"input": "a1xa1.json"}
        assert manifest["input_digest"] == hashlib.sha256(path.read_bytes()).hexdigest()

    def test_family_module(self):
        """Should analyze the braiding of a family module."""
        outcome = run_json_command(
            "braided", "analyze", "--N", 1, "--n", 2, "--family", "I", "--p", 0, "--j", 2, "--k", 0, "--s", 1
        )
        assert outcome["returncode"] == 0
        result = outcome["artifact"]["result"]
        assert result["rack"]["size"] == 4
        assert result["type_d"] is None

    def test_markdown(self, tmp_path):
        """Should render the analysis as a markdown field list."""
        path = write_json(tmp_path / "b.json", diagonal_payload([[1]], 3))
        outcome = run_command("braided", "analyze", "--input", path, "--format", "markdown")
        assert "| diagonal | True |" in outcome["stdout"]

    def test_needs_a_source(self):
        """Should exit 4 without --input or a family."""
        assert run_command("braided", "analyze")["returncode"] == 4

    def test_malformed_json(self, tmp_path):
        """Should exit 4 on unreadable input."""
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        assert run_command("braided", "analyze", "--input", path)["returncode"] == 4

    def test_out_of_range_constants(self, tmp_path):
        """Should exit 4 when a constant points outside the basis."""
        path = write_json(tmp_path / "bad.json", braiding_payload(1, [[0, 0, 3, 0, 0]]))
        assert run_command("braided", "analyze", "--input", path)["returncode"] == 4

    def test_coordinate_scalars_rejected(self, tmp_path):
        """Should accept only {order, exp} scalars from files."""
        payload = {"dim": 1, "constants": [[0, 0, 0, 0, {"order": 5, "coords": [1, 1, 0, 0]}]]}
        path = write_json(tmp_path / "coords.json", payload)
        assert run_command("braided", "analyze", "--input", path)["returncode"] == 4

    def test_missing_action(self):
        """Should exit 64 without an action."""
        assert run_command("braided")["returncode"] == 64
