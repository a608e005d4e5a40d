"""
Tests for services/report_service.py

Artifacts must serialize deterministically; CSV and markdown are derived
views of the same payload.
"""

import json

import pytest

from algebra.exceptions import MalformedInput
from services.report_service import (
    ARTIFACT_FORMAT,
    artifact,
    emit_report,
    parse_report,
    read_json_input,
    write_atomic,
)

MANIFEST = {"command": "yd census", "params": {"N": 1, "n": 1}, "seeds": [], "engines": []}


def tabular():
    return artifact(
        MANIFEST,
        {
            "columns": ["class", "count"],
            "rows": [{"class": "1", "count": 8}, {"class": "2", "count": 6}],
            "ok": True,
        },
    )


@pytest.mark.unit
@pytest.mark.services
class TestEmitReport:
    """Test suite for emit_report and parse_report."""

    def test_artifact_shape(self):
        """Should tag the result with the format and the manifest."""
        payload = tabular()
        assert payload["format"] == ARTIFACT_FORMAT
        assert payload["manifest"] == MANIFEST

    def test_json_is_deterministic(self):
        """Should give identical bytes for equal payloads regardless of key order."""
        first = emit_report(artifact(MANIFEST, {"b": 1, "a": 2}))
        second = emit_report(artifact(dict(reversed(list(MANIFEST.items()))), {"a": 2, "b": 1}))
        assert first == second
        assert first.endswith(b"\n")

    def test_parse_report(self):
        """Should read back what emit_report wrote."""
        payload = tabular()
        assert parse_report(emit_report(payload)) == payload

    @pytest.mark.parametrize("data", [b"not json", json.dumps({"format": "other/1"}).encode()])
    def test_parse_report_rejects(self, data):
        """Should raise MalformedInput for garbage and foreign formats."""
        with pytest.raises(MalformedInput):
            parse_report(data)

    def test_csv(self):
        """Should write the manifest as comments followed by the table."""
        lines = emit_report(tabular(), "csv").decode("utf-8").splitlines()
        assert lines[0] == f"# format: {ARTIFACT_FORMAT}"
        assert lines[1].startswith("# manifest: ")
        assert lines[2:] == ["class,count", "1,8", "2,6"]

    def test_csv_needs_rows(self):
        """Should refuse CSV for a non-tabular result."""
        with pytest.raises(MalformedInput):
            emit_report(artifact(MANIFEST, {"ok": True}), "csv")

    def test_markdown_table(self):
        """Should render rows as a markdown table under the command title."""
        text = emit_report(tabular(), "markdown").decode("utf-8")
        assert "# yd census" in text
        assert "| class | count |" in text
        assert "| 1 | 8 |" in text

    def test_markdown_fields_and_sections(self):
        """Should list scalars as fields and nested values as sections."""
        result = {"ok": True, "dims": [1, 2, 1], "report": {"total": 4}}
        text = emit_report(artifact(MANIFEST, result), "markdown").decode("utf-8")
        assert "| ok | True |" in text
        assert "## dims" in text
        assert "## report" in text
        assert "| total | 4 |" in text

    def test_markdown_escapes_pipes(self):
        """Should escape | inside cells."""
        payload = artifact(MANIFEST, {"columns": ["x"], "rows": [{"x": "a|b"}]})
        assert "a\\|b" in emit_report(payload, "markdown").decode("utf-8")

    def test_unknown_format(self):
        """Should raise MalformedInput for an unknown format."""
        with pytest.raises(MalformedInput):
            emit_report(tabular(), "yaml")


@pytest.mark.unit
@pytest.mark.services
class TestFiles:
    """Test suite for write_atomic and read_json_input."""

    def test_write_atomic(self, tmp_path):
        """Should create parent directories and leave no temporary files."""
        target = tmp_path / "out" / "report.json"
        write_atomic(target, b"{}\n")
        assert target.read_bytes() == b"{}\n"
        assert [p.name for p in target.parent.iterdir()] == ["report.json"]

    def test_write_atomic_replaces(self, tmp_path):
        """Should overwrite an existing file."""
        target = tmp_path / "report.json"
        target.write_bytes(b"old")
        write_atomic(target, b"new")
        assert target.read_bytes() == b"new"

    def test_read_json_input(self, tmp_path):
        """Should load a JSON file."""
        path = tmp_path / "in.json"
        path.write_text('{"dim": 1}', encoding="utf-8")
        assert read_json_input(path) == {"dim": 1}

    def test_read_json_input_errors(self, tmp_path):
        """Should raise MalformedInput for missing and malformed files."""
        with pytest.raises(MalformedInput):
            read_json_input(tmp_path / "missing.json")
        broken = tmp_path / "broken.json"
        broken.write_text("{", encoding="utf-8")
        with pytest.raises(MalformedInput):
            read_json_input(broken)
