"""
Tests for the suzuki management command.
"""

from types import SimpleNamespace

import pytest

from nichols.models import RunRecord
from services.report_service import parse_report
from tests.utils import run_command, run_json_command


@pytest.mark.integration
@pytest.mark.commands
class TestVerifyHopf:
    """Test suite for suzuki verify-hopf."""

    def test_passes_on_smallest_algebra(self):
        """Should exit 0 and report every check."""
        outcome = run_json_command("suzuki", "verify-hopf", "--N", 1, "--n", 1)
        assert outcome["returncode"] == 0
        result = outcome["artifact"]["result"]
        assert result["passed"] is True
        assert result["dim"] == 8
        assert outcome["artifact"]["manifest"]["command"] == "suzuki verify-hopf"

    def test_signs(self):
        """Should read mu and lambda flags."""
        outcome = run_json_command("suzuki", "verify-hopf", "--N", 1, "--n", 1, "--mu", "-", "--lambda", "-")
        assert outcome["artifact"]["manifest"]["params"] == {"N": 1, "n": 1, "mu": -1, "lambda": -1}

    def test_axiom_failure_exit_code(self, monkeypatch):
        """Should exit 3 when a Hopf axiom fails."""
        report = SimpleNamespace(
            passed=False,
            counterexample={"check": "antipode"},
            as_dict=lambda: {"passed": False, "counterexample": {"check": "antipode"}},
        )
        monkeypatch.setattr("algebra.management.commands.suzuki.verify_hopf", lambda params, cross_engine=None: report)
        outcome = run_command("suzuki", "verify-hopf", "--N", 1, "--n", 1)
        assert outcome["returncode"] == 3
        assert parse_report(outcome["stdout"].encode())["result"]["passed"] is False

    def test_bound_exit_code(self, settings):
        """Should exit 4 above the audit bound."""
        settings.FORGE_HOPF_AUDIT_BOUND = 8
        assert run_command("suzuki", "verify-hopf", "--N", 1, "--n", 2)["returncode"] == 4


@pytest.mark.integration
@pytest.mark.commands
class TestDumpAndCensus:
    """Test suite for suzuki dump and suzuki census."""

    @pytest.mark.parametrize("table", ["mult", "coprod", "antipode"])
    def test_dump(self, table):
        """Should dump each structure table."""
        outcome = run_json_command("suzuki", "dump", "--N", 1, "--n", 1, "--table", table)
        assert outcome["returncode"] == 0
        assert outcome["artifact"]["result"]["table"] == table

    def test_census_csv(self):
        """Should write the census rows as CSV."""
        outcome = run_command("suzuki", "census", "--N", 1, "--n", 2, "--format", "csv")
        assert outcome["returncode"] == 0
        lines = outcome["stdout"].splitlines()
        assert lines[0].startswith("# format: ")
        assert lines[2] == "family,dim,count"

    def test_census_markdown(self):
        """Should render the census as a markdown table."""
        outcome = run_command("suzuki", "census", "--N", 1, "--n", 1, "--format", "markdown")
        assert "| family | dim | count |" in outcome["stdout"]

    def test_out_writes_file(self, tmp_path):
        """Should write the artifact to --out and report the path."""
        target = tmp_path / "census.json"
        outcome = run_command("suzuki", "census", "--N", 1, "--n", 1, "--out", target)
        assert outcome["returncode"] == 0
        assert "Wrote" in outcome["stdout"]
        assert parse_report(target.read_bytes())["result"]["ok"] is True


@pytest.mark.unit
@pytest.mark.commands
class TestUsage:
    """Test suite for argument and parameter errors."""

    @pytest.mark.parametrize(
        "args",
        [
            (),
            ("verify-hopf",),
            ("verify-hopf", "--N", 1),
            ("verify-hopf", "--N", 1, "--n", 1, "--mu", "x"),
            ("explode", "--N", 1, "--n", 1),
            ("dump", "--N", 1, "--n", 1, "--table", "unit"),
        ],
    )
    def test_usage_errors(self, args):
        """Should exit 64 on malformed invocations."""
        assert run_command("suzuki", *args)["returncode"] == 64

    @pytest.mark.parametrize("N,n", [(0, 1), (1, 0), (-2, 3)])
    def test_invalid_parameters(self, N, n):
        """Should exit 4 for parameters below 1."""
        assert run_command("suzuki", "census", "--N", N, "--n", n)["returncode"] == 4


@pytest.mark.integration
@pytest.mark.commands
@pytest.mark.db
class TestRunRecording:
    """Test suite for run records written by the commands."""

    def test_successful_run_is_recorded(self, record_runs):
        """Should store the manifest and output digest of a run."""
        run_command("suzuki", "census", "--N", 1, "--n", 1)
        record = RunRecord.objects.get()
        assert record.command == "suzuki census"
        assert record.exit_code == 0
        assert record.output_digest

    def test_failed_run_is_recorded(self, record_runs, settings):
        """Should store the exit code of a failed run."""
        settings.FORGE_HOPF_AUDIT_BOUND = 8
        run_command("suzuki", "verify-hopf", "--N", 1, "--n", 2)
        assert RunRecord.objects.get().exit_code == 4

    def test_equal_runs_give_equal_output(self, record_runs):
        """Should produce byte-identical artifacts for equal manifests."""
        run_command("suzuki", "census", "--N", 2, "--n", 1)
        run_command("suzuki", "census", "--N", 2, "--n", 1)
        first, second = RunRecord.objects.all()
        assert first.same_output_as(second)
