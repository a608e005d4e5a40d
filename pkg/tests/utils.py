"""
Test Utilities and Helper Functions

Common utilities for running commands, writing input files and reading
artifacts back.
"""

import json
from io import StringIO
from pathlib import Path
from typing import Any, Dict, List

from django.core.management import call_command
from django.core.management.base import CommandError

from services.report_service import parse_report

# ============================================================================
# Command Runners
# ============================================================================


def run_command(name: str, *args) -> Dict[str, Any]:
    """
    Run a management command and capture its outcome.

    Args:
        name: Command name, e.g. "suzuki"
        *args: Command line arguments after the name

    Returns:
        Dictionary with returncode, stdout and the error message (if any)
    """
    out = StringIO()
    try:
        call_command(name, *[str(a) for a in args], stdout=out)
    except CommandError as exc:
        return {"returncode": exc.returncode, "stdout": out.getvalue(), "error": str(exc)}
    return {"returncode": 0, "stdout": out.getvalue(), "error": ""}


def run_json_command(name: str, *args) -> Dict[str, Any]:
    """
    Run a command with JSON output and parse the artifact from stdout.

    Returns:
        The outcome of run_command plus the parsed artifact under "artifact"
    """
    outcome = run_command(name, *args)
    outcome["artifact"] = parse_report(outcome["stdout"].encode("utf-8")) if outcome["stdout"] else None
    return outcome


# ============================================================================
# Input Files
# ============================================================================


def write_json(path: Path, payload: Any) -> Path:
    """
    Write a JSON input file.

    Args:
        path: Target path
        payload: JSON-serializable value

    Returns:
        The path written
    """
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


def braiding_payload(dim: int, entries: List[list], order: int = 1) -> Dict[str, Any]:
    """
    Build a braiding payload from [i, j, k, l, exponent] rows.

    Args:
        dim: Dimension of the space
        entries: Rows [i, j, k, l, e] meaning c(e_i e_j) has zeta_order^e e_k e_l
        order: Cyclotomic order of the exponents

    Returns:
        Dictionary accepted by BraidedSpace.from_json and the --input options
    """
    return {
        "dim": dim,
        "order": order,
        "constants": [[i, j, k, l, {"order": order, "exp": e}] for i, j, k, l, e in entries],
    }


def diagonal_payload(exponents: List[List[int]], order: int) -> Dict[str, Any]:
    """
    Payload of a diagonal braiding c(e_i e_j) = zeta^q_ij e_j e_i.

    Args:
        exponents: Square matrix of exponents of zeta_order
        order: Cyclotomic order
    """
    d = len(exponents)
    rows = [[i, j, j, i, exponents[i][j]] for i in range(d) for j in range(d)]
    return braiding_payload(d, rows, order)


def vabe_payload(a: tuple, b: tuple, e: tuple) -> Dict[str, Any]:
    """
    V_abe input from (order, exponent) pairs.
    """
    return {name: {"order": order, "exp": exp} for name, (order, exp) in zip("abe", (a, b, e))}
