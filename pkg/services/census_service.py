import logging

from algebra.representations import simple_census
from algebra.suzuki import SuzukiParams, algebra_for
from nichols.yd import yd_census

logger = logging.getLogger(__name__)

CLASS_FORMULAS = {"1": "8N^2", "2": "2N^2(4n^2-1)", "2n": "8N^2"}


def suzuki_census(params: SuzukiParams) -> dict:
    """
    Simple modules and simple subcoalgebras of one algebra.

    Both halves must add up to dim A: the sum of squared module dimensions,
    and the group-likes plus four times the 4-dimensional blocks.
    """
    modules = simple_census(params)
    coalgebra = algebra_for(params).coalgebra_census()
    rows = [
        {"family": family, "count": count, "dim": 1 if family in ("V_ijk", "V'_ijk") else 2}
        for family, count in sorted(modules["counts"].items())
    ]
    return {
        "params": params.as_dict(),
        "algebra": params.label,
        "dim": params.dim,
        "modules": modules,
        "coalgebra": coalgebra,
        "columns": ["family", "dim", "count"],
        "rows": rows,
        "ok": modules["ok"] and coalgebra["ok"],
    }


def yd_census_report(params: SuzukiParams) -> dict:
    """
    YD census with one row per dimension class.

    Rows carry the closed count formula next to the enumerated count so the
    markdown rendering reads like the classification statement.
    """
    census = yd_census(params)
    rows = [
        {
            "N": params.N,
            "n": params.n,
            "mu": params.mu,
            "lambda": params.lam,
            "class": row["class"],
            "dim": row["dim"],
            "formula": CLASS_FORMULAS[row["class"]],
            "count": row["count"],
            "expected": row["expected"],
            "ok": row["ok"],
        }
        for row in census["classes"]
    ]
    return {
        "params": census["params"],
        "families": census["families"],
        "sum_of_squares": census["sum_of_squares"],
        "target": census["target"],
        "columns": ["N", "n", "mu", "lambda", "class", "dim", "formula", "count", "expected", "ok"],
        "rows": rows,
        "ok": census["ok"],
    }


def yd_census_grid(grid) -> dict:
    """yd_census_report over several parameter sets, rows concatenated."""
    rows = []
    identities = []
    for params in grid:
        report = yd_census_report(params)
        rows.extend(report["rows"])
        identities.append(
            {"params": report["params"], "sum_of_squares": report["sum_of_squares"], "target": report["target"], "ok": report["ok"]}
        )
    logger.info("YD census over %s parameter sets", len(identities))
    return {
        "columns": ["N", "n", "mu", "lambda", "class", "dim", "formula", "count", "expected", "ok"],
        "rows": rows,
        "identities": identities,
        "ok": all(item["ok"] for item in identities),
    }
