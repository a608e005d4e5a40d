import logging
from itertools import product

from algebra.exceptions import Disagreement
from algebra.suzuki import SuzukiParams, verify_hopf
from nichols.braided import match_vabe
from nichols.classifier import cross_check
from nichols.closed_forms import VABE_FAMILIES, ae_over_b_squared, closed_form, compare_braidings, p_parameter
from nichols.yd import THEOREM_FAMILIES, braiding_of, build_family, family_indices

logger = logging.getLogger(__name__)

SIGNS = (1, -1)
AUDIT_SHAPES = ((1, 1), (1, 2), (2, 1), (2, 2))
CONFORMANCE_SHAPES = ((1, 1), (1, 2), (1, 3), (2, 2))


def parameter_grid(shapes=AUDIT_SHAPES, signs=SIGNS) -> list[SuzukiParams]:
    """Every (N, n) shape with all four (mu, lambda) sign choices."""
    return [SuzukiParams(N, n, mu, lam) for (N, n) in shapes for mu, lam in product(signs, repeat=2)]


def hopf_audit(grid) -> dict:
    """Run verify_hopf on each parameter set; one row per algebra."""
    rows = []
    for params in grid:
        report = verify_hopf(params)
        rows.append(
            {
                "algebra": params.label,
                "dim": report.dim,
                "passed": report.passed,
                "failed": ",".join(name for name, ok in report.checks.items() if not ok),
                "counterexample": report.counterexample,
            }
        )
    return {
        "columns": ["algebra", "dim", "passed", "failed", "counterexample"],
        "rows": rows,
        "ok": all(row["passed"] for row in rows),
    }


def _theorem_families() -> list[str]:
    return [tag for tags in THEOREM_FAMILIES.values() for tag in tags]


def braiding_conformance(grid, families=None) -> dict:
    """
    Compare extracted braidings with the printed closed forms.

    Families with a full closed form are compared entry by entry as monomial
    exponents. For G and H only the sign-free invariant ae/b^2 is compared;
    P modules must have ae = b^2 with b the printed q.
    """
    families = families or _theorem_families()
    rows = []
    for params in grid:
        for tag in families:
            for idx in family_indices(tag, params):
                B = braiding_of(build_family(tag, params, **idx))
                if tag in VABE_FAMILIES:
                    abe = match_vabe(B)
                    if abe is None:
                        rows.append(_conformance_row(params, tag, idx, "invariant", ["not of V_abe shape"]))
                        continue
                    a, b, e = abe
                    expected = ae_over_b_squared(tag, params, idx)
                    problems = [] if a * e == expected * b * b else [{"ae/b^2": "differs"}]
                    if tag == "P" and b != p_parameter(params, idx):
                        problems.append({"b": "differs from q"})
                    rows.append(_conformance_row(params, tag, idx, "invariant", problems))
                    continue
                expected = closed_form(tag, params, idx)
                if expected is None:
                    continue
                rows.append(_conformance_row(params, tag, idx, "closed-form", compare_braidings(B, expected)))
    logger.info("Braiding conformance: %s modules compared", len(rows))
    return {
        "columns": ["algebra", "family", "indices", "method", "mismatches", "ok"],
        "rows": rows,
        "ok": all(row["ok"] for row in rows),
    }


def _conformance_row(params: SuzukiParams, tag: str, idx: dict, method: str, mismatches: list) -> dict:
    return {
        "algebra": params.label,
        "family": tag,
        "indices": idx,
        "method": method,
        "mismatches": mismatches,
        "ok": not mismatches,
    }


def cross_check_grid(grid, families=None, confirm: bool = False) -> dict:
    """
    cross_check over every valid index tuple of each family.

    Disagreements are collected rather than raised so one audit run reports
    all of them; callers decide whether to fail.
    """
    families = families or _theorem_families()
    rows = []
    disagreements = []
    counts: dict = {}
    for params in grid:
        for tag in families:
            for idx in family_indices(tag, params):
                try:
                    report = cross_check(tag, params, idx, confirm=confirm)
                except Disagreement as exc:
                    disagreements.append({"family": tag, "params": params.as_dict(), "indices": idx, **exc.as_dict()})
                    counts["disagree"] = counts.get("disagree", 0) + 1
                    rows.append(
                        {"algebra": params.label, "family": tag, "indices": idx, "lemma": "", "pipeline": "", "agreement": "disagree"}
                    )
                    continue
                counts[report["agreement"]] = counts.get(report["agreement"], 0) + 1
                rows.append(
                    {
                        "algebra": params.label,
                        "family": tag,
                        "indices": idx,
                        "lemma": report["lemma"]["verdict"],
                        "pipeline": report["pipeline"]["verdict"],
                        "agreement": report["agreement"],
                    }
                )
    if disagreements:
        logger.error("cross-check found %s disagreements", len(disagreements))
    return {
        "columns": ["algebra", "family", "indices", "lemma", "pipeline", "agreement"],
        "rows": rows,
        "counts": dict(sorted(counts.items())),
        "disagreements": disagreements,
        "ok": not disagreements,
    }
