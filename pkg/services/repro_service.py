import csv
import logging
from math import gcd
from pathlib import Path

from django.conf import settings

from algebra.cyclotomic import root_of_unity
from algebra.exceptions import AxiomFailure, Disagreement, MalformedInput
from algebra.suzuki import SuzukiParams
from nichols.braided import extract_rack, is_type_D
from nichols.classifier import INFINITE, PRESETS, k_q_exponent, lemma_verdict, pipeline_verdict, vabe_verdict
from nichols.engine import A2_SQUARED_SERIES, MODULAR, SymmetrizerColumns, hilbert_report, relation_in_kernel
from nichols.relations import load_relations, relation_env
from nichols.yd import braiding_of, build_family, family_indices

from services import audit_service, census_service

logger = logging.getLogger(__name__)


def preset_path(name: str) -> Path:
    base = Path(getattr(settings, "FORGE_FIXTURES_DIR", Path(__file__).resolve().parent.parent / "nichols" / "fixtures"))
    return base / "presets" / name


def read_triples(path: Path) -> set[tuple[int, int, int]]:
    """(k, s, t) triples of a golden table."""
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            return {(int(row["k"]), int(row["s"]), int(row["t"])) for row in csv.DictReader(handle)}
    except (OSError, KeyError, ValueError) as exc:
        raise MalformedInput(f"cannot read golden table {path}: {exc}") from exc


def ufo8_tables() -> dict:
    """
    Sweep the D and E presets and compare with the golden (k, s, t) sets.

    The comparison is set equality; any extra or missing triple fails.
    """
    outputs = {}
    ok = True
    for tag in ("D", "E"):
        table = PRESETS[f"ufo8-{tag}"]()
        found = {(r["k"], r["s"], r["t"]) for r in table["rows"]}
        golden = read_triples(preset_path(f"ufo8_{tag}.csv"))
        table["missing"] = [list(x) for x in sorted(golden - found)]
        table["extra"] = [list(x) for x in sorted(found - golden)]
        table["matches_fixture"] = found == golden
        ok = ok and table["matches_fixture"]
        outputs[f"ufo8_{tag}"] = table
    return {"outputs": outputs, "ok": ok, "failure": Disagreement}


def hopf_audit() -> dict:
    result = audit_service.hopf_audit(audit_service.parameter_grid())
    return {"outputs": {"hopf_audit": result}, "ok": result["ok"], "failure": AxiomFailure}


def yd_census() -> dict:
    grid = audit_service.parameter_grid(shapes=[(N, n) for N in (1, 2, 3) for n in (1, 2, 3)])
    result = census_service.yd_census_grid(grid)
    return {"outputs": {"yd_census": result}, "ok": result["ok"], "failure": AxiomFailure}


def type_d(ns=(2, 3, 4)) -> dict:
    """Rack of the first I-family module for each n, with its type D witness."""
    rows = []
    for n in ns:
        params = SuzukiParams(1, n)
        idx = {"p": 0, "j": 2, "k": 0, "s": 1}
        B = braiding_of(build_family("I", params, **idx))
        extracted = extract_rack(B)
        witness = is_type_D(extracted[0]) if extracted is not None else None
        rows.append(
            {
                "n": n,
                "rack_size": extracted[0].size if extracted is not None else None,
                "witness": bool(witness),
                "r": witness["r"] if witness else "",
                "s": witness["s"] if witness else "",
                "value": witness["value"] if witness else "",
                "method": witness["method"] if witness else "",
            }
        )
    ok = all(row["witness"] == (row["n"] > 2) for row in rows)
    result = {"columns": ["n", "rack_size", "witness", "r", "s", "value", "method"], "rows": rows, "ok": ok}
    return {"outputs": {"type_d": result}, "ok": ok, "failure": Disagreement}


def vabe_corollary(orders=(4, 5, 6, 7)) -> dict:
    """vabe_verdict for every primitive b of the given orders with ae = b^-2."""
    rows = []
    for m in orders:
        for exp in range(1, m):
            if gcd(exp, m) != 1:
                continue
            b = root_of_unity(m, exp)
            verdict = vabe_verdict(b ** -2, b, 1)
            rows.append(
                {
                    "order": m,
                    "exp": exp,
                    "verdict": verdict.label,
                    "reason": verdict.reason,
                    "expected": "Infinite" if m >= 5 else "",
                }
            )
    ok = all(row["verdict"] == INFINITE.capitalize() for row in rows if row["order"] >= 5)
    result = {"columns": ["order", "exp", "verdict", "expected", "reason"], "rows": rows, "ok": ok}
    return {"outputs": {"vabe_corollary": result}, "ok": ok, "failure": Disagreement}


DIHEDRAL_CASES = (
    ("I", 2, ("i_n2",)),
    ("I", 4, ("i_n2", "i_n2_ubasis")),
    ("K", 2, ("k_n2",)),
    ("K", 4, ("k_n2",)),
)

# lemma type tag -> Hilbert series every prefix must follow
DIHEDRAL_SERIES = {"A2xA2": A2_SQUARED_SERIES}


def dihedral_64(kmax: int = 6, seed: int = 0, primes: int = 2, sketch_degrees=(), sketch_size: int = 64) -> dict:
    """
    The 64-dimensional dihedral cases: Hilbert prefixes and printed relations.

    Prefixes are modular with several primes; partial sums must stay within
    64, and every case the lemma tags A2 x A2 must follow
    [(1+t)^2(1+t^2)]^2 degree by degree.
    """
    params = SuzukiParams(1, 2)
    rows = []
    reports = []
    ok = True
    for tag, j, fixtures in DIHEDRAL_CASES:
        idx = {"p": 1, "j": j, "k": 0, "s": 1}
        lemma = lemma_verdict(tag, params, idx)
        verdict, B = pipeline_verdict(tag, params, idx)
        expected = DIHEDRAL_SERIES.get(lemma.type_tag)
        report = hilbert_report(
            B,
            kmax,
            engine=MODULAR,
            seed=seed,
            primes=primes,
            sketch_degrees=sketch_degrees,
            sketch_size=sketch_size,
            expected=expected,
            bound_total=64,
        )
        columns = SymmetrizerColumns(B)
        env = relation_env(params, idx)
        checked = failed = 0
        for name in fixtures:
            for relation in load_relations(name, B.labels, env, B.order):
                checked += 1
                if not relation_in_kernel(B, relation.element, columns):
                    failed += 1
                    logger.warning("%s j=%s: relation on line %s of %s not in the kernel", tag, j, relation.line, name)
        case_ok = report["within_bound"] and failed == 0
        if expected is not None:
            case_ok = case_ok and report["matches_expected"]
        ok = ok and case_ok
        reports.append(
            {"family": tag, "indices": idx, "lemma": lemma.as_dict(), "verdict": verdict.as_dict(), "hilbert": report}
        )
        rows.append(
            {
                "family": tag,
                "j": j,
                "lemma_tag": lemma.type_tag or "",
                "type_tag": verdict.type_tag or "",
                "dims": report["dims"],
                "partial_sum": report["partial_sums"][-1],
                "matches_series": report.get("matches_expected"),
                "relations": checked,
                "relations_failed": failed,
                "ok": case_ok,
            }
        )
    result = {
        "columns": ["family", "j", "lemma_tag", "type_tag", "dims", "partial_sum", "matches_series", "relations", "relations_failed", "ok"],
        "rows": rows,
        "reports": reports,
        "ok": ok,
    }
    return {"outputs": {"dihedral_64": result}, "ok": ok, "failure": Disagreement}


def open_k3(kmax: int = 4, seed: int = 0, primes: int = 2, sketch_degrees=(), sketch_size: int = 64) -> dict:
    """
    K at n = 3 with q = -1 and beta^2 = 1: relations and Hilbert prefix only.

    No dimension is known here, so the rows carry no verdict; the preset
    fails only when a listed relation is not in the kernel.
    """
    params = SuzukiParams(1, 3)
    rows = []
    ok = True
    for idx in family_indices("K", params):
        if k_q_exponent(params, idx) != params.minus_one_exp or (12 * idx["j"] * params.N) % params.M:
            continue
        B = braiding_of(build_family("K", params, **idx))
        report = hilbert_report(
            B, kmax, engine=MODULAR, seed=seed, primes=primes, sketch_degrees=sketch_degrees, sketch_size=sketch_size
        )
        columns = SymmetrizerColumns(B)
        relations = load_relations("k_n3", B.labels, relation_env(params, idx), B.order)
        failed = [r.line for r in relations if not relation_in_kernel(B, r.element, columns)]
        ok = ok and not failed
        rows.append(
            {
                **{name: idx[name] for name in ("p", "j", "k", "s")},
                "dims": report["dims"],
                "partial_sum": report["partial_sums"][-1],
                "relations": len(relations),
                "failed_lines": failed,
            }
        )
    logger.info("K, n = 3: %s index tuples with q = -1 and beta^2 = 1", len(rows))
    result = {
        "columns": ["p", "j", "k", "s", "dims", "partial_sum", "relations", "failed_lines"],
        "rows": rows,
        "ok": ok,
    }
    return {"outputs": {"open_k3": result}, "ok": ok, "failure": AxiomFailure}


def braiding_conformance() -> dict:
    grid = audit_service.parameter_grid(shapes=audit_service.CONFORMANCE_SHAPES)
    result = audit_service.braiding_conformance(grid)
    return {"outputs": {"braiding_conformance": result}, "ok": result["ok"], "failure": Disagreement}


REPRO_PRESETS = {
    "ufo8-tables": ufo8_tables,
    "hopf-audit": hopf_audit,
    "yd-census": yd_census,
    "type-d": type_d,
    "vabe-corollary": vabe_corollary,
    "dihedral-64": dihedral_64,
    "open-k3": open_k3,
    "braiding-conformance": braiding_conformance,
}


def run_preset(name: str, **options) -> dict:
    """Run a reproduction preset; returns its named outputs and pass flag."""
    if name not in REPRO_PRESETS:
        raise MalformedInput(f"unknown preset {name!r}; expected one of {', '.join(REPRO_PRESETS)}")
    logger.info("running preset %s", name)
    outcome = REPRO_PRESETS[name](**options)
    if not outcome["ok"]:
        logger.error("preset %s did not reproduce", name)
    return outcome
