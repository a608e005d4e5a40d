"""
Django management command to decide finite dimensionality of Nichols
algebras of the YD families, one module at a time or over index sweeps.
"""

from algebra.cyclotomic import CycScalar
from algebra.exceptions import Disagreement, MalformedInput
from algebra.management.base import ForgeCommand
from nichols.classifier import PRESETS, corollary_check, cross_check, lemma_verdict, sweep, vabe_verdict
from nichols.management.options import add_family_arguments, family_from
from nichols.yd import INDEX_NAMES, family_indices
from services.audit_service import AUDIT_SHAPES, cross_check_grid, parameter_grid
from services.report_service import read_json_input

SORT_FIRST = ("k", "s", "t")


def parse_range(spec: str) -> tuple[str, list[int]]:
    """name=a:b (half open), name=x,y,z or name=x."""
    name, sep, values = spec.partition("=")
    if not sep or not name:
        raise MalformedInput(f"range {spec!r} must look like name=a:b or name=x,y")
    try:
        if ":" in values:
            start, stop = values.split(":", 1)
            return name.strip(), list(range(int(start), int(stop)))
        return name.strip(), [int(v) for v in values.split(",")]
    except ValueError as exc:
        raise MalformedInput(f"range {spec!r} must hold integers") from exc


def parse_shape(spec: str) -> tuple[int, int]:
    try:
        N, n = (int(x) for x in spec.split(","))
    except ValueError as exc:
        raise MalformedInput(f"shape {spec!r} must look like N,n") from exc
    return N, n


def sort_key(row: dict, names) -> tuple:
    first = tuple(row.get(name, 0) for name in SORT_FIRST)
    return first + tuple(row[name] for name in names if name not in SORT_FIRST)


class Command(ForgeCommand):
    help = "Classify Nichols algebras of YD modules: single modules, V_abe, sweeps, corollaries and audits"

    def add_forge_arguments(self, parser):
        actions = self.add_actions(parser)

        family = actions.add_parser("family", help="Verdict for one family module")
        self.add_params_arguments(family)
        add_family_arguments(family)
        family.add_argument(
            "--cross-check",
            action="store_true",
            help="Also run the braiding pipeline and require agreement",
        )
        family.add_argument(
            "--confirm",
            action="store_true",
            help="Confirm small finite verdicts with the symmetrizer engine",
        )
        self.add_output_arguments(family)

        vabe = actions.add_parser("vabe", help="Verdict for V_abe read from a JSON file")
        vabe.add_argument(
            "--input",
            required=True,
            help='JSON {"a": {"order": m, "exp": k}, "b": ..., "e": ...}',
        )
        self.add_output_arguments(vabe)

        sweep_parser = actions.add_parser("sweep", help="Lemma verdicts over index ranges or a preset")
        self.add_params_arguments(sweep_parser, required=False)
        sweep_parser.add_argument(
            "--family",
            choices=sorted(INDEX_NAMES),
            help="Family to sweep",
        )
        sweep_parser.add_argument(
            "--range",
            dest="ranges",
            action="append",
            default=[],
            help="Index range name=a:b or name=x,y (repeatable); unlisted indices use the full list",
        )
        sweep_parser.add_argument(
            "--only",
            default=None,
            help="Keep verdicts with this type tag",
        )
        sweep_parser.add_argument(
            "--preset",
            choices=sorted(PRESETS),
            default=None,
            help="Run a stored sweep instead",
        )
        self.add_output_arguments(sweep_parser)

        corollaries = actions.add_parser("corollaries", help="Compare lemma verdicts with the A / Abar corollaries")
        self.add_params_arguments(corollaries)
        self.add_output_arguments(corollaries)

        audit = actions.add_parser("audit", help="Cross-check lemma and pipeline over a parameter grid")
        audit.add_argument(
            "--shape",
            dest="shapes",
            action="append",
            default=[],
            help="Shape N,n (repeatable; default 1,1 1,2 2,1 2,2)",
        )
        audit.add_argument(
            "--family",
            dest="families",
            action="append",
            default=[],
            help="Restrict to this family (repeatable)",
        )
        audit.add_argument(
            "--confirm",
            action="store_true",
            help="Confirm small finite verdicts with the symmetrizer engine",
        )
        self.add_output_arguments(audit)

    def run(self, **options):
        handler = getattr(self, "run_" + options["action"])
        handler(**options)

    def run_family(self, **options):
        params = self.params_from(options)
        tag, indices, _ = family_from(self, options, params)
        self.manifest_for("family", params, family=tag, indices=indices, cross_check=options["cross_check"])
        if options["cross_check"] or options["confirm"]:
            report = cross_check(tag, params, indices, confirm=options["confirm"])
        else:
            report = {
                "family": tag,
                "params": params.as_dict(),
                "indices": indices,
                "lemma": lemma_verdict(tag, params, indices).as_dict(),
            }
        self.emit(report, options["fmt"], options["out"])

    def run_vabe(self, **options):
        payload = read_json_input(options["input"])
        if not isinstance(payload, dict) or not {"a", "b", "e"} <= set(payload):
            raise MalformedInput("V_abe input needs the keys a, b and e")
        a, b, e = (CycScalar.from_json(payload[name], exp_only=True) for name in "abe")
        manifest = self.manifest_for("vabe", a=payload["a"], b=payload["b"], e=payload["e"])
        with open(options["input"], "rb") as handle:
            manifest.with_input(handle.read())
        result = {"a": a.to_json(), "b": b.to_json(), "e": e.to_json(), "verdict": vabe_verdict(a, b, e).as_dict()}
        self.emit(result, options["fmt"], options["out"])

    def run_sweep(self, **options):
        if options["preset"]:
            self.manifest_for("sweep", preset=options["preset"])
            self.emit(PRESETS[options["preset"]](), options["fmt"], options["out"])
            return
        if options["family"] is None or options["N"] is None or options["n"] is None:
            raise MalformedInput("a sweep needs --family, --N and --n, or --preset")
        params = self.params_from(options)
        tag = options["family"]
        ranges = dict(parse_range(spec) for spec in options["ranges"])
        unknown = set(ranges) - set(INDEX_NAMES[tag])
        if unknown:
            raise MalformedInput(f"family {tag} has no indices {', '.join(sorted(unknown))}")
        names = INDEX_NAMES[tag]
        if set(ranges) != set(names):
            listed = {}
            for idx in family_indices(tag, params, strict=True):
                for name in names:
                    listed.setdefault(name, set()).add(idx[name])
            for name in names:
                ranges.setdefault(name, sorted(listed.get(name, ())))
        only = options["only"]
        predicate = (lambda v: v.type_tag == only) if only else None
        self.manifest_for("sweep", params, family=tag, ranges={k: list(v) for k, v in sorted(ranges.items())}, only=only)
        rows = sorted(sweep(tag, params, ranges, predicate), key=lambda row: sort_key(row, names))
        columns = [name for name in SORT_FIRST if name in names] + [n for n in names if n not in SORT_FIRST]
        result = {"family": tag, "columns": columns + ["verdict", "type_tag", "reason"], "rows": rows}
        self.emit(result, options["fmt"], options["out"])

    def run_corollaries(self, **options):
        params = self.params_from(options)
        self.manifest_for("corollaries", params)
        rows = corollary_check(params)
        result = {"columns": ["family", "indices", "lemma", "prediction", "agree"], "rows": rows}
        self.emit(result, options["fmt"], options["out"])
        wrong = [row for row in rows if not row["agree"]]
        if wrong:
            raise Disagreement(f"{len(wrong)} lemma verdicts contradict the corollaries", rows=wrong)

    def run_audit(self, **options):
        shapes = [parse_shape(spec) for spec in options["shapes"]] or list(AUDIT_SHAPES)
        families = options["families"] or None
        unknown = set(families or ()) - set(INDEX_NAMES)
        if unknown:
            raise MalformedInput(f"unknown families {', '.join(sorted(unknown))}")
        self.manifest_for("audit", shapes=[list(s) for s in shapes], families=families or "all", confirm=options["confirm"])
        report = cross_check_grid(parameter_grid(shapes), families, confirm=options["confirm"])
        self.emit(report, options["fmt"], options["out"])
        if report["disagreements"]:
            raise Disagreement(f"{len(report['disagreements'])} lemma/pipeline disagreements", first=report["disagreements"][0])
