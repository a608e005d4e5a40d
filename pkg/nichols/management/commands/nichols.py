"""
Django management command to compute graded dimensions of Nichols algebras
and to check printed relations against the quantum symmetrizer.
"""

from algebra.exceptions import AxiomFailure, Disagreement
from algebra.management.base import ForgeCommand
from nichols.braided import detect_diagonal
from nichols.engine import SymmetrizerColumns, diagonal_degree_dims, hilbert_report, relation_in_kernel
from nichols.forms import EngineOptionsForm
from nichols.management.options import add_braiding_arguments, braiding_from
from nichols.relations import load_relations, relation_env


class Command(ForgeCommand):
    help = "Degree-by-degree dimensions of B(V) and relation checks in ker S_k"

    def add_forge_arguments(self, parser):
        actions = self.add_actions(parser)

        dims = actions.add_parser("dims", help="dim B^k(V) for k = 0..kmax")
        add_braiding_arguments(self, dims)
        dims.add_argument(
            "--kmax",
            type=int,
            required=True,
            help="Highest degree",
        )
        dims.add_argument(
            "--engine",
            default="exact",
            help="exact or modular",
        )
        dims.add_argument(
            "--seed",
            type=int,
            default=None,
            help="Index of the first prime for the modular engine",
        )
        dims.add_argument(
            "--primes",
            type=int,
            default=None,
            help="Number of primes that must agree (modular engine)",
        )
        dims.add_argument(
            "--sketch",
            default="",
            help="Comma separated degrees to bound from below with random sketches",
        )
        dims.add_argument(
            "--sketch-size",
            type=int,
            default=None,
            help="Rows of each random sketch",
        )
        dims.add_argument(
            "--bound-total",
            type=int,
            default=None,
            help="Fail unless every partial sum stays within this total",
        )
        dims.add_argument(
            "--oracle",
            action="store_true",
            help="Cross-check diagonal braidings against the bicharacter formula",
        )
        self.add_output_arguments(dims)

        check = actions.add_parser("check-relations", help="Verify relations lie in the symmetrizer kernel")
        add_braiding_arguments(self, check)
        check.add_argument(
            "--relations",
            required=True,
            help="Relation file, or the name of a stored relation list",
        )
        self.add_output_arguments(check)

    def run(self, **options):
        B, source, data = braiding_from(self, options)
        manifest = self.manifest_for(options["action"], **source)
        if data:
            manifest.with_input(data)

        if options["action"] == "dims":
            engine = self.clean_form(
                EngineOptionsForm(
                    {
                        "kmax": options["kmax"],
                        "engine": options["engine"],
                        "seed": options["seed"],
                        "primes": options["primes"],
                        "sketch": options["sketch"],
                        "sketch_size": options["sketch_size"],
                    }
                )
            )
            manifest.params["kmax"] = engine["kmax"]
            manifest.engines = [engine["engine"]]
            manifest.seeds = [engine["seed"] + i for i in range(engine["primes"])] if engine["engine"] == "modular" else []
            report = hilbert_report(
                B,
                engine["kmax"],
                engine=engine["engine"],
                seed=engine["seed"],
                primes=engine["primes"],
                sketch_degrees=engine["sketch"],
                sketch_size=engine["sketch_size"],
                bound_total=options["bound_total"],
            )
            q = detect_diagonal(B) if options["oracle"] else None
            if q is not None:
                report["oracle"] = diagonal_degree_dims(q, engine["kmax"])
                report["oracle_agrees"] = report["oracle"] == report["dims"]
            self.emit(report, options["fmt"], options["out"])
            if q is not None and not report["oracle_agrees"]:
                raise Disagreement("symmetrizer ranks differ from the bicharacter formula", dims=report["dims"], oracle=report["oracle"])
            if options["bound_total"] is not None and not report["within_bound"]:
                raise Disagreement(f"partial sums exceed {options['bound_total']}", partial_sums=report["partial_sums"])
            return

        manifest.params["relations"] = options["relations"]
        env = None
        if options.get("family"):
            env = relation_env(self.params_from(options), source["indices"])
        relations = load_relations(options["relations"], B.labels, env, B.order)
        columns = SymmetrizerColumns(B)
        rows = [
            {
                "line": relation.line,
                "degree": relation.element.degree,
                "in_kernel": relation_in_kernel(B, relation.element, columns),
                "relation": relation.source,
            }
            for relation in relations
        ]
        self.emit({"columns": ["line", "degree", "in_kernel", "relation"], "rows": rows}, options["fmt"], options["out"])
        failed = [row["line"] for row in rows if not row["in_kernel"]]
        if failed:
            raise AxiomFailure(f"relations on lines {failed} are not in the symmetrizer kernel", lines=failed)
