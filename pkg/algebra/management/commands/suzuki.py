"""
Django management command to audit and dump the Suzuki Hopf algebras.
"""

from algebra.exceptions import AxiomFailure
from algebra.management.base import ForgeCommand
from algebra.suzuki import structure_tables, verify_hopf
from services.census_service import suzuki_census


class Command(ForgeCommand):
    help = "Audit the Hopf axioms, dump structure constants or count simple modules of A_{N,2n}^{mu lambda}"

    def add_forge_arguments(self, parser):
        actions = self.add_actions(parser)

        verify = actions.add_parser("verify-hopf", help="Check every Hopf axiom on the full basis")
        self.add_params_arguments(verify)
        self.add_output_arguments(verify)
        verify.add_argument(
            "--cross-engine",
            action="store_true",
            default=None,
            help="Also compare the closed-form product with word rewriting",
        )

        dump = actions.add_parser("dump", help="Dump structure constants")
        self.add_params_arguments(dump)
        self.add_output_arguments(dump)
        dump.add_argument(
            "--table",
            choices=["mult", "coprod", "antipode"],
            default="mult",
            help="Which structure table to dump",
        )

        census = actions.add_parser("census", help="Count simple modules and simple subcoalgebras")
        self.add_params_arguments(census)
        self.add_output_arguments(census)

    def run(self, **options):
        params = self.params_from(options)
        action = options["action"]

        if action == "verify-hopf":
            self.manifest_for(action, params)
            report = verify_hopf(params, cross_engine=options["cross_engine"])
            self.emit(report.as_dict(), options["fmt"], options["out"])
            if not report.passed:
                raise AxiomFailure(f"{params.label} fails the Hopf axioms", counterexample=report.counterexample)
            return

        if action == "dump":
            self.manifest_for(action, params, table=options["table"])
            self.emit(structure_tables(params, options["table"]), options["fmt"], options["out"])
            return

        self.manifest_for(action, params)
        report = suzuki_census(params)
        self.emit(report, options["fmt"], options["out"])
        if not report["ok"]:
            raise AxiomFailure(f"census of {params.label} does not add up to {params.dim}")
