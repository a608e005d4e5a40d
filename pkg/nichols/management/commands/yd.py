"""
Django management command to build and audit Yetter-Drinfeld modules
obtained from the box product of a simple module with the algebra.
"""

from algebra.exceptions import AxiomFailure
from algebra.management.base import ForgeCommand
from algebra.representations import FAMILIES, simple_module
from nichols.closed_forms import closed_form, compare_braidings
from nichols.management.options import add_family_arguments, family_from
from nichols.yd import braiding_of, build_family, decompose_boxtimes, yd_compat_check
from services.census_service import yd_census_report


class Command(ForgeCommand):
    help = "Build YD modules, extract their braidings, count them or decompose a box product"

    def add_forge_arguments(self, parser):
        actions = self.add_actions(parser)

        build = actions.add_parser("build", help="Build a family module and audit the YD axioms")
        self.add_params_arguments(build)
        add_family_arguments(build)
        self.add_output_arguments(build)

        braiding = actions.add_parser("braiding", help="Extract the braiding and compare with its closed form")
        self.add_params_arguments(braiding)
        add_family_arguments(braiding)
        self.add_output_arguments(braiding)

        census = actions.add_parser("census", help="Count simple YD modules per dimension class")
        self.add_params_arguments(census)
        self.add_output_arguments(census)

        decompose = actions.add_parser("decompose", help="Split V [x] A into the listed families")
        self.add_params_arguments(decompose)
        decompose.add_argument(
            "--base",
            choices=FAMILIES,
            required=True,
            help="Simple module V",
        )
        for name in ("i", "j", "k"):
            decompose.add_argument(
                f"--{name}",
                type=int,
                default=0,
                help=f"Index {name} of V",
            )
        self.add_output_arguments(decompose)

    def run(self, **options):
        params = self.params_from(options)
        action = options["action"]

        if action == "census":
            self.manifest_for(action, params)
            report = yd_census_report(params)
            self.emit(report, options["fmt"], options["out"])
            if not report["ok"]:
                raise AxiomFailure(f"YD census of {params.label} does not match the classification counts")
            return

        if action == "decompose":
            indices = {"j": options["j"], "k": options["k"]}
            if options["base"] in ("V_ijk", "V'_ijk"):
                indices["i"] = options["i"]
            self.manifest_for(action, params, base=options["base"], indices=indices)
            base = simple_module(options["base"], params, **indices)
            self.emit(decompose_boxtimes(base), options["fmt"], options["out"])
            return

        tag, indices, strict = family_from(self, options, params)
        self.manifest_for(action, params, family=tag, indices=indices, strict=strict)
        module = build_family(tag, params, strict=strict, **indices)

        if action == "build":
            audit = yd_compat_check(module)
            self.emit({"module": module.as_dict(), "audit": audit.as_dict()}, options["fmt"], options["out"])
            if not audit.passed:
                raise AxiomFailure(f"{module.key} fails the YD axioms", counterexample=audit.counterexample)
            return

        B = braiding_of(module)
        expected = closed_form(tag, params, indices)
        mismatches = compare_braidings(B, expected) if expected is not None else None
        self.emit(
            {
                "module": str(module.key),
                "braiding": B.to_json(),
                "closed_form": expected.to_json() if expected is not None else None,
                "mismatches": mismatches,
            },
            options["fmt"],
            options["out"],
        )
