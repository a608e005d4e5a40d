"""
Django management command to reproduce the stored tables and audits.
"""

from algebra.exceptions import MalformedInput
from algebra.management.base import ForgeCommand
from services.repro_service import REPRO_PRESETS, run_preset

ENGINE_PRESETS = ("dihedral-64", "open-k3")


class Command(ForgeCommand):
    help = "Reproduce a stored result: " + ", ".join(REPRO_PRESETS)

    def add_forge_arguments(self, parser):
        parser.add_argument(
            "preset",
            choices=list(REPRO_PRESETS),
            help="Preset to run",
        )
        self.add_output_arguments(parser)
        parser.add_argument(
            "--kmax",
            type=int,
            default=None,
            help="Highest degree for dihedral-64 (default 6) and open-k3 (default 4)",
        )
        parser.add_argument(
            "--seed",
            type=int,
            default=0,
            help="Index of the first prime for dihedral-64 and open-k3",
        )
        parser.add_argument(
            "--sketch",
            default="",
            help="Comma separated sketch degrees for dihedral-64 and open-k3",
        )

    def run(self, **options):
        preset = options["preset"]
        extra = {}
        seeds = []
        if preset in ENGINE_PRESETS:
            try:
                sketch = tuple(int(d) for d in options["sketch"].split(",") if d.strip())
            except ValueError as exc:
                raise MalformedInput(f"sketch degrees must be integers: {options['sketch']!r}") from exc
            extra = {"seed": options["seed"], "sketch_degrees": sketch}
            if options["kmax"] is not None:
                extra["kmax"] = options["kmax"]
            seeds = [options["seed"], options["seed"] + 1]
        self.manifest_for(preset, seeds=seeds, **{k: list(v) if isinstance(v, tuple) else v for k, v in extra.items()})
        outcome = run_preset(preset, **extra)
        outputs = outcome["outputs"]
        for name, result in outputs.items():
            self.emit(result, options["fmt"], options["out"], name=name)
        if not outcome["ok"]:
            raise outcome["failure"](f"preset {preset} did not reproduce", preset=preset)
