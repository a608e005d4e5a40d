"""
Django management command to analyze a braided vector space.
"""

from algebra.management.base import ForgeCommand
from nichols.braided import analyze
from nichols.management.options import add_braiding_arguments, braiding_from


class Command(ForgeCommand):
    help = "Braid equation, diagonal type, Dynkin data, V_abe shape and rack structure of a braiding"

    def add_forge_arguments(self, parser):
        actions = self.add_actions(parser)
        analyze_parser = actions.add_parser("analyze", help="Analyze a braiding from a file or a family module")
        add_braiding_arguments(self, analyze_parser)
        self.add_output_arguments(analyze_parser)

    def run(self, **options):
        B, source, data = braiding_from(self, options)
        manifest = self.manifest_for(options["action"], **source)
        if data:
            manifest.with_input(data)
        self.emit(analyze(B), options["fmt"], options["out"])
