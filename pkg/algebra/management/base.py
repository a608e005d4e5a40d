"""
Shared plumbing for the forge management commands: exit codes, parameter
options and artifact emission.
"""

import logging
import sys
from pathlib import Path

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError, CommandParser

from algebra.exceptions import BadInput, ForgeError
from algebra.forms import SuzukiParamsForm
from services.manifest_service import RunManifest, record_run
from services.report_service import FORMATS, artifact, emit_report, write_atomic

logger = logging.getLogger(__name__)

USAGE_EXIT = 64
EXTENSIONS = {"json": "json", "csv": "csv", "markdown": "md"}


class ForgeParser(CommandParser):
    """Command parser whose usage errors exit with status 64."""

    def error(self, message):
        if self.called_from_command_line:
            self.print_usage(sys.stderr)
            self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")
        raise CommandError(f"Error: {message}", returncode=USAGE_EXIT)


def form_errors(form) -> str:
    return "; ".join(f"{field}: {' '.join(errors)}" for field, errors in form.errors.items())


class ForgeCommand(BaseCommand):
    """
    Base class for commands that emit versioned artifacts.

    Subclasses implement add_forge_arguments() and run(). Domain errors
    leave through CommandError with the error's exit code, and every run is
    recorded through the manifest service.
    """

    def add_arguments(self, parser):
        parser.__class__ = ForgeParser
        # Python 3.10 argparse resolves "--s" against the top-level --settings /
        # --skip-checks prefixes before the subparser sees it; disable prefix matching.
        parser.allow_abbrev = False
        self.add_forge_arguments(parser)

    def add_forge_arguments(self, parser):
        pass

    def add_actions(self, parser):
        return parser.add_subparsers(dest="action", required=True, metavar="ACTION")

    @staticmethod
    def add_params_arguments(parser, required=True):
        parser.add_argument(
            "--N",
            dest="N",
            type=int,
            required=required,
            help="Parameter N >= 1",
        )
        parser.add_argument(
            "--n",
            dest="n",
            type=int,
            required=required,
            help="Parameter n >= 1 (alternating words have length 2n)",
        )
        parser.add_argument(
            "--mu",
            choices=["+", "-"],
            default="+",
            help="Sign mu",
        )
        parser.add_argument(
            "--lambda",
            dest="lam",
            choices=["+", "-"],
            default="+",
            help="Sign lambda",
        )

    @staticmethod
    def add_output_arguments(parser, default_format="json"):
        parser.add_argument(
            "--format",
            dest="fmt",
            choices=FORMATS,
            default=default_format,
            help="Artifact format",
        )
        parser.add_argument(
            "--out",
            default=None,
            help="Write the artifact to this path (atomically) instead of stdout",
        )

    # -- validation --------------------------------------------------------------

    def clean_form(self, form) -> dict:
        if not form.is_valid():
            raise ValidationError(form_errors(form))
        return form.cleaned_data

    def params_from(self, options):
        form = SuzukiParamsForm({"N": options["N"], "n": options["n"], "mu": options["mu"], "lam": options["lam"]})
        return self.clean_form(form)["params"]

    # -- execution ---------------------------------------------------------------

    def handle(self, *args, **options):
        self.manifest = None
        self.output = b""
        try:
            self.run(**options)
        except ForgeError as exc:
            self.record(exc.exit_code)
            logger.debug("command failed: %s", exc.as_dict())
            raise CommandError(exc.message, returncode=exc.exit_code) from exc
        except ValidationError as exc:
            self.record(BadInput.exit_code)
            raise CommandError("; ".join(exc.messages), returncode=BadInput.exit_code) from exc
        self.record(0)

    def run(self, **options):
        raise NotImplementedError("subclasses of ForgeCommand must provide a run() method")

    def manifest_for(self, action: str, params=None, seeds=(), engines=(), **extra) -> RunManifest:
        self.manifest = RunManifest(
            command=f"{self.command_name} {action}".strip(),
            params={**(params.as_dict() if params is not None else {}), **extra},
            seeds=list(seeds),
            engines=list(engines),
        )
        return self.manifest

    def emit(self, result, fmt: str = "json", out: str | None = None, name: str | None = None) -> bytes:
        """Serialize one artifact and write it to --out or stdout."""
        data = emit_report(artifact(self.manifest.as_dict(), result), fmt)
        self.output += data
        if out is None:
            self.stdout.write(data.decode("utf-8"), ending="")
            return data
        path = Path(out)
        if name is not None:
            path = path / f"{name}.{EXTENSIONS[fmt]}"
        write_atomic(path, data)
        self.stdout.write(self.style.SUCCESS(f"Wrote {path}"))
        return data

    def record(self, exit_code: int) -> None:
        if self.manifest is not None:
            record_run(self.manifest, exit_code, self.output or None)

    @property
    def command_name(self) -> str:
        return self.__module__.rsplit(".", 1)[-1]
