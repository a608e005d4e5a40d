"""
Options shared by the nichols management commands: family selection and
braiding sources.
"""

from pathlib import Path

from algebra.exceptions import MalformedInput
from nichols.braided import BraidedSpace
from nichols.forms import FAMILY_CHOICES, INDEX_FIELDS, FamilyIndicesForm
from nichols.yd import braiding_of, build_family
from services.report_service import read_json_input


def add_family_arguments(parser, required=True):
    parser.add_argument(
        "--family",
        choices=[tag for tag, _ in FAMILY_CHOICES],
        required=required,
        help="Family tag (A, Abar, B, C, D, E, G, H, P, I, K; F, J, L, M, N, Q with --lax)",
    )
    for name in INDEX_FIELDS:
        parser.add_argument(
            f"--{name}",
            type=int,
            default=None,
            help=f"Index {name}",
        )
    parser.add_argument(
        "--lax",
        action="store_true",
        help="Accept index tuples outside the classification list",
    )


def family_from(command, options, params) -> tuple[str, dict, bool]:
    data = {"family": options["family"], "lax": options["lax"]}
    data.update({name: options[name] for name in INDEX_FIELDS if options.get(name) is not None})
    cleaned = command.clean_form(FamilyIndicesForm(data, params=params))
    return cleaned["family"], cleaned["indices"], not cleaned["lax"]


def add_braiding_arguments(command, parser):
    parser.add_argument(
        "--input",
        default=None,
        help="Braiding JSON ({dim, labels, constants: [[i, j, k, l, {order, exp}], ...]})",
    )
    command.add_params_arguments(parser, required=False)
    add_family_arguments(parser, required=False)


def braiding_from(command, options) -> tuple[BraidedSpace, dict, bytes]:
    """A braiding read from --input, or extracted from a family module.

    Returns the braiding, the manifest fields describing its source and the
    raw input bytes (empty for family modules).
    """
    if options.get("input"):
        payload = read_json_input(options["input"])
        data = Path(options["input"]).read_bytes()
        return BraidedSpace.from_json(payload, exp_only=True), {"input": Path(options["input"]).name}, data
    if options.get("family") is None or options.get("N") is None or options.get("n") is None:
        raise MalformedInput("give either --input or --family with --N and --n")
    params = command.params_from(options)
    tag, indices, strict = family_from(command, options, params)
    module = build_family(tag, params, strict=strict, **indices)
    return braiding_of(module), {**params.as_dict(), "family": tag, "indices": indices}, b""
