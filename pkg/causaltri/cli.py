#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Command-line front end.

Every command reads its inputs from files in the text formats of
:mod:`causaltri.formats` and writes its result to standard output or to the
file given by ``-o``. Diagnostics go to standard error. Exit codes are 0 on
success, 1 when validation fails, 2 on malformed input and 3 when a census
hits its resource cap.
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Callable, Dict, Optional, Sequence

import pandas as pd

from . import formats
from .causal import (
    CausalTriangulation,
    glue_for_subadditivity,
    stack_slices,
    validate_slice,
)
from .census import (
    census,
    compare_golden,
    count_fixed_boundaries,
    estimate_beta,
)
from .complex import ColouredComplex
from .constructions import cone_slice, connecting_triangulation, prism_slice
from .exceptions import (
    CausalError,
    FormatError,
    ResourceLimitExceeded,
)
from .fixtures import corpus
from .midsection import MidsectionComplex, euler_identity_check, midsection
from .reconstruct import reconstruct, roundtrip_certify
from .strategies import available_strategies

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FORMAT = 2
EXIT_PARTIAL = 3


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8", newline="\n")


def _read_complex(path: str) -> ColouredComplex:
    loaded = formats.read(path)
    if not isinstance(loaded, ColouredComplex):
        raise FormatError(f"{path} does not hold a vertex-coloured complex")
    return loaded


def _read_triangulation(path: str) -> CausalTriangulation:
    loaded = formats.read(path)
    if not isinstance(loaded, CausalTriangulation):
        raise FormatError(f"{path} does not hold a causal triangulation")
    return loaded


def _read_slice(path: str, generalized: bool = False):
    return validate_slice(
        _read_complex(path), require_sphere_boundaries=not generalized
    )


def _validate(args) -> int:
    loaded = formats.read(args.input)
    if isinstance(loaded, CausalTriangulation):
        print(
            f"valid causal triangulation, V={loaded.volume}, "
            f"{loaded.num_slices} slices"
        )
        return EXIT_OK
    if not isinstance(loaded, ColouredComplex):
        raise FormatError(f"{args.input} does not hold a coloured complex")
    K = validate_slice(loaded, require_sphere_boundaries=not args.generalized)
    kind = "generalized causal slice" if K.generalized else "causal slice"
    print(f"valid {kind}, V={K.volume}, genus {K.genus}")
    return EXIT_OK


def _build_prism(args) -> int:
    K = prism_slice(_read_complex(args.input))
    _emit(formats.dumps(K.complex), args.output)
    return EXIT_OK


def _build_cone(args) -> int:
    K = cone_slice(_read_complex(args.input))
    _emit(formats.dumps(K.complex), args.output)
    return EXIT_OK


def _stack(args) -> int:
    slices = [_read_slice(path) for path in args.inputs]
    _emit(formats.dumps(stack_slices(slices)), args.output)
    return EXIT_OK


def _glue(args) -> int:
    T1, T0, T2 = (_read_triangulation(path) for path in args.inputs)
    _emit(formats.dumps(glue_for_subadditivity(T1, T0, T2)), args.output)
    return EXIT_OK


def _midsection(args) -> int:
    S = midsection(_read_slice(args.input, args.generalized))
    _emit(formats.dumps(S), args.output)
    return EXIT_OK


def _reconstruct(args) -> int:
    S = formats.read(args.input)
    if not isinstance(S, MidsectionComplex):
        raise FormatError(f"{args.input} does not hold a midsection")
    K = reconstruct(S, require_sphere_boundaries=args.sphere)
    _emit(formats.dumps(K.complex), args.output)
    return EXIT_OK


def _roundtrip(args) -> int:
    certificate = roundtrip_certify(_read_slice(args.input, args.generalized))
    _emit(formats.dumps(certificate), args.output)
    return EXIT_OK if certificate.equal else EXIT_INVALID


def _census(args) -> int:
    table = census(
        args.vmax,
        strategy=args.strategy,
        genus=args.genus,
        max_states=args.max_states,
        jobs=args.jobs,
    )
    tables = table.extras.get("tables", {args.strategy: table})
    frame = pd.concat([t.to_frame() for t in tables.values()])
    _emit(formats.dump_frame(frame, args.format), args.output)
    status = EXIT_PARTIAL if table.partial else EXIT_OK
    if args.golden is not None:
        golden = Path(args.golden) / f"census-genus{args.genus}.csv"
        golden.parent.mkdir(parents=True, exist_ok=True)
        if not compare_golden(table, golden):
            logger.error("census counts differ from %s", golden)
            return EXIT_INVALID
    return status


def _beta(args) -> int:
    sigma_in = _read_complex(args.sigma_in)
    sigma_out = _read_complex(args.sigma_out)
    v0 = args.v0
    if v0 is None:
        v0 = connecting_triangulation(sigma_out, sigma_in).volume
        logger.info("reference volume of the connecting triangulation: %d", v0)
    table = count_fixed_boundaries(
        args.vmax,
        sigma_in,
        sigma_out,
        strategy=args.strategy,
        max_states=args.max_states,
        jobs=args.jobs,
    )
    estimate = estimate_beta(table, v0)
    _emit(formats.dump_frame(estimate.to_frame(), args.format), args.output)
    return EXIT_PARTIAL if table.partial else EXIT_OK


def _chi(args) -> int:
    report = euler_identity_check(_read_slice(args.input, args.generalized))
    frame = pd.DataFrame(
        [
            {
                "dual": report.dual,
                "triangulated": report.triangulated,
                "red_boundary": report.red_boundary,
                "blue_boundary": report.blue_boundary,
                "dual_faces": report.dual_faces,
                "red_vertices": report.red_vertices,
                "consistent": report.consistent,
            }
        ]
    )
    _emit(formats.dump_frame(frame, args.format), args.output)
    return EXIT_OK if report.consistent else EXIT_INVALID


def _fixtures(args) -> int:
    directory = Path(args.directory)
    directory.mkdir(parents=True, exist_ok=True)
    items = corpus()
    items["prism_sigma_t"] = prism_slice(items["sigma_t"]).complex
    for stem, obj in sorted(items.items()):
        suffix = ".msec" if isinstance(obj, MidsectionComplex) else ".cmplx"
        formats.write(obj, directory / f"{stem}{suffix}")
        logger.info("wrote %s", directory / f"{stem}{suffix}")
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "validate": _validate,
    "build-prism": _build_prism,
    "build-cone": _build_cone,
    "stack": _stack,
    "glue": _glue,
    "midsection": _midsection,
    "reconstruct": _reconstruct,
    "roundtrip": _roundtrip,
    "census": _census,
    "beta": _beta,
    "chi": _chi,
    "fixtures": _fixtures,
}


def _census_options(parser: argparse.ArgumentParser) -> None:
    # argparse converts string defaults read from the environment
    parser.add_argument(
        "--vmax", type=int, default=os.environ.get("CAUSALTRI_VMAX", "12")
    )
    parser.add_argument(
        "--strategy",
        choices=available_strategies + ["both"],
        default="direct",
    )
    parser.add_argument(
        "--jobs", type=int, default=os.environ.get("CAUSALTRI_JOBS", "1")
    )
    parser.add_argument(
        "--max-states",
        type=int,
        default=os.environ.get("CAUSALTRI_MAX_STATES", "200000"),
    )


def _format_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=sorted(formats.table_formats),
        default="csv",
        help="format of the output table",
    )


def build_parser() -> argparse.ArgumentParser:
    """Argument parser of the ``causaltri`` command."""
    parser = argparse.ArgumentParser(
        prog="causaltri",
        description="Causal slices, midsections and small-volume censuses.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress to standard error (repeat for debug output)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, summary: str, output: bool = True):
        sub = commands.add_parser(name, help=summary)
        if output:
            sub.add_argument("-o", "--output", help="output file")
        return sub

    sub = command("validate", "check a causal slice", output=False)
    sub.add_argument("input")
    sub.add_argument("--generalized", action="store_true")

    command("build-prism", "prism slice over a 2-sphere").add_argument(
        "input"
    )
    command("build-cone", "cone slice over a 2-sphere").add_argument("input")

    sub = command("stack", "stack slices into a triangulation")
    sub.add_argument("inputs", nargs="+")

    sub = command("glue", "glue triangulations T1, T0 and T2")
    sub.add_argument("inputs", nargs=3)

    for name, summary in (
        ("midsection", "midsection of a slice"),
        ("roundtrip", "midsection round-trip certificate"),
        ("chi", "Euler characteristics of a slice and its midsection"),
    ):
        sub = command(name, summary)
        sub.add_argument("input")
        sub.add_argument("--generalized", action="store_true")
        if name == "chi":
            _format_option(sub)

    sub = command("reconstruct", "slice with a given midsection")
    sub.add_argument("input")
    sub.add_argument(
        "--sphere",
        action="store_true",
        help="require boundaries to be 2-spheres",
    )

    sub = command("census", "count slices up to a volume")
    _census_options(sub)
    _format_option(sub)
    sub.add_argument("--genus", type=int, default=0)
    sub.add_argument(
        "--golden",
        default=os.environ.get("CAUSALTRI_GOLDEN"),
        help="directory of golden census files",
    )

    sub = command("beta", "lower bounds on the growth constant")
    sub.add_argument("sigma_in")
    sub.add_argument("sigma_out")
    _census_options(sub)
    _format_option(sub)
    sub.add_argument(
        "--v0",
        type=int,
        default=None,
        help="reference volume (default: connecting triangulation)",
    )

    sub = command("fixtures", "write the built-in corpus", output=False)
    sub.add_argument("directory")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line.

    Parameters
    ----------
    argv :
        Arguments without the program name, defaults to ``sys.argv[1:]``.

    Returns
    -------
    :
        Exit code.
    """
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(
        args.verbose, logging.DEBUG
    )
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s: %(message)s"
    )
    logging.captureWarnings(True)
    try:
        return COMMANDS[args.command](args)
    except FormatError as exn:
        print(f"FormatError: {exn}", file=sys.stderr)
        return EXIT_FORMAT
    except ResourceLimitExceeded as exn:
        print(f"ResourceLimitExceeded: {exn}", file=sys.stderr)
        return EXIT_PARTIAL
    except CausalError as exn:
        print(f"{type(exn).__name__}: {exn}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exn:
        print(f"{type(exn).__name__}: {exn}", file=sys.stderr)
        return EXIT_FORMAT


def main() -> None:
    """Entry point of the ``causaltri`` console script."""
    sys.exit(run())
