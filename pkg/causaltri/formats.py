#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Line-based text formats for complexes, midsections and reports.

Every format starts with a version header and lists its records in a
canonical order, so that parsing then serializing a file gives back the
same bytes. Blank lines and lines starting with ``#`` are ignored when
parsing.

``cmplx v1``
    Coloured complex: ``dim D``, then ``v <id> <R|B>`` per vertex and
    ``s <ids>`` per maximal simplex, with ids ascending. Edge-coloured
    complexes list ``v <id>`` without colour and ``e <a> <b> <R|B|K>`` per
    edge.
``msec v1``
    Midsection: ``dim D``, ``corner <id>`` per corner and
    ``cell <kind> <corners> <edge colours>`` per cell.
``ctri v1``
    Causal triangulation: ``dim D``, ``slices N``, then a ``slice i`` block
    of ``v``/``s`` records per slice and an ``iface i`` block of
    ``p <blue id> <red id>`` pairs per interface.
``cert v1``
    Round-trip certificate: ``source``, ``roundtrip`` and ``verdict``.
"""

from pathlib import Path
from typing import Callable, Dict, Iterator, List, Tuple, Union

import pandas as pd

from .causal import CausalTriangulation, stack_slices, validate_slice
from .census_table import BetaEstimate, CensusTable
from .colour import Colour, EdgeColour
from .complex import ColouredComplex
from .edge_coloured import EdgeColouredComplex
from .exceptions import ComplexError, FormatError
from .midsection import Cell, CellKind, MidsectionComplex
from .reconstruct import Certificate

Loaded = Union[
    ColouredComplex,
    EdgeColouredComplex,
    MidsectionComplex,
    CausalTriangulation,
    Certificate,
]

HEADERS = {
    "cmplx": "cmplx v1",
    "msec": "msec v1",
    "ctri": "ctri v1",
    "cert": "cert v1",
}


def _records(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, stripped.split()


def _int(token: str, number: int) -> int:
    try:
        return int(token)
    except ValueError as exn:
        raise FormatError(
            f"line {number}: expected an integer, got '{token}'"
        ) from exn


def _expect_header(records, header: str) -> None:
    try:
        number, tokens = next(records)
    except StopIteration as exn:
        raise FormatError(f"empty file, expected '{header}'") from exn
    if " ".join(tokens) != header:
        raise FormatError(
            f"line {number}: expected header '{header}', "
            f"got '{' '.join(tokens)}'"
        )


def _expect_dim(records) -> int:
    try:
        number, tokens = next(records)
    except StopIteration as exn:
        raise FormatError("missing 'dim' record") from exn
    if len(tokens) != 2 or tokens[0] != "dim":
        raise FormatError(f"line {number}: expected 'dim <D>'")
    return _int(tokens[1], number)


def _sorted_simplices(simplices) -> List[Tuple[int, ...]]:
    return sorted(tuple(sorted(s)) for s in simplices)


def _complex_lines(K: ColouredComplex) -> List[str]:
    lines = [f"v {v} {K.colours[v].token}" for v in K.vertices]
    lines += [
        "s " + " ".join(map(str, s))
        for s in _sorted_simplices(K.maximal_simplices)
    ]
    return lines


def dump_complex(K: ColouredComplex) -> str:
    """Serialize a coloured complex as ``cmplx v1``."""
    lines = [HEADERS["cmplx"], f"dim {K.dimension}"] + _complex_lines(K)
    return "\n".join(lines) + "\n"


def dump_edge_coloured(T: EdgeColouredComplex) -> str:
    """Serialize a complex with red, blue and black edges as ``cmplx v1``."""
    lines = [HEADERS["cmplx"], f"dim {T.dimension}"]
    lines += [f"v {v}" for v in T.vertices]
    lines += [
        f"e {a} {b} {T.edge_colours[frozenset((a, b))].token}"
        for a, b in _sorted_simplices(T.edge_colours)
    ]
    lines += [
        "s " + " ".join(map(str, s)) for s in _sorted_simplices(T.simplices)
    ]
    return "\n".join(lines) + "\n"


def _parse_complex_body(records, dimension: int):
    colours: Dict[int, Colour] = {}
    plain: List[int] = []
    edges: Dict[frozenset, EdgeColour] = {}
    simplices: List[List[int]] = []
    for number, tokens in records:
        tag, args = tokens[0], tokens[1:]
        if tag == "v" and len(args) == 2:
            vertex = _int(args[0], number)
            if vertex in colours:
                raise ComplexError(f"line {number}: vertex {vertex} repeated")
            try:
                colours[vertex] = Colour.from_token(args[1])
            except FormatError as exn:
                raise FormatError(f"line {number}: {exn}") from exn
        elif tag == "v" and len(args) == 1:
            plain.append(_int(args[0], number))
        elif tag == "e" and len(args) == 3:
            edge = frozenset((_int(args[0], number), _int(args[1], number)))
            try:
                edges[edge] = EdgeColour.from_token(args[2])
            except FormatError as exn:
                raise FormatError(f"line {number}: {exn}") from exn
        elif tag == "s":
            simplex = [_int(token, number) for token in args]
            if any(a >= b for a, b in zip(simplex, simplex[1:])):
                raise FormatError(
                    f"line {number}: simplex ids must be strictly ascending"
                )
            simplices.append(simplex)
        else:
            raise FormatError(
                f"line {number}: unexpected record '{' '.join(tokens)}'"
            )
    if colours and (plain or edges):
        raise FormatError("vertex colours and edge colours are exclusive")
    if colours or not (plain or edges):
        return ColouredComplex(dimension, colours, simplices)
    used = {v for s in simplices for v in s}
    if set(plain) != used:
        raise FormatError("declared vertices do not match simplices")
    return EdgeColouredComplex(dimension, simplices, edges)


def load_complex(
    text: str,
) -> Union[ColouredComplex, EdgeColouredComplex]:
    """Parse a ``cmplx v1`` document.

    Returns
    -------
    :
        A coloured complex, or an edge-coloured complex if the document has
        ``e`` records.

    Raises
    ------
    FormatError
        If a record does not parse.
    ComplexError
        If the records do not describe a simplicial complex.
    """
    records = _records(text)
    _expect_header(records, HEADERS["cmplx"])
    dimension = _expect_dim(records)
    return _parse_complex_body(records, dimension)


def dump_midsection(S: MidsectionComplex) -> str:
    """Serialize a midsection as ``msec v1``."""
    lines = [HEADERS["msec"], f"dim {S.dimension}"]
    lines += [f"corner {c}" for c in S.corners]
    lines += [
        f"cell {cell.kind.value} "
        + " ".join(map(str, cell.corners))
        + f" {cell.kind.edge_tokens}"
        for cell in S.cells
    ]
    return "\n".join(lines) + "\n"


def load_midsection(text: str) -> MidsectionComplex:
    """Parse a ``msec v1`` document.

    Raises
    ------
    FormatError
        If a record does not parse, a cell kind is unknown, its edge colours
        do not match its kind, or declared corners differ from used ones.
    """
    records = _records(text)
    _expect_header(records, HEADERS["msec"])
    dimension = _expect_dim(records)
    corners: List[int] = []
    cells: List[Cell] = []
    for number, tokens in records:
        if tokens[0] == "corner" and len(tokens) == 2:
            corners.append(_int(tokens[1], number))
            continue
        if tokens[0] != "cell" or len(tokens) < 3:
            raise FormatError(
                f"line {number}: unexpected record '{' '.join(tokens)}'"
            )
        try:
            kind = CellKind(tokens[1])
        except ValueError as exn:
            raise FormatError(
                f"line {number}: unknown cell kind '{tokens[1]}'"
            ) from exn
        if tokens[-1] != kind.edge_tokens:
            raise FormatError(
                f"line {number}: {kind.value} edges are coloured "
                f"{kind.edge_tokens}, got {tokens[-1]}"
            )
        ids = tuple(_int(token, number) for token in tokens[2:-1])
        cells.append(Cell(kind, ids))
    used = {c for cell in cells for c in cell.corners}
    if len(set(corners)) != len(corners) or set(corners) != used:
        raise FormatError("declared corners do not match cell corners")
    return MidsectionComplex(dimension, cells)


def dump_triangulation(T: CausalTriangulation) -> str:
    """Serialize a causal triangulation as ``ctri v1``."""
    lines = [
        HEADERS["ctri"],
        f"dim {T.dimension}",
        f"slices {T.num_slices}",
    ]
    for i, K in enumerate(T.slices):
        lines.append(f"slice {i}")
        lines += _complex_lines(K.complex)
    for i, iso in enumerate(T.interface_isos):
        lines.append(f"iface {i}")
        lines += [f"p {b} {r}" for b, r in sorted(iso.items())]
    return "\n".join(lines) + "\n"


def load_triangulation(text: str) -> CausalTriangulation:
    """Parse a ``ctri v1`` document.

    Every slice is validated (boundaries of any common genus) and the
    interfaces are checked while stacking.

    Raises
    ------
    FormatError
        If blocks are missing or out of order.
    """
    records = _records(text)
    _expect_header(records, HEADERS["ctri"])
    dimension = _expect_dim(records)
    number, tokens = next(records, (0, []))
    if len(tokens) != 2 or tokens[0] != "slices":
        raise FormatError(f"line {number}: expected 'slices <N>'")
    count = _int(tokens[1], number)
    blocks: List[Tuple[str, int, List[Tuple[int, List[str]]]]] = []
    for number, tokens in records:
        if tokens[0] in ("slice", "iface") and len(tokens) == 2:
            blocks.append((tokens[0], _int(tokens[1], number), []))
        elif blocks:
            blocks[-1][2].append((number, tokens))
        else:
            raise FormatError(f"line {number}: record outside of a block")
    expected = [("slice", i) for i in range(count)]
    expected += [("iface", i) for i in range(count - 1)]
    if [(tag, i) for tag, i, _ in blocks] != expected:
        raise FormatError(
            f"expected {count} slice blocks then {max(count - 1, 0)} "
            "iface blocks, in order"
        )
    slices = []
    isos = []
    for tag, _, body in blocks:
        if tag == "slice":
            K = _parse_complex_body(iter(body), dimension)
            if not isinstance(K, ColouredComplex):
                raise FormatError("slice blocks have coloured vertices")
            slices.append(validate_slice(K, require_sphere_boundaries=False))
            continue
        iso: Dict[int, int] = {}
        for number, tokens in body:
            if tokens[0] != "p" or len(tokens) != 3:
                raise FormatError(f"line {number}: expected 'p <a> <b>'")
            iso[_int(tokens[1], number)] = _int(tokens[2], number)
        isos.append(iso)
    return stack_slices(slices, isos)


def dump_certificate(certificate: Certificate) -> str:
    """Serialize a round-trip certificate as ``cert v1``."""
    lines = [
        HEADERS["cert"],
        f"source {certificate.source_digest}",
        f"roundtrip {certificate.roundtrip_digest}",
        f"verdict {certificate.verdict}",
    ]
    return "\n".join(lines) + "\n"


def load_certificate(text: str) -> Certificate:
    """Parse a ``cert v1`` document."""
    records = _records(text)
    _expect_header(records, HEADERS["cert"])
    fields: Dict[str, str] = {}
    for number, tokens in records:
        if len(tokens) != 2 or tokens[0] not in (
            "source",
            "roundtrip",
            "verdict",
        ):
            raise FormatError(
                f"line {number}: unexpected record '{' '.join(tokens)}'"
            )
        fields[tokens[0]] = tokens[1]
    if set(fields) != {"source", "roundtrip", "verdict"}:
        raise FormatError("certificate needs source, roundtrip and verdict")
    if fields["verdict"] not in ("equal", "different"):
        raise FormatError(f"unknown verdict '{fields['verdict']}'")
    equal = fields["verdict"] == "equal"
    if equal != (fields["source"] == fields["roundtrip"]):
        raise FormatError("verdict contradicts the digests")
    return Certificate(fields["source"], fields["roundtrip"], equal)


def loads(text: str) -> Loaded:
    """Parse a document of any format, chosen by its header."""
    first = next(_records(text), (0, []))[1]
    header = " ".join(first)
    loaders = {
        HEADERS["cmplx"]: load_complex,
        HEADERS["msec"]: load_midsection,
        HEADERS["ctri"]: load_triangulation,
        HEADERS["cert"]: load_certificate,
    }
    if header not in loaders:
        raise FormatError(f"unknown header '{header}'")
    return loaders[header](text)


def dumps(obj: Loaded) -> str:
    """Serialize any supported object in its format."""
    if isinstance(obj, ColouredComplex):
        return dump_complex(obj)
    if isinstance(obj, EdgeColouredComplex):
        return dump_edge_coloured(obj)
    if isinstance(obj, MidsectionComplex):
        return dump_midsection(obj)
    if isinstance(obj, CausalTriangulation):
        return dump_triangulation(obj)
    if isinstance(obj, Certificate):
        return dump_certificate(obj)
    raise FormatError(f"no text format for {type(obj).__name__}")


def read(path: Union[str, Path]) -> Loaded:
    """Read a document of any format from a UTF-8 file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exn:
        raise FormatError(f"{path} is not UTF-8 text") from exn
    return loads(text)


def write(obj: Loaded, path: Union[str, Path]) -> None:
    """Write an object in its format to a UTF-8 file."""
    Path(path).write_text(dumps(obj), encoding="utf-8", newline="\n")


def _frame_to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n", float_format="%.12g")


table_formats: Dict[str, Callable[[pd.DataFrame], str]] = {
    "csv": _frame_to_csv,
}


def dump_frame(frame: pd.DataFrame, fmt: str = "csv") -> str:
    """Serialize a report frame in one of :data:`table_formats`."""
    try:
        return table_formats[fmt](frame)
    except KeyError as exn:
        raise FormatError(f"unknown table format {fmt!r}") from exn


def table_to_csv(table: CensusTable) -> str:
    """Census counts as ``V,count,strategy,genus`` CSV."""
    return dump_frame(table.to_frame())


def beta_to_csv(estimate: BetaEstimate) -> str:
    """Growth estimates as ``V,logN_over_V,running_inf,beta_lower`` CSV."""
    return dump_frame(estimate.to_frame())
