#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Function to rebuild prisms from a complex with black edges."""

from typing import Dict, FrozenSet, List

import networkx as nx

from ..colour import EdgeColour
from ..edge_coloured import EdgeColouredComplex
from ..exceptions import ComplexError, SubdivisionError
from ..midsection import Cell, CellKind, MidsectionComplex


def _colour_components(
    corners: FrozenSet[int],
    colours: Dict[FrozenSet[int], EdgeColour],
    colour: EdgeColour,
) -> List[List[int]]:
    graph = nx.Graph()
    graph.add_nodes_from(corners)
    graph.add_edges_from(
        tuple(e)
        for e, c in colours.items()
        if c == colour and e <= corners
    )
    return sorted(
        (sorted(part) for part in nx.connected_components(graph)),
        key=lambda part: part[0],
    )


def _prism_from_corners(
    corners: FrozenSet[int], colours: Dict[FrozenSet[int], EdgeColour]
) -> Cell:
    reds = _colour_components(corners, colours, EdgeColour.RED)
    blues = _colour_components(corners, colours, EdgeColour.BLUE)
    red_sizes = [len(part) for part in reds]
    blue_sizes = [len(part) for part in blues]
    if red_sizes == [3, 3] and blue_sizes == [2, 2, 2]:
        kind = CellKind.RED_PRISM
        # blue edges pair corners sharing a red slot
        slot_map = {}
        for i, pair in enumerate(blues):
            for c in pair:
                j = 0 if c in reds[0] else 1
                slot_map[(i, j)] = c
    elif blue_sizes == [3, 3] and red_sizes == [2, 2, 2]:
        kind = CellKind.BLUE_PRISM
        slot_map = {}
        for j, pair in enumerate(reds):
            for c in pair:
                i = 0 if c in blues[0] else 1
                slot_map[(i, j)] = c
    else:
        raise SubdivisionError(
            f"tetrahedra around corners {sorted(corners)} do not form a prism"
        )
    if len(slot_map) != 6:
        raise SubdivisionError(
            f"tetrahedra around corners {sorted(corners)} do not form a prism"
        )
    return Cell.from_slots(kind, slot_map)


def reassemble_4d(S: EdgeColouredComplex) -> MidsectionComplex:
    """Rebuild a three-dimensional midsection from its prism subdivision.

    Tetrahedra sharing a triangle with two black edges lie in the same
    prism. Every group of three such tetrahedra is merged into a prism
    whose kind and corner slots are read from the red and blue edges, and
    isolated tetrahedra without black edges are kept as cells.

    Parameters
    ----------
    S :
        Tetrahedra with red, blue and black edges.

    Returns
    -------
    :
        Midsection whose subdivision is ``S`` up to isomorphism.

    Raises
    ------
    SubdivisionError
        If a triangle has three black edges, if a black edge does not lie
        in exactly two triangles whose other edges are not black, if a
        group of tetrahedra is not a prism, or if an isolated tetrahedron is
        not mono-coloured.
    """
    if S.dimension != 3:
        raise SubdivisionError(
            f"expected tetrahedra, got {S.dimension}-simplices"
        )
    colours = dict(S.edge_colours)

    def black(a: int, b: int) -> bool:
        return colours[frozenset((a, b))] == EdgeColour.BLACK

    triangles: Dict[FrozenSet[int], List[FrozenSet[int]]] = {}
    for tet in S.simplices:
        for v in tet:
            triangles.setdefault(tet - {v}, []).append(tet)
    for triangle in sorted(triangles, key=sorted):
        a, b, c = sorted(triangle)
        if black(a, b) and black(b, c) and black(a, c):
            raise SubdivisionError(
                f"triangle {[a, b, c]} is bounded by three black edges"
            )
    for edge in S.black_edges():
        sides = [
            t
            for t in triangles
            if edge <= t
            and not any(black(*sorted(t - {v})) for v in edge)
        ]
        if len(sides) != 2:
            raise SubdivisionError(
                f"black edge {sorted(edge)} lies in {len(sides)} triangles "
                "whose other edges are not black, expected 2"
            )
    graph = nx.Graph()
    graph.add_nodes_from(S.simplices)
    for triangle, tets in triangles.items():
        a, b, c = sorted(triangle)
        n_black = black(a, b) + black(b, c) + black(a, c)
        if n_black >= 2:
            graph.add_edges_from(
                (tets[i], tets[j])
                for i in range(len(tets))
                for j in range(i + 1, len(tets))
            )
    cells: List[Cell] = []
    groups = sorted(
        (
            sorted(group, key=sorted)
            for group in nx.connected_components(graph)
        ),
        key=lambda group: sorted(group[0]),
    )
    for group in groups:
        corners = frozenset().union(*group)
        if len(group) == 1:
            (tet,) = group
            edge_colours = {
                colours[frozenset(pair)]
                for pair in ((a, b) for a in tet for b in tet if a < b)
            }
            if edge_colours == {EdgeColour.RED}:
                kind = CellKind.RED_TET
            elif edge_colours == {EdgeColour.BLUE}:
                kind = CellKind.BLUE_TET
            else:
                raise SubdivisionError(
                    f"isolated tetrahedron {sorted(tet)} is not mono-coloured"
                )
            cells.append(Cell(kind, tuple(sorted(tet))))
        elif len(group) == 3 and len(corners) == 6:
            cells.append(_prism_from_corners(corners, colours))
        else:
            raise SubdivisionError(
                f"{len(group)} tetrahedra on corners {sorted(corners)} do not "
                "form a prism"
            )
    try:
        return MidsectionComplex(3, cells)
    except ComplexError as exn:
        raise SubdivisionError(str(exn)) from exn
