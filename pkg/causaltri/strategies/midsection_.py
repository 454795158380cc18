#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Census of causal slices through their midsections.

Closed coloured surfaces made of red triangles, blue triangles and
quadrangles are grown from a red triangle by closing their least open edge.
Every closed surface of the requested genus is split into an edge-coloured
triangulation (black diagonals), counted raw and uncoloured, then handed to
:func:`causaltri.reconstruct`. Surfaces that are not midsections of a slice
are counted as filtered.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, List, Tuple

import networkx as nx

from ..census_table import CensusTable
from ..colour import EdgeColour
from ..conversions import triangulate_quadrangles
from ..exceptions import (
    ComplexError,
    ParamError,
    ReconstructionError,
    SurfaceError,
)
from ..midsection import Cell, CellKind, MidsectionComplex, orient_cells
from ..reconstruct import reconstruct
from ._search import State, VolumeBounds, partial_link_ok, search

logger = logging.getLogger(__name__)

_TRIANGLE = {
    EdgeColour.RED: CellKind.RED_TRIANGLE,
    EdgeColour.BLUE: CellKind.BLUE_TRIANGLE,
}


def _cell_key(cell: Cell) -> Tuple[int, Tuple[int, ...]]:
    return (list(CellKind).index(cell.kind), cell.corners)


@dataclass(frozen=True)
class CellState(State):
    """Partial coloured surface grown by the midsection strategy.

    Attributes
    ----------
    cells :
        Polygons glued so far, corners numbered from 0.
    bounds :
        Pruning bounds of the census.
    """

    cells: Tuple[Cell, ...]
    bounds: VolumeBounds

    @property
    def size(self) -> int:
        """Number of polygons."""
        return len(self.cells)

    @cached_property
    def num_corners(self) -> int:
        """Number of corners."""
        return len({c for cell in self.cells for c in cell.corners})

    @cached_property
    def _edges(self) -> Dict[frozenset, Tuple[EdgeColour, int]]:
        # colour conflicts are recorded with a count above 2
        edges: Dict[frozenset, Tuple[EdgeColour, int]] = {}
        for cell in self.cells:
            for edge, colour in cell.edges():
                known, count = edges.get(edge, (colour, 0))
                edges[edge] = (colour, count + (1 if known == colour else 3))
        return edges

    @cached_property
    def open_edges(self) -> List[Tuple[int, int]]:
        """Edges lying in a single polygon, sorted."""
        return sorted(
            tuple(sorted(edge))
            for edge, (_, count) in self._edges.items()
            if count == 1
        )

    def is_complete(self) -> bool:
        """Check whether every edge lies in two polygons."""
        return not self.open_edges

    def children(self) -> Iterator["CellState"]:
        """Partial surfaces closing the least open edge."""
        a, b = self.open_edges[0]
        colour, _ = self._edges[frozenset((a, b))]
        n = self.num_corners
        others = [c for c in range(n) if c not in (a, b)]
        cells = [
            Cell(_TRIANGLE[colour], tuple(sorted((a, b, x))))
            for x in others + [n]
        ]
        for y in others + [n]:
            fresh = n + 1 if y == n else n
            for z in [c for c in others if c != y] + [fresh]:
                if colour == EdgeColour.RED:
                    cycle = (a, b, y, z)
                else:
                    cycle = (z, a, b, y)
                slot_map = dict(zip(CellKind.QUADRANGLE.slots, cycle))
                cells.append(Cell.from_slots(CellKind.QUADRANGLE, slot_map))
        for cell in cells:
            child = CellState(self.cells + (cell,), self.bounds)
            if child._admissible(cell):
                yield child

    def corner_link(self, corner: int) -> List[Tuple[int, int]]:
        """Pairs of neighbours of a corner in the polygons around it."""
        pairs = []
        for cell in self.cells:
            if corner not in cell.corners:
                continue
            k = cell.corners.index(corner)
            m = len(cell.corners)
            pairs.append((cell.corners[k - 1], cell.corners[(k + 1) % m]))
        return pairs

    def is_surface(self) -> bool:
        """Check whether every corner link is a single cycle."""
        for corner in range(self.num_corners):
            graph = nx.MultiGraph(self.corner_link(corner))
            if not nx.is_connected(graph):
                return False
            if graph.number_of_edges() != graph.number_of_nodes():
                return False
        return True

    def _admissible(self, cell: Cell) -> bool:
        if any(count > 2 for _, count in self._edges.values()):
            return False
        diagonals = {
            d
            for other in self.cells
            if other.kind is CellKind.QUADRANGLE
            for d in other.diagonals()
        }
        if any(d in self._edges for d in diagonals):
            return False
        for corner in cell.corners:
            if not partial_link_ok(self.corner_link(corner), True):
                return False
        if self.num_corners > self.bounds.max_corners:
            return False
        kinds = {kind: 0 for kind in _TRIANGLE.values()}
        kinds[CellKind.QUADRANGLE] = 0
        for other in self.cells:
            kinds[other.kind] += 1
        return self.bounds.admits(
            kinds[CellKind.RED_TRIANGLE],
            kinds[CellKind.BLUE_TRIANGLE],
            kinds[CellKind.QUADRANGLE],
            len(self.open_edges),
            4,
        )

    def to_midsection(self) -> MidsectionComplex:
        """Cell complex of the glued polygons."""
        return MidsectionComplex(2, self.cells)

    def canonical(self) -> Tuple[bytes, "CellState"]:
        """Canonical form and canonically relabelled partial surface."""
        labelling = self.to_midsection().canonical_labelling()
        relabel = labelling.relabel
        cells = tuple(
            sorted(
                (
                    Cell.from_slots(
                        cell.kind,
                        {s: relabel[c] for s, c in cell.slot_map.items()},
                    )
                    for cell in self.cells
                ),
                key=_cell_key,
            )
        )
        return b"2:" + labelling.form, CellState(cells, self.bounds)


def _record_triangulation(table: CensusTable, S: MidsectionComplex) -> None:
    try:
        T = triangulate_quadrangles(S)
    except ComplexError as exn:
        logger.debug("quadrangles do not split simplicially: %s", exn)
        return
    n = len(T.simplices)
    table.raw.setdefault(n, set()).add(T.canonical_form())
    table.uncoloured.setdefault(n, set()).add(
        T.canonical_form(respect_colours=False)
    )


def _record_midsection(table: CensusTable, state: CellState) -> None:
    if not state.is_surface():
        return
    S = state.to_midsection()
    try:
        orient_cells(S)
    except SurfaceError:
        return
    genus, odd = divmod(2 - S.euler_characteristic(), 2)
    if odd or genus != table.genus:
        return
    _record_triangulation(table, S)
    try:
        K = reconstruct(S, require_sphere_boundaries=table.genus == 0)
    except ReconstructionError as exn:
        logger.debug("surface with %d cells filtered: %s", state.size, exn)
        table.filtered.setdefault(state.size, set()).add(S.canonical_form())
        return
    if K.genus == table.genus:
        table.add(K.volume, K.canonical_form(), K)


def enumerate_via_midsections(
    vmax: int,
    dimension: int = 3,
    genus: int = 0,
    max_states: int = 200000,
    jobs: int = 1,
) -> CensusTable:
    """Count causal slices by enumerating their candidate midsections.

    Parameters
    ----------
    vmax :
        Largest number of cells counted, which is the volume of the slice.
    dimension :
        Dimension of the slices, only 3 is supported.
    genus :
        Genus of the candidate surfaces.
    max_states :
        Largest number of distinct partial surfaces in a search layer.
    jobs :
        Number of worker processes.

    Returns
    -------
    :
        Table of slice canonical forms per volume, with the canonical forms
        of the rejected surfaces in :attr:`CensusTable.filtered` and the
        triangulation counts in :attr:`CensusTable.raw` and
        :attr:`CensusTable.uncoloured`.

    Raises
    ------
    ParamError
        If the dimension is not 3, or ``vmax`` or ``genus`` is out of range.

    Notes
    -----
    The midsection map is injective on isomorphism classes, so this table
    and the one of :func:`enumerate_slices` agree at every volume.
    """
    if dimension != 3:
        raise ParamError(f"census of {dimension}-slices is not supported")
    bounds = VolumeBounds(vmax, genus)
    table = CensusTable(vmax=vmax, genus=genus, strategy="midsection")
    if vmax < bounds.min_volume:
        return table
    root = CellState((Cell(CellKind.RED_TRIANGLE, (0, 1, 2)),), bounds)
    logger.info("midsection census up to volume %d, genus %d", vmax, genus)
    return search(table, [root], _record_midsection, max_states, jobs)
