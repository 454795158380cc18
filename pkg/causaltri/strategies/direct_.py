#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Census of causal slices by gluing typed tetrahedra.

The search starts from a single (3,1) tetrahedron. In a slice every mixed
triangle is interior, so it lies in exactly two tetrahedra; a partial slice
is extended by closing its least open mixed triangle with a new tetrahedron
whose fourth vertex is an existing vertex, a new red vertex or a new blue
vertex. Every slice is connected through mixed triangles, hence reached from
any of its (3,1) tetrahedra.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Tuple

import networkx as nx

from ..canonical import canonical_labelling
from ..causal import validate_slice
from ..census_table import CensusTable
from ..colour import Colour
from ..complex import ColouredComplex, Simplex
from ..exceptions import ComplexError, ParamError, SliceError
from ._search import State, VolumeBounds, partial_link_ok, search

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SliceState(State):
    """Partial slice grown by the direct strategy.

    Attributes
    ----------
    colours :
        Colour of each vertex, indexed by vertex id.
    tets :
        Tetrahedra glued so far.
    bounds :
        Pruning bounds of the census.
    """

    colours: Tuple[Colour, ...]
    tets: FrozenSet[Simplex]
    bounds: VolumeBounds

    @property
    def size(self) -> int:
        """Number of tetrahedra."""
        return len(self.tets)

    def _mono(self, simplex: Simplex) -> bool:
        return len({self.colours[v] for v in simplex}) == 1

    @cached_property
    def _triangles(self) -> Dict[Simplex, int]:
        counts: Dict[Simplex, int] = {}
        for tet in self.tets:
            for v in tet:
                counts[tet - {v}] = counts.get(tet - {v}, 0) + 1
        return counts

    @cached_property
    def open_triangles(self) -> List[Tuple[int, ...]]:
        """Mixed triangles lying in a single tetrahedron, sorted."""
        return sorted(
            tuple(sorted(t))
            for t, n in self._triangles.items()
            if n == 1 and not self._mono(t)
        )

    def is_complete(self) -> bool:
        """Check whether every mixed triangle lies in two tetrahedra."""
        return not self.open_triangles

    def children(self) -> Iterator["SliceState"]:
        """Partial slices closing the least open mixed triangle."""
        triangle = frozenset(self.open_triangles[0])
        n = len(self.colours)
        candidates = [(v, self.colours) for v in range(n) if v not in triangle]
        candidates += [
            (n, self.colours + (colour,))
            for colour in (Colour.RED, Colour.BLUE)
        ]
        for apex, colours in candidates:
            tet = triangle | {apex}
            if tet in self.tets:
                continue
            child = SliceState(colours, self.tets | {tet}, self.bounds)
            if child._admissible(tet):
                yield child

    def _vertex_link_open(self, vertex: int) -> bool:
        link = [tet - {vertex} for tet in self.tets if vertex in tet]
        edges: Dict[FrozenSet[int], List[int]] = {}
        for index, triangle in enumerate(link):
            for v in triangle:
                edges.setdefault(triangle - {v}, []).append(index)
        graph = nx.Graph()
        graph.add_nodes_from(range(len(link)))
        graph.add_edges_from(
            tuple(owners) for owners in edges.values() if len(owners) == 2
        )
        # a closed surface in the link never grows into a disc
        for component in nx.connected_components(graph):
            closed = all(
                len(edges[link[index] - {v}]) == 2
                for index in component
                for v in link[index]
            )
            if closed:
                return False
        return True

    def _admissible(self, tet: Simplex) -> bool:
        for v in tet:
            count = self._triangles[tet - {v}]
            if count > 2 or (count > 1 and self._mono(tet - {v})):
                return False
        for a, b in combinations(sorted(tet), 2):
            edge = frozenset((a, b))
            pairs = [
                tuple(sorted(other - edge))
                for other in self.tets
                if edge <= other
            ]
            if not partial_link_ok(pairs, not self._mono(edge)):
                return False
        if not all(self._vertex_link_open(v) for v in tet):
            return False
        reds = sum(1 for c in self.colours if c == Colour.RED)
        if max(reds, len(self.colours) - reds) > self.bounds.max_vertices:
            return False
        by_reds = {3: 0, 2: 0, 1: 0}
        for other in self.tets:
            red = sum(1 for v in other if self.colours[v] == Colour.RED)
            by_reds[red] += 1
        return self.bounds.admits(
            by_reds[3], by_reds[1], by_reds[2], len(self.open_triangles), 4
        )

    def canonical(self) -> Tuple[bytes, "SliceState"]:
        """Canonical form and canonically relabelled partial slice."""
        labelling = canonical_labelling(
            {v: int(c) for v, c in enumerate(self.colours)},
            [(0, tet) for tet in self.tets],
        )
        relabel = labelling.relabel
        colours = [Colour.RED] * len(self.colours)
        for v, c in enumerate(self.colours):
            colours[relabel[v]] = c
        tets = frozenset(
            frozenset(relabel[v] for v in tet) for tet in self.tets
        )
        return labelling.form, SliceState(tuple(colours), tets, self.bounds)

    def to_complex(self) -> ColouredComplex:
        """Coloured complex of the glued tetrahedra."""
        return ColouredComplex(3, dict(enumerate(self.colours)), self.tets)


def _record_slice(table: CensusTable, state: SliceState) -> None:
    try:
        K = validate_slice(
            state.to_complex(), require_sphere_boundaries=table.genus == 0
        )
    except (ComplexError, SliceError) as exn:
        logger.debug("completion of size %d rejected: %s", state.size, exn)
        return
    if K.genus == table.genus:
        table.add(K.volume, K.canonical_form(), K)


def enumerate_slices(
    vmax: int,
    dimension: int = 3,
    genus: int = 0,
    max_states: int = 200000,
    jobs: int = 1,
) -> CensusTable:
    """Count causal slices up to colour-preserving isomorphism.

    Parameters
    ----------
    vmax :
        Largest volume (number of tetrahedra) counted.
    dimension :
        Dimension of the slices, only 3 is supported.
    genus :
        Genus of the boundary components. Slices of nonzero genus are
        generalized slices.
    max_states :
        Largest number of distinct partial slices in a search layer.
    jobs :
        Number of worker processes.

    Returns
    -------
    :
        Table of canonical forms per volume, with one validated slice per
        class. The table is flagged as partial if ``max_states`` was
        exceeded.

    Raises
    ------
    ParamError
        If the dimension is not 3, or ``vmax`` or ``genus`` is out of range.
    """
    if dimension != 3:
        raise ParamError(f"census of {dimension}-slices is not supported")
    bounds = VolumeBounds(vmax, genus)
    table = CensusTable(vmax=vmax, genus=genus, strategy="direct")
    if vmax < bounds.min_volume:
        return table
    root = SliceState(
        (Colour.RED, Colour.RED, Colour.RED, Colour.BLUE),
        frozenset({frozenset(range(4))}),
        bounds,
    )
    logger.info("direct census up to volume %d, genus %d", vmax, genus)
    return search(table, [root], _record_slice, max_states, jobs)
