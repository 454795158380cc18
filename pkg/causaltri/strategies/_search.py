#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Breadth-first growth of partial complexes shared by census strategies.

A state is a connected partial complex with ``size`` cells (tetrahedra of a
slice, or polygons of a midsection). States are grown one cell at a time by
closing their least open face, and every layer of the search is deduplicated
by canonical form. States are stored in canonical labelling, so the face
closed first, the representatives kept and the tables produced do not depend
on the order in which states were generated.
"""

import logging
import warnings
from abc import ABC, abstractmethod
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Callable, Dict, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from ..census_table import CensusTable
from ..exceptions import ParamError, ResourceLimitExceeded

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VolumeBounds:
    """Lower bounds every genus-``g`` slice satisfies, used for pruning.

    A closed surface of genus :math:`g` with :math:`F` triangles has
    :math:`F/2 + 2 - 2g \\geq 4` vertices, hence at least :math:`4 + 4g`
    triangles (14 for the torus). Each boundary triangle lies in exactly one
    tetrahedron of type (3,1) or (1,3). Around a red edge, the two red
    triangles have the same blue apex unless a (2,2) tetrahedron separates
    them; since the apices are not all equal and the dual graph of a
    triangulated sphere is 3-edge-connected, a genus-0 slice has at least
    three (2,2) tetrahedra.

    Attributes
    ----------
    vmax :
        Largest volume of the census.
    genus :
        Genus of the boundary components.
    """

    vmax: int
    genus: int

    def __post_init__(self) -> None:
        if self.vmax < 1:
            raise ParamError(f"vmax should be positive, got {self.vmax}")
        if self.genus < 0:
            raise ParamError(
                f"genus should be nonnegative, got {self.genus}"
            )

    @property
    def min_boundary(self) -> int:
        """Least number of triangles of a boundary component."""
        return max(4 + 4 * self.genus, 14 if self.genus == 1 else 0)

    @property
    def min_quadrangles(self) -> int:
        """Least number of (2,2) tetrahedra."""
        return 3 if self.genus == 0 else 1

    @property
    def min_volume(self) -> int:
        """Least volume of a slice."""
        return 2 * self.min_boundary + self.min_quadrangles

    @property
    def max_boundary(self) -> int:
        """Largest number of triangles of a boundary component."""
        return self.vmax - self.min_boundary - self.min_quadrangles

    @property
    def max_vertices(self) -> int:
        """Largest number of vertices of a boundary component."""
        return self.max_boundary // 2 + 2 - 2 * self.genus

    @property
    def max_corners(self) -> int:
        """Largest number of corners of a midsection.

        Corners are mixed edges and the Euler relation of the midsection
        gives :math:`2 - 2g + V - (n_{31} + n_{13}) / 2` of them.
        """
        return self.vmax - self.min_boundary + 2 - 2 * self.genus

    def admits(
        self,
        red: int,
        blue: int,
        mixed: int,
        open_faces: int,
        closed_per_cell: int,
    ) -> bool:
        """Check whether a partial complex can still complete within vmax.

        Parameters
        ----------
        red :
            Number of (3,1) cells.
        blue :
            Number of (1,3) cells.
        mixed :
            Number of (2,2) cells.
        open_faces :
            Number of faces that still need a second cell.
        closed_per_cell :
            Largest number of open faces a new cell can close.
        """
        lower = (
            max(red, self.min_boundary)
            + max(blue, self.min_boundary)
            + max(mixed, self.min_quadrangles)
        )
        size = red + blue + mixed
        remaining = -(-open_faces // closed_per_cell)
        return lower <= self.vmax and size + remaining <= self.vmax


def partial_link_ok(
    pairs: Iterable[Tuple[int, int]], cycle_allowed: bool
) -> bool:
    """Check whether a graph can still grow into a path or a cycle.

    Parameters
    ----------
    pairs :
        Edges of the graph, possibly repeated.
    cycle_allowed :
        If False, the graph must grow into a path.

    Returns
    -------
    :
        True if every vertex has degree at most two and the graph has no
        cycle, or is a single cycle when cycles are allowed.
    """
    graph = nx.MultiGraph()
    graph.add_edges_from(pairs)
    if any(degree > 2 for _, degree in graph.degree):
        return False
    components = list(nx.connected_components(graph))
    for nodes in components:
        if graph.subgraph(nodes).number_of_edges() == len(nodes):
            if not cycle_allowed or len(components) > 1:
                return False
    return True


class State(ABC):
    """Partial complex in a layered search."""

    @property
    @abstractmethod
    def size(self) -> int:
        """Number of cells."""

    @abstractmethod
    def is_complete(self) -> bool:
        """Check whether no face is open."""

    @abstractmethod
    def children(self) -> Iterator["State"]:
        """States obtained by closing the least open face."""

    @abstractmethod
    def canonical(self) -> Tuple[bytes, "State"]:
        """Canonical form and the state relabelled canonically."""


class Frontier:
    """Deduplicated layer of states of the same size.

    Parameters
    ----------
    states :
        Initial states, all of the same size.
    max_states :
        Largest number of distinct states kept in a layer.
    """

    def __init__(self, states: Sequence[State], max_states: int) -> None:
        if max_states < 1:
            raise ParamError(
                f"max_states should be positive, got {max_states}"
            )
        self.max_states = max_states
        self.size = states[0].size if states else 0
        self.states = self._dedupe(states)

    def _dedupe(self, states) -> List[State]:
        layer: Dict[bytes, State] = {}
        for state in states:
            form, relabelled = state.canonical()
            if form in layer:
                continue
            layer[form] = relabelled
            if len(layer) > self.max_states:
                raise ResourceLimitExceeded(
                    f"more than {self.max_states} partial complexes with "
                    f"{self.size} cells"
                )
        return [layer[form] for form in sorted(layer)]

    def completed(self) -> List[State]:
        """States of the current layer without open faces."""
        return [state for state in self.states if state.is_complete()]

    def expand(self) -> None:
        """Replace the current layer by the children of its states."""
        self.size += 1
        self.states = self._dedupe(
            child
            for state in self.states
            if not state.is_complete()
            for child in state.children()
        )
        logger.debug(
            "%d partial complexes of size %d", len(self.states), self.size
        )


Recorder = Callable[[CensusTable, State], None]


def _template(table: CensusTable) -> CensusTable:
    return CensusTable(
        vmax=table.vmax,
        dimension=table.dimension,
        genus=table.genus,
        strategy=table.strategy,
        boundaries=table.boundaries,
    )


def _explore(
    frontier: Frontier, table: CensusTable, record: Recorder
) -> CensusTable:
    try:
        while frontier.states:
            for state in frontier.completed():
                record(table, state)
            frontier.expand()
    except ResourceLimitExceeded as exn:
        logger.info("census stopped: %s", exn)
        table.truncate(frontier.size)
    return table


def _explore_part(
    states: List[State],
    max_states: int,
    table: CensusTable,
    record: Recorder,
) -> CensusTable:
    frontier = Frontier(states, max_states)
    return _explore(frontier, table, record)


def search(
    table: CensusTable,
    roots: Sequence[State],
    record: Recorder,
    max_states: int = 200000,
    jobs: int = 1,
) -> CensusTable:
    """Grow all completions of the roots and record them in a table.

    Parameters
    ----------
    table :
        Table to fill.
    roots :
        Initial states, all of the same size.
    record :
        Module-level function storing a complete state in a table.
    max_states :
        Largest number of distinct partial complexes in a layer.
    jobs :
        Number of worker processes.

    Returns
    -------
    :
        The filled table, flagged as partial if a layer exceeded
        ``max_states``.

    Notes
    -----
    With several jobs, the search first runs in-process until a layer holds
    enough states, then splits that layer round-robin between workers. The
    worker tables are merged by union of canonical forms, so the result does
    not depend on the number of jobs.
    """
    if jobs < 1:
        raise ParamError(f"jobs should be positive, got {jobs}")
    frontier = Frontier(roots, max_states)
    if jobs == 1:
        _explore(frontier, table, record)
    else:
        try:
            while 0 < len(frontier.states) < 4 * jobs:
                for state in frontier.completed():
                    record(table, state)
                frontier.expand()
        except ResourceLimitExceeded as exn:
            logger.info("census stopped: %s", exn)
            table.truncate(frontier.size)
            frontier.states = []
        parts = [frontier.states[k::jobs] for k in range(jobs)]
        tasks = [
            (part, max_states, _template(table), record)
            for part in parts
            if part
        ]
        if tasks:
            with Pool(processes=jobs) as pool:
                for part_table in pool.starmap(_explore_part, tasks):
                    table.update(part_table)
    if table.partial:
        warnings.warn(
            f"census with strategy '{table.strategy}' exceeded "
            f"{max_states} partial complexes, volumes from {table.limit} on "
            "were not enumerated"
        )
    return table
