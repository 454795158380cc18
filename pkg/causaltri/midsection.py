#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Midsection of a causal slice as a coloured cell complex.

Each :math:`D`-simplex of type :math:`(k, l)` is cut halfway between its
red and blue vertices. The section is a product cell whose corners are the
mixed edges of the simplex: corner :math:`(i, j)` is the edge from the
:math:`i`-th red vertex to the :math:`j`-th blue vertex. Two corners of a
cell are joined by an edge when they share a red or a blue vertex. The edge
is red when they share the blue vertex (it runs parallel to a red face) and
blue when they share the red vertex.
"""

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations
from types import MappingProxyType
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import networkx as nx

from .canonical import canonical_labelling
from .causal import CausalSlice
from .colour import Colour, EdgeColour
from .complex import Simplex, alternating_count
from .exceptions import ComplexError, ParamError, SurfaceError

Slot = Tuple[int, int]
Edge = FrozenSet[int]


class CellKind(Enum):
    """Kind of a midsection cell, with its corner table."""

    RED_TRIANGLE = "redTriangle"
    BLUE_TRIANGLE = "blueTriangle"
    QUADRANGLE = "quadrangle"
    RED_TET = "redTet"
    BLUE_TET = "blueTet"
    RED_PRISM = "redPrism"
    BLUE_PRISM = "bluePrism"

    @property
    def shape(self) -> Tuple[int, int]:
        """Type :math:`(k, l)` of the simplices yielding this kind."""
        return _SHAPES[self]

    @property
    def dimension(self) -> int:
        """Dimension of the cell."""
        k, l = self.shape
        return k + l - 2

    @property
    def slots(self) -> Tuple[Slot, ...]:
        """Slot :math:`(i, j)` of each corner position.

        Quadrangle corners are cyclic with the first edge red. Prism corners
        list one triangle after the other.
        """
        return _SLOTS[self]

    @property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        """Pairs of corner positions joined by an edge, in storage order."""
        return _EDGES[self]

    def edge_colour(self, p: int, q: int) -> EdgeColour:
        """Colour of the edge between two corner positions."""
        (i, j), (i2, j2) = self.slots[p], self.slots[q]
        if j == j2 and i != i2:
            return EdgeColour.RED
        if i == i2 and j != j2:
            return EdgeColour.BLUE
        raise ParamError(f"positions {p} and {q} are not joined by an edge")

    @property
    def edge_tokens(self) -> str:
        """Edge colours in storage order, as one-letter tokens."""
        return "".join(self.edge_colour(p, q).token for p, q in self.edges)

    @property
    def colour(self) -> Optional[Colour]:
        """Colour of mono-coloured cells, None for quadrangles and prisms.

        The colour of a prism is the colour of its two triangles, see
        :attr:`face_colour`.
        """
        k, l = self.shape
        if l == 1:
            return Colour.RED
        if k == 1:
            return Colour.BLUE
        return None

    @property
    def face_colour(self) -> Optional[Colour]:
        """Colour of the parallel triangles of a prism."""
        if self is CellKind.RED_PRISM:
            return Colour.RED
        if self is CellKind.BLUE_PRISM:
            return Colour.BLUE
        return None

    @staticmethod
    def of_type(red: int, blue: int) -> "CellKind":
        """Cell kind of the section of a type-(red, blue) simplex."""
        for kind, shape in _SHAPES.items():
            if shape == (red, blue):
                return kind
        raise ParamError(f"no midsection cell for simplex type ({red},{blue})")


_SHAPES: Dict[CellKind, Tuple[int, int]] = {
    CellKind.RED_TRIANGLE: (3, 1),
    CellKind.BLUE_TRIANGLE: (1, 3),
    CellKind.QUADRANGLE: (2, 2),
    CellKind.RED_TET: (4, 1),
    CellKind.BLUE_TET: (1, 4),
    CellKind.RED_PRISM: (3, 2),
    CellKind.BLUE_PRISM: (2, 3),
}

_SLOTS: Dict[CellKind, Tuple[Slot, ...]] = {
    CellKind.RED_TRIANGLE: ((0, 0), (1, 0), (2, 0)),
    CellKind.BLUE_TRIANGLE: ((0, 0), (0, 1), (0, 2)),
    CellKind.QUADRANGLE: ((0, 0), (1, 0), (1, 1), (0, 1)),
    CellKind.RED_TET: ((0, 0), (1, 0), (2, 0), (3, 0)),
    CellKind.BLUE_TET: ((0, 0), (0, 1), (0, 2), (0, 3)),
    CellKind.RED_PRISM: ((0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)),
    CellKind.BLUE_PRISM: ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)),
}


def _product_edges(slots: Sequence[Slot]) -> Tuple[Tuple[int, int], ...]:
    return tuple(
        (p, q)
        for p in range(len(slots))
        for q in range(p + 1, len(slots))
        if (slots[p][0] == slots[q][0]) != (slots[p][1] == slots[q][1])
    )


_EDGES: Dict[CellKind, Tuple[Tuple[int, int], ...]] = {
    kind: _product_edges(slots) for kind, slots in _SLOTS.items()
}
_EDGES[CellKind.QUADRANGLE] = ((0, 1), (1, 2), (2, 3), (3, 0))


@dataclass(frozen=True)
class Cell:
    """Cell of a midsection.

    Attributes
    ----------
    kind :
        Kind of the cell.
    corners :
        Corner ids, one per position of the kind's corner table.
    """

    kind: CellKind
    corners: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.corners) != len(self.kind.slots):
            raise ComplexError(
                f"{self.kind.value} cell needs {len(self.kind.slots)} "
                f"corners, got {len(self.corners)}"
            )
        if len(set(self.corners)) != len(self.corners):
            raise ComplexError(
                f"{self.kind.value} cell {list(self.corners)} repeats a "
                "corner"
            )

    @staticmethod
    def from_slots(kind: CellKind, slot_map: Mapping[Slot, int]) -> "Cell":
        """Build a cell from its corner ids indexed by slot.

        Red slots and blue slots are renumbered so that the tuple of corner
        ids in storage order is lexicographically least, which puts the
        least corner first and gives every cell a unique storage order.
        """
        k, l = kind.shape
        best = None
        for reds in permutations(range(k)):
            for blues in permutations(range(l)):
                corners = tuple(
                    slot_map[(reds[i], blues[j])] for i, j in kind.slots
                )
                if best is None or corners < best:
                    best = corners
        assert best is not None
        return Cell(kind, best)

    @property
    def slot_map(self) -> Dict[Slot, int]:
        """Corner id at each slot."""
        return dict(zip(self.kind.slots, self.corners))

    def edges(self) -> List[Tuple[Edge, EdgeColour]]:
        """Edges of the cell with their colours, in storage order."""
        return [
            (
                frozenset((self.corners[p], self.corners[q])),
                self.kind.edge_colour(p, q),
            )
            for p, q in self.kind.edges
        ]

    def diagonals(self) -> List[Edge]:
        """Pairs of corners differing in both slots."""
        slots = self.kind.slots
        return [
            frozenset((self.corners[p], self.corners[q]))
            for p in range(len(slots))
            for q in range(p + 1, len(slots))
            if slots[p][0] != slots[q][0] and slots[p][1] != slots[q][1]
        ]

    def faces(self) -> List[FrozenSet[int]]:
        """Two-dimensional faces of a three-dimensional cell.

        Triangles of tetrahedra and prisms, and the squares of prisms.
        """
        if self.kind.dimension != 3:
            return [frozenset(self.corners)]
        slot_map = self.slot_map
        k, l = self.kind.shape
        if k == 1 or l == 1:
            return [
                frozenset(self.corners) - {c} for c in self.corners
            ]
        found: List[FrozenSet[int]] = []
        if l == 2:
            found += [
                frozenset(slot_map[(i, j)] for i in range(3)) for j in (0, 1)
            ]
            found += [
                frozenset(slot_map[(i, j)] for i in pair for j in (0, 1))
                for pair in ((0, 1), (0, 2), (1, 2))
            ]
        else:
            found += [
                frozenset(slot_map[(i, j)] for j in range(3)) for i in (0, 1)
            ]
            found += [
                frozenset(slot_map[(i, j)] for j in pair for i in (0, 1))
                for pair in ((0, 1), (0, 2), (1, 2))
            ]
        return found

    def cycle(self) -> Tuple[int, ...]:
        """Corners of a polygonal cell in cyclic order."""
        if self.kind.dimension != 2:
            raise ParamError(f"{self.kind.value} cells are not polygons")
        return self.corners


class MidsectionComplex:
    """Coloured cell complex cut from a causal slice at half height.

    Attributes
    ----------
    dimension :
        Dimension of the cells: 2 (triangles and quadrangles) or 3
        (tetrahedra and prisms).
    cells :
        Cells of the complex.
    corner_origin :
        When computed from a slice, the mixed edge (red vertex, blue vertex)
        each corner comes from.
    cell_origin :
        When computed from a slice, the :math:`D`-simplex each cell comes
        from, aligned with :attr:`cells`.
    """

    dimension: int
    cells: Tuple[Cell, ...]
    corner_origin: Optional[Mapping[int, Tuple[int, int]]]
    cell_origin: Optional[Tuple[Simplex, ...]]

    def __init__(
        self,
        dimension: int,
        cells: Iterable[Cell],
        corner_origin: Optional[Mapping[int, Tuple[int, int]]] = None,
        cell_origin: Optional[Sequence[Simplex]] = None,
    ) -> None:
        if dimension not in (2, 3):
            raise ComplexError(
                f"midsections have dimension 2 or 3, not {dimension}"
            )
        cells = tuple(cells)
        for cell in cells:
            if cell.kind.dimension != dimension:
                raise ComplexError(
                    f"{cell.kind.value} cell in a {dimension}-dimensional "
                    "midsection"
                )
        colours: Dict[Edge, EdgeColour] = {}
        for cell in cells:
            for edge, colour in cell.edges():
                if colours.setdefault(edge, colour) != colour:
                    raise ComplexError(
                        f"edge {sorted(edge)} is coloured both red and blue"
                    )
        if cell_origin is not None and len(cell_origin) != len(cells):
            raise ComplexError("cell origins do not match cells")
        self.dimension = dimension
        self.cells = cells
        self.corner_origin = (
            MappingProxyType(dict(corner_origin))
            if corner_origin is not None
            else None
        )
        self.cell_origin = (
            tuple(cell_origin) if cell_origin is not None else None
        )
        self._edge_colours = MappingProxyType(colours)

    def __repr__(self) -> str:
        counts = ", ".join(
            f"{kind.value}={n}" for kind, n in self.kind_counts().items()
        )
        return f"MidsectionComplex(dimension={self.dimension}, {counts})"

    @property
    def corners(self) -> Tuple[int, ...]:
        """Sorted corner ids."""
        return tuple(sorted({c for cell in self.cells for c in cell.corners}))

    def edges(self) -> Mapping[Edge, EdgeColour]:
        """Edges of the 1-skeleton with their colours."""
        return self._edge_colours

    def edge_colour(self, a: int, b: int) -> EdgeColour:
        """Colour of the edge between two corners."""
        try:
            return self._edge_colours[frozenset((a, b))]
        except KeyError as exn:
            raise ParamError(f"corners {a} and {b} share no edge") from exn

    def kind_counts(self) -> Dict[CellKind, int]:
        """Number of cells of each kind, in table order."""
        counts = {kind: 0 for kind in CellKind}
        for cell in self.cells:
            counts[cell.kind] += 1
        return {
            kind: n
            for kind, n in counts.items()
            if kind.dimension == self.dimension
        }

    def edge_incidence(self) -> Dict[Edge, List[int]]:
        """Indices of the cells containing each edge."""
        incidence: Dict[Edge, List[int]] = {}
        for index, cell in enumerate(self.cells):
            for edge, _ in cell.edges():
                incidence.setdefault(edge, []).append(index)
        return incidence

    def is_closed(self) -> bool:
        """Check whether every codimension-one face lies in two cells."""
        if self.dimension == 2:
            return all(
                len(cells) == 2 for cells in self.edge_incidence().values()
            )
        incidence: Dict[FrozenSet[int], int] = {}
        for cell in self.cells:
            for face in cell.faces():
                incidence[face] = incidence.get(face, 0) + 1
        return all(n == 2 for n in incidence.values())

    def euler_characteristic(self) -> int:
        """Alternating count of corners, edges, faces and cells."""
        chi = len(self.corners) - len(self._edge_colours)
        if self.dimension == 2:
            return chi + len(self.cells)
        faces = {face for cell in self.cells for face in cell.faces()}
        return chi + len(faces) - len(self.cells)

    def triangulate(self) -> Tuple[List[FrozenSet[int]], List[Edge]]:
        """Split quadrangles along the diagonal through their least corner.

        Returns
        -------
        :
            Triangles of the triangulated surface and the added diagonals.
        """
        if self.dimension != 2:
            raise ParamError("only 2-dimensional midsections are triangulated")
        triangles: List[FrozenSet[int]] = []
        diagonals: List[Edge] = []
        for cell in self.cells:
            if cell.kind is not CellKind.QUADRANGLE:
                triangles.append(frozenset(cell.corners))
                continue
            v1, v2, v3, v4 = cell.corners
            if min(cell.corners) in (v1, v3):
                diagonals.append(frozenset((v1, v3)))
                triangles += [frozenset((v1, v2, v3)), frozenset((v1, v3, v4))]
            else:
                diagonals.append(frozenset((v2, v4)))
                triangles += [frozenset((v2, v3, v4)), frozenset((v2, v4, v1))]
        return triangles, diagonals

    def canonical_labelling(self):
        """Canonical labelling of the corners."""
        kinds = list(CellKind)
        hyperedges = [
            (10 + kinds.index(cell.kind), frozenset(cell.corners))
            for cell in self.cells
        ]
        hyperedges += [
            (int(colour), edge) for edge, colour in self._edge_colours.items()
        ]
        return canonical_labelling({c: 0 for c in self.corners}, hyperedges)

    def canonical_form(self) -> bytes:
        """Canonical form of the isomorphism class of the cell complex."""
        return b"%d:" % self.dimension + self.canonical_labelling().form


def midsection(K: CausalSlice) -> MidsectionComplex:
    """Midsection of a causal slice.

    Parameters
    ----------
    K :
        Valid slice of dimension 3 or 4.

    Returns
    -------
    :
        One cell per :math:`D`-simplex. Corner ids number the mixed edges of
        ``K`` in ascending (red vertex, blue vertex) order, and cells follow
        the ascending order of their simplices.
    """
    complex_ = K.complex
    mixed = sorted(
        (r, b) if complex_.colours[r] == Colour.RED else (b, r)
        for r, b in (tuple(sorted(e)) for e in complex_.simplices(1))
        if complex_.colours[r] != complex_.colours[b]
    )
    corner_id = {edge: index for index, edge in enumerate(mixed)}
    cells: List[Cell] = []
    origins: List[Simplex] = []
    for simplex in sorted(complex_.maximal_simplices, key=sorted):
        reds = sorted(v for v in simplex if complex_.colours[v] == Colour.RED)
        blues = sorted(v for v in simplex if complex_.colours[v] != Colour.RED)
        kind = CellKind.of_type(len(reds), len(blues))
        slot_map = {
            (i, j): corner_id[(r, b)]
            for i, r in enumerate(reds)
            for j, b in enumerate(blues)
        }
        cells.append(Cell.from_slots(kind, slot_map))
        origins.append(simplex)
    return MidsectionComplex(
        K.dimension - 1,
        cells,
        corner_origin={index: edge for edge, index in corner_id.items()},
        cell_origin=origins,
    )


def orient_cells(S: MidsectionComplex) -> List[Tuple[int, ...]]:
    """Coherent cyclic orders of the polygons of a closed surface complex.

    Parameters
    ----------
    S :
        Two-dimensional midsection.

    Returns
    -------
    :
        For every cell, its corners in cyclic order such that two cells
        sharing an edge traverse it in opposite directions.

    Raises
    ------
    SurfaceError
        If an edge is not shared by exactly two cells, or if no coherent
        orientation exists.
    """
    if S.dimension != 2:
        raise SurfaceError("only 2-dimensional midsections are surfaces")
    incidence = S.edge_incidence()
    for edge, cells in incidence.items():
        if len(cells) != 2:
            raise SurfaceError(
                f"edge {sorted(edge)} lies in {len(cells)} cells, surface "
                "is not closed"
            )

    def darts(cycle: Sequence[int]) -> List[Tuple[int, int]]:
        return [
            (cycle[k], cycle[(k + 1) % len(cycle)]) for k in range(len(cycle))
        ]

    oriented: Dict[int, Tuple[int, ...]] = {}
    for root in range(len(S.cells)):
        if root in oriented:
            continue
        oriented[root] = S.cells[root].cycle()
        queue = deque([root])
        while queue:
            index = queue.popleft()
            for u, v in darts(oriented[index]):
                (other,) = [
                    c for c in incidence[frozenset((u, v))] if c != index
                ]
                cycle = S.cells[other].cycle()
                wanted = cycle if (v, u) in darts(cycle) else cycle[::-1]
                if other not in oriented:
                    oriented[other] = wanted
                    queue.append(other)
                elif (v, u) not in darts(oriented[other]):
                    raise SurfaceError("midsection is not orientable")
    return [oriented[index] for index in range(len(S.cells))]


Dart = Tuple[int, Edge]


@dataclass(frozen=True)
class DualGraph:
    """Graph on the cells of one colour, dual to the edges of that colour.

    For the red colour, vertices are the red triangles and quadrangles of a
    two-dimensional midsection and every red edge yields an arc between the
    two cells containing it. Faces are traced from the rotation system given
    by a coherent orientation of the cells.

    Attributes
    ----------
    colour :
        Colour of the dual edges.
    graph :
        Multigraph on cell indices, keyed by the dual edge.
    faces :
        Orbits of darts ``(cell, edge)`` bounding each face.
    """

    colour: Colour
    graph: nx.MultiGraph = field(repr=False)
    faces: Tuple[Tuple[Dart, ...], ...] = field(repr=False)

    @property
    def num_vertices(self) -> int:
        """Number :math:`V` of vertices."""
        return self.graph.number_of_nodes()

    @property
    def num_edges(self) -> int:
        """Number :math:`E` of edges."""
        return self.graph.number_of_edges()

    @property
    def num_faces(self) -> int:
        """Number :math:`F` of faces."""
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        """Euler formula :math:`V - E + F`."""
        return self.num_vertices - self.num_edges + self.num_faces

    def degrees(self) -> Dict[int, int]:
        """Degree of every vertex."""
        return dict(self.graph.degree())

    def is_connected(self) -> bool:
        """Check whether the graph is connected."""
        return self.num_vertices > 0 and nx.is_connected(self.graph)


def dual_graph(S: MidsectionComplex, colour: Colour) -> DualGraph:
    """Dual graph of the edges of one colour in a surface midsection.

    Parameters
    ----------
    S :
        Closed orientable two-dimensional midsection.
    colour :
        Colour of the edges to dualize.

    Returns
    -------
    :
        Graph with :math:`V = \\#\\text{triangles} + \\#\\text{quadrangles}`
        and :math:`2 E = 3 \\cdot \\#\\text{triangles} + 2 \\cdot
        \\#\\text{quadrangles}`, triangles being those of the given colour.

    Raises
    ------
    SurfaceError
        If ``S`` is not a closed orientable surface complex.
    """
    cycles = orient_cells(S)
    edge_colour = EdgeColour.of(colour)
    triangle_kind = (
        CellKind.RED_TRIANGLE
        if colour == Colour.RED
        else CellKind.BLUE_TRIANGLE
    )
    nodes = [
        index
        for index, cell in enumerate(S.cells)
        if cell.kind in (triangle_kind, CellKind.QUADRANGLE)
    ]
    graph = nx.MultiGraph()
    graph.add_nodes_from(nodes)
    incidence = S.edge_incidence()
    rotation: Dict[int, List[Edge]] = {}
    for index in nodes:
        cycle = cycles[index]
        rotation[index] = [
            edge
            for edge in (
                frozenset((cycle[k], cycle[(k + 1) % len(cycle)]))
                for k in range(len(cycle))
            )
            if S.edges()[edge] == edge_colour
        ]
    for edge, colour_ in sorted(
        S.edges().items(), key=lambda item: sorted(item[0])
    ):
        if colour_ == edge_colour:
            u, v = incidence[edge]
            graph.add_edge(u, v, key=tuple(sorted(edge)))
    n_triangles = sum(1 for cell in S.cells if cell.kind is triangle_kind)
    n_quads = sum(1 for cell in S.cells if cell.kind is CellKind.QUADRANGLE)
    if graph.number_of_nodes() != n_triangles + n_quads or (
        2 * graph.number_of_edges() != 3 * n_triangles + 2 * n_quads
    ):
        raise SurfaceError("dual graph counts do not match the cell counts")
    seen = set()
    faces: List[Tuple[Dart, ...]] = []
    for index in nodes:
        for edge in rotation[index]:
            start: Dart = (index, edge)
            if start in seen:
                continue
            orbit: List[Dart] = []
            dart = start
            while dart not in seen:
                seen.add(dart)
                orbit.append(dart)
                cell, e = dart
                (other,) = [c for c in incidence[e] if c != cell]
                ring = rotation[other]
                dart = (other, ring[(ring.index(e) + 1) % len(ring)])
            faces.append(tuple(orbit))
    return DualGraph(colour=colour, graph=graph, faces=tuple(faces))


@dataclass(frozen=True)
class EulerReport:
    """Euler characteristics of a three-dimensional slice and its midsection.

    Attributes
    ----------
    dual :
        :math:`V - E + F` of the red dual graph.
    triangulated :
        Alternating count of the midsection with quadrangles split.
    red_boundary :
        Euler characteristic of the red boundary.
    blue_boundary :
        Euler characteristic of the blue boundary.
    dual_faces :
        Number :math:`F` of faces of the red dual graph.
    red_vertices :
        Number of vertices of the red boundary.
    """

    dual: int
    triangulated: int
    red_boundary: int
    blue_boundary: int
    dual_faces: int
    red_vertices: int

    @property
    def consistent(self) -> bool:
        """Check that all Euler characteristics agree and that faces of the
        dual graph match the red boundary vertices."""
        return (
            self.dual
            == self.triangulated
            == self.red_boundary
            == self.blue_boundary
            and self.dual_faces == self.red_vertices
        )

    def values(self) -> Tuple[int, int, int]:
        """Triple (dual graph, red boundary, blue boundary)."""
        return (self.dual, self.red_boundary, self.blue_boundary)


def euler_identity_check(K: CausalSlice) -> EulerReport:
    """Compute the Euler characteristic of a midsection in two ways.

    Parameters
    ----------
    K :
        Three-dimensional (generalized) slice.

    Returns
    -------
    :
        Euler characteristics of the midsection (through the red dual graph
        and through its triangulation) and of both boundary components. A
        mismatch is reported, not raised.
    """
    if K.dimension != 3:
        raise ParamError("Euler identity applies to 3-dimensional slices")
    S = midsection(K)
    graph = dual_graph(S, Colour.RED)
    triangles, _ = S.triangulate()
    return EulerReport(
        dual=graph.euler_characteristic,
        triangulated=alternating_count(triangles),
        red_boundary=K.red_boundary.euler_characteristic(),
        blue_boundary=K.blue_boundary.euler_characteristic(),
        dual_faces=graph.num_faces,
        red_vertices=len(K.red_boundary.vertices),
    )
