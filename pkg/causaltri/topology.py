#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Combinatorial surface and manifold recognition.

Every check in this module is a link condition on the abstract complex: no
geometric embedding is ever computed.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, Optional

import networkx as nx

from .complex import ColouredComplex, Simplex, alternating_count, faces
from .exceptions import ComplexError, SurfaceError


@dataclass(frozen=True)
class SurfaceClass:
    """Classification of a closed connected orientable surface.

    Attributes
    ----------
    genus :
        Genus :math:`g`, zero for spheres.
    closed :
        Always True on a successful classification (every edge lies in two
        triangles).
    euler_characteristic :
        Euler characteristic :math:`\\chi = 2 - 2 g`.
    """

    genus: int
    closed: bool
    euler_characteristic: int

    @property
    def is_sphere(self) -> bool:
        """Check whether the surface is a 2-sphere."""
        return self.genus == 0


@dataclass(frozen=True)
class ManifoldReport:
    """Outcome of a manifold check.

    Attributes
    ----------
    passed :
        True if every condition holds.
    reason :
        Description of the first violated condition, ``None`` on success.
    simplex :
        First violating simplex, when the violation is local.
    """

    passed: bool
    reason: Optional[str] = None
    simplex: Optional[Simplex] = None

    def __bool__(self) -> bool:
        return self.passed

    @staticmethod
    def failure(
        reason: str, simplex: Optional[Iterable[int]] = None
    ) -> "ManifoldReport":
        """Report for a failed check."""
        return ManifoldReport(
            False, reason, frozenset(simplex) if simplex is not None else None
        )


def _sorted_simplices(simplices: Iterable[Simplex]):
    return sorted(simplices, key=lambda s: sorted(s))


def _is_cycle_or_path(edges: Iterable[Simplex]) -> Optional[str]:
    """Check whether a family of edges forms one cycle or one path.

    Returns
    -------
    :
        ``"cycle"`` or ``"path"``, or ``None`` if the edges form neither.
    """
    graph = nx.Graph()
    graph.add_edges_from(tuple(edge) for edge in edges)
    if graph.number_of_nodes() == 0 or not nx.is_connected(graph):
        return None
    degrees = [d for _, d in graph.degree()]
    if max(degrees) > 2:
        return None
    if all(d == 2 for d in degrees):
        return "cycle"
    return "path"


def orient(K: ColouredComplex) -> Dict[Simplex, int]:
    """Coherently orient the maximal simplices of a pure complex.

    Each maximal simplex is oriented relative to the ascending order of its
    vertices by a sign :math:`\\pm 1`. Orientations are propagated across
    shared codimension-one faces so that the two simplices on a face induce
    opposite orientations on it.

    Parameters
    ----------
    K :
        Pure complex whose codimension-one faces lie in at most two maximal
        simplices.

    Returns
    -------
    :
        Map from maximal simplices to orientation signs.

    Raises
    ------
    ComplexError
        If a codimension-one face is shared by more than two simplices, or
        if no coherent orientation exists.
    """

    def induced(simplex: Simplex, face: Simplex, sign: int) -> int:
        (missing,) = simplex - face
        position = sorted(simplex).index(missing)
        return sign * (-1) ** position

    signs: Dict[Simplex, int] = {}
    for face, sims in K.cofaces.items():
        if len(sims) > 2:
            raise ComplexError(
                f"face {sorted(face)} lies in {len(sims)} maximal simplices"
            )
    for root in _sorted_simplices(K.maximal_simplices):
        if root in signs:
            continue
        signs[root] = 1
        queue = deque([root])
        while queue:
            simplex = queue.popleft()
            for v in sorted(simplex):
                face = simplex - {v}
                for other in K.cofaces[face]:
                    if other == simplex:
                        continue
                    wanted = -induced(simplex, face, signs[simplex])
                    sign = wanted * induced(other, face, 1)
                    if other not in signs:
                        signs[other] = sign
                        queue.append(other)
                    elif signs[other] != sign:
                        raise ComplexError(
                            "complex is not orientable: incoherent "
                            f"orientation across face {sorted(face)}"
                        )
    return signs


def is_orientable(K: ColouredComplex) -> bool:
    """Check whether a pseudomanifold admits a coherent orientation."""
    try:
        orient(K)
    except ComplexError:
        return False
    return True


def classify_surface(K: ColouredComplex) -> SurfaceClass:
    """Classify a closed connected orientable surface.

    Parameters
    ----------
    K :
        Complex of dimension 2.

    Returns
    -------
    :
        Genus computed from :math:`\\chi = 2 - 2 g`.

    Raises
    ------
    SurfaceError
        If the complex is not 2-dimensional, is empty or disconnected, if an
        edge does not lie in exactly two triangles, if a vertex link is not a
        single cycle, or if the surface is not orientable.
    """
    if K.dimension != 2:
        raise SurfaceError(
            f"surfaces are 2-dimensional, got dimension {K.dimension}"
        )
    if K.is_empty:
        raise SurfaceError("empty complex is not a surface")
    for edge, triangles in sorted(
        K.cofaces.items(), key=lambda item: sorted(item[0])
    ):
        if len(triangles) != 2:
            raise SurfaceError(
                f"edge {sorted(edge)} lies in {len(triangles)} triangles, "
                "surface is not closed"
            )
    for v in K.vertices:
        if _is_cycle_or_path(K.link({v})) != "cycle":
            raise SurfaceError(f"link of vertex {v} is not a cycle")
    if not K.is_connected():
        raise SurfaceError("surface is not connected")
    try:
        orient(K)
    except ComplexError as exn:
        raise SurfaceError(str(exn)) from exn
    chi = K.euler_characteristic()
    return SurfaceClass(
        genus=(2 - chi) // 2, closed=True, euler_characteristic=chi
    )


def _vertex_link_report(
    K: ColouredComplex, v: int, on_boundary: bool
) -> Optional[str]:
    link = K.link({v})
    link_edges = faces(link, 1)
    graph = nx.Graph()
    graph.add_nodes_from(u for simplex in link for u in simplex)
    graph.add_edges_from(tuple(edge) for edge in link_edges)
    if not nx.is_connected(graph):
        return "vertex link is disconnected"
    chi = alternating_count(link)
    incidence: Dict[Simplex, int] = {}
    for triangle in link:
        for u in triangle:
            face = triangle - {u}
            incidence[face] = incidence.get(face, 0) + 1
    free = [edge for edge, n in incidence.items() if n == 1]
    if any(n > 2 for n in incidence.values()):
        return "vertex link is not a surface"
    if on_boundary:
        if chi != 1:
            return f"boundary vertex link has Euler characteristic {chi}"
        if _is_cycle_or_path(free) != "cycle":
            return "boundary vertex link is not a disc"
    else:
        if free:
            return "interior vertex link has a boundary"
        if chi != 2:
            return f"interior vertex link has Euler characteristic {chi}"
    return None


def check_manifold_3d(K: ColouredComplex) -> ManifoldReport:
    """Check the combinatorial 3-manifold conditions.

    The conditions are checked in order: every triangle lies in at most two
    tetrahedra, the complex is connected, the link of every edge is a cycle
    or a path, and the link of every vertex is a 2-sphere (interior vertex)
    or a disc (boundary vertex).

    Parameters
    ----------
    K :
        Complex of dimension 3.

    Returns
    -------
    :
        Report carrying the first violating simplex on failure.
    """
    if K.dimension != 3:
        return ManifoldReport.failure(
            f"expected dimension 3, got {K.dimension}"
        )
    if K.is_empty:
        return ManifoldReport.failure("complex is empty")
    for triangle, tets in sorted(
        K.cofaces.items(), key=lambda item: sorted(item[0])
    ):
        if len(tets) > 2:
            return ManifoldReport.failure(
                f"triangle lies in {len(tets)} tetrahedra", triangle
            )
    if not K.is_connected():
        return ManifoldReport.failure("complex is disconnected")
    for edge in _sorted_simplices(K.simplices(1)):
        if _is_cycle_or_path(K.link(edge)) is None:
            return ManifoldReport.failure(
                "edge link is neither a cycle nor a path", edge
            )
    boundary_vertices = set().union(*K.boundary().maximal_simplices)
    for v in K.vertices:
        reason = _vertex_link_report(K, v, v in boundary_vertices)
        if reason is not None:
            return ManifoldReport.failure(reason, {v})
    return ManifoldReport(True)


def check_pseudomanifold(K: ColouredComplex) -> ManifoldReport:
    """Check the pseudomanifold conditions in any dimension.

    Codimension-one faces must lie in at most two maximal simplices, the
    complex must be connected and orientable, and the link of every vertex
    must have the Euler characteristic of a sphere (interior vertex) or a
    ball (boundary vertex). Full sphere recognition of links is not
    attempted.

    Parameters
    ----------
    K :
        Pure complex of dimension at least 1.

    Returns
    -------
    :
        Report carrying the first violating simplex on failure.
    """
    if K.is_empty:
        return ManifoldReport.failure("complex is empty")
    for face, sims in sorted(
        K.cofaces.items(), key=lambda item: sorted(item[0])
    ):
        if len(sims) > 2:
            return ManifoldReport.failure(
                f"face lies in {len(sims)} maximal simplices", face
            )
    if not K.is_connected():
        return ManifoldReport.failure("complex is disconnected")
    if not is_orientable(K):
        return ManifoldReport.failure("complex is not orientable")
    d = K.dimension - 1
    sphere_chi = 1 + (-1) ** d
    boundary_vertices = set().union(*K.boundary().maximal_simplices)
    for v in K.vertices:
        chi = alternating_count(K.link({v}))
        expected = 1 if v in boundary_vertices else sphere_chi
        if chi != expected:
            return ManifoldReport.failure(
                f"vertex link has Euler characteristic {chi}, "
                f"expected {expected}",
                {v},
            )
    return ManifoldReport(True)


def is_closed_surface(K: ColouredComplex) -> bool:
    """Check whether :func:`classify_surface` accepts a complex."""
    try:
        classify_surface(K)
    except SurfaceError:
        return False
    return True


def closed_manifold_check(K: ColouredComplex) -> ManifoldReport:
    """Check that a complex is a closed connected orientable manifold.

    Surfaces go through :func:`classify_surface`; higher dimensions use
    :func:`check_pseudomanifold` plus the requirement of an empty boundary.
    """
    if K.dimension == 2:
        try:
            classify_surface(K)
        except SurfaceError as exn:
            return ManifoldReport.failure(str(exn))
        return ManifoldReport(True)
    if K.dimension == 1:
        if _is_cycle_or_path(K.maximal_simplices) != "cycle":
            return ManifoldReport.failure("1-complex is not a single cycle")
        return ManifoldReport(True)
    report = check_pseudomanifold(K)
    if report and not K.boundary().is_empty:
        return ManifoldReport.failure("complex has a boundary")
    return report

