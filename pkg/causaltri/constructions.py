#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Explicit constructions of causal slices and triangulations."""

from typing import Dict, List, Optional, Sequence

from .causal import (
    CausalSlice,
    CausalTriangulation,
    reverse_slice,
    stack_slices,
    validate_slice,
)
from .colour import Colour
from .complex import ColouredComplex
from .exceptions import ConstructionError, ParamError, SurfaceError
from .topology import classify_surface, closed_manifold_check


def prism_slice(
    sigma: ColouredComplex, vertex_order: Optional[Sequence[int]] = None
) -> CausalSlice:
    """Staircase triangulation of the product of a manifold with an interval.

    Parameters
    ----------
    sigma :
        Closed connected orientable :math:`(D-1)`-manifold.
    vertex_order :
        Total order on the vertices of ``sigma``, ascending ids by default.

    Returns
    -------
    :
        Slice whose red and blue boundaries are copies of ``sigma``. Vertex
        number ``i`` in the order becomes red vertex ``i`` and blue vertex
        ``n + i``. Each :math:`(D-1)`-simplex :math:`v_0 < \\dots <
        v_{D-1}` yields the :math:`D` simplices :math:`\\{v_0, \\dots, v_i,
        v_i', \\dots, v_{D-1}'\\}`.

    Raises
    ------
    ConstructionError
        If ``sigma`` is not a closed connected orientable manifold.
    ParamError
        If ``vertex_order`` is not a permutation of the vertices.
    """
    report = closed_manifold_check(sigma)
    if not report:
        raise ConstructionError(
            f"prism base is not a closed manifold: {report.reason}"
        )
    order = list(vertex_order) if vertex_order is not None else None
    if order is None:
        order = list(sigma.vertices)
    elif sorted(order) != list(sigma.vertices):
        raise ParamError("vertex order is not a permutation of the vertices")
    n = len(order)
    rank = {v: i for i, v in enumerate(order)}
    colours: Dict[int, Colour] = {}
    for i in range(n):
        colours[i] = Colour.RED
        colours[n + i] = Colour.BLUE
    simplices: List[List[int]] = []
    for base in sigma.maximal_simplices:
        ranks = sorted(rank[v] for v in base)
        for i in range(len(ranks)):
            simplices.append(ranks[: i + 1] + [n + r for r in ranks[i:]])
    K = ColouredComplex(sigma.dimension + 1, colours, simplices)
    return validate_slice(K, require_sphere_boundaries=False)


def degree_three_vertex(sigma: ColouredComplex) -> Optional[int]:
    """Least vertex of degree three in a surface, if any."""
    for v in sigma.vertices:
        if len(sigma.link({v})) == 3:
            return v
    return None


def cone_slice(sigma: ColouredComplex) -> CausalSlice:
    """Causal slice between a 2-sphere and the boundary of a tetrahedron.

    The slice is the cone over ``sigma`` from a new blue apex ``a``, in which
    the three tetrahedra around a degree-three vertex ``0`` are replaced by
    thirteen tetrahedra: with ``1, 2, 3`` the neighbours of ``0`` and ``b, c,
    d`` three further blue vertices,

    - (3,1): ``b023``, ``c013``, ``d012``;
    - (1,3): ``acd1``, ``abd2``, ``abc3``, ``bcd0``;
    - (2,2): ``cd01``, ``bd02``, ``bc03``, ``ac13``, ``ad12``, ``ab23``.

    Parameters
    ----------
    sigma :
        Triangulated 2-sphere with a vertex of degree three.

    Returns
    -------
    :
        Slice with red boundary ``sigma`` and blue boundary the boundary of
        the tetrahedron ``abcd``, of volume :math:`|\\Sigma| + 10`. Blue
        vertices ``a, b, c, d`` get the ids following the largest vertex id
        of ``sigma``.

    Raises
    ------
    ConstructionError
        If ``sigma`` is not a 2-sphere or has no vertex of degree three.
        Spheres whose vertices all have degree four or more are not
        supported.
    """
    if sigma.dimension != 2:
        raise ConstructionError(
            f"cone base should be a surface, got dimension {sigma.dimension}"
        )
    try:
        surface = classify_surface(sigma)
    except SurfaceError as exn:
        raise ConstructionError(f"cone base is not a sphere: {exn}") from exn
    if not surface.is_sphere:
        raise ConstructionError(
            f"cone base has genus {surface.genus}, expected a sphere"
        )
    zero = degree_three_vertex(sigma)
    if zero is None:
        raise ConstructionError(
            "cone base has no vertex of degree 3 (the degree 4 and 5 "
            "variants are not implemented)"
        )
    one, two, three = sorted(set().union(*sigma.link({zero})))
    top = max(sigma.vertices)
    a, b, c, d = top + 1, top + 2, top + 3, top + 4
    colours = {v: Colour.RED for v in sigma.vertices}
    colours.update({x: Colour.BLUE for x in (a, b, c, d)})
    simplices = [
        triangle | {a}
        for triangle in sigma.maximal_simplices
        if zero not in triangle
    ]
    simplices += [
        {b, zero, two, three},
        {c, zero, one, three},
        {d, zero, one, two},
        {a, c, d, one},
        {a, b, d, two},
        {a, b, c, three},
        {b, c, d, zero},
        {c, d, zero, one},
        {b, d, zero, two},
        {b, c, zero, three},
        {a, c, one, three},
        {a, d, one, two},
        {a, b, two, three},
    ]
    K = ColouredComplex(3, colours, simplices)
    return validate_slice(K, require_sphere_boundaries=True)


def connecting_triangulation(
    sigma_in: ColouredComplex, sigma_out: ColouredComplex
) -> CausalTriangulation:
    """Two-slice triangulation between any two 2-spheres with a degree-three
    vertex.

    Parameters
    ----------
    sigma_in :
        In-boundary.
    sigma_out :
        Out-boundary.

    Returns
    -------
    :
        Triangulation of volume :math:`|\\Sigma_{in}| + |\\Sigma_{out}| + 20`
        glued along the boundary of a tetrahedron.
    """
    first = cone_slice(sigma_in)
    second = reverse_slice(cone_slice(sigma_out))
    return stack_slices([first, second])
