#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Built-in complexes shared by tests, documentation and the CLI."""

from itertools import combinations
from typing import Dict, Optional, Sequence, Union

import numpy as np

from .colour import Colour
from .complex import ColouredComplex
from .exceptions import ParamError
from .midsection import Cell, CellKind, MidsectionComplex


def _red(dimension: int, simplices) -> ColouredComplex:
    simplices = [frozenset(s) for s in simplices]
    vertices = set().union(*simplices)
    return ColouredComplex(
        dimension, {v: Colour.RED for v in vertices}, simplices
    )


def tetrahedron_boundary() -> ColouredComplex:
    """Boundary :math:`\\Sigma_T` of a tetrahedron (4 triangles)."""
    return simplex_boundary(3)


def simplex_boundary(n: int) -> ColouredComplex:
    """Boundary of the ``n``-simplex on vertices ``0, ..., n``.

    For instance ``simplex_boundary(4)`` is the 3-sphere made of five
    tetrahedra.
    """
    if n < 2:
        raise ParamError(f"simplex boundary needs n >= 2, got {n}")
    return _red(n - 1, combinations(range(n + 1), n))


def octahedron() -> ColouredComplex:
    """Boundary of the octahedron: 8 triangles, all vertices of degree 4.

    Antipodal vertices are ``(0, 1)``, ``(2, 3)`` and ``(4, 5)``.
    """
    return _red(
        2,
        [
            (x, y, z)
            for x in (0, 1)
            for y in (2, 3)
            for z in (4, 5)
        ],
    )


def torus() -> ColouredComplex:
    """Seven-vertex torus with 21 edges and 14 triangles."""
    triangles = []
    for i in range(7):
        triangles.append((i, (i + 1) % 7, (i + 3) % 7))
        triangles.append((i, (i + 2) % 7, (i + 3) % 7))
    return _red(2, triangles)


def pinched_edge() -> ColouredComplex:
    """Two tetrahedra sharing exactly one edge ``{0, 1}``."""
    return ColouredComplex(
        3,
        {
            0: Colour.RED,
            1: Colour.BLUE,
            2: Colour.RED,
            3: Colour.BLUE,
            4: Colour.RED,
            5: Colour.BLUE,
        },
        [(0, 1, 2, 3), (0, 1, 4, 5)],
    )


def stellar_subdivision(
    sigma: ColouredComplex, triangle: Sequence[int]
) -> ColouredComplex:
    """Insert a new vertex of degree three inside a triangle.

    Parameters
    ----------
    sigma :
        Surface complex.
    triangle :
        Triangle of ``sigma`` to subdivide.

    Returns
    -------
    :
        Surface where the triangle is replaced by three triangles around a
        new red vertex whose id follows the largest id of ``sigma``.
    """
    triangle = frozenset(triangle)
    if triangle not in sigma.maximal_simplices:
        raise ParamError(
            f"{sorted(triangle)} is not a triangle of the complex"
        )
    apex = max(sigma.vertices) + 1
    simplices = [s for s in sigma.maximal_simplices if s != triangle]
    simplices += [triangle - {v} | {apex} for v in triangle]
    colours = dict(sigma.colours)
    colours[apex] = Colour.RED
    return ColouredComplex(2, colours, simplices)


def random_sphere(
    steps: int, rng: Optional[np.random.Generator] = None
) -> ColouredComplex:
    """Random 2-sphere grown by stellar subdivisions of :math:`\\Sigma_T`.

    Parameters
    ----------
    steps :
        Number of subdivisions, each adding one vertex and two triangles.
    rng :
        Random generator, seeded with 0 when missing.

    Returns
    -------
    :
        Sphere with :math:`4 + 2 \\cdot \\text{steps}` triangles and a vertex
        of degree three (the last one inserted).
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    sphere = tetrahedron_boundary()
    for _ in range(steps):
        triangles = sorted(sphere.maximal_simplices, key=sorted)
        choice = triangles[int(rng.integers(len(triangles)))]
        sphere = stellar_subdivision(sphere, choice)
    return sphere


def _quadrangle(a: int, b: int, c: int, d: int) -> Cell:
    slots = CellKind.QUADRANGLE.slots
    return Cell.from_slots(CellKind.QUADRANGLE, dict(zip(slots, (a, b, c, d))))


def _red_triangle(a: int, b: int, c: int) -> Cell:
    return Cell(CellKind.RED_TRIANGLE, tuple(sorted((a, b, c))))


def obstruction_midsection() -> MidsectionComplex:
    """Coloured 2-sphere that is not the midsection of any slice.

    Two copies of a disc are glued along their boundary. The disc has
    corners ``A = 0``, ``B = 1``, ``P = 2``, ``Q = 3`` on its boundary and
    ``C``, ``D`` inside; its boundary runs along the red edges ``AP``,
    ``PB`` and the blue edges ``BQ``, ``QA``. The corners ``A`` and ``B``
    are then joined by both a red path and a blue path.
    """
    a, b, p, q = 0, 1, 2, 3
    cells = []
    for c, d in ((4, 5), (6, 7)):
        cells += [
            _red_triangle(a, p, c),
            _red_triangle(p, b, c),
            _quadrangle(a, c, d, q),
            _quadrangle(c, b, q, d),
        ]
    return MidsectionComplex(2, cells)


def pillow_midsection() -> MidsectionComplex:
    """Two quadrangles glued along their whole boundary.

    Both cells yield the same tetrahedron when rebuilding a slice.
    """
    cell = _quadrangle(0, 1, 2, 3)
    return MidsectionComplex(2, [cell, cell])


def corpus() -> Dict[str, Union[ColouredComplex, MidsectionComplex]]:
    """Built-in fixtures by file stem."""
    return {
        "sigma_t": tetrahedron_boundary(),
        "octahedron": octahedron(),
        "torus7": torus(),
        "simplex4_boundary": simplex_boundary(4),
        "obstruction": obstruction_midsection(),
    }
