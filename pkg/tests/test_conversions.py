#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Unit tests for conversions between midsections and black-edge complexes."""

import unittest

from causaltri import (
    Cell,
    CellKind,
    ComplexError,
    EdgeColour,
    EdgeColouredComplex,
    MidsectionComplex,
    ParamError,
    SubdivisionError,
    midsection,
    prism_slice,
)
from causaltri.conversions import (
    reassemble_4d,
    subdivide_4d,
    triangulate_quadrangles,
)
from causaltri.fixtures import (
    pillow_midsection,
    simplex_boundary,
    tetrahedron_boundary,
)

R, B, K = EdgeColour.RED, EdgeColour.BLUE, EdgeColour.BLACK


def single_prism() -> MidsectionComplex:
    return MidsectionComplex(3, [Cell(CellKind.RED_PRISM, (0, 1, 2, 3, 4, 5))])


def tetrahedron(colours) -> EdgeColouredComplex:
    """Tetrahedron 0123 with edge colours listed as 01, 02, 03, 12, 13, 23.
    """
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    return EdgeColouredComplex(
        3, [(0, 1, 2, 3)], {frozenset(e): c for e, c in zip(edges, colours)}
    )


class TestTriangulateQuadrangles(unittest.TestCase):
    """Test fixture for splitting the quadrangles of a surface midsection."""

    def test_prism_midsection(self):
        S = midsection(prism_slice(tetrahedron_boundary()))
        T = triangulate_quadrangles(S)
        self.assertEqual(len(T.simplices), 20)
        counts = T.colour_counts()
        self.assertEqual(counts[K], 4)
        self.assertEqual(counts[R] + counts[B], 20)

    def test_pillow(self):
        """Both quadrangles of a pillow split into the same triangles."""
        with self.assertRaises(ComplexError):
            triangulate_quadrangles(pillow_midsection())

    def test_three_dimensional(self):
        with self.assertRaises(ParamError):
            triangulate_quadrangles(single_prism())


class TestSubdivide4d(unittest.TestCase):
    """Test fixture for splitting prisms into tetrahedra."""

    def test_single_prism(self):
        T = subdivide_4d(single_prism())
        self.assertEqual(len(T.simplices), 3)
        black = T.black_edges()
        self.assertEqual(len(black), 3)
        for tet in T.simplices:
            self.assertIn(frozenset({0, 5}), [e for e in black if e <= tet])

    def test_prism_over_simplex_boundary(self):
        S = midsection(prism_slice(simplex_boundary(4)))
        T = subdivide_4d(S)
        self.assertEqual(len(T.simplices), 40)
        self.assertEqual(len(T.black_edges()), 15)

    def test_surface(self):
        with self.assertRaises(ParamError):
            subdivide_4d(pillow_midsection())


class TestReassemble4d(unittest.TestCase):
    """Test fixture for rebuilding prisms from black edges."""

    def test_single_prism(self):
        S = single_prism()
        rebuilt = reassemble_4d(subdivide_4d(S))
        self.assertEqual(rebuilt.cells, S.cells)

    def test_prism_over_simplex_boundary(self):
        S = midsection(prism_slice(simplex_boundary(4)))
        rebuilt = reassemble_4d(subdivide_4d(S))
        self.assertEqual(rebuilt.kind_counts(), S.kind_counts())
        self.assertEqual(rebuilt.canonical_form(), S.canonical_form())

    def test_tetrahedra_only(self):
        S = MidsectionComplex(3, [Cell(CellKind.BLUE_TET, (0, 1, 2, 3))])
        rebuilt = reassemble_4d(subdivide_4d(S))
        self.assertEqual(rebuilt.canonical_form(), S.canonical_form())

    def test_black_triangle(self):
        with self.assertRaises(SubdivisionError):
            reassemble_4d(tetrahedron([K, K, R, K, R, R]))

    def test_mixed_isolated_tetrahedron(self):
        with self.assertRaises(SubdivisionError):
            reassemble_4d(tetrahedron([R, R, B, R, B, B]))

    def test_lonely_black_edge(self):
        with self.assertRaises(SubdivisionError):
            reassemble_4d(tetrahedron([K, R, R, R, R, R]))
