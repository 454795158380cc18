#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Unit tests for midsections, dual graphs and Euler characteristics."""

import unittest

import numpy as np

from causaltri import (
    Cell,
    CellKind,
    Colour,
    ComplexError,
    MidsectionComplex,
    ParamError,
    SurfaceError,
    cone_slice,
    dual_graph,
    euler_identity_check,
    midsection,
    orient_cells,
    prism_slice,
)
from causaltri.fixtures import (
    obstruction_midsection,
    pillow_midsection,
    random_sphere,
    simplex_boundary,
    tetrahedron_boundary,
    torus,
)


def prism_midsection() -> MidsectionComplex:
    return midsection(prism_slice(tetrahedron_boundary()))


class TestCellKind(unittest.TestCase):
    """Test fixture for cell kinds and their corner tables."""

    def test_shapes(self):
        self.assertEqual(CellKind.of_type(2, 2), CellKind.QUADRANGLE)
        self.assertEqual(CellKind.of_type(3, 2), CellKind.RED_PRISM)
        self.assertEqual(CellKind.RED_TET.dimension, 3)
        self.assertEqual(CellKind.BLUE_TRIANGLE.dimension, 2)
        with self.assertRaises(ParamError):
            CellKind.of_type(2, 4)

    def test_edge_tokens(self):
        self.assertEqual(CellKind.RED_TRIANGLE.edge_tokens, "RRR")
        self.assertEqual(CellKind.BLUE_TRIANGLE.edge_tokens, "BBB")
        self.assertEqual(CellKind.QUADRANGLE.edge_tokens, "RBRB")
        self.assertEqual(CellKind.RED_PRISM.edge_tokens, "RRBRBBRRR")

    def test_colours(self):
        self.assertEqual(CellKind.RED_TRIANGLE.colour, Colour.RED)
        self.assertEqual(CellKind.BLUE_TET.colour, Colour.BLUE)
        self.assertIsNone(CellKind.QUADRANGLE.colour)
        self.assertEqual(CellKind.BLUE_PRISM.face_colour, Colour.BLUE)


class TestCell(unittest.TestCase):
    """Test fixture for midsection cells."""

    def test_from_slots(self):
        slot_map = {(0, 0): 5, (1, 0): 2, (1, 1): 7, (0, 1): 3}
        cell = Cell.from_slots(CellKind.QUADRANGLE, slot_map)
        self.assertEqual(cell.corners, (2, 5, 3, 7))
        self.assertEqual(
            sorted(tuple(sorted(d)) for d in cell.diagonals()),
            [(2, 3), (5, 7)],
        )

    def test_wrong_corner_count(self):
        with self.assertRaises(ComplexError):
            Cell(CellKind.RED_TRIANGLE, (0, 1))

    def test_repeated_corner(self):
        with self.assertRaises(ComplexError):
            Cell(CellKind.RED_TRIANGLE, (0, 0, 1))

    def test_prism_faces(self):
        cell = Cell(CellKind.RED_PRISM, (0, 1, 2, 3, 4, 5))
        faces = cell.faces()
        self.assertEqual(len(faces), 5)
        self.assertIn(frozenset({0, 1, 2}), faces)
        self.assertIn(frozenset({0, 1, 3, 4}), faces)


class TestMidsectionComplex(unittest.TestCase):
    """Test fixture for midsection complexes."""

    def test_prism_counts(self):
        S = prism_midsection()
        counts = S.kind_counts()
        self.assertEqual(counts[CellKind.RED_TRIANGLE], 4)
        self.assertEqual(counts[CellKind.BLUE_TRIANGLE], 4)
        self.assertEqual(counts[CellKind.QUADRANGLE], 4)
        self.assertEqual(len(S.corners), 10)
        self.assertEqual(len(S.edges()), 20)
        self.assertTrue(S.is_closed())
        self.assertEqual(S.euler_characteristic(), 2)

    def test_origins(self):
        K = prism_slice(tetrahedron_boundary())
        S = midsection(K)
        self.assertEqual(len(S.cell_origin), 12)
        for red, blue in S.corner_origin.values():
            self.assertEqual(K.complex.colours[red], Colour.RED)
            self.assertEqual(K.complex.colours[blue], Colour.BLUE)

    def test_cone_counts(self):
        S = midsection(cone_slice(tetrahedron_boundary()))
        self.assertEqual(S.kind_counts()[CellKind.QUADRANGLE], 6)
        self.assertEqual(len(S.cells), 14)

    def test_torus_counts(self):
        S = midsection(prism_slice(torus()))
        self.assertEqual(set(S.kind_counts().values()), {14})
        self.assertEqual(S.euler_characteristic(), 0)

    def test_four_dimensional(self):
        S = midsection(prism_slice(simplex_boundary(4)))
        self.assertEqual(S.dimension, 3)
        self.assertEqual(
            S.kind_counts(),
            {
                CellKind.RED_TET: 5,
                CellKind.BLUE_TET: 5,
                CellKind.RED_PRISM: 5,
                CellKind.BLUE_PRISM: 5,
            },
        )
        self.assertTrue(S.is_closed())
        self.assertEqual(S.euler_characteristic(), 0)

    def test_mixed_dimensions(self):
        cell = Cell(CellKind.RED_TET, (0, 1, 2, 3))
        with self.assertRaises(ComplexError):
            MidsectionComplex(2, [cell])

    def test_conflicting_edge_colours(self):
        triangle = Cell(CellKind.RED_TRIANGLE, (0, 1, 2))
        quadrangle = Cell(CellKind.QUADRANGLE, (3, 0, 1, 4))
        with self.assertRaises(ComplexError):
            MidsectionComplex(2, [triangle, quadrangle])

    def test_edge_colour(self):
        S = obstruction_midsection()
        with self.assertRaises(ParamError):
            S.edge_colour(0, 1)

    def test_triangulate(self):
        triangles, diagonals = prism_midsection().triangulate()
        self.assertEqual(len(triangles), 20)
        self.assertEqual(len(diagonals), 4)

    def test_canonical_form(self):
        S = prism_midsection()
        self.assertTrue(S.canonical_form().startswith(b"2:"))
        other = midsection(prism_slice(tetrahedron_boundary(), [3, 2, 1, 0]))
        self.assertEqual(S.canonical_form(), other.canonical_form())


class TestOrientation(unittest.TestCase):
    """Test fixture for coherent orientations of surface midsections."""

    def assertCoherent(self, S):
        darts = [
            (cycle[k], cycle[(k + 1) % len(cycle)])
            for cycle in orient_cells(S)
            for k in range(len(cycle))
        ]
        self.assertEqual(len(darts), len(set(darts)))
        for u, v in darts:
            self.assertIn((v, u), darts)

    def test_prism(self):
        self.assertCoherent(prism_midsection())

    def test_obstruction(self):
        self.assertCoherent(obstruction_midsection())

    def test_pillow(self):
        self.assertCoherent(pillow_midsection())

    def test_open_surface(self):
        S = MidsectionComplex(2, [Cell(CellKind.RED_TRIANGLE, (0, 1, 2))])
        with self.assertRaises(SurfaceError):
            orient_cells(S)


class TestDualGraph(unittest.TestCase):
    """Test fixture for dual graphs of coloured edges."""

    def test_prism(self):
        graph = dual_graph(prism_midsection(), Colour.RED)
        self.assertEqual(graph.num_vertices, 8)
        self.assertEqual(graph.num_edges, 10)
        self.assertEqual(graph.num_faces, 4)
        self.assertEqual(graph.euler_characteristic, 2)
        self.assertEqual(sorted(set(graph.degrees().values())), [2, 3])
        self.assertTrue(graph.is_connected())

    def test_blue(self):
        graph = dual_graph(prism_midsection(), Colour.BLUE)
        self.assertEqual(graph.num_vertices, 8)
        self.assertEqual(graph.num_edges, 10)

    def test_torus(self):
        graph = dual_graph(midsection(prism_slice(torus())), Colour.RED)
        self.assertEqual(graph.euler_characteristic, 0)
        self.assertEqual(graph.num_faces, 7)


class TestEulerIdentity(unittest.TestCase):
    """Test fixture for Euler characteristics computed two ways."""

    def test_prism(self):
        report = euler_identity_check(prism_slice(tetrahedron_boundary()))
        self.assertTrue(report.consistent)
        self.assertEqual(report.values(), (2, 2, 2))
        self.assertEqual(report.dual_faces, 4)

    def test_torus(self):
        report = euler_identity_check(prism_slice(torus()))
        self.assertTrue(report.consistent)
        self.assertEqual(report.values(), (0, 0, 0))
        self.assertEqual(report.red_vertices, 7)

    def test_random_spheres(self):
        rng = np.random.default_rng(7)
        for _ in range(10):
            sigma = random_sphere(int(rng.integers(0, 8)), rng)
            for K in (prism_slice(sigma), cone_slice(sigma)):
                report = euler_identity_check(K)
                self.assertTrue(report.consistent)
                self.assertEqual(report.values(), (2, 2, 2))

    def test_four_dimensional(self):
        with self.assertRaises(ParamError):
            euler_identity_check(prism_slice(simplex_boundary(4)))
