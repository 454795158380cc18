#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Unit tests for coloured complexes and their topology."""

import pickle
import unittest

import numpy as np

from causaltri import (
    Colour,
    ColouredComplex,
    ComplexError,
    SurfaceError,
    boundary,
    build_complex,
    canonical_form,
    check_manifold_3d,
    check_pseudomanifold,
    classify_surface,
    closed_manifold_check,
    cone_slice,
    euler_characteristic,
    find_isomorphism,
    prism_slice,
)
from causaltri.fixtures import (
    octahedron,
    pinched_edge,
    simplex_boundary,
    tetrahedron_boundary,
    torus,
)
from causaltri.topology import is_orientable, orient

R, B = Colour.RED, Colour.BLUE


def single_tetrahedron(*colours: Colour) -> ColouredComplex:
    return build_complex(3, dict(enumerate(colours)), [(0, 1, 2, 3)])


class TestBuildComplex(unittest.TestCase):
    """Test fixture for building complexes."""

    def test_single_tetrahedron(self):
        K = single_tetrahedron(R, R, R, B)
        self.assertEqual(K.f_vector, (4, 6, 4, 1))
        self.assertEqual(K.volume, 1)

    def test_tetrahedron_boundary(self):
        sigma = tetrahedron_boundary()
        self.assertEqual(sigma.f_vector, (4, 6, 4))

    def test_repeated_vertex(self):
        with self.assertRaises(ComplexError):
            build_complex(3, {0: R, 1: R, 2: B}, [(0, 1, 1, 2)])

    def test_wrong_size(self):
        with self.assertRaises(ComplexError):
            build_complex(3, {0: R, 1: R, 2: B}, [(0, 1, 2)])

    def test_undeclared_vertex(self):
        with self.assertRaises(ComplexError):
            build_complex(2, {0: R, 1: R}, [(0, 1, 2)])

    def test_isolated_vertex(self):
        with self.assertRaises(ComplexError):
            build_complex(2, {0: R, 1: R, 2: R, 3: R}, [(0, 1, 2)])

    def test_empty_complex(self):
        with self.assertRaises(ComplexError):
            build_complex(2, {}, [])

    def test_multi_complex_rejected(self):
        """Two triangles on the same three vertices are a multi-complex."""
        with self.assertRaises(ComplexError):
            build_complex(2, {0: R, 1: R, 2: R}, [(0, 1, 2), (2, 1, 0)])

    def test_link_and_star(self):
        sigma = octahedron()
        self.assertEqual(len(sigma.star({0})), 4)
        link = sigma.link({0})
        self.assertEqual({v for edge in link for v in edge}, {2, 3, 4, 5})
        expected = frozenset({frozenset({4}), frozenset({5})})
        self.assertEqual(sigma.link({0, 2}), expected)

    def test_pickle(self):
        K = prism_slice(tetrahedron_boundary()).complex
        self.assertEqual(pickle.loads(pickle.dumps(K)), K)


class TestBoundary(unittest.TestCase):
    """Test fixture for boundaries and Euler characteristics."""

    def test_tetrahedron(self):
        K = single_tetrahedron(R, R, B, B)
        components = boundary(K).connected_components()
        self.assertEqual(len(components), 1)
        self.assertEqual(components[0].volume, 4)

    def test_closed_sphere(self):
        self.assertTrue(boundary(simplex_boundary(4)).is_empty)

    def test_prism_components(self):
        K = prism_slice(tetrahedron_boundary()).complex
        components = boundary(K).connected_components()
        self.assertEqual(len(components), 2)
        self.assertEqual([c.volume for c in components], [4, 4])

    def test_euler_characteristic(self):
        self.assertEqual(euler_characteristic(tetrahedron_boundary()), 2)
        self.assertEqual(euler_characteristic(simplex_boundary(4)), 0)
        self.assertEqual(euler_characteristic(torus()), 0)
        self.assertEqual(torus().f_vector, (7, 21, 14))


class TestSurfaces(unittest.TestCase):
    """Test fixture for surface classification."""

    def test_sphere(self):
        surface = classify_surface(tetrahedron_boundary())
        self.assertEqual(surface.genus, 0)
        self.assertTrue(surface.is_sphere)
        self.assertTrue(surface.closed)

    def test_torus(self):
        surface = classify_surface(torus())
        self.assertEqual(surface.genus, 1)
        self.assertEqual(surface.euler_characteristic, 0)

    def test_disc_is_not_closed(self):
        disc = build_complex(2, {0: R, 1: R, 2: R}, [(0, 1, 2)])
        with self.assertRaises(SurfaceError):
            classify_surface(disc)

    def test_wrong_dimension(self):
        with self.assertRaises(SurfaceError):
            classify_surface(simplex_boundary(4))

    def test_orientation(self):
        sigma = octahedron()
        signs = orient(sigma)
        self.assertEqual(set(signs), set(sigma.maximal_simplices))
        self.assertTrue(is_orientable(torus()))


class TestManifolds(unittest.TestCase):
    """Test fixture for manifold checks."""

    def test_ball(self):
        self.assertTrue(check_manifold_3d(single_tetrahedron(R, R, R, B)))

    def test_pinched_edge(self):
        report = check_manifold_3d(pinched_edge())
        self.assertFalse(report)
        self.assertEqual(report.simplex, frozenset({0, 1}))

    def test_cone_slice(self):
        K = cone_slice(tetrahedron_boundary()).complex
        self.assertEqual(K.volume, 14)
        self.assertTrue(check_manifold_3d(K))

    def test_pseudomanifold(self):
        self.assertTrue(check_pseudomanifold(simplex_boundary(4)))
        self.assertTrue(closed_manifold_check(simplex_boundary(4)))
        report = closed_manifold_check(single_tetrahedron(R, R, B, B))
        self.assertFalse(report)


class TestCanonicalForm(unittest.TestCase):
    """Test fixture for canonical forms and isomorphisms."""

    def test_relabelling_invariance(self):
        rng = np.random.default_rng(42)
        K = prism_slice(octahedron()).complex
        for _ in range(5):
            perm = rng.permutation(len(K.vertices))
            mapping = {v: int(perm[i]) + 100 for i, v in enumerate(K.vertices)}
            self.assertEqual(
                canonical_form(K.relabel(mapping)), canonical_form(K)
            )

    def test_colours_matter(self):
        forms = {
            canonical_form(single_tetrahedron(*colours))
            for colours in (
                (R, R, R, B),
                (B, R, R, R),
                (R, R, B, B),
                (B, R, B, R),
                (R, B, B, B),
            )
        }
        self.assertEqual(len(forms), 3)

    def test_uncoloured_form(self):
        K1 = single_tetrahedron(R, R, R, B)
        K2 = single_tetrahedron(R, B, B, B)
        self.assertNotEqual(K1.canonical_form(), K2.canonical_form())
        self.assertEqual(
            K1.canonical_form(respect_colours=False),
            K2.canonical_form(respect_colours=False),
        )

    def test_find_isomorphism(self):
        sigma = octahedron()
        mapping = {v: (v + 3) % 6 for v in sigma.vertices}
        image = sigma.relabel(mapping)
        iso = find_isomorphism(sigma, image)
        self.assertIsNotNone(iso)
        self.assertEqual(sigma.relabel(iso), image)
        self.assertIsNone(find_isomorphism(sigma, tetrahedron_boundary()))
