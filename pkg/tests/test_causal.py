#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Unit tests for causal slices, their constructions and gluings."""

import unittest

import numpy as np

from causaltri import (
    Colour,
    ColourError,
    ConstructionError,
    GluingError,
    ParamError,
    SimplexType,
    SliceError,
    build_complex,
    classify_simplex,
    cone_slice,
    connecting_isomorphisms,
    connecting_triangulation,
    find_isomorphism,
    glue_for_subadditivity,
    prism_slice,
    reverse_slice,
    stack_slices,
    validate_slice,
)
from causaltri.fixtures import (
    octahedron,
    random_sphere,
    simplex_boundary,
    stellar_subdivision,
    tetrahedron_boundary,
    torus,
)

R, B = Colour.RED, Colour.BLUE


def octahedron_with_degree_three():
    return stellar_subdivision(octahedron(), (0, 2, 4))


class TestClassifySimplex(unittest.TestCase):
    """Test fixture for simplex types."""

    def test_types(self):
        self.assertEqual(classify_simplex([R, R, R, B]), SimplexType(3, 1))
        self.assertEqual(classify_simplex([R, B, R, B]), SimplexType(2, 2))
        self.assertEqual(str(SimplexType(1, 3)), "(1,3)")
        self.assertEqual(SimplexType(2, 3).dimension, 4)

    def test_mono_coloured(self):
        with self.assertRaises(ColourError):
            classify_simplex([B, B, B, B])


class TestValidateSlice(unittest.TestCase):
    """Test fixture for slice validation."""

    def test_prism_over_sphere(self):
        K = validate_slice(prism_slice(tetrahedron_boundary()).complex)
        self.assertEqual(K.volume, 12)
        self.assertFalse(K.generalized)
        self.assertEqual(K.genus, 0)
        self.assertEqual(K.red_boundary.volume, 4)
        self.assertEqual(K.blue_boundary.volume, 4)

    def test_prism_over_torus(self):
        K = prism_slice(torus())
        self.assertTrue(K.generalized)
        self.assertEqual(K.genus, 1)
        self.assertEqual(K.volume, 42)
        with self.assertRaises(SliceError):
            validate_slice(K.complex)

    def test_single_tetrahedron(self):
        K = build_complex(3, {0: R, 1: R, 2: B, 3: B}, [(0, 1, 2, 3)])
        with self.assertRaises(SliceError):
            validate_slice(K)

    def test_mono_coloured_tetrahedron(self):
        K = build_complex(3, {0: R, 1: R, 2: R, 3: R}, [(0, 1, 2, 3)])
        with self.assertRaises(ColourError):
            validate_slice(K)

    def test_wrong_dimension(self):
        with self.assertRaises(SliceError):
            validate_slice(tetrahedron_boundary())


class TestPrismSlice(unittest.TestCase):
    """Test fixture for staircase prisms."""

    def test_tetrahedron_boundary(self):
        counts = prism_slice(tetrahedron_boundary()).type_counts()
        self.assertEqual(
            counts,
            {SimplexType(3, 1): 4, SimplexType(2, 2): 4, SimplexType(1, 3): 4},
        )

    def test_four_dimensional(self):
        K = prism_slice(simplex_boundary(4))
        self.assertEqual(K.dimension, 4)
        self.assertEqual(K.volume, 20)
        self.assertEqual(set(K.type_counts().values()), {5})
        self.assertEqual(len(K.type_counts()), 4)

    def test_vertex_order(self):
        sigma = octahedron()
        K1 = prism_slice(sigma)
        K2 = prism_slice(sigma, vertex_order=[5, 4, 3, 2, 1, 0])
        self.assertEqual(K1.volume, K2.volume)
        with self.assertRaises(ParamError):
            prism_slice(sigma, vertex_order=[0, 1, 2])

    def test_open_base(self):
        disc = build_complex(2, {0: R, 1: R, 2: R}, [(0, 1, 2)])
        with self.assertRaises(ConstructionError):
            prism_slice(disc)


class TestConeSlice(unittest.TestCase):
    """Test fixture for cones over spheres with a degree-three vertex."""

    def test_tetrahedron_boundary(self):
        K = cone_slice(tetrahedron_boundary())
        self.assertEqual(K.volume, 14)
        self.assertEqual(K.genus, 0)
        self.assertIsNotNone(
            find_isomorphism(
                K.blue_boundary, tetrahedron_boundary(), respect_colours=False
            )
        )

    def test_octahedron(self):
        with self.assertRaises(ConstructionError):
            cone_slice(octahedron())

    def test_torus(self):
        with self.assertRaises(ConstructionError):
            cone_slice(torus())

    def test_random_spheres(self):
        rng = np.random.default_rng(20240)
        for _ in range(20):
            sigma = random_sphere(int(rng.integers(1, 6)), rng)
            K = cone_slice(sigma)
            self.assertEqual(K.volume, sigma.volume + 10)
            self.assertFalse(K.generalized)
            T = connecting_triangulation(sigma, tetrahedron_boundary())
            self.assertEqual(T.volume, sigma.volume + 4 + 20)

    def test_reverse(self):
        K = reverse_slice(cone_slice(octahedron_with_degree_three()))
        self.assertEqual(K.red_boundary.volume, 4)
        self.assertEqual(K.blue_boundary.volume, 10)
        self.assertEqual(validate_slice(K.complex).volume, K.volume)


class TestStacking(unittest.TestCase):
    """Test fixture for causal triangulations."""

    def test_single_slice(self):
        T = stack_slices([prism_slice(tetrahedron_boundary())])
        self.assertEqual(T.num_slices, 1)
        self.assertEqual(T.volume, 12)
        self.assertEqual(T.interface_isos, ())

    def test_two_prisms(self):
        K = prism_slice(tetrahedron_boundary())
        T = stack_slices([K, K])
        self.assertEqual(T.volume, 24)
        self.assertEqual(set(T.layers.values()), {0, 1, 2})
        for sigma in (T.in_boundary, T.out_boundary):
            self.assertIsNotNone(
                find_isomorphism(
                    sigma, tetrahedron_boundary(), respect_colours=False
                )
            )

    def test_two_cones(self):
        sigma = tetrahedron_boundary()
        T = connecting_triangulation(sigma, sigma)
        self.assertEqual(T.num_slices, 2)
        self.assertEqual(T.volume, 28)

    def test_incompatible_boundaries(self):
        with self.assertRaises(GluingError):
            stack_slices(
                [
                    prism_slice(tetrahedron_boundary()),
                    prism_slice(octahedron()),
                ]
            )

    def test_bad_interface_map(self):
        K = prism_slice(tetrahedron_boundary())
        with self.assertRaises(GluingError):
            stack_slices([K, K], [{4: 0, 5: 1, 6: 2}])

    def test_empty(self):
        with self.assertRaises(ParamError):
            stack_slices([])

    def test_connecting_isomorphisms(self):
        sigma = tetrahedron_boundary()
        isos = connecting_isomorphisms(sigma, sigma)
        self.assertEqual(len(isos), 24)
        self.assertEqual(connecting_isomorphisms(sigma, octahedron()), [])

    def test_layered_form(self):
        K = prism_slice(tetrahedron_boundary())
        isos = connecting_isomorphisms(K.blue_boundary, K.red_boundary)
        forms = {stack_slices([K, K], [iso]).canonical_form() for iso in isos}
        self.assertGreater(len(forms), 1)
        self.assertLessEqual(len(forms), 24)


class TestSubadditivityGluing(unittest.TestCase):
    """Test fixture for gluing through a connecting triangulation."""

    def test_volume_and_recovery(self):
        sigma = tetrahedron_boundary()
        T0 = connecting_triangulation(sigma, sigma)
        T1 = stack_slices([prism_slice(sigma)])
        T2 = connecting_triangulation(sigma, sigma)
        glued = glue_for_subadditivity(T1, T0, T2)
        self.assertEqual(glued.volume, 12 + 28 + 28)
        self.assertEqual(glued.num_slices, 5)
        self.assertEqual(
            glued.split(0, 1).canonical_form(), T1.canonical_form()
        )
        self.assertEqual(
            glued.split(3, 5).canonical_form(), T2.canonical_form()
        )

    def test_three_connecting_triangulations(self):
        sigma = tetrahedron_boundary()
        T = connecting_triangulation(sigma, sigma)
        glued = glue_for_subadditivity(T, T, T)
        self.assertEqual(glued.volume, 84)

    def test_mismatched_genus(self):
        sigma = tetrahedron_boundary()
        T0 = connecting_triangulation(sigma, sigma)
        T1 = stack_slices([prism_slice(torus())])
        with self.assertRaises(GluingError):
            glue_for_subadditivity(T1, T0, T1)

    def test_invalid_split(self):
        T = stack_slices([prism_slice(tetrahedron_boundary())])
        with self.assertRaises(ParamError):
            T.split(1, 1)
