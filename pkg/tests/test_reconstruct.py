#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Unit tests for rebuilding slices from their midsections."""

import unittest

import numpy as np

from causaltri import (
    Cell,
    CellKind,
    CollisionError,
    Colour,
    MidsectionComplex,
    ObstructionError,
    ReconstructionError,
    ValidationError,
    cone_slice,
    midsection,
    pair_corners,
    prism_slice,
    reconstruct,
    roundtrip_all,
    roundtrip_certify,
)
from causaltri.fixtures import (
    obstruction_midsection,
    pillow_midsection,
    random_sphere,
    simplex_boundary,
    tetrahedron_boundary,
    torus,
)


class TestPairCorners(unittest.TestCase):
    """Test fixture for corner classes."""

    def test_prism(self):
        K = prism_slice(tetrahedron_boundary())
        S = midsection(K)
        pairing = pair_corners(S)
        self.assertEqual(pairing.num_red, 4)
        self.assertEqual(pairing.num_blue, 4)
        for corner, (red, blue) in S.corner_origin.items():
            for other, (red2, blue2) in S.corner_origin.items():
                self.assertEqual(
                    pairing.red_class[corner] == pairing.red_class[other],
                    red == red2,
                )
                self.assertEqual(
                    pairing.blue_class[corner] == pairing.blue_class[other],
                    blue == blue2,
                )

    def test_vertex_ids(self):
        pairing = pair_corners(midsection(prism_slice(tetrahedron_boundary())))
        self.assertEqual(pairing.vertex_id(Colour.RED, 3), 3)
        self.assertEqual(pairing.vertex_id(Colour.BLUE, 0), 4)

    def test_obstruction(self):
        with self.assertRaises(ObstructionError) as context:
            pair_corners(obstruction_midsection())
        self.assertIn("joined by red and blue paths", str(context.exception))


class TestReconstruct(unittest.TestCase):
    """Test fixture for slice reconstruction."""

    def assertRoundTrip(self, K, sphere=True):
        rebuilt = reconstruct(midsection(K), require_sphere_boundaries=sphere)
        self.assertEqual(rebuilt.volume, K.volume)
        self.assertEqual(rebuilt.canonical_form(), K.canonical_form())

    def test_prism(self):
        self.assertRoundTrip(prism_slice(tetrahedron_boundary()))

    def test_cone(self):
        self.assertRoundTrip(cone_slice(tetrahedron_boundary()))

    def test_torus(self):
        self.assertRoundTrip(prism_slice(torus()), sphere=False)

    def test_four_dimensional(self):
        self.assertRoundTrip(prism_slice(simplex_boundary(4)))

    def test_random_spheres(self):
        rng = np.random.default_rng(1234)
        for _ in range(10):
            sigma = random_sphere(int(rng.integers(0, 7)), rng)
            self.assertRoundTrip(prism_slice(sigma))
            self.assertRoundTrip(cone_slice(sigma))

    def test_torus_with_sphere_requirement(self):
        S = midsection(prism_slice(torus()))
        with self.assertRaises(ValidationError):
            reconstruct(S, require_sphere_boundaries=True)

    def test_obstruction(self):
        with self.assertRaises(ObstructionError):
            reconstruct(obstruction_midsection())

    def test_pillow(self):
        with self.assertRaises(CollisionError):
            reconstruct(pillow_midsection())

    def test_open_midsection(self):
        S = MidsectionComplex(2, [Cell(CellKind.RED_TRIANGLE, (0, 1, 2))])
        with self.assertRaises(ReconstructionError):
            reconstruct(S)


class TestCertificate(unittest.TestCase):
    """Test fixture for round-trip certificates."""

    def test_prism(self):
        certificate = roundtrip_certify(prism_slice(tetrahedron_boundary()))
        self.assertTrue(certificate.equal)
        self.assertEqual(certificate.verdict, "equal")
        self.assertEqual(
            certificate.source_digest, certificate.roundtrip_digest
        )
        self.assertEqual(len(certificate.source_digest), 64)

    def test_all(self):
        sigma = tetrahedron_boundary()
        slices = [prism_slice(sigma), cone_slice(sigma), prism_slice(torus())]
        certificates = roundtrip_all(slices)
        self.assertEqual(len(certificates), 3)
        self.assertTrue(all(c.equal for c in certificates))
        self.assertNotEqual(
            certificates[0].source_digest, certificates[1].source_digest
        )
