#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Unit tests for censuses, growth bounds and golden files."""

import os
import tempfile
import unittest
from pathlib import Path

import numpy as np
import pandas as pd

from causaltri import (
    CausalSlice,
    CellKind,
    CensusTable,
    Colour,
    FormatError,
    ParamError,
    StrategyNotFound,
    available_strategies,
    census,
    compare_golden,
    cone_slice,
    connecting_triangulation,
    count_fixed_boundaries,
    dual_graph,
    enumerate_slices,
    enumerate_via_midsections,
    estimate_beta,
    euler_identity_check,
    merge_tables,
    midsection,
    prism_slice,
    reverse_slice,
    roundtrip_all,
    stack_slices,
    subadditivity_violations,
    verify_subadditivity,
    write_golden,
)
from causaltri.census_table import BETA_COLUMNS, TABLE_COLUMNS
from causaltri.fixtures import tetrahedron_boundary
from causaltri.strategies._search import VolumeBounds, partial_link_ok

VMAX = int(os.environ.get("CAUSALTRI_TEST_VMAX", "12"))
GOLDEN = Path(__file__).parent / "golden"


def synthetic_table(counts, vmax=10) -> CensusTable:
    """Table with ``counts[v]`` placeholder classes at each volume ``v``."""
    table = CensusTable(vmax=vmax)
    for volume, n in counts.items():
        for k in range(n):
            table.add(volume, b"%d:%d" % (volume, k), None)
    return table


class TestCensusTable(unittest.TestCase):
    """Test fixture for census tables."""

    def test_add(self):
        table = CensusTable(vmax=5)
        self.assertTrue(table.add(3, b"a", "first"))
        self.assertFalse(table.add(3, b"a", "second"))
        self.assertEqual(table.count(3), 1)
        self.assertEqual(table.members(3), ["first"])
        self.assertEqual(table.nonzero(), {3: 1})
        self.assertEqual(len(table.counts()), 5)

    def test_truncate(self):
        table = synthetic_table({2: 1, 4: 2, 6: 1})
        table.truncate(4)
        self.assertTrue(table.partial)
        self.assertEqual(table.limit, 4)
        self.assertEqual(table.nonzero(), {2: 1})
        table.truncate(5)
        self.assertEqual(table.limit, 4)

    def test_update(self):
        table = synthetic_table({2: 1})
        other = synthetic_table({2: 1, 3: 1}, vmax=12)
        table.update(other)
        self.assertEqual(table.vmax, 12)
        self.assertEqual(table.nonzero(), {2: 1, 3: 1})
        with self.assertRaises(ParamError):
            table.update(CensusTable(vmax=12, genus=1))

    def test_merge(self):
        first = synthetic_table({2: 1})
        second = synthetic_table({2: 2, 3: 1})
        merged = merge_tables([second, first])
        self.assertTrue(merged.same_counts(merge_tables([first, second])))
        self.assertEqual(merged.nonzero(), {2: 2, 3: 1})
        with self.assertRaises(ParamError):
            merge_tables([])

    def test_merge_partial(self):
        partial = synthetic_table({2: 1, 5: 1})
        partial.truncate(5)
        merged = merge_tables([synthetic_table({5: 3}), partial])
        self.assertTrue(merged.partial)
        self.assertEqual(merged.count(5), 0)

    def test_frame(self):
        frame = synthetic_table({2: 1}, vmax=3).to_frame()
        self.assertEqual(list(frame.columns), TABLE_COLUMNS)
        self.assertEqual(list(frame["count"]), [0, 1, 0])


class TestSearchHelpers(unittest.TestCase):
    """Test fixture for pruning helpers of the census search."""

    def test_volume_bounds(self):
        self.assertEqual(VolumeBounds(20, 0).min_volume, 12)
        self.assertEqual(VolumeBounds(40, 1).min_volume, 29)
        self.assertEqual(VolumeBounds(40, 1).min_boundary, 14)
        self.assertFalse(VolumeBounds(11, 0).admits(5, 4, 3, 0, 1))
        self.assertTrue(VolumeBounds(20, 0).admits(4, 4, 3, 6, 2))
        with self.assertRaises(ParamError):
            VolumeBounds(0, 0)
        with self.assertRaises(ParamError):
            VolumeBounds(10, -1)

    def test_partial_link(self):
        self.assertTrue(partial_link_ok([(0, 1), (1, 2)], False))
        triangle = [(0, 1), (1, 2), (2, 0)]
        self.assertFalse(partial_link_ok(triangle, False))
        self.assertTrue(partial_link_ok(triangle, True))
        self.assertFalse(partial_link_ok(triangle + [(5, 6)], True))
        self.assertFalse(partial_link_ok([(0, 1), (0, 2), (0, 3)], True))


class TestCensus(unittest.TestCase):
    """Test fixture for slice censuses."""

    @classmethod
    def setUpClass(cls):
        cls.direct = census(VMAX, strategy="direct")

    def test_smallest_slices(self):
        for volume in range(1, 12):
            self.assertEqual(self.direct.count(volume), 0)
        self.assertEqual(self.direct.count(12), 1)
        self.assertFalse(self.direct.partial)

    def test_prism_is_counted(self):
        K = prism_slice(tetrahedron_boundary())
        self.assertIn(K.canonical_form(), self.direct.forms[12])

    def test_golden_counts(self):
        golden = GOLDEN / "census-genus0.csv"
        self.assertTrue(compare_golden(self.direct, golden))
        frozen = pd.read_csv(golden)
        self.assertEqual(list(frozen.columns), TABLE_COLUMNS)
        self.assertEqual(frozen["count"].sum(), 1)

    def test_members(self):
        for volume in range(1, VMAX + 1):
            members = self.direct.members(volume)
            self.assertEqual(len(members), self.direct.count(volume))
            for K in members:
                self.assertIsInstance(K, CausalSlice)
                self.assertEqual(K.volume, volume)
                self.assertEqual(K.genus, 0)
            self.assertTrue(all(c.equal for c in roundtrip_all(members)))

    def test_midsection_identities(self):
        for volume in range(1, VMAX + 1):
            for K in self.direct.members(volume):
                report = euler_identity_check(K)
                self.assertTrue(report.consistent)
                self.assertEqual(report.values(), (2, 2, 2))
                S = midsection(K)
                kinds = S.kind_counts()
                triangles = kinds[CellKind.RED_TRIANGLE]
                quadrangles = kinds[CellKind.QUADRANGLE]
                graph = dual_graph(S, Colour.RED)
                self.assertTrue(graph.is_connected())
                self.assertEqual(graph.num_vertices, triangles + quadrangles)
                self.assertEqual(
                    2 * graph.num_edges, 3 * triangles + 2 * quadrangles
                )
                expected = {CellKind.RED_TRIANGLE: 3, CellKind.QUADRANGLE: 2}
                for index, degree in graph.degrees().items():
                    self.assertEqual(degree, expected[S.cells[index].kind])

    def test_strategies_agree(self):
        table = census(VMAX, strategy="both")
        self.assertTrue(table.same_counts(self.direct))
        self.assertEqual(
            sorted(table.extras["tables"]), sorted(available_strategies)
        )

    def test_parallel(self):
        table = census(VMAX, strategy="direct", jobs=2)
        self.assertTrue(table.same_counts(self.direct))

    def test_colourings(self):
        table = enumerate_via_midsections(VMAX)
        self.assertTrue(table.colouring_counts())
        for n, (raw, uncoloured) in table.colouring_counts().items():
            self.assertGreaterEqual(raw, uncoloured)
            # three colours per edge, 3n/2 edges
            self.assertLessEqual(raw, 3 ** (3 * n // 2) * uncoloured)
        self.assertGreater(sum(table.filtered_counts().values()), 0)
        self.assertTrue(table.same_counts(self.direct))

    def test_torus_below_minimum(self):
        for strategy in available_strategies:
            table = census(28, strategy=strategy, genus=1)
            self.assertEqual(table.nonzero(), {})

    def test_unknown_strategy(self):
        with self.assertRaises(StrategyNotFound):
            census(12, strategy="exhaustive")

    def test_invalid_parameters(self):
        with self.assertRaises(ParamError):
            census(0)
        with self.assertRaises(ParamError):
            census(12, jobs=0)
        with self.assertRaises(ParamError):
            enumerate_slices(12, dimension=4)
        with self.assertRaises(ParamError):
            census(12, max_states=0)

    def test_overflow(self):
        with self.assertWarns(UserWarning):
            table = enumerate_slices(12, max_states=1)
        self.assertTrue(table.partial)
        self.assertEqual(table.limit, 2)
        self.assertEqual(table.nonzero(), {})


class TestFixedBoundaries(unittest.TestCase):
    """Test fixture for censuses of triangulations with fixed boundaries."""

    def setUp(self):
        sigma = tetrahedron_boundary()
        self.sigma = sigma
        prism = prism_slice(sigma)
        self.slices = CensusTable(vmax=24)
        self.slices.add(12, prism.canonical_form(), prism)

    def test_single_slices(self):
        table = count_fixed_boundaries(12, self.sigma, self.sigma)
        self.assertEqual(table.count(12), census(12).count(12))

    def test_stacked_prisms(self):
        table = count_fixed_boundaries(
            24, self.sigma, self.sigma, slices=self.slices
        )
        self.assertEqual(table.count(12), 1)
        self.assertGreater(table.count(24), 1)
        self.assertEqual(table.nonzero().keys(), {12, 24})

    def test_overflow(self):
        with self.assertWarns(UserWarning):
            table = count_fixed_boundaries(
                24, self.sigma, self.sigma, slices=self.slices, max_states=1
            )
        self.assertTrue(table.partial)
        self.assertEqual(table.limit, 24)
        self.assertEqual(table.count(12), 1)

    def test_subadditivity(self):
        table = count_fixed_boundaries(
            24, self.sigma, self.sigma, slices=self.slices
        )
        self.assertEqual(subadditivity_violations(table, 0), [])
        v0 = connecting_triangulation(self.sigma, self.sigma).volume
        self.assertEqual(subadditivity_violations(table, v0), [])

    def test_connecting_volume(self):
        t0 = connecting_triangulation(self.sigma, self.sigma)
        volume = 2 * self.sigma.volume + 20
        self.assertEqual(t0.volume, volume)
        slices = CensusTable(vmax=volume)
        cone = cone_slice(self.sigma)
        for K in (cone, reverse_slice(cone)):
            slices.add(K.volume, K.canonical_form(), K)
        table = count_fixed_boundaries(
            volume, self.sigma, self.sigma, slices=slices
        )
        self.assertGreater(table.count(volume), 0)
        self.assertIn(t0.canonical_form(), table.forms[volume])


class TestGrowth(unittest.TestCase):
    """Test fixture for growth bounds and subadditivity."""

    def test_estimate_beta(self):
        estimate = estimate_beta(synthetic_table({2: 2, 3: 1}))
        half_log_two = np.log(2.0) / 2
        self.assertTrue(np.allclose(estimate.volumes, [2, 3]))
        self.assertTrue(
            np.allclose(estimate.log_n_over_v, [half_log_two, 0.0])
        )
        self.assertTrue(
            np.allclose(estimate.beta_lower, [half_log_two, half_log_two])
        )
        self.assertTrue(estimate.bounds_only)
        self.assertEqual(list(estimate.to_frame().columns), BETA_COLUMNS)

    def test_reference_volume(self):
        estimate = estimate_beta(synthetic_table({2: 2}), v0=10)
        self.assertEqual(list(estimate.volumes), [12])
        self.assertAlmostEqual(estimate.beta_lower[0], np.log(2.0) / 12)

    def test_constant_counts(self):
        estimate = estimate_beta(synthetic_table({v: 1 for v in range(1, 6)}))
        self.assertTrue(np.allclose(estimate.beta_lower, 0.0))

    def test_invalid(self):
        with self.assertRaises(ParamError):
            estimate_beta(synthetic_table({2: 1}), v0=-1)
        with self.assertRaises(ParamError):
            estimate_beta(CensusTable(vmax=5))

    def test_violations(self):
        table = synthetic_table({2: 2, 5: 1})
        self.assertEqual(subadditivity_violations(table, 1), [(2, 2), (2, 5)])
        self.assertEqual(subadditivity_violations(synthetic_table({}), 1), [])

    def test_injective_gluing(self):
        sigma = tetrahedron_boundary()
        t0 = connecting_triangulation(sigma, sigma)
        prism = stack_slices([prism_slice(sigma)])
        family = [prism, connecting_triangulation(sigma, sigma)]
        self.assertTrue(verify_subadditivity(t0, family, [prism]))
        self.assertFalse(verify_subadditivity(t0, [prism, prism], [prism]))


class TestGolden(unittest.TestCase):
    """Test fixture for golden census files."""

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.path = Path(self.directory.name) / "census-genus0.csv"
        self.table = synthetic_table({2: 2, 5: 1})

    def tearDown(self):
        self.directory.cleanup()

    def test_missing_file_is_written(self):
        with self.assertWarns(UserWarning):
            self.assertTrue(compare_golden(self.table, self.path))
        self.assertTrue(self.path.exists())
        self.assertTrue(compare_golden(self.table, self.path))

    def test_mismatch(self):
        write_golden(self.table, self.path)
        self.assertFalse(compare_golden(synthetic_table({2: 1}), self.path))

    def test_shared_volumes(self):
        write_golden(synthetic_table({2: 2}, vmax=3), self.path)
        self.assertTrue(compare_golden(self.table, self.path))

    def test_partial_table(self):
        write_golden(self.table, self.path)
        partial = synthetic_table({2: 2})
        partial.truncate(4)
        self.assertTrue(compare_golden(partial, self.path))

    def test_bad_columns(self):
        pd.DataFrame({"volume": [1], "n": [0]}).to_csv(self.path, index=False)
        with self.assertRaises(FormatError):
            compare_golden(self.table, self.path)

    def test_empty_file(self):
        self.path.write_text("")
        with self.assertRaises(FormatError):
            compare_golden(self.table, self.path)
