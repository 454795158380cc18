#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Causal triangulations: slices, midsections and small-volume censuses."""

from .canonical import Labelling, canonical_labelling
from .causal import (
    CausalSlice,
    CausalTriangulation,
    SimplexType,
    classify_simplex,
    connecting_isomorphisms,
    glue_for_subadditivity,
    reverse_slice,
    stack_slices,
    validate_slice,
)
from .census import (
    census,
    compare_golden,
    count_fixed_boundaries,
    estimate_beta,
    merge_tables,
    subadditivity_violations,
    verify_subadditivity,
    write_golden,
)
from .census_table import BetaEstimate, CensusTable
from .colour import Colour, EdgeColour
from .complex import (
    ColouredComplex,
    boundary,
    build_complex,
    canonical_form,
    euler_characteristic,
    find_isomorphism,
)
from .constructions import (
    cone_slice,
    connecting_triangulation,
    degree_three_vertex,
    prism_slice,
)
from .edge_coloured import EdgeColouredComplex
from .exceptions import (
    CausalError,
    CollisionError,
    ColourError,
    ComplexError,
    ConstructionError,
    FormatError,
    GluingError,
    ObstructionError,
    ParamError,
    ReconstructionError,
    ResourceLimitExceeded,
    SliceError,
    StrategyNotFound,
    SubdivisionError,
    SurfaceError,
    ValidationError,
)
from .midsection import (
    Cell,
    CellKind,
    DualGraph,
    EulerReport,
    MidsectionComplex,
    dual_graph,
    euler_identity_check,
    midsection,
    orient_cells,
)
from .reconstruct import (
    Certificate,
    VertexPairing,
    pair_corners,
    reconstruct,
    roundtrip_all,
    roundtrip_certify,
)
from .strategies import (
    available_strategies,
    enumerate_function,
    enumerate_slices,
    enumerate_via_midsections,
)
from .topology import (
    ManifoldReport,
    SurfaceClass,
    check_manifold_3d,
    check_pseudomanifold,
    classify_surface,
    closed_manifold_check,
)

__version__ = "1.0.0"

__all__ = [
    "BetaEstimate",
    "CausalError",
    "CausalSlice",
    "CausalTriangulation",
    "Cell",
    "CellKind",
    "CensusTable",
    "Certificate",
    "CollisionError",
    "Colour",
    "ColourError",
    "ColouredComplex",
    "ComplexError",
    "ConstructionError",
    "DualGraph",
    "EdgeColour",
    "EdgeColouredComplex",
    "EulerReport",
    "FormatError",
    "GluingError",
    "Labelling",
    "ManifoldReport",
    "MidsectionComplex",
    "ObstructionError",
    "ParamError",
    "ReconstructionError",
    "ResourceLimitExceeded",
    "SimplexType",
    "SliceError",
    "StrategyNotFound",
    "SubdivisionError",
    "SurfaceClass",
    "SurfaceError",
    "ValidationError",
    "VertexPairing",
    "__version__",
    "available_strategies",
    "boundary",
    "build_complex",
    "canonical_form",
    "canonical_labelling",
    "census",
    "check_manifold_3d",
    "check_pseudomanifold",
    "classify_simplex",
    "classify_surface",
    "closed_manifold_check",
    "compare_golden",
    "cone_slice",
    "connecting_isomorphisms",
    "connecting_triangulation",
    "count_fixed_boundaries",
    "degree_three_vertex",
    "dual_graph",
    "enumerate_function",
    "enumerate_slices",
    "enumerate_via_midsections",
    "estimate_beta",
    "euler_characteristic",
    "euler_identity_check",
    "find_isomorphism",
    "glue_for_subadditivity",
    "merge_tables",
    "midsection",
    "orient_cells",
    "pair_corners",
    "prism_slice",
    "reconstruct",
    "reverse_slice",
    "roundtrip_all",
    "roundtrip_certify",
    "stack_slices",
    "subadditivity_violations",
    "validate_slice",
    "verify_subadditivity",
    "write_golden",
]
