#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Rebuild a causal slice from its midsection."""

import hashlib
import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np
import scipy.sparse as spa
from scipy.sparse.csgraph import connected_components

from .causal import CausalSlice, validate_slice
from .colour import Colour, EdgeColour
from .complex import ColouredComplex
from .exceptions import (
    CollisionError,
    ComplexError,
    ObstructionError,
    SliceError,
    ValidationError,
)
from .midsection import MidsectionComplex, midsection

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexPairing:
    """Classes of midsection corners under monochrome paths.

    Attributes
    ----------
    red_class :
        Class :math:`r_v` of every corner under blue-path connectivity. All
        corners of a class come from edges sharing the same red vertex.
    blue_class :
        Class :math:`b_v` of every corner under red-path connectivity. All
        corners of a class come from edges sharing the same blue vertex.
    num_red :
        Number of red classes.
    num_blue :
        Number of blue classes.
    """

    red_class: Mapping[int, int]
    blue_class: Mapping[int, int]
    num_red: int
    num_blue: int

    def vertex_id(self, colour: Colour, label: int) -> int:
        """Vertex id of a class in the reconstructed complex.

        Red classes are numbered first, then blue classes.
        """
        return label if colour == Colour.RED else self.num_red + label


def _path_classes(
    corners: Sequence[int],
    edges: Mapping[frozenset, EdgeColour],
    colour: EdgeColour,
) -> Tuple[Dict[int, int], int]:
    index = {c: i for i, c in enumerate(corners)}
    rows, cols = [], []
    for edge, edge_colour in edges.items():
        if edge_colour == colour:
            a, b = sorted(edge)
            rows.append(index[a])
            cols.append(index[b])
    n = len(corners)
    adjacency = spa.csr_matrix(
        (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n)
    )
    count, labels = connected_components(adjacency, directed=False)
    # renumber classes by least corner
    first: Dict[int, int] = {}
    for c in corners:
        first.setdefault(int(labels[index[c]]), len(first))
    return {c: first[int(labels[index[c]])] for c in corners}, int(count)


def pair_corners(S: MidsectionComplex) -> VertexPairing:
    """Compute the red and blue class of every corner.

    Parameters
    ----------
    S :
        Coloured cell complex.

    Returns
    -------
    :
        Pairing of corners with vertex classes.

    Raises
    ------
    ObstructionError
        If two distinct corners are joined by both a red and a blue path,
        in which case they would become the same edge of the slice.
    """
    corners = S.corners
    red_class, num_red = _path_classes(corners, S.edges(), EdgeColour.BLUE)
    blue_class, num_blue = _path_classes(corners, S.edges(), EdgeColour.RED)
    seen: Dict[Tuple[int, int], int] = {}
    for c in corners:
        key = (red_class[c], blue_class[c])
        if key in seen:
            raise ObstructionError(
                f"corners {seen[key]} and {c} are joined by red and blue "
                "paths"
            )
        seen[key] = c
    return VertexPairing(
        red_class=MappingProxyType(red_class),
        blue_class=MappingProxyType(blue_class),
        num_red=num_red,
        num_blue=num_blue,
    )


def reconstruct(
    S: MidsectionComplex, require_sphere_boundaries: bool = False
) -> CausalSlice:
    """Rebuild the causal slice whose midsection is ``S``.

    Every cell becomes the simplex spanned by the red classes of its red
    slots and the blue classes of its blue slots. Corners in the same red
    slot are joined by blue edges, so they share a red class, and likewise
    for blue slots.

    Parameters
    ----------
    S :
        Closed coloured cell complex of dimension 2 or 3.
    require_sphere_boundaries :
        Forwarded to :func:`causaltri.validate_slice`.

    Returns
    -------
    :
        Validated slice whose midsection is isomorphic to ``S``.

    Raises
    ------
    ObstructionError
        If two corners are joined by both a red and a blue path.
    CollisionError
        If two slots of a cell fall in the same class, or two cells yield
        the same simplex.
    ValidationError
        If the rebuilt complex is not a valid slice.
    """
    pairing = pair_corners(S)
    colours: Dict[int, Colour] = {}
    for label in range(pairing.num_red):
        colours[pairing.vertex_id(Colour.RED, label)] = Colour.RED
    for label in range(pairing.num_blue):
        colours[pairing.vertex_id(Colour.BLUE, label)] = Colour.BLUE
    simplices: Dict[frozenset, int] = {}
    for index, cell in enumerate(S.cells):
        k, l = cell.kind.shape
        slot_map = cell.slot_map
        reds = {
            pairing.vertex_id(Colour.RED, pairing.red_class[slot_map[(i, 0)]])
            for i in range(k)
        }
        blues = {
            pairing.vertex_id(
                Colour.BLUE, pairing.blue_class[slot_map[(0, j)]]
            )
            for j in range(l)
        }
        if len(reds) != k or len(blues) != l:
            raise CollisionError(
                f"{cell.kind.value} cell {list(cell.corners)} collapses to "
                f"a simplex with {len(reds) + len(blues)} vertices"
            )
        simplex = frozenset(reds | blues)
        if simplex in simplices:
            raise CollisionError(
                f"cells {simplices[simplex]} and {index} yield the same "
                f"simplex {sorted(simplex)}"
            )
        simplices[simplex] = index
    used = set().union(*simplices) if simplices else set()
    try:
        K = ColouredComplex(
            S.dimension + 1,
            {v: c for v, c in colours.items() if v in used},
            simplices,
        )
        return validate_slice(K, require_sphere_boundaries)
    except (ComplexError, SliceError) as exn:
        raise ValidationError(
            f"rebuilt complex is not a causal slice: {exn}"
        ) from exn


@dataclass(frozen=True)
class Certificate:
    """Round-trip certificate of a slice through its midsection.

    Attributes
    ----------
    source_digest :
        SHA-256 digest of the canonical form of the slice.
    roundtrip_digest :
        SHA-256 digest of the canonical form of the rebuilt slice.
    equal :
        True if both canonical forms are equal.
    """

    source_digest: str
    roundtrip_digest: str
    equal: bool

    @property
    def verdict(self) -> str:
        """Verdict keyword, ``equal`` or ``different``."""
        return "equal" if self.equal else "different"


def digest(form: bytes) -> str:
    """SHA-256 hex digest of a canonical form."""
    return hashlib.sha256(form).hexdigest()


def roundtrip_certify(K: CausalSlice) -> Certificate:
    """Certify that a slice is recovered from its midsection.

    Parameters
    ----------
    K :
        Valid slice.

    Returns
    -------
    :
        Digests of the canonical forms of ``K`` and of the slice rebuilt from
        its midsection, and whether the forms are equal.
    """
    source = K.canonical_form()
    rebuilt = reconstruct(midsection(K)).canonical_form()
    certificate = Certificate(
        source_digest=digest(source),
        roundtrip_digest=digest(rebuilt),
        equal=source == rebuilt,
    )
    if not certificate.equal:
        logger.warning(
            "slice of volume %d is not recovered from its midsection",
            K.volume,
        )
    return certificate


def roundtrip_all(slices: Sequence[CausalSlice]) -> List[Certificate]:
    """Certify a family of slices."""
    return [roundtrip_certify(K) for K in slices]
