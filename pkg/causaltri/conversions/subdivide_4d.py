#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Function to split the prisms of a three-dimensional midsection."""

from typing import Dict, FrozenSet, List

from ..colour import EdgeColour
from ..edge_coloured import EdgeColouredComplex
from ..exceptions import ParamError
from ..midsection import Cell, MidsectionComplex


def square_diagonal(square: FrozenSet[int], cell: Cell) -> FrozenSet[int]:
    """Diagonal of a square face through its least corner."""
    least = min(square)
    (opposite,) = [
        c
        for c in square
        if frozenset((least, c)) in set(cell.diagonals())
    ]
    return frozenset((least, opposite))


def split_prism(cell: Cell) -> List[FrozenSet[int]]:
    """Three tetrahedra of a prism coned from its least corner.

    Every square face is split along the diagonal through its least corner,
    so that two prisms sharing a square split it the same way. The three
    tetrahedra share the black edge from the least corner to the opposite
    corner of the far square's diagonal.
    """
    corners = frozenset(cell.corners)
    apex = min(corners)
    far_faces = [face for face in cell.faces() if apex not in face]
    tets: List[FrozenSet[int]] = []
    for face in far_faces:
        if len(face) == 3:
            tets.append(face | {apex})
            continue
        a, b = sorted(square_diagonal(face, cell))
        rest = sorted(face - {a, b})
        tets += [frozenset((apex, a, b, r)) for r in rest]
    return tets


def subdivide_4d(S: MidsectionComplex) -> EdgeColouredComplex:
    """Split every prism of a three-dimensional midsection.

    Parameters
    ----------
    S :
        Three-dimensional midsection.

    Returns
    -------
    :
        Complex of tetrahedra on the corners of ``S``: tetrahedral cells are
        kept and each prism becomes three tetrahedra around one black edge,
        so the count is #tetrahedra + 3 #prisms. Square diagonals are black,
        other edges keep their colour.

    Raises
    ------
    ParamError
        If the midsection is not three-dimensional.
    """
    if S.dimension != 3:
        raise ParamError(
            f"prisms live in 3-dimensional midsections, got {S.dimension}"
        )
    colours: Dict[FrozenSet[int], EdgeColour] = dict(S.edges())
    tets: List[FrozenSet[int]] = []
    for cell in S.cells:
        if cell.kind.face_colour is None:
            tets.append(frozenset(cell.corners))
            continue
        for face in cell.faces():
            if len(face) == 4:
                colours[square_diagonal(face, cell)] = EdgeColour.BLACK
        tets += split_prism(cell)
    return EdgeColouredComplex(3, tets, colours)
