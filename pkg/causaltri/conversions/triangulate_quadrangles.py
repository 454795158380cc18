#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Function to split the quadrangles of a surface midsection."""

from ..colour import EdgeColour
from ..edge_coloured import EdgeColouredComplex
from ..exceptions import ComplexError, ParamError
from ..midsection import MidsectionComplex


def triangulate_quadrangles(S: MidsectionComplex) -> EdgeColouredComplex:
    """Split every quadrangle along the diagonal through its least corner.

    Parameters
    ----------
    S :
        Two-dimensional midsection.

    Returns
    -------
    :
        Triangulated surface in which the new diagonals are black, every
        other edge keeping its red or blue colour.

    Raises
    ------
    ParamError
        If the midsection is not two-dimensional.
    ComplexError
        If the split cells do not form a simplicial complex, for instance
        when a diagonal doubles an existing edge.
    """
    if S.dimension != 2:
        raise ParamError(
            f"quadrangles live in 2-dimensional midsections, got {S.dimension}"
        )
    triangles, diagonals = S.triangulate()
    colours = dict(S.edges())
    for diagonal in diagonals:
        if diagonal in colours:
            raise ComplexError(
                f"diagonal {sorted(diagonal)} is already an edge"
            )
        colours[diagonal] = EdgeColour.BLACK
    return EdgeColouredComplex(2, triangles, colours)
