#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Model for a simplicial complex with red, blue and black edges."""

from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple

from .canonical import canonical_labelling
from .colour import EdgeColour
from .complex import Simplex, faces
from .exceptions import ComplexError

Edge = FrozenSet[int]


class EdgeColouredComplex:
    """Pure simplicial complex whose edges carry a colour.

    Black edges are the diagonals added when quadrangles or prisms of a
    midsection are split into simplices.

    Attributes
    ----------
    dimension :
        Dimension of the maximal simplices.
    simplices :
        Maximal simplices as frozen vertex sets.
    edge_colours :
        Colour of every edge of the complex.
    """

    dimension: int
    simplices: FrozenSet[Simplex]
    edge_colours: Mapping[Edge, EdgeColour]

    def __init__(
        self,
        dimension: int,
        simplices: Iterable[Iterable[int]],
        edge_colours: Mapping[Edge, EdgeColour],
    ) -> None:
        listed = [frozenset(s) for s in simplices]
        for simplex in listed:
            if len(simplex) != dimension + 1:
                raise ComplexError(
                    f"simplex {sorted(simplex)} is not a {dimension}-simplex"
                )
        unique = frozenset(listed)
        if len(unique) != len(listed):
            raise ComplexError("a maximal simplex is listed twice")
        edges = faces(unique, 1)
        colours = {
            frozenset(e): EdgeColour(c) for e, c in edge_colours.items()
        }
        missing = edges - set(colours)
        if missing:
            edge = sorted(min(missing, key=sorted))
            raise ComplexError(f"edge {edge} has no colour")
        extra = set(colours) - edges
        if extra:
            edge = sorted(min(extra, key=sorted))
            raise ComplexError(f"coloured edge {edge} is in no simplex")
        self.dimension = dimension
        self.simplices = unique
        self.edge_colours = MappingProxyType(colours)

    def __repr__(self) -> str:
        return (
            f"EdgeColouredComplex(dimension={self.dimension}, "
            f"simplices={len(self.simplices)}, "
            f"black_edges={len(self.black_edges())})"
        )

    @property
    def vertices(self) -> Tuple[int, ...]:
        """Sorted vertex ids."""
        return tuple(sorted({v for s in self.simplices for v in s}))

    def black_edges(self) -> List[Edge]:
        """Black edges, in ascending order."""
        return sorted(
            (e for e, c in self.edge_colours.items() if c == EdgeColour.BLACK),
            key=sorted,
        )

    def colour_counts(self) -> Dict[EdgeColour, int]:
        """Number of edges of each colour."""
        counts = {colour: 0 for colour in EdgeColour}
        for colour in self.edge_colours.values():
            counts[colour] += 1
        return counts

    def canonical_form(self, respect_colours: bool = True) -> bytes:
        """Canonical form of the (edge-coloured) isomorphism class.

        Parameters
        ----------
        respect_colours :
            If False, edge colours are forgotten and only the underlying
            complex is labelled.
        """
        hyperedges = [(0, s) for s in self.simplices]
        if respect_colours:
            hyperedges += [
                (1 + int(c), e) for e, c in self.edge_colours.items()
            ]
        labelling = canonical_labelling(
            {v: 0 for v in self.vertices}, hyperedges
        )
        return b"%d:" % self.dimension + labelling.form
