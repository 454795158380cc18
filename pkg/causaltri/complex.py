#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Model for a finite abstract simplicial complex with coloured vertices."""

from functools import cached_property
from itertools import combinations
from types import MappingProxyType
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np
import scipy.sparse as spa
from scipy.sparse.csgraph import connected_components as _csgraph_components

from .canonical import Labelling, canonical_labelling
from .colour import Colour
from .exceptions import ComplexError

Simplex = FrozenSet[int]


def faces(simplices: Iterable[Simplex], p: int) -> FrozenSet[Simplex]:
    """Set of all ``p``-dimensional faces of a family of simplices.

    Parameters
    ----------
    simplices :
        Family of simplices given as vertex sets.
    p :
        Dimension of the faces, i.e. faces have ``p + 1`` vertices.

    Returns
    -------
    :
        All ``p``-faces of the given simplices.
    """
    result = set()
    for simplex in simplices:
        if len(simplex) == p + 1:
            result.add(simplex)
        elif len(simplex) > p + 1:
            result.update(
                frozenset(face)
                for face in combinations(sorted(simplex), p + 1)
            )
    return frozenset(result)


def alternating_count(simplices: Iterable[Simplex]) -> int:
    r"""Euler characteristic of the downward closure of a simplex family.

    Parameters
    ----------
    simplices :
        Family of simplices given as vertex sets.

    Returns
    -------
    :
        :math:`\sum_p (-1)^p |K^p|` over the closure of the family.
    """
    simplices = list(simplices)
    if not simplices:
        return 0
    top = max(len(s) for s in simplices) - 1
    return sum((-1) ** p * len(faces(simplices, p)) for p in range(top + 1))


def vertex_components(
    vertices: Sequence[int], simplices: Iterable[Simplex]
) -> List[List[int]]:
    """Group vertices into the connected components of a 1-skeleton.

    Parameters
    ----------
    vertices :
        Vertices to group.
    simplices :
        Simplices whose vertices are pairwise connected.

    Returns
    -------
    :
        Sorted vertex lists, one per component, ordered by least vertex.
    """
    order = sorted(vertices)
    index = {v: i for i, v in enumerate(order)}
    rows: List[int] = []
    cols: List[int] = []
    for simplex in simplices:
        members = sorted(simplex)
        for u, v in zip(members, members[1:]):
            rows.append(index[u])
            cols.append(index[v])
    n = len(order)
    adjacency = spa.csr_matrix(
        (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n)
    )
    _, labels = _csgraph_components(adjacency, directed=False)
    groups: Dict[int, List[int]] = {}
    for v, label in zip(order, labels):
        groups.setdefault(int(label), []).append(v)
    return sorted(groups.values(), key=lambda group: group[0])


class ColouredComplex:
    """Finite abstract simplicial complex with red and blue vertices.

    The complex is pure: it is given by its vertex colouring and its
    maximal simplices, which all have ``dimension + 1`` vertices. Every
    other simplex is derived as a face of a maximal one. Instances are
    immutable.

    Attributes
    ----------
    dimension :
        Dimension :math:`D` of the complex.
    colours :
        Read-only map from vertex ids to colours.
    maximal_simplices :
        The :math:`D`-simplices, as frozen vertex sets.
    """

    dimension: int
    colours: Mapping[int, Colour]
    maximal_simplices: FrozenSet[Simplex]

    def __init__(
        self,
        dimension: int,
        colours: Mapping[int, Colour],
        maximal_simplices: Iterable[Iterable[int]],
    ) -> None:
        if dimension < 0:
            raise ComplexError(f"dimension {dimension} is negative")
        simplices: List[Simplex] = []
        for listed in maximal_simplices:
            listed = list(listed)
            simplex = frozenset(listed)
            if len(simplex) != len(listed):
                raise ComplexError(
                    f"simplex {sorted(listed)} lists a vertex twice"
                )
            if len(simplex) != dimension + 1:
                raise ComplexError(
                    f"simplex {sorted(simplex)} has {len(simplex)} vertices "
                    f"but a {dimension}-simplex has {dimension + 1}"
                )
            undeclared = [v for v in simplex if v not in colours]
            if undeclared:
                raise ComplexError(
                    f"simplex {sorted(simplex)} uses undeclared vertices "
                    f"{sorted(undeclared)}"
                )
            simplices.append(simplex)
        unique = frozenset(simplices)
        if len(unique) != len(simplices):
            raise ComplexError(
                "a maximal simplex is listed twice (multi-complexes are not "
                "abstract simplicial complexes)"
            )
        used = set().union(*unique) if unique else set()
        isolated = sorted(v for v in colours if v not in used)
        if isolated:
            raise ComplexError(
                f"vertices {isolated} belong to no maximal simplex"
            )
        self.dimension = dimension
        self.colours = MappingProxyType(
            {v: Colour(colours[v]) for v in sorted(colours)}
        )
        self.maximal_simplices = unique

    def __repr__(self) -> str:
        return (
            f"ColouredComplex(dimension={self.dimension}, "
            f"f_vector={self.f_vector})"
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColouredComplex):
            return NotImplemented
        return (
            self.dimension == other.dimension
            and dict(self.colours) == dict(other.colours)
            and self.maximal_simplices == other.maximal_simplices
        )

    def __hash__(self) -> int:
        return hash((self.dimension, self.maximal_simplices))

    def __reduce__(self):
        return (
            ColouredComplex,
            (self.dimension, dict(self.colours), self.maximal_simplices),
        )

    @property
    def vertices(self) -> Tuple[int, ...]:
        """Sorted vertex ids."""
        return tuple(self.colours)

    @property
    def volume(self) -> int:
        """Number of maximal simplices :math:`|K^D|`."""
        return len(self.maximal_simplices)

    @property
    def is_empty(self) -> bool:
        """Check whether the complex has no simplex at all."""
        return not self.maximal_simplices

    @cached_property
    def _faces(self) -> Dict[int, FrozenSet[Simplex]]:
        return {
            p: faces(self.maximal_simplices, p)
            for p in range(self.dimension + 1)
        }

    def simplices(self, p: int) -> FrozenSet[Simplex]:
        """Set :math:`K^p` of ``p``-simplices.

        Parameters
        ----------
        p :
            Dimension of the simplices, between 0 and the dimension of the
            complex.

        Returns
        -------
        :
            The ``p``-simplices, empty outside of ``0..dimension``.
        """
        return self._faces.get(p, frozenset())

    @property
    def f_vector(self) -> Tuple[int, ...]:
        """Numbers :math:`(|K^0|, \\dots, |K^D|)` of simplices."""
        return tuple(
            len(self.simplices(p)) for p in range(self.dimension + 1)
        )

    @cached_property
    def cofaces(self) -> Dict[Simplex, Tuple[Simplex, ...]]:
        """Map from each codimension-one face to the maximal simplices
        containing it."""
        incidence: Dict[Simplex, List[Simplex]] = {}
        for simplex in sorted(self.maximal_simplices, key=sorted):
            for v in simplex:
                incidence.setdefault(simplex - {v}, []).append(simplex)
        return {face: tuple(sims) for face, sims in incidence.items()}

    def colour_of(self, simplex: Iterable[int]) -> Optional[Colour]:
        """Colour inherited by a simplex.

        Returns
        -------
        :
            Common colour of the vertices if the simplex is mono-coloured,
            ``None`` otherwise.
        """
        found = {self.colours[v] for v in simplex}
        return found.pop() if len(found) == 1 else None

    def star(self, simplex: Iterable[int]) -> FrozenSet[Simplex]:
        """Maximal simplices containing a given simplex."""
        simplex = frozenset(simplex)
        return frozenset(s for s in self.maximal_simplices if simplex <= s)

    def link(self, simplex: Iterable[int]) -> FrozenSet[Simplex]:
        """Maximal simplices of the link of a simplex.

        The complex being pure, the link of :math:`\\sigma` is generated by
        the sets :math:`s \\setminus \\sigma` for maximal :math:`s \\supseteq
        \\sigma`.
        """
        simplex = frozenset(simplex)
        return frozenset(s - simplex for s in self.star(simplex))

    def subcomplex(
        self, simplices: Iterable[Iterable[int]]
    ) -> "ColouredComplex":
        """Complex generated by some maximal simplices, colours inherited."""
        simplices = [frozenset(s) for s in simplices]
        used = set().union(*simplices) if simplices else set()
        dimension = len(simplices[0]) - 1 if simplices else self.dimension
        return ColouredComplex(
            dimension, {v: self.colours[v] for v in used}, simplices
        )

    def relabel(self, mapping: Mapping[int, int]) -> "ColouredComplex":
        """Rename vertices along an injective map.

        Parameters
        ----------
        mapping :
            Map from current ids to new ids, defined on every vertex.

        Returns
        -------
        :
            Isomorphic complex with renamed vertices.
        """
        if len(set(mapping[v] for v in self.colours)) != len(self.colours):
            raise ComplexError("vertex relabelling is not injective")
        return ColouredComplex(
            self.dimension,
            {mapping[v]: c for v, c in self.colours.items()},
            [frozenset(mapping[v] for v in s) for s in self.maximal_simplices],
        )

    def recolour(self, colours: Mapping[int, Colour]) -> "ColouredComplex":
        """Same simplices with another vertex colouring."""
        return ColouredComplex(
            self.dimension,
            {v: colours[v] for v in self.colours},
            self.maximal_simplices,
        )

    def uncoloured(self) -> "ColouredComplex":
        """Same simplices with every vertex coloured red."""
        return self.recolour({v: Colour.RED for v in self.colours})

    def shifted(self, offset: int) -> "ColouredComplex":
        """Add a constant to every vertex id."""
        return self.relabel({v: v + offset for v in self.colours})

    def euler_characteristic(self) -> int:
        r"""Alternating sum :math:`\sum_p (-1)^p |K^p|`."""
        return sum(
            (-1) ** p * n for p, n in enumerate(self.f_vector)
        )

    def boundary(self) -> "ColouredComplex":
        """Boundary complex, see :func:`boundary`."""
        if self.dimension < 1:
            return ColouredComplex(0, {}, [])
        free = [
            face
            for face, sims in self.cofaces.items()
            if len(sims) == 1
        ]
        return self.subcomplex(free) if free else ColouredComplex(
            self.dimension - 1, {}, []
        )

    def connected_components(self) -> List["ColouredComplex"]:
        """Connected components, ordered by least vertex id."""
        if self.is_empty:
            return []
        groups = vertex_components(self.vertices, self.maximal_simplices)
        members = {v: k for k, group in enumerate(groups) for v in group}
        parts: List[List[Simplex]] = [[] for _ in groups]
        for simplex in self.maximal_simplices:
            parts[members[min(simplex)]].append(simplex)
        return [self.subcomplex(part) for part in parts]

    def is_connected(self) -> bool:
        """Check whether the complex has exactly one component."""
        return len(self.connected_components()) == 1

    def canonical_labelling(self, respect_colours: bool = True) -> Labelling:
        """Canonical labelling of the vertices, see :func:`canonical_form`.

        Parameters
        ----------
        respect_colours :
            If False, vertex colours are ignored and only the uncoloured
            complex is labelled.
        """
        labels = {
            v: int(c) if respect_colours else 0
            for v, c in self.colours.items()
        }
        return canonical_labelling(
            labels, [(0, s) for s in self.maximal_simplices]
        )

    def canonical_form(self, respect_colours: bool = True) -> bytes:
        """Canonical form of the (coloured) isomorphism class."""
        labelling = self.canonical_labelling(respect_colours)
        return b"%d:" % self.dimension + labelling.form


def build_complex(
    dimension: int,
    vertex_colours: Mapping[int, Colour],
    maximal_simplices: Iterable[Iterable[int]],
) -> ColouredComplex:
    """Build and validate a coloured simplicial complex.

    Parameters
    ----------
    dimension :
        Dimension :math:`D \\geq 1` of the complex.
    vertex_colours :
        Map from vertex ids to colours.
    maximal_simplices :
        :math:`D`-simplices given as collections of :math:`D + 1` vertex
        ids.

    Returns
    -------
    :
        Validated complex.

    Raises
    ------
    ComplexError
        If a simplex lists a vertex twice, uses an undeclared vertex or has
        the wrong size, if a simplex is listed twice, if a vertex belongs to
        no simplex, or if the complex is empty.
    """
    if dimension < 1:
        raise ComplexError(f"dimension should be at least 1, not {dimension}")
    complex_ = ColouredComplex(dimension, vertex_colours, maximal_simplices)
    if complex_.is_empty:
        raise ComplexError("a complex needs at least one simplex")
    return complex_


def boundary(K: ColouredComplex) -> ColouredComplex:
    """Boundary complex of a pure complex.

    Parameters
    ----------
    K :
        Complex of dimension :math:`D \\geq 1`.

    Returns
    -------
    :
        The :math:`(D-1)`-complex generated by the :math:`(D-1)`-simplices
        incident on exactly one :math:`D`-simplex, with inherited colours.
        It is empty when :math:`K` is closed; its components are given by
        :meth:`ColouredComplex.connected_components`.
    """
    return K.boundary()


def euler_characteristic(K: ColouredComplex) -> int:
    r"""Euler characteristic :math:`\sum_p (-1)^p |K^p|` of a complex."""
    return K.euler_characteristic()


def canonical_form(K: ColouredComplex) -> bytes:
    """Canonical form of the colour-preserving isomorphism class of ``K``.

    Two complexes have equal canonical forms if and only if there is a
    bijection of vertices preserving colours and mapping simplices onto
    simplices.
    """
    return K.canonical_form()


def find_isomorphism(
    K1: ColouredComplex,
    K2: ColouredComplex,
    respect_colours: bool = True,
) -> Optional[Dict[int, int]]:
    """Find a combinatorial isomorphism between two complexes.

    Parameters
    ----------
    K1 :
        Source complex.
    K2 :
        Target complex.
    respect_colours :
        Require the isomorphism to preserve vertex colours.

    Returns
    -------
    :
        Vertex bijection from ``K1`` to ``K2`` mapping simplices onto
        simplices, or ``None`` if the complexes are not isomorphic.
    """
    if K1.dimension != K2.dimension:
        return None
    lab1 = K1.canonical_labelling(respect_colours)
    lab2 = K2.canonical_labelling(respect_colours)
    if lab1.form != lab2.form:
        return None
    inverse2 = {label: v for v, label in lab2.relabel.items()}
    return {v: inverse2[label] for v, label in lab1.relabel.items()}
