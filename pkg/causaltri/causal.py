#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Causal slices and causal triangulations."""

import logging
from dataclasses import dataclass, field
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

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .canonical import canonical_labelling
from .colour import Colour
from .complex import ColouredComplex, Simplex, find_isomorphism
from .exceptions import (
    ColourError,
    GluingError,
    ParamError,
    SliceError,
    SurfaceError,
)
from .topology import (
    check_manifold_3d,
    check_pseudomanifold,
    classify_surface,
    closed_manifold_check,
    is_orientable,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class SimplexType:
    """Type :math:`(k, D + 1 - k)` of a mixed :math:`D`-simplex.

    Attributes
    ----------
    red :
        Number :math:`k` of red vertices.
    blue :
        Number :math:`D + 1 - k` of blue vertices.
    """

    red: int
    blue: int

    def __str__(self) -> str:
        return f"({self.red},{self.blue})"

    @property
    def dimension(self) -> int:
        """Dimension of simplices of this type."""
        return self.red + self.blue - 1


def classify_simplex(colours: Iterable[Colour]) -> SimplexType:
    """Type of a :math:`D`-simplex given the colours of its vertices.

    Parameters
    ----------
    colours :
        Colours of the :math:`D + 1` vertices of the simplex.

    Returns
    -------
    :
        Pair (red count, blue count).

    Raises
    ------
    ColourError
        If all vertices have the same colour.
    """
    colours = list(colours)
    red = sum(1 for c in colours if c == Colour.RED)
    blue = len(colours) - red
    if red == 0 or blue == 0:
        raise ColourError(
            f"mono-coloured {len(colours) - 1}-simplex "
            f"({'red' if blue == 0 else 'blue'})"
        )
    return SimplexType(red, blue)


@dataclass(frozen=True)
class CausalSlice:
    """Validated (generalized) causal slice.

    Attributes
    ----------
    complex :
        Underlying coloured complex.
    red_boundary :
        Boundary component made of red vertices.
    blue_boundary :
        Boundary component made of blue vertices.
    generalized :
        True if the boundary components are not 2-spheres, in which case
        the slice is only a generalized slice.
    genus :
        Common genus of the boundary components (0 in dimension 4).
    """

    complex: ColouredComplex
    red_boundary: ColouredComplex
    blue_boundary: ColouredComplex
    generalized: bool
    genus: int

    @property
    def dimension(self) -> int:
        """Dimension :math:`D` of the slice."""
        return self.complex.dimension

    @property
    def volume(self) -> int:
        """Number of :math:`D`-simplices."""
        return self.complex.volume

    def type_counts(self) -> Dict[SimplexType, int]:
        """Number of :math:`D`-simplices of each type."""
        counts: Dict[SimplexType, int] = {}
        for simplex in self.complex.maximal_simplices:
            kind = classify_simplex(self.complex.colours[v] for v in simplex)
            counts[kind] = counts.get(kind, 0) + 1
        return dict(sorted(counts.items(), reverse=True))

    def canonical_form(self) -> bytes:
        """Canonical form of the underlying coloured complex."""
        return self.complex.canonical_form()


def _mono_faces(K: ColouredComplex, colour: Colour) -> FrozenSet[Simplex]:
    found = set()
    for p in range(K.dimension):
        found.update(
            s
            for s in K.simplices(p)
            if all(K.colours[v] == colour for v in s)
        )
    return frozenset(found)


def _all_faces(K: ColouredComplex) -> FrozenSet[Simplex]:
    found = set()
    for p in range(K.dimension + 1):
        found.update(K.simplices(p))
    return frozenset(found)


def validate_slice(
    K: ColouredComplex, require_sphere_boundaries: bool = True
) -> CausalSlice:
    """Check that a coloured complex is a (generalized) causal slice.

    Parameters
    ----------
    K :
        Coloured complex of dimension 3 or 4.
    require_sphere_boundaries :
        If True, boundary components must be 2-spheres (dimension 3), which
        together with the other conditions certifies a causal slice. If
        False, boundary components of any common genus are accepted and the
        result is a generalized slice when the genus is nonzero.

    Returns
    -------
    :
        Validated slice.

    Raises
    ------
    ColourError
        If a :math:`D`-simplex is mono-coloured, or a mono-coloured simplex
        does not lie in the boundary component of its colour.
    SliceError
        If the boundary does not have exactly one red and one blue
        component, if the manifold checks fail, or if boundary genera
        differ or are nonzero while spheres are required.

    Notes
    -----
    In dimension 3, a generalized slice whose boundary components are
    2-spheres is a causal slice, so the cylinder topology is certified
    without any homeomorphism test. In dimension 4, manifold checks stop at
    pseudomanifold conditions, orientability and Euler characteristics of
    vertex links.
    """
    if K.dimension not in (3, 4):
        raise SliceError(
            f"slices have dimension 3 or 4, not {K.dimension}"
        )
    for simplex in sorted(K.maximal_simplices, key=sorted):
        classify_simplex(K.colours[v] for v in simplex)
    components = K.boundary().connected_components()
    if len(components) != 2:
        raise SliceError(
            f"boundary has {len(components)} connected components, "
            "expected 2"
        )
    boundaries: Dict[Colour, ColouredComplex] = {}
    for component in components:
        colour = component.colour_of(component.vertices)
        if colour is None:
            raise ColourError("boundary component is not mono-coloured")
        if colour in boundaries:
            raise ColourError(
                f"both boundary components are {colour.name.lower()}"
            )
        boundaries[colour] = component
    for colour, component in boundaries.items():
        stray = _mono_faces(K, colour) - _all_faces(component)
        if stray:
            simplex = sorted(min(stray, key=lambda s: (len(s), sorted(s))))
            raise ColourError(
                f"mono-coloured simplex {simplex} does not lie in the "
                f"{colour.name.lower()} boundary component"
            )
    if K.dimension == 3:
        report = check_manifold_3d(K)
        if report and not is_orientable(K):
            raise SliceError("slice is not orientable")
    else:
        report = check_pseudomanifold(K)
    if not report:
        where = f" at {sorted(report.simplex)}" if report.simplex else ""
        raise SliceError(f"manifold check failed{where}: {report.reason}")
    red, blue = boundaries[Colour.RED], boundaries[Colour.BLUE]
    genus = 0
    if K.dimension == 3:
        try:
            red_genus = classify_surface(red).genus
            blue_genus = classify_surface(blue).genus
        except SurfaceError as exn:
            raise SliceError(f"boundary is not a surface: {exn}") from exn
        if red_genus != blue_genus:
            raise SliceError(
                f"red boundary has genus {red_genus} but blue boundary has "
                f"genus {blue_genus}"
            )
        genus = red_genus
        if require_sphere_boundaries and genus != 0:
            raise SliceError(
                f"boundary components have genus {genus}, expected spheres"
            )
    else:
        for component in (red, blue):
            report = closed_manifold_check(component)
            if not report:
                raise SliceError(
                    f"boundary is not a closed 3-manifold: {report.reason}"
                )
    return CausalSlice(
        complex=K,
        red_boundary=red,
        blue_boundary=blue,
        generalized=genus != 0,
        genus=genus,
    )


def reverse_slice(K: CausalSlice) -> CausalSlice:
    """Swap the colours of a slice.

    Parameters
    ----------
    K :
        Slice with boundaries :math:`(\\Sigma_{in}, \\Sigma_{out})`.

    Returns
    -------
    :
        Slice with boundaries :math:`(\\Sigma_{out}, \\Sigma_{in})`.
    """
    swapped = {v: c.opposite for v, c in K.complex.colours.items()}
    return CausalSlice(
        complex=K.complex.recolour(swapped),
        red_boundary=K.blue_boundary.recolour(
            {v: Colour.RED for v in K.blue_boundary.vertices}
        ),
        blue_boundary=K.red_boundary.recolour(
            {v: Colour.BLUE for v in K.red_boundary.vertices}
        ),
        generalized=K.generalized,
        genus=K.genus,
    )


@dataclass(frozen=True)
class CausalTriangulation:
    """Stack of causal slices glued along their boundaries.

    The glued complex is stored with global vertex ids: vertex ``v`` lies on
    time layer ``layers[v]``, the red boundary of slice ``i`` is layer ``i``
    and its blue boundary is layer ``i + 1``.

    Attributes
    ----------
    slices :
        Slices :math:`K^1, \\ldots, K^N` in time order.
    interface_isos :
        Vertex bijections from the blue boundary of each slice to the red
        boundary of the next one.
    layers :
        Time layer of every global vertex.
    simplices :
        Maximal simplices of the glued complex, on global vertex ids.
    vertex_maps :
        For every slice, the map from its vertex ids to global ids.
    """

    slices: Tuple[CausalSlice, ...]
    interface_isos: Tuple[Mapping[int, int], ...]
    layers: Mapping[int, int] = field(repr=False)
    simplices: FrozenSet[Simplex] = field(repr=False)
    vertex_maps: Tuple[Mapping[int, int], ...] = field(repr=False)

    @property
    def dimension(self) -> int:
        """Dimension of the slices."""
        return self.slices[0].dimension

    @property
    def num_slices(self) -> int:
        """Number :math:`N` of slices."""
        return len(self.slices)

    @property
    def volume(self) -> int:
        """Total number of :math:`D`-simplices."""
        return len(self.simplices)

    @property
    def in_boundary(self) -> ColouredComplex:
        """In-boundary :math:`\\Sigma_{in}`, red boundary of the first
        slice."""
        return self.slices[0].red_boundary

    @property
    def out_boundary(self) -> ColouredComplex:
        """Out-boundary :math:`\\Sigma_{out}`, blue boundary of the last
        slice."""
        return self.slices[-1].blue_boundary

    def canonical_form(self) -> bytes:
        """Canonical form of the foliated isomorphism class.

        Two triangulations have the same form if and only if a vertex
        bijection maps simplices onto simplices and preserves time layers.
        """
        labelling = canonical_labelling(
            dict(self.layers), [(0, s) for s in self.simplices]
        )
        return b"%d:%d:" % (self.dimension, self.num_slices) + labelling.form

    def split(self, start: int, stop: int) -> "CausalTriangulation":
        """Recover a contiguous block of slices from the glued complex.

        Parameters
        ----------
        start :
            Index of the first slice of the block.
        stop :
            Index one past the last slice of the block.

        Returns
        -------
        :
            Triangulation made of the simplices between layers ``start`` and
            ``stop``, on global vertex ids.
        """
        if not 0 <= start < stop <= self.num_slices:
            raise ParamError(
                f"invalid slice range [{start}, {stop}) for a triangulation "
                f"of {self.num_slices} slices"
            )
        pieces: List[CausalSlice] = []
        for i in range(start, stop):
            block = [
                s
                for s in self.simplices
                if min(self.layers[v] for v in s) == i
            ]
            used = set().union(*block)
            colours = {
                v: Colour.RED if self.layers[v] == i else Colour.BLUE
                for v in used
            }
            K = ColouredComplex(self.dimension, colours, block)
            pieces.append(
                validate_slice(K, require_sphere_boundaries=False)
            )
        isos = [
            {v: v for v in piece.blue_boundary.vertices}
            for piece in pieces[:-1]
        ]
        return stack_slices(pieces, isos)


def _check_interface(
    blue: ColouredComplex, red: ColouredComplex, iso: Mapping[int, int]
) -> None:
    if set(iso) != set(blue.vertices) or set(iso.values()) != set(
        red.vertices
    ):
        raise GluingError(
            "interface map is not a bijection between boundary vertices"
        )
    if len(set(iso.values())) != len(iso):
        raise GluingError("interface map is not injective")
    image = frozenset(
        frozenset(iso[v] for v in s) for s in blue.maximal_simplices
    )
    if image != red.maximal_simplices:
        raise GluingError("interface map does not preserve simplices")


def stack_slices(
    slices: Sequence[CausalSlice],
    isos: Optional[Sequence[Optional[Mapping[int, int]]]] = None,
) -> CausalTriangulation:
    """Glue slices into a causal triangulation.

    Parameters
    ----------
    slices :
        Slices in time order, all of the same dimension.
    isos :
        For each pair of consecutive slices, a vertex bijection from the
        blue boundary of the first to the red boundary of the second, as
        uncoloured complexes. Missing or ``None`` entries are found
        automatically.

    Returns
    -------
    :
        Glued triangulation whose volume is the sum of slice volumes.

    Raises
    ------
    GluingError
        If consecutive boundaries are not isomorphic, if a given map is not
        a bijection of boundary vertices, or if it does not map simplices
        onto simplices.
    """
    if not slices:
        raise ParamError("cannot stack an empty list of slices")
    dims = {K.dimension for K in slices}
    if len(dims) != 1:
        raise GluingError(f"slices have mixed dimensions {sorted(dims)}")
    isos = list(isos) if isos is not None else []
    if len(isos) > len(slices) - 1:
        raise GluingError(
            f"{len(isos)} interface maps given for {len(slices)} slices"
        )
    isos += [None] * (len(slices) - 1 - len(isos))
    resolved: List[Mapping[int, int]] = []
    for i, iso in enumerate(isos):
        blue, red = slices[i].blue_boundary, slices[i + 1].red_boundary
        if iso is None:
            iso = find_isomorphism(blue, red, respect_colours=False)
            if iso is None:
                raise GluingError(
                    f"blue boundary of slice {i} is not isomorphic to the "
                    f"red boundary of slice {i + 1}"
                )
        _check_interface(blue, red, iso)
        resolved.append(MappingProxyType(dict(iso)))
    layers: Dict[int, int] = {}
    simplices = set()
    vertex_maps: List[Mapping[int, int]] = []
    next_id = 0
    for i, K in enumerate(slices):
        local: Dict[int, int] = {}
        if i > 0:
            inverse = {r: b for b, r in resolved[i - 1].items()}
            previous = vertex_maps[i - 1]
            for r in K.red_boundary.vertices:
                local[r] = previous[inverse[r]]
        for v in K.complex.vertices:
            if v in local:
                continue
            local[v] = next_id
            layers[next_id] = i + int(K.complex.colours[v] == Colour.BLUE)
            next_id += 1
        vertex_maps.append(MappingProxyType(local))
        simplices.update(
            frozenset(local[v] for v in s) for s in K.complex.maximal_simplices
        )
    expected = sum(K.volume for K in slices)
    if len(simplices) != expected:
        raise GluingError("glued slices share a maximal simplex")
    logger.debug(
        "stacked %d slices into a triangulation of volume %d",
        len(slices),
        expected,
    )
    return CausalTriangulation(
        slices=tuple(slices),
        interface_isos=tuple(resolved),
        layers=MappingProxyType(layers),
        simplices=frozenset(simplices),
        vertex_maps=tuple(vertex_maps),
    )


def glue_for_subadditivity(
    T1: CausalTriangulation,
    T0: CausalTriangulation,
    T2: CausalTriangulation,
    isos: Optional[
        Tuple[Optional[Mapping[int, int]], Optional[Mapping[int, int]]]
    ] = None,
) -> CausalTriangulation:
    """Glue three triangulations end to end as ``T1``, ``T0``, ``T2``.

    Parameters
    ----------
    T1 :
        Triangulation in :math:`\\mathcal{T}(\\Sigma_{in}, \\Sigma_{out})`.
    T0 :
        Connecting triangulation in
        :math:`\\mathcal{T}(\\Sigma_{out}, \\Sigma_{in})`.
    T2 :
        Triangulation in :math:`\\mathcal{T}(\\Sigma_{in}, \\Sigma_{out})`.
    isos :
        Optional pair of interface maps (out-boundary of ``T1`` to
        in-boundary of ``T0``, out-boundary of ``T0`` to in-boundary of
        ``T2``). Missing maps are found automatically.

    Returns
    -------
    :
        Triangulation of volume :math:`V_1 + V_0 + V_2` in which ``T1`` is
        the first :math:`N_1` slices and ``T2`` the last :math:`N_2` ones.

    Raises
    ------
    GluingError
        If boundaries are incompatible.
    """
    first, second = isos if isos is not None else (None, None)
    slices = T1.slices + T0.slices + T2.slices
    maps: List[Optional[Mapping[int, int]]] = []
    maps += list(T1.interface_isos) + [first]
    maps += list(T0.interface_isos) + [second]
    maps += list(T2.interface_isos)
    return stack_slices(slices, maps)


def connecting_isomorphisms(
    K1: ColouredComplex, K2: ColouredComplex
) -> List[Dict[int, int]]:
    """All uncoloured isomorphisms between two boundary complexes.

    Parameters
    ----------
    K1 :
        Source complex.
    K2 :
        Target complex.

    Returns
    -------
    :
        Every vertex bijection mapping maximal simplices of ``K1`` onto
        those of ``K2``, in a deterministic order.
    """
    def incidence(K: ColouredComplex) -> nx.Graph:
        graph = nx.Graph()
        for v in K.vertices:
            graph.add_node(("v", v), kind=0)
        for s in K.maximal_simplices:
            node = ("s", tuple(sorted(s)))
            graph.add_node(node, kind=1)
            graph.add_edges_from((node, ("v", v)) for v in s)
        return graph

    if K1.dimension != K2.dimension or K1.f_vector != K2.f_vector:
        return []
    matcher = GraphMatcher(
        incidence(K1),
        incidence(K2),
        node_match=lambda a, b: a["kind"] == b["kind"],
    )
    found = []
    for mapping in matcher.isomorphisms_iter():
        found.append(
            {
                u[1]: w[1]
                for u, w in mapping.items()
                if u[0] == "v"
            }
        )
    found.sort(key=lambda iso: sorted(iso.items()))
    return found

