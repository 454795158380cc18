#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Canonical labelling of labelled hypergraphs.

Simplicial complexes, midsection cell complexes and layered causal
triangulations are all encoded as a finite vertex set with integer vertex
labels, plus a family of labelled hyperedges (vertex subsets). Two such
structures are isomorphic if and only if their canonical forms are equal.

The labelling is computed by individualization-refinement: vertex classes are
refined by colour and incidence signatures until stable, then the first
non-singleton class is split by individualizing each of its vertices in turn.
Every leaf of the search tree yields a relabelled encoding and the
lexicographically least one is kept.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple

Hyperedge = Tuple[int, FrozenSet[Hashable]]
Encoding = Tuple[int, Tuple[int, ...], Tuple[Tuple[int, Tuple[int, ...]], ...]]


@dataclass(frozen=True)
class Labelling:
    """Result of a canonical labelling.

    Attributes
    ----------
    form :
        Byte string identifying the isomorphism class.
    relabel :
        Map from original vertices to canonical labels ``0, ..., n - 1``.
    """

    form: bytes
    relabel: Dict[Hashable, int]


class _Hypergraph:
    """Incidence structure shared by all nodes of the search tree."""

    def __init__(
        self,
        vertex_labels: Dict[Hashable, int],
        hyperedges: Sequence[Hyperedge],
    ) -> None:
        self.vertices: List[Hashable] = sorted(vertex_labels, key=repr)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.labels = [vertex_labels[v] for v in self.vertices]
        self.edges: List[Tuple[int, Tuple[int, ...]]] = []
        for label, members in hyperedges:
            self.edges.append(
                (label, tuple(sorted(self.index[v] for v in members)))
            )
        self.incidence: List[List[int]] = [[] for _ in self.vertices]
        for k, (_, members) in enumerate(self.edges):
            for i in members:
                self.incidence[i].append(k)

    def refine(self, colours: List[int]) -> List[int]:
        """Refine a vertex colouring until it is equitable.

        The new colour of a vertex is the rank of the pair (old colour,
        sorted multiset of the hyperedges through it described by their label
        and the old colours of their members). Ranks are assigned in sorted
        order of these keys, so the refinement never reorders existing
        classes and commutes with isomorphisms.
        """
        n_classes = len(set(colours))
        while True:
            keys = []
            for i in range(len(colours)):
                signature = sorted(
                    (
                        self.edges[k][0],
                        tuple(sorted(colours[j] for j in self.edges[k][1])),
                    )
                    for k in self.incidence[i]
                )
                keys.append((colours[i], tuple(signature)))
            ranks = {key: r for r, key in enumerate(sorted(set(keys)))}
            colours = [ranks[key] for key in keys]
            if len(ranks) == n_classes:
                return colours
            n_classes = len(ranks)

    def encode(self, colours: List[int]) -> Encoding:
        """Relabel the hypergraph along a discrete colouring."""
        edges = sorted(
            (label, tuple(sorted(colours[i] for i in members)))
            for label, members in self.edges
        )
        labels = [0] * len(colours)
        for i, c in enumerate(colours):
            labels[c] = self.labels[i]
        return (len(colours), tuple(labels), tuple(edges))


def _individualize(colours: List[int], target: int) -> List[int]:
    """Split the class of ``target`` so that it comes first in its class."""
    c = colours[target]
    return [
        2 * x + (1 if x == c and i != target else 0)
        for i, x in enumerate(colours)
    ]


def _search(
    graph: _Hypergraph, colours: List[int]
) -> Tuple[Encoding, List[int]]:
    colours = graph.refine(colours)
    n = len(colours)
    if len(set(colours)) == n:
        return graph.encode(colours), colours
    sizes: Dict[int, int] = {}
    for c in colours:
        sizes[c] = sizes.get(c, 0) + 1
    # first smallest non-singleton class
    target_class = min(
        (c for c, size in sizes.items() if size > 1),
        key=lambda c: (sizes[c], c),
    )
    best: Optional[Tuple[Encoding, List[int]]] = None
    for i in range(n):
        if colours[i] != target_class:
            continue
        candidate = _search(graph, _individualize(colours, i))
        if best is None or candidate[0] < best[0]:
            best = candidate
    assert best is not None
    return best


def canonical_labelling(
    vertex_labels: Dict[Hashable, int],
    hyperedges: Sequence[Hyperedge],
) -> Labelling:
    """Compute the canonical labelling of a labelled hypergraph.

    Parameters
    ----------
    vertex_labels :
        Integer label of every vertex (for instance its colour).
    hyperedges :
        Pairs ``(label, members)`` where ``members`` is a set of vertices.

    Returns
    -------
    :
        Canonical form and canonical relabelling of the vertices.

    Notes
    -----
    The form is invariant under renaming of the vertices and sensitive to
    vertex and hyperedge labels. The search is exponential in the worst case
    but desk-scale complexes (a few hundred simplices) are handled quickly.
    """
    graph = _Hypergraph(vertex_labels, hyperedges)
    if not graph.vertices:
        encoding: Encoding = (0, (), ())
        return Labelling(repr(encoding).encode("ascii"), {})
    encoding, colours = _search(graph, list(graph.labels))
    relabel = {v: colours[i] for i, v in enumerate(graph.vertices)}
    return Labelling(repr(encoding).encode("ascii"), relabel)
