#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Output from a census strategy."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Set

import numpy as np
import pandas as pd

from .exceptions import ParamError

TABLE_COLUMNS = ["V", "count", "strategy", "genus"]
BETA_COLUMNS = ["V", "logN_over_V", "running_inf", "beta_lower"]


@dataclass(frozen=False)
class CensusTable:
    """Isomorphism classes counted per volume.

    Attributes
    ----------
    vmax :
        Largest volume enumerated.

    dimension :
        Dimension of the counted slices or triangulations.

    genus :
        Genus of the boundary components.

    strategy :
        Name of the strategy that filled the table.

    forms :
        Canonical forms of the isomorphism classes, per volume. Counts are
        the sizes of these sets.

    representatives :
        One slice (or causal triangulation) per canonical form.

    filtered :
        Canonical forms of the candidate midsections rejected by
        reconstruction, per volume.

    raw :
        Canonical forms of the edge-coloured triangulations met by the
        midsection strategy, per number of triangles.

    uncoloured :
        Canonical forms of the same triangulations with colours forgotten,
        per number of triangles.

    boundaries :
        Canonical forms of the fixed in and out boundaries, if any.

    partial :
        True if the enumeration hit its memory cap. Volumes from
        :attr:`limit` on were then dropped from the table.

    limit :
        First volume that was not completely enumerated, if partial.

    extras :
        Other outputs, specific to each strategy.
    """

    vmax: int
    dimension: int = 3
    genus: int = 0
    strategy: str = "direct"
    forms: Dict[int, Set[bytes]] = field(default_factory=dict)
    representatives: Dict[bytes, Any] = field(
        default_factory=dict, repr=False
    )
    filtered: Dict[int, Set[bytes]] = field(default_factory=dict)
    raw: Dict[int, Set[bytes]] = field(default_factory=dict, repr=False)
    uncoloured: Dict[int, Set[bytes]] = field(
        default_factory=dict, repr=False
    )
    boundaries: Optional[tuple] = None
    partial: bool = False
    limit: Optional[int] = None
    extras: dict = field(default_factory=dict, repr=False)

    def add(self, volume: int, form: bytes, representative: Any) -> bool:
        """Record an isomorphism class.

        Parameters
        ----------
        volume :
            Volume of the class.
        form :
            Canonical form of the class.
        representative :
            Member of the class, kept if the form is new.

        Returns
        -------
        :
            True if the class was not in the table yet.
        """
        forms = self.forms.setdefault(volume, set())
        if form in forms:
            return False
        forms.add(form)
        self.representatives[form] = representative
        return True

    def count(self, volume: int) -> int:
        """Number of isomorphism classes of a given volume."""
        return len(self.forms.get(volume, ()))

    def counts(self) -> Dict[int, int]:
        """Counts for every volume from 1 to :attr:`vmax`."""
        return {v: self.count(v) for v in range(1, self.vmax + 1)}

    def nonzero(self) -> Dict[int, int]:
        """Counts of the volumes with at least one class."""
        return {v: n for v, n in self.counts().items() if n > 0}

    def filtered_counts(self) -> Dict[int, int]:
        """Number of rejected candidate midsections per volume."""
        return {v: len(f) for v, f in sorted(self.filtered.items()) if f}

    def colouring_counts(self) -> Dict[int, tuple]:
        """Raw and uncoloured triangulation counts per number of triangles.

        Returns
        -------
        :
            Map from the number of triangles :math:`N` to the pair (number
            of edge-coloured triangulations, number of underlying
            triangulations).
        """
        return {
            n: (len(self.raw[n]), len(self.uncoloured.get(n, ())))
            for n in sorted(self.raw)
        }

    def members(self, volume: int) -> List[Any]:
        """Representatives of the classes of a volume, in form order."""
        return [
            self.representatives[form]
            for form in sorted(self.forms.get(volume, ()))
        ]

    def truncate(self, volume: int) -> None:
        """Drop volumes from ``volume`` on and flag the table as partial."""
        for table in (self.forms, self.filtered):
            for v in [v for v in table if v >= volume]:
                dropped = table.pop(v)
                if table is self.forms:
                    for form in dropped:
                        self.representatives.pop(form, None)
        self.partial = True
        self.limit = volume if self.limit is None else min(self.limit, volume)

    def update(self, other: "CensusTable") -> None:
        """Merge the classes of another table into this one.

        The merge is a union of canonical forms, hence associative and
        commutative. For each form the representative already stored is
        kept.

        Raises
        ------
        ParamError
            If the two tables count different objects.
        """
        if (self.dimension, self.genus, self.boundaries) != (
            other.dimension,
            other.genus,
            other.boundaries,
        ):
            raise ParamError("cannot merge tables counting different objects")
        self.vmax = max(self.vmax, other.vmax)
        for volume, forms in other.forms.items():
            for form in forms:
                self.add(volume, form, other.representatives.get(form))
        for mine, theirs in (
            (self.filtered, other.filtered),
            (self.raw, other.raw),
            (self.uncoloured, other.uncoloured),
        ):
            for key, forms in theirs.items():
                mine.setdefault(key, set()).update(forms)
        if other.partial:
            self.truncate(other.limit if other.limit else other.vmax + 1)
        elif self.partial and self.limit is not None:
            self.truncate(self.limit)

    def to_frame(self) -> pd.DataFrame:
        """Counts as a data frame with columns ``V,count,strategy,genus``."""
        counts = self.counts()
        return pd.DataFrame(
            {
                "V": list(counts),
                "count": list(counts.values()),
                "strategy": self.strategy,
                "genus": self.genus,
            },
            columns=TABLE_COLUMNS,
        )

    def same_counts(self, other: "CensusTable") -> bool:
        """Check whether two tables hold the same classes."""
        volumes = set(self.forms) | set(other.forms)
        return all(
            self.forms.get(v, set()) == other.forms.get(v, set())
            for v in volumes
        )


@dataclass(frozen=True)
class BetaEstimate:
    """Finite-volume lower bounds on the growth constant.

    Attributes
    ----------
    v0 :
        Reference volume: counts at :math:`V - V_0` are compared to
        :math:`V`.
    volumes :
        Volumes :math:`V` at which the counts are nonzero.
    log_n_over_v :
        :math:`\\log N(V - V_0) / V` at each volume.
    running_inf :
        Running infimum of :math:`-\\log N(V - V_0) / V`.
    beta_lower :
        Opposite of the running infimum, a nondecreasing sequence of lower
        bounds for the growth constant.
    bounds_only :
        Always True: finite volumes give bounds, not the limit.
    """

    v0: int
    volumes: np.ndarray
    log_n_over_v: np.ndarray
    running_inf: np.ndarray
    beta_lower: np.ndarray
    bounds_only: bool = True

    def to_frame(self) -> pd.DataFrame:
        """Estimates as a data frame with columns
        ``V,logN_over_V,running_inf,beta_lower``."""
        return pd.DataFrame(
            {
                "V": self.volumes,
                "logN_over_V": self.log_n_over_v,
                "running_inf": self.running_inf,
                "beta_lower": self.beta_lower,
            },
            columns=BETA_COLUMNS,
        )
