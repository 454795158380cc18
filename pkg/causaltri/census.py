#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Census of causal slices and triangulations at small volume."""

import logging
import warnings
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from .causal import (
    CausalTriangulation,
    connecting_isomorphisms,
    glue_for_subadditivity,
    stack_slices,
)
from .census_table import TABLE_COLUMNS, BetaEstimate, CensusTable
from .complex import ColouredComplex
from .exceptions import (
    CausalError,
    FormatError,
    ParamError,
    ResourceLimitExceeded,
    StrategyNotFound,
)
from .strategies import available_strategies, enumerate_function

logger = logging.getLogger(__name__)


def census(
    vmax: int,
    strategy: str = "direct",
    genus: int = 0,
    max_states: int = 200000,
    jobs: int = 1,
    **kwargs,
) -> CensusTable:
    """Count causal slices up to a given volume.

    Parameters
    ----------
    vmax :
        Largest volume counted.
    strategy :
        Name of the strategy, to choose in
        :data:`causaltri.available_strategies`, or ``"both"`` to run every
        strategy and check that they agree.
    genus :
        Genus of the boundary components.
    max_states :
        Largest number of distinct partial complexes in a search layer.
    jobs :
        Number of worker processes.

    Returns
    -------
    :
        Table of isomorphism classes per volume.

    Raises
    ------
    StrategyNotFound
        If the requested strategy is not available.
    CausalError
        If strategies disagree when ``strategy`` is ``"both"``.

    Notes
    -----
    Extra keyword arguments are forwarded to the strategy.
    """
    kwargs.update(genus=genus, max_states=max_states, jobs=jobs)
    if strategy == "both":
        tables = [
            enumerate_function[name](vmax, **kwargs)
            for name in available_strategies
        ]
        for name, table in zip(available_strategies[1:], tables[1:]):
            if not tables[0].same_counts(table):
                differing = sorted(
                    v
                    for v in set(tables[0].forms) | set(table.forms)
                    if tables[0].forms.get(v) != table.forms.get(v)
                )
                raise CausalError(
                    f"strategies '{available_strategies[0]}' and '{name}' "
                    f"disagree at volumes {differing}"
                )
        merged = merge_tables(tables)
        merged.strategy = "both"
        merged.extras["tables"] = dict(zip(available_strategies, tables))
        return merged
    if strategy not in enumerate_function:
        raise StrategyNotFound(
            f"strategy '{strategy}' is not in the list "
            f"{available_strategies} of available strategies"
        )
    return enumerate_function[strategy](vmax, **kwargs)


def merge_tables(tables: Sequence[CensusTable]) -> CensusTable:
    """Union of the isomorphism classes of several tables.

    Parameters
    ----------
    tables :
        Tables counting the same objects, for instance the partitions of a
        parallel census.

    Returns
    -------
    :
        New table holding every class of every input table. The result does
        not depend on the order of the inputs, except for the strategy name
        and the representatives, taken from the first table listing them.
    """
    if not tables:
        raise ParamError("no table to merge")
    first = tables[0]
    merged = CensusTable(
        vmax=first.vmax,
        dimension=first.dimension,
        genus=first.genus,
        strategy=first.strategy,
        boundaries=first.boundaries,
    )
    for table in tables:
        merged.update(table)
    return merged


def _boundary_form(K: ColouredComplex) -> bytes:
    return K.canonical_form(respect_colours=False)


def count_fixed_boundaries(
    vmax: int,
    sigma_in: ColouredComplex,
    sigma_out: ColouredComplex,
    slices: Optional[CensusTable] = None,
    strategy: str = "direct",
    max_states: int = 200000,
    jobs: int = 1,
) -> CensusTable:
    """Count causal triangulations with fixed in and out boundaries.

    Parameters
    ----------
    vmax :
        Largest volume counted.
    sigma_in :
        In-boundary, a triangulated 2-sphere.
    sigma_out :
        Out-boundary, a triangulated 2-sphere.
    slices :
        Slice census up to ``vmax`` to compose. Computed with ``strategy``
        when missing.
    strategy :
        Census strategy used to count slices.
    max_states :
        Largest number of partial triangulations kept.
    jobs :
        Number of worker processes of the slice census.

    Returns
    -------
    :
        Table of foliated isomorphism classes per volume, with one causal
        triangulation per class.

    Notes
    -----
    Triangulations are stacks of slices. Starting from every slice whose
    red boundary is isomorphic to ``sigma_in``, stacks are extended by each
    slice whose red boundary is isomorphic to the current out-boundary,
    along every interface isomorphism, and deduplicated by layered
    canonical form. A stack is counted when its out-boundary is isomorphic
    to ``sigma_out``.
    """
    if slices is None:
        slices = census(
            vmax, strategy=strategy, max_states=max_states, jobs=jobs
        )
    in_form, out_form = _boundary_form(sigma_in), _boundary_form(sigma_out)
    table = CensusTable(
        vmax=vmax,
        strategy=slices.strategy,
        boundaries=(in_form, out_form),
    )
    by_boundary: Dict[bytes, List] = {}
    for volume in sorted(slices.forms):
        for K in slices.members(volume):
            by_boundary.setdefault(
                _boundary_form(K.red_boundary), []
            ).append(K)
    layer: Dict[bytes, CausalTriangulation] = {}
    for K in by_boundary.get(in_form, []):
        T = stack_slices([K])
        layer.setdefault(T.canonical_form(), T)
    stored = 0
    try:
        while layer:
            following: Dict[bytes, CausalTriangulation] = {}
            for form in sorted(layer):
                T = layer[form]
                if _boundary_form(T.out_boundary) == out_form:
                    table.add(T.volume, form, T)
                key = _boundary_form(T.out_boundary)
                for K in by_boundary.get(key, []):
                    if T.volume + K.volume > vmax:
                        continue
                    for iso in connecting_isomorphisms(
                        T.out_boundary, K.red_boundary
                    ):
                        U = stack_slices(
                            T.slices + (K,), list(T.interface_isos) + [iso]
                        )
                        following.setdefault(U.canonical_form(), U)
                        if stored + len(following) > max_states:
                            raise ResourceLimitExceeded(
                                f"more than {max_states} partial "
                                "triangulations"
                            )
            stored += len(following)
            layer = following
    except ResourceLimitExceeded as exn:
        logger.info("fixed-boundary census stopped: %s", exn)
        # stacks with one more slice than the current layer are missing
        num_slices = next(iter(layer.values())).num_slices
        smallest = (num_slices + 1) * min(slices.nonzero())
        table.truncate(smallest)
        warnings.warn(
            f"fixed-boundary census exceeded {max_states} partial "
            f"triangulations, volumes from {smallest} on were not enumerated"
        )
    if slices.partial and slices.limit is not None:
        table.truncate(slices.limit)
    return table


def estimate_beta(table: CensusTable, v0: int = 0) -> BetaEstimate:
    """Lower bounds on the growth constant from a census table.

    Parameters
    ----------
    table :
        Census table, for instance from :func:`count_fixed_boundaries`.
    v0 :
        Reference volume :math:`V_0`, the volume of the connecting
        triangulation used to make the counts superadditive.

    Returns
    -------
    :
        At every volume :math:`V = W + V_0` with :math:`N(W) > 0`, the value
        :math:`\\log N(V - V_0) / V`, the running infimum of its opposite
        and the resulting lower bounds on the growth constant.

    Raises
    ------
    ParamError
        If the table is empty or ``v0`` is negative.
    """
    if v0 < 0:
        raise ParamError(f"reference volume should be nonnegative, got {v0}")
    nonzero = table.nonzero()
    if not nonzero:
        raise ParamError("cannot estimate growth from an empty table")
    volumes = np.array([w + v0 for w in nonzero], dtype=int)
    counts = np.array(list(nonzero.values()), dtype=float)
    log_n_over_v = np.log(counts) / volumes
    running_inf = np.minimum.accumulate(-log_n_over_v)
    return BetaEstimate(
        v0=v0,
        volumes=volumes,
        log_n_over_v=log_n_over_v,
        running_inf=running_inf,
        beta_lower=-running_inf,
    )


def verify_subadditivity(
    t0: CausalTriangulation,
    family1: Sequence[CausalTriangulation],
    family2: Sequence[CausalTriangulation],
) -> bool:
    """Check that gluing through a fixed triangulation is injective.

    Parameters
    ----------
    t0 :
        Connecting triangulation from the out-boundary of the families back
        to their in-boundary.
    family1 :
        Pairwise non-isomorphic triangulations of the same volume and
        number of slices.
    family2 :
        Same as ``family1``, possibly at another volume.

    Returns
    -------
    :
        True if the glued triangulations ``T1 T0 T2`` are pairwise
        non-isomorphic, which shows
        :math:`N(V_1) N(V_2) \\leq N(V_1 + V_2 + V_0)`.
    """
    forms = set()
    for T1 in family1:
        for T2 in family2:
            forms.add(glue_for_subadditivity(T1, t0, T2).canonical_form())
    expected = len(family1) * len(family2)
    logger.debug("%d distinct gluings out of %d pairs", len(forms), expected)
    return len(forms) == expected


def subadditivity_violations(
    table: CensusTable, v0: int
) -> List[Tuple[int, int]]:
    """Tabulated pairs breaking :math:`N(V_1) N(V_2) \\leq N(V_1+V_2+V_0)`.

    Parameters
    ----------
    table :
        Fixed-boundary census table.
    v0 :
        Volume of the connecting triangulation.

    Returns
    -------
    :
        Pairs :math:`(V_1, V_2)` with :math:`V_1 \\leq V_2` whose glued
        volume is tabulated and whose counts break the inequality.
    """
    top = table.limit - 1 if table.partial and table.limit else table.vmax
    found = []
    for v1 in range(1, top + 1):
        for v2 in range(v1, top + 1 - v1 - v0):
            glued = table.count(v1 + v2 + v0)
            if table.count(v1) * table.count(v2) > glued:
                found.append((v1, v2))
    return found


def write_golden(table: CensusTable, path: Union[str, Path]) -> None:
    """Write census counts to a golden CSV file."""
    table.to_frame().to_csv(path, index=False, lineterminator="\n")


def compare_golden(table: CensusTable, path: Union[str, Path]) -> bool:
    """Compare census counts with a golden CSV file.

    Parameters
    ----------
    table :
        Freshly computed table.
    path :
        Golden file. If it does not exist yet, it is written from ``table``
        and the comparison succeeds.

    Returns
    -------
    :
        True if counts agree on every volume present in both.

    Raises
    ------
    FormatError
        If the golden file is not a census CSV.
    """
    path = Path(path)
    if not path.exists():
        write_golden(table, path)
        warnings.warn(f"golden file {path} did not exist and was written")
        return True
    try:
        golden = pd.read_csv(path)
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as exn:
        raise FormatError(f"cannot read golden file {path}: {exn}") from exn
    if list(golden.columns) != TABLE_COLUMNS:
        raise FormatError(
            f"golden file {path} has columns {list(golden.columns)}, "
            f"expected {TABLE_COLUMNS}"
        )
    fresh = table.to_frame()
    if table.partial and table.limit is not None:
        fresh = fresh[fresh["V"] < table.limit]
    merged = fresh.merge(golden, on="V", suffixes=("", "_golden"))
    return bool((merged["count"] == merged["count_golden"]).all())
