#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Import available census strategies."""

from typing import Callable, Dict, List

from ..census_table import CensusTable
from .direct_ import enumerate_slices
from .midsection_ import enumerate_via_midsections

available_strategies: List[str] = []
enumerate_function: Dict[str, Callable[..., CensusTable]] = {}

# Gluing tetrahedra
# =================

enumerate_function["direct"] = enumerate_slices
available_strategies.append("direct")

# Midsections and reconstruction
# ==============================

enumerate_function["midsection"] = enumerate_via_midsections
available_strategies.append("midsection")

__all__ = [
    "available_strategies",
    "enumerate_function",
    "enumerate_slices",
    "enumerate_via_midsections",
]
