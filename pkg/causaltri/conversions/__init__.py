#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Convert midsections from and to complexes with black edges."""

from .reassemble_4d import reassemble_4d
from .subdivide_4d import subdivide_4d
from .triangulate_quadrangles import triangulate_quadrangles

__all__ = [
    "reassemble_4d",
    "subdivide_4d",
    "triangulate_quadrangles",
]
