#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Run the command line with ``python -m causaltri``."""

from .cli import main

main()
