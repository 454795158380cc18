#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""
Exceptions from causaltri.

Errors raised by scipy, networkx or pandas while working on complexes are
caught and re-thrown as causaltri-owned exceptions so that callers only need
to know about this hierarchy.
"""


class CausalError(Exception):
    """Base class for causaltri exceptions."""


class ComplexError(CausalError):
    """Exception raised when a simplicial complex is malformed."""


class FormatError(CausalError):
    """Exception raised when a file does not parse under its format."""


class SurfaceError(CausalError):
    """Exception raised when a 2-complex is not a closed oriented surface."""


class SliceError(CausalError):
    """Exception raised when a complex is not a (generalized) causal slice."""


class ColourError(SliceError):
    """Exception raised when the colouring of a slice is illegal."""


class GluingError(CausalError):
    """Exception raised when slices cannot be glued along their boundaries."""


class ConstructionError(CausalError):
    """Exception raised when a builder precondition does not hold."""


class ReconstructionError(CausalError):
    """Exception raised when a cell complex is not the midsection of a
    slice."""


class ObstructionError(ReconstructionError):
    """Exception raised when two corners are joined by a red and a blue
    path."""


class CollisionError(ReconstructionError):
    """Exception raised when reconstructed simplices collide or collapse."""


class ValidationError(ReconstructionError, SliceError):
    """Exception raised when a reconstructed complex is not a valid slice."""


class SubdivisionError(CausalError):
    """Exception raised when a black-edge subdivision cannot be
    reassembled."""


class ResourceLimitExceeded(CausalError):
    """Exception raised when a census exceeds its configured memory cap."""


class StrategyNotFound(CausalError):
    """Exception raised when a requested census strategy is not found."""


class ParamError(CausalError):
    """Exception raised when function parameters are incorrect."""
