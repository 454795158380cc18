#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: LGPL-3.0-or-later
# Copyright 2024 the causaltri contributors

"""Vertex and edge colours."""

from enum import IntEnum

from .exceptions import FormatError


class Colour(IntEnum):
    """Colour of a vertex of a causal slice.

    The integer values fix the order ``RED < BLUE`` used by canonical forms.
    Red vertices make up the in-boundary, blue vertices the out-boundary.
    """

    RED = 0
    BLUE = 1

    @property
    def token(self) -> str:
        """One-letter token used by the text formats."""
        return "R" if self is Colour.RED else "B"

    @property
    def opposite(self) -> "Colour":
        """The other colour."""
        return Colour.BLUE if self is Colour.RED else Colour.RED

    @staticmethod
    def from_token(token: str) -> "Colour":
        """Parse a one-letter colour token.

        Parameters
        ----------
        token :
            Either ``"R"`` or ``"B"``.

        Returns
        -------
        :
            Corresponding colour.

        Raises
        ------
        FormatError
            If the token is not a vertex colour.
        """
        if token == "R":
            return Colour.RED
        if token == "B":
            return Colour.BLUE
        raise FormatError(f"unknown vertex colour token '{token}'")


class EdgeColour(IntEnum):
    """Colour of an edge of a midsection or of its subdivision.

    Black edges are the diagonals introduced when quadrangles or prisms are
    split into simplices.
    """

    RED = 0
    BLUE = 1
    BLACK = 2

    @property
    def token(self) -> str:
        """One-letter token used by the text formats."""
        return "RBK"[int(self)]

    @staticmethod
    def from_token(token: str) -> "EdgeColour":
        """Parse a one-letter edge colour token (``R``, ``B`` or ``K``)."""
        if len(token) != 1 or token not in "RBK":
            raise FormatError(f"unknown edge colour token '{token}'")
        return EdgeColour("RBK".index(token))

    @staticmethod
    def of(colour: Colour) -> "EdgeColour":
        """Edge colour matching a vertex colour."""
        return EdgeColour.RED if colour is Colour.RED else EdgeColour.BLUE
