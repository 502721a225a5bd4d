#!/usr/bin/env python

#
# This file is part of the `qkdvtop` Python module
#
# Copyright 2024
# qkdvtop developers
#
# Distributed under the GPLv3 license
# See the file `LICENSE` or read a copy at
# https://www.gnu.org/licenses/gpl-3.0.txt
#

"""
Exceptions raised by the engine.

Every failure carries the object that witnesses it, so a caller can print
the offending expression instead of a bare message.
"""

from __future__ import annotations

__all__ = [
    'QkdvtopError',
    'NotExact',
    'DivisionByZero',
    'NotInvertible',
    'OddPower',
    'WindowUnderflow',
    'Mismatch',
    'HelmholtzFailure',
    'InconsistentSystem',
    'RingEscape',
    'CompatibilityFailure',
    'LaurentRangeError',
    'CacheCorruption',
]

from typing import Any


class QkdvtopError(Exception):
    """
    Base class of all errors raised by the package.
    """


class NotExact(QkdvtopError, ValueError):
    """
    A differential polynomial is not a total x-derivative.

    Attributes:
        witness:
            The nonzero variational derivative of the argument.
    """

    def __init__(self, message: str, witness: Any = None):

        super().__init__(message)
        self.witness = witness


class DivisionByZero(QkdvtopError, ZeroDivisionError):
    """
    Numeric evaluation hit a negative power of a zero value.
    """


class NotInvertible(QkdvtopError, ValueError):
    """
    The leading coefficient of a series is not a monomial unit.
    """


class OddPower(QkdvtopError, ValueError):
    """
    An odd power of epsilon showed up where only even powers may occur.
    """

    def __init__(self, message: str, order: int | None = None):

        super().__init__(message)
        self.order = order


class WindowUnderflow(QkdvtopError, ValueError):
    """
    An operator coefficient outside the known window was requested.
    """

    def __init__(self, message: str, exponent: Any = None):

        super().__init__(message)
        self.exponent = exponent


class Mismatch(QkdvtopError):
    """
    Two sides of an identity differ.

    Attributes:
        difference:
            The nonzero difference, as computed.
        where:
            Label of the failing check or position (e.g. an epsilon order).
    """

    def __init__(
            self,
            message: str,
            difference: Any = None,
            where: Any = None,
        ):

        super().__init__(message)
        self.difference = difference
        self.where = where


class HelmholtzFailure(QkdvtopError, ValueError):
    """
    A gradient fails the self-adjointness test or cannot be integrated.
    """


class InconsistentSystem(QkdvtopError, ArithmeticError):
    """
    The loop equation residual does not vanish after solving.
    """

    def __init__(self, message: str, residual: Any = None):

        super().__init__(message)
        self.residual = residual


class RingEscape(QkdvtopError, ValueError):
    """
    A solved gradient leaves the permitted Laurent ring.
    """

    def __init__(self, message: str, jet_order: int | None = None):

        super().__init__(message)
        self.jet_order = jet_order


class CompatibilityFailure(QkdvtopError, ValueError):
    """
    Mixed second derivatives of the free energy are not symmetric.
    """

    def __init__(
            self,
            message: str,
            pair: tuple[int, int] | None = None,
            difference: Any = None,
        ):

        super().__init__(message)
        self.pair = pair
        self.difference = difference


class LaurentRangeError(QkdvtopError, ValueError):
    """
    Negative exponent requested on a jet of order two or higher.
    """


class CacheCorruption(QkdvtopError, OSError):
    """
    A cached genus solution failed its checksum.
    """

    def __init__(self, message: str, path: str | None = None):

        super().__init__(message)
        self.path = path
