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
Flow indices and the normalization constants of the Lax flows.
"""

from __future__ import annotations

__all__ = [
    'FlowIndex',
    'FAMILIES',
    'c_positive',
    'c_log',
    'c_negative',
    'double_factorial',
]

import math
import dataclasses

from sympy import factorial2

from ..jetring import QQ, Rational, rational

FAMILIES = ('t1', 't0neg', 't0', 'principal', 'fvh', 'volterra')


def double_factorial(n: int) -> int:
    """
    ``n!!`` with ``(-1)!! = 1``.
    """

    return int(factorial2(n))


def c_positive(p: int) -> Rational:
    """
    ``c_(1,p) = (-1)^(p+1) 2^(3p+2) / (2p+1)!!``.
    """

    return QQ((-1) ** (p + 1) * 2 ** (3 * p + 2), double_factorial(2 * p + 1))


def c_log(p: int) -> Rational:
    """
    ``c_(0,p) = (-1)^(p+1) 2^(2p-1) / p!``.
    """

    return QQ((-1) ** (p + 1), math.factorial(p)) * QQ(2) ** (2 * p - 1)


def c_negative(p: int) -> Rational:
    """
    ``c_(0,-p) = -(p-1)! / 4^p``.
    """

    return QQ(-math.factorial(p - 1), 4 ** p)


@dataclasses.dataclass(frozen = True)
class FlowIndex:
    """
    A time of one of the hierarchies.

    Attributes:
        family:
            ``t1`` (positive flows ``t^(1,p)``), ``t0neg`` (negative flows
            ``t^(0,-p)``), ``t0`` (logarithmic flows ``t^(0,p)``),
            ``principal`` (dispersionless flows ``t^(alpha,p)``), ``fvh``
            (fractional Volterra times ``T_s``) or ``volterra`` (``T~_p``).
        p:
            Level; for ``fvh`` the rational time label ``s``.
        alpha:
            Only for ``principal``: ``0`` or ``1``.
    """

    family: str
    p: int | Rational
    alpha: int | None = None


    def __post_init__(self):

        if self.family not in FAMILIES:

            raise ValueError(f'Unknown flow family: `{self.family}`.')

        if self.family == 'fvh':

            s = rational(self.p)
            object.__setattr__(self, 'p', s)
            valid = (
                s.denominator == 1 and s >= 1 or
                s.denominator == 2 and s < 0
            )

        else:

            object.__setattr__(self, 'p', int(self.p))
            valid = {
                't1': self.p >= 0,
                't0neg': self.p >= 1,
                't0': self.p >= 0,
                'volterra': self.p >= 1,
                'principal': self.alpha == 0 or (
                    self.alpha == 1 and self.p >= 0
                ),
            }[self.family]

        if not valid:

            raise ValueError(f'Invalid flow index: {self}.')


    @classmethod
    def parse(cls, text: str) -> FlowIndex:
        """
        Read indices like ``t1,0``, ``t0neg,2``, ``principal,1,0`` or
        ``fvh,-1/2``.
        """

        family, *rest = [x.strip() for x in text.split(',')]

        if family == 'principal':

            alpha, p = rest

            return cls(family, int(p), int(alpha))

        p, = rest

        return cls(family, rational(p) if family == 'fvh' else int(p))


    @property
    def label(self) -> str:

        if self.family == 't1':

            return f't^(1,{self.p})'

        if self.family == 't0neg':

            return f't^(0,-{self.p})'

        if self.family == 't0':

            return f't^(0,{self.p})'

        if self.family == 'principal':

            return f't^({self.alpha},{self.p}) [principal]'

        if self.family == 'fvh':

            return f'T_{self.p}'

        return f'T~_{self.p}'


    def __str__(self) -> str:

        return self.label
