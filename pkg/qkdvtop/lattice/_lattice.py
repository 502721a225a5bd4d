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
The lattice of admissible shift exponents.
"""

from __future__ import annotations

__all__ = ['HalfLattice']

import dataclasses

from .. import _conf
from ..jetring import Rational, rational


@dataclasses.dataclass(frozen = True)
class HalfLattice:
    """
    Shift exponents that are integer multiples of ``1 / denominator``.
    """

    denominator: int = 2


    @classmethod
    def default(cls) -> HalfLattice:

        return cls(int(_conf.get('lattice_denominator') or 2))


    @property
    def step(self) -> Rational:

        return rational(1) / self.denominator


    def contains(self, p) -> bool:

        return (rational(p) * self.denominator).denominator == 1


    def check(self, p) -> Rational:
        """
        The exponent as a rational.

        Raises:
            ValueError: ``p`` is off the lattice.
        """

        p = rational(p)

        if not self.contains(p):

            raise ValueError(
                f'Shift exponent {p} is not a multiple of '
                f'1/{self.denominator}.'
            )

        return p


    def points(self, lo, hi) -> list[Rational]:
        """
        Lattice points from ``lo`` to ``hi``, both included.
        """

        lo = self.check(lo)
        span = (self.check(hi) - lo) * self.denominator
        n = int(span.numerator) // int(span.denominator)

        return [lo + k * self.step for k in range(n + 1)]
