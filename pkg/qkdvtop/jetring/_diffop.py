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
Linear differential operators with differential polynomial coefficients.
"""

from __future__ import annotations

__all__ = ['DiffOp']

from typing import Mapping

from sympy import binomial

from ._diffpoly import DiffPoly, as_diffpoly


class DiffOp:
    """
    The operator ``sum_k c_k * d^k/dx^k``.

    Args:
        coeffs:
            Coefficient ``c_k`` for each derivative order ``k``.
        field:
            Field of the coefficients.
    """

    __slots__ = ('coeffs', 'field')

    def __init__(self, coeffs: Mapping[int, DiffPoly], field: str = 'v'):

        self.field = field
        self.coeffs = {
            k: as_diffpoly(c, field)
            for k, c in sorted(coeffs.items())
            if not as_diffpoly(c, field).is_zero
        }


    @property
    def order(self) -> int:

        return max(self.coeffs, default = 0)


    @property
    def is_zero(self) -> bool:

        return not self.coeffs


    def apply(self, f: DiffPoly) -> DiffPoly:
        """
        Apply the operator to a differential polynomial.
        """

        from ._calculus import dx

        result = DiffPoly.zero(self.field)
        derivative = f

        for k in range(self.order + 1):

            if k in self.coeffs:

                result = result + self.coeffs[k] * derivative

            if k < self.order:

                derivative = dx(derivative)

        return result


    __call__ = apply


    def __add__(self, other: DiffOp) -> DiffOp:

        coeffs = dict(self.coeffs)

        for k, c in other.coeffs.items():

            coeffs[k] = coeffs.get(k, DiffPoly.zero(self.field)) + c

        return DiffOp(coeffs, self.field)


    def __neg__(self) -> DiffOp:

        return DiffOp({k: -c for k, c in self.coeffs.items()}, self.field)


    def __sub__(self, other: DiffOp) -> DiffOp:

        return self + (-other)


    def __matmul__(self, other: DiffOp) -> DiffOp:
        """
        Composition by the Leibniz rule:
        ``a d^i . b d^j = sum_r C(i, r) a d^r(b) d^(i+j-r)``.
        """

        from ._calculus import dx_n

        coeffs = {}

        for i, a in self.coeffs.items():

            for j, b in other.coeffs.items():

                for r in range(i + 1):

                    term = int(binomial(i, r)) * a * dx_n(b, r)
                    k = i + j - r
                    coeffs[k] = coeffs.get(k, DiffPoly.zero(self.field)) + term

        return DiffOp(coeffs, self.field)


    def adjoint(self) -> DiffOp:
        """
        Formal adjoint: ``(c d^k)^+ = (-d)^k . c``.
        """

        from ._calculus import dx_n

        coeffs = {}

        for k, c in self.coeffs.items():

            sign = -1 if k % 2 else 1

            for r in range(k + 1):

                term = sign * int(binomial(k, r)) * dx_n(c, k - r)
                coeffs[r] = coeffs.get(r, DiffPoly.zero(self.field)) + term

        return DiffOp(coeffs, self.field)


    def __eq__(self, other) -> bool:

        if not isinstance(other, DiffOp):

            return NotImplemented

        return self.coeffs == other.coeffs


    def __hash__(self) -> int:

        return hash(tuple(self.coeffs.items()))


    def __str__(self) -> str:

        if not self.coeffs:

            return '0'

        return ' + '.join(
            f'({c})' + ('' if k == 0 else '*D' if k == 1 else f'*D^{k}')
            for k, c in self.coeffs.items()
        )


    def __repr__(self) -> str:

        return f'<DiffOp {self}>'
