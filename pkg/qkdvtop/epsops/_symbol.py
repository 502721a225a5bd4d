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
Operators ``g(eps dx)`` given by the Laurent expansion of a symbol ``g(xi)``.
"""

from __future__ import annotations

__all__ = [
    'XI',
    'SymbolOp',
    'symbol_apply',
    'shift_symbol',
    'tanh_half_symbol',
    'one_plus_shift_inverse_symbol',
    'log_kernel_symbol',
    'sinhc_symbol',
]

import math
import functools
from typing import Sequence

import sympy as sp

from .. import _errors
from ..jetring import QQ, DiffPoly, LogExtendedPoly, Rational, rational
from ..jetring import dx, antiderivative
from ._series import EpsSeries

XI = sp.Symbol('xi')


class SymbolOp:
    """
    A truncated Laurent series ``g(xi) = sum_k c_k xi^(valuation + k)``.

    The coefficients are known through ``xi^precision``. Leading zeros are
    absorbed into the valuation; a negative valuation is a pole at zero.

    Args:
        coeffs:
            Rational coefficients starting at ``xi^valuation``.
        valuation:
            Power of ``xi`` of the first coefficient.
        precision:
            Highest known power; defaults to the last given coefficient.
    """

    __slots__ = ('_coeffs', 'valuation', 'precision')

    def __init__(
            self,
            coeffs: Sequence = (),
            valuation: int = 0,
            precision: int | None = None,
        ):

        coeffs = [rational(c) for c in coeffs]
        if precision is None:

            precision = valuation + len(coeffs) - 1

        coeffs = coeffs[:max(precision - valuation + 1, 0)]
        coeffs.extend([QQ(0)] * (precision - valuation + 1 - len(coeffs)))

        while coeffs and not coeffs[0]:

            coeffs.pop(0)
            valuation += 1

        self._coeffs = tuple(coeffs)
        self.valuation = valuation if coeffs else precision + 1
        self.precision = precision


    @classmethod
    def from_powers(cls, powers: dict[int, object], precision: int) -> SymbolOp:

        powers = {p: c for p, c in powers.items() if p <= precision}
        low = min(powers, default = precision + 1)

        return cls(
            [powers.get(p, 0) for p in range(low, precision + 1)],
            valuation = low,
            precision = precision,
        )


    @classmethod
    def from_expr(
            cls,
            expr: sp.Expr,
            precision: int,
            symbol: sp.Symbol = XI,
        ) -> SymbolOp:
        """
        Laurent expansion of a sympy expression at ``xi = 0``.
        """

        series = sp.series(expr, symbol, 0, precision + 1).removeO()
        powers = {}

        for term in sp.Add.make_args(sp.expand(series)):

            coef, exp = term.as_coeff_exponent(symbol)

            if coef:

                powers[int(exp)] = QQ.from_sympy(coef)

        return cls.from_powers(powers, precision)


    @classmethod
    def xi_power(cls, n: int, precision: int) -> SymbolOp:

        return cls([1], valuation = n, precision = precision)


    @property
    def taylor(self) -> tuple[Rational, ...]:
        """
        Coefficients from ``xi^valuation`` through ``xi^precision``.
        """

        return self._coeffs


    @property
    def is_zero(self) -> bool:

        return not self._coeffs


    @property
    def pole_order(self) -> int:

        return max(0, -self.valuation) if self._coeffs else 0


    def coefficient(self, power: int) -> Rational:

        if power > self.precision:

            raise ValueError(
                f'Symbol known only through xi^{self.precision}, '
                f'xi^{power} requested.'
            )

        k = power - self.valuation

        return self._coeffs[k] if 0 <= k < len(self._coeffs) else QQ(0)


    def _span(self, low: int, high: int) -> list[Rational]:

        return [self.coefficient(p) for p in range(low, high + 1)]


    def __add__(self, other):

        if isinstance(other, (int, Rational)):

            other = SymbolOp([other], precision = self.precision)

        if not isinstance(other, SymbolOp):

            return NotImplemented

        low = min(self.valuation, other.valuation)
        high = min(self.precision, other.precision)

        return SymbolOp(
            [
                a + b
                for a, b in zip(self._span(low, high), other._span(low, high))
            ],
            valuation = low,
            precision = high,
        )


    __radd__ = __add__


    def __neg__(self) -> SymbolOp:

        return self * -1


    def __sub__(self, other):

        return self + (-other)


    def __rsub__(self, other):

        return (-self) + other


    def __mul__(self, other):

        if isinstance(other, (int, Rational)):

            other = rational(other)

            return SymbolOp(
                [c * other for c in self._coeffs],
                self.valuation,
                self.precision,
            )

        if not isinstance(other, SymbolOp):

            return NotImplemented

        low = self.valuation + other.valuation
        high = min(
            self.precision + other.valuation,
            other.precision + self.valuation,
        )
        a, b = self._coeffs, other._coeffs
        out = []

        for k in range(high - low + 1):

            out.append(sum(
                (a[i] * b[k - i] for i in range(k + 1)
                if i < len(a) and k - i < len(b)),
                QQ(0),
            ))

        return SymbolOp(out, valuation = low, precision = high)


    __rmul__ = __mul__


    def invert(self) -> SymbolOp:
        """
        ``1 / g`` on the known window.

        Raises:
            ZeroDivisionError: ``g`` is zero on its known window.
        """

        if not self._coeffs:

            raise ZeroDivisionError('Inverting a zero symbol.')

        h = self._coeffs
        n = self.precision - self.valuation
        inv0 = 1 / h[0]
        out = [inv0]

        for k in range(1, n + 1):

            acc = sum(
                (h[i] * out[k - i] for i in range(1, min(k, len(h) - 1) + 1)),
                QQ(0),
            )
            out.append(-inv0 * acc)

        return SymbolOp(
            out,
            valuation = -self.valuation,
            precision = n - self.valuation,
        )


    def reflect(self) -> SymbolOp:
        """
        ``g(-xi)``.
        """

        return SymbolOp(
            [
                -c if (self.valuation + k) % 2 else c
                for k, c in enumerate(self._coeffs)
            ],
            self.valuation,
            self.precision,
        )


    def truncate(self, precision: int) -> SymbolOp:

        if precision > self.precision:

            raise ValueError(
                f'Symbol known only through xi^{self.precision}.'
            )

        return SymbolOp(self._coeffs, self.valuation, precision)


    def __eq__(self, other) -> bool:

        if not isinstance(other, SymbolOp):

            return NotImplemented

        low = min(self.valuation, other.valuation)
        high = min(self.precision, other.precision)

        return self._span(low, high) == other._span(low, high)


    def __hash__(self) -> int:

        return hash((self._coeffs, self.valuation))


    def to_sympy(self, symbol: sp.Symbol = XI) -> sp.Expr:

        return sp.Add(*(
            QQ.to_sympy(c) * symbol ** (self.valuation + k)
            for k, c in enumerate(self._coeffs)
        ))


    def __str__(self) -> str:

        return f'{self.to_sympy()} + O(xi^{self.precision + 1})'


    def __repr__(self) -> str:

        return f'<SymbolOp {self}>'


def symbol_apply(g: SymbolOp, f: EpsSeries) -> EpsSeries:
    """
    Apply ``g(eps dx)`` to a series.

    A pole of order ``m`` is resolved by an ``m``-fold antiderivative of the
    argument and the result is multiplied by ``eps^m``, so only
    nonnegative powers of epsilon appear.

    Args:
        g:
            The symbol; it must be known through the powers of ``xi`` that
            reach the truncation order of ``f``.
        f:
            The argument.

    Returns:
        ``eps^m g(eps dx) f`` through the truncation order of ``f``.

    Raises:
        NotExact: An antiderivative demanded by a pole does not exist.
    """

    order = f.order
    zero = DiffPoly.zero(f.field)

    if g.is_zero:

        return EpsSeries.zero(order, f.field)

    m = g.pole_order
    s0 = max(g.valuation, 0)
    need = g.valuation + order - s0

    if need > g.precision:

        raise ValueError(
            f'Symbol known only through xi^{g.precision}, the argument '
            f'needs xi^{need}.'
        )

    prims = list(f.coeffs)

    for _ in range(m):

        for i, c in enumerate(prims):

            if c.is_zero:

                continue

            if isinstance(c, LogExtendedPoly):

                raise _errors.NotExact(
                    f'No antiderivative of the logarithmic term `{c}`.',
                )

            prims[i] = antiderivative(c)

    derivs = [[c] for c in prims]

    def derivative(i: int, d: int):

        chain = derivs[i]

        while len(chain) <= d:

            chain.append(dx(chain[-1]))

        return chain[d]

    out = [zero] * (order + 1)

    for k in range(order - s0 + 1):

        coef = g.coefficient(g.valuation + k)

        if not coef:

            continue

        d = k + s0

        for i in range(order - d + 1):

            if prims[i].is_zero:

                continue

            out[i + d] = out[i + d] + derivative(i, d) * coef

    return EpsSeries(out, order, f.field)


def shift_symbol(a, precision: int) -> SymbolOp:
    """
    ``exp(a xi)``, the symbol of ``Lambda^a``.
    """

    a = rational(a)

    return SymbolOp(
        [a ** k / math.factorial(k) for k in range(precision + 1)],
        precision = precision,
    )


@functools.cache
def tanh_half_symbol(precision: int) -> SymbolOp:
    """
    ``(Lambda - 1) / (Lambda + 1)``, i.e. ``tanh(xi / 2)``.
    """

    return SymbolOp.from_expr(sp.tanh(XI / 2), precision)


@functools.cache
def one_plus_shift_inverse_symbol(d: int, precision: int) -> SymbolOp:
    """
    ``1 / (Lambda^d + 1)``.
    """

    return SymbolOp.from_expr(1 / (sp.exp(d * XI) + 1), precision)


@functools.cache
def log_kernel_symbol(precision: int) -> SymbolOp:
    """
    ``2 eps dx / (Lambda - 1)``.
    """

    return SymbolOp.from_expr(2 * XI / (sp.exp(XI) - 1), precision)


@functools.cache
def sinhc_symbol(precision: int) -> SymbolOp:
    """
    ``(Lambda - Lambda^-1) / (2 eps dx)``, i.e. ``sinh(xi) / xi``.
    """

    return SymbolOp.from_expr(sp.sinh(XI) / XI, precision)
