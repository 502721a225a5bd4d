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
Truncated power series in epsilon with differential polynomial
coefficients.
"""

from __future__ import annotations

__all__ = [
    'EpsSeries',
    'shift_apply',
    'series_invert',
    'eps_sign_substitute',
    'substitute_series',
]

import math
import functools
from typing import Callable, Iterable, Mapping

import sympy as sp

from .. import _errors
from ..jetring import (
    QQ,
    DiffPoly,
    LogExtendedPoly,
    dx,
    const,
    to_json,
    Rational,
    rational,
    to_sympy,
    from_json,
)

Value = DiffPoly | LogExtendedPoly

EPS = sp.Symbol('eps')

_SCALARS = (DiffPoly, LogExtendedPoly, int, Rational)


def _as_value(value, field: str) -> Value:

    if isinstance(value, (DiffPoly, LogExtendedPoly)):

        return value

    return const(value, field)


def _infer_field(coeffs: Iterable) -> str:

    for c in coeffs:

        if isinstance(c, LogExtendedPoly):

            return c.field

        if isinstance(c, DiffPoly) and not c.is_constant:

            return c.field

    return 'v'


class EpsSeries:
    """
    A series ``sum_k eps^k * coeffs[k]`` known through ``eps^order``.

    Args:
        coeffs:
            Coefficients from ``eps^0`` upwards; scalars are promoted to
            constant polynomials. Missing coefficients are zero, surplus
            ones are dropped.
        order:
            Truncation order ``K``. Defaults to ``len(coeffs) - 1``.
        field:
            Field of the coefficients; inferred when omitted.
    """

    __slots__ = ('_coeffs', 'field', '_hash')

    def __init__(
            self,
            coeffs: Iterable = (),
            order: int | None = None,
            field: str | None = None,
        ):

        coeffs = list(coeffs)
        field = field or _infer_field(coeffs)
        order = len(coeffs) - 1 if order is None else order

        if order < 0:

            raise ValueError(f'Invalid truncation order: {order}')

        coeffs = coeffs[:order + 1]
        coeffs.extend([0] * (order + 1 - len(coeffs)))

        self._coeffs = tuple(_as_value(c, field) for c in coeffs)
        self.field = field
        self._hash = None


    @classmethod
    def constant(cls, value, order: int, field: str = 'v') -> EpsSeries:

        return cls([value], order = order, field = field)


    @classmethod
    def zero(cls, order: int, field: str = 'v') -> EpsSeries:

        return cls([], order = order, field = field)


    @property
    def order(self) -> int:

        return len(self._coeffs) - 1


    @property
    def coeffs(self) -> tuple[Value, ...]:

        return self._coeffs


    @property
    def dispersionless(self) -> Value:
        """
        The series evaluated at ``eps = 0``.
        """

        return self._coeffs[0]


    def __getitem__(self, k: int) -> Value:

        if not 0 <= k <= self.order:

            raise IndexError(
                f'Epsilon order {k} outside the window [0, {self.order}].'
            )

        return self._coeffs[k]


    def __iter__(self):

        return iter(self._coeffs)


    def __len__(self) -> int:

        return len(self._coeffs)


    @property
    def is_zero(self) -> bool:

        return all(c.is_zero for c in self._coeffs)


    def first_nonzero(self) -> tuple[int, Value] | None:
        """
        Lowest epsilon order with a nonzero coefficient, and the coefficient.
        """

        for k, c in enumerate(self._coeffs):

            if not c.is_zero:

                return k, c

        return None


    def truncate(self, order: int) -> EpsSeries:

        if order > self.order:

            raise ValueError(
                f'Cannot extend a series known through eps^{self.order} '
                f'to eps^{order}.'
            )

        return EpsSeries(self._coeffs[:order + 1], order, self.field)


    def map(self, fn: Callable[[Value], Value]) -> EpsSeries:
        """
        Apply ``fn`` to every coefficient.
        """

        return EpsSeries(
            [fn(c) for c in self._coeffs],
            self.order,
            self.field,
        )


    def with_field(self, field: str) -> EpsSeries:

        return EpsSeries(
            [
                c.with_field(field) if isinstance(c, DiffPoly) else c
                for c in self._coeffs
            ],
            self.order,
            field,
        )


    def dx(self) -> EpsSeries:

        return self.map(dx)


    def mul_eps(self, m: int = 1) -> EpsSeries:
        """
        Multiply by ``eps^m``, keeping the truncation order.
        """

        return EpsSeries([0] * m + list(self._coeffs), self.order, self.field)


    def div_eps(self, m: int = 1) -> EpsSeries:
        """
        Divide by ``eps^m``; the truncation order drops by ``m``.

        Raises:
            ValueError: One of the ``m`` lowest coefficients is nonzero.
        """

        for k in range(min(m, len(self._coeffs))):

            if not self._coeffs[k].is_zero:

                raise ValueError(
                    f'Division by eps^{m} of a series with nonzero '
                    f'eps^{k} coefficient `{self._coeffs[k]}`.'
                )

        return EpsSeries(self._coeffs[m:], self.order - m, self.field)


    def reflect(self) -> EpsSeries:
        """
        The substitution ``eps -> -eps``.
        """

        return EpsSeries(
            [-c if k % 2 else c for k, c in enumerate(self._coeffs)],
            self.order,
            self.field,
        )


    def _binary(self, other) -> EpsSeries | None:

        if isinstance(other, EpsSeries):

            return other

        if isinstance(other, _SCALARS):

            return EpsSeries.constant(other, self.order, self.field)

        return None


    def __add__(self, other):

        other = self._binary(other)

        if other is None:

            return NotImplemented

        order = min(self.order, other.order)

        return EpsSeries(
            [self._coeffs[k] + other._coeffs[k] for k in range(order + 1)],
            order,
            self.field if self.field == other.field else None,
        )


    __radd__ = __add__


    def __neg__(self) -> EpsSeries:

        return self.map(lambda c: -c)


    def __sub__(self, other):

        other = self._binary(other)

        if other is None:

            return NotImplemented

        return self + (-other)


    def __rsub__(self, other):

        return (-self) + other


    def __mul__(self, other):

        if not isinstance(other, EpsSeries):

            if isinstance(other, _SCALARS):

                return self.map(lambda c: c * other)

            return NotImplemented

        order = min(self.order, other.order)
        coeffs = []

        for n in range(order + 1):

            acc = DiffPoly.zero(self.field)

            for i in range(n + 1):

                a = self._coeffs[i]
                b = other._coeffs[n - i]

                if a.is_zero or b.is_zero:

                    continue

                acc = acc + a * b

            coeffs.append(acc)

        return EpsSeries(
            coeffs,
            order,
            self.field if self.field == other.field else None,
        )


    def __rmul__(self, other):

        return self * other


    def __truediv__(self, other):

        if isinstance(other, EpsSeries):

            return self * series_invert(other)

        if isinstance(other, DiffPoly):

            return self.map(lambda c: c * other.inverse())

        return self.map(lambda c: c / rational(other))


    def __pow__(self, n: int) -> EpsSeries:

        if n < 0:

            return series_invert(self) ** -n

        result = EpsSeries.constant(1, self.order, self.field)
        base = self

        while n:

            if n & 1:

                result = result * base

            n >>= 1

            if n:

                base = base * base

        return result


    def __eq__(self, other) -> bool:

        if isinstance(other, EpsSeries):

            return self._coeffs == other._coeffs

        other = self._binary(other)

        if other is None:

            return NotImplemented

        return self == other


    def __hash__(self) -> int:

        if self._hash is None:

            self._hash = hash(self._coeffs)

        return self._hash


    def __str__(self) -> str:

        parts = []

        for k, c in enumerate(self._coeffs):

            if c.is_zero:

                continue

            prefix = '' if k == 0 else 'eps*' if k == 1 else f'eps^{k}*'
            parts.append(f'{prefix}( {c} )')

        return ' + '.join(parts) or '0'


    def __repr__(self) -> str:

        return f'<EpsSeries[{self.field}] O(eps^{self.order + 1}): {self}>'


    def to_sympy(self, eps: sp.Symbol = EPS) -> sp.Expr:

        return sp.Add(*(
            eps ** k * to_sympy(c)
            for k, c in enumerate(self._coeffs)
            if not c.is_zero
        ))


    def to_json(self) -> dict:

        return {
            'field': self.field,
            'order': self.order,
            'coeffs': {
                str(k): to_json(c)
                for k, c in enumerate(self._coeffs)
                if not c.is_zero
            },
        }


    @classmethod
    def from_json(cls, data: Mapping) -> EpsSeries:

        field = data['field']
        coeffs = [0] * (data['order'] + 1)

        for k, c in data['coeffs'].items():

            coeffs[int(k)] = from_json(c, field)

        return cls(coeffs, data['order'], field)


@functools.lru_cache(maxsize = 4096)
def _shift(a, f: EpsSeries) -> EpsSeries:

    order = f.order
    out = [DiffPoly.zero(f.field)] * (order + 1)

    for i, fi in enumerate(f.coeffs):

        if fi.is_zero:

            continue

        deriv = fi

        for j in range(order - i + 1):

            if j:

                deriv = dx(deriv)

                if deriv.is_zero:

                    break

            out[i + j] = out[i + j] + deriv * (a ** j / math.factorial(j))

    return EpsSeries(out, order, f.field)


def shift_apply(a, f: EpsSeries) -> EpsSeries:
    """
    Action of ``Lambda^a = exp(a eps dx)`` on a series.

    Args:
        a:
            Rational shift exponent.
        f:
            The argument; its truncation order is kept.

    Returns:
        ``sum_j (a eps)^j / j! dx^j f``, truncated at the order of ``f``.

    Raises:
        ValueError: ``a`` is off the shift lattice.
    """

    from ..lattice import HalfLattice

    a = HalfLattice.default().check(a)

    if not a:

        return f

    return _shift(a, f)


def series_invert(f: EpsSeries) -> EpsSeries:
    """
    Multiplicative inverse of a series with a monomial leading term.

    Raises:
        NotInvertible: The ``eps^0`` coefficient is not a single monomial
            with an admissible inverse.
    """

    head = f.dispersionless

    if not isinstance(head, DiffPoly) or not head.is_monomial:

        raise _errors.NotInvertible(
            f'Leading coefficient `{head}` is not a monomial unit.'
        )

    inv0 = head.inverse()
    out = [inv0]

    for n in range(1, f.order + 1):

        acc = DiffPoly.zero(f.field)

        for k in range(1, n + 1):

            if not f[k].is_zero and not out[n - k].is_zero:

                acc = acc + f[k] * out[n - k]

        out.append(-(inv0 * acc))

    return EpsSeries(out, f.order, f.field)


def eps_sign_substitute(f: EpsSeries, inverse: bool = False) -> EpsSeries:
    """
    Identify the two expansion parameters: ``eps^2 -> -2 eps^2``.

    With ``inverse`` the opposite direction, ``eps^2 -> -eps^2 / 2``.

    Raises:
        OddPower: ``f`` has a nonzero odd-order coefficient.
    """

    step = QQ(-1, 2) if inverse else QQ(-2)
    out = []

    for k, c in enumerate(f.coeffs):

        if k % 2:

            if not c.is_zero:

                raise _errors.OddPower(
                    f'Odd power eps^{k} with coefficient `{c}`.',
                    order = k,
                )

            out.append(c)

        else:

            out.append(c * step ** (k // 2))

    return EpsSeries(out, f.order, f.field)


def substitute_series(
        p: DiffPoly | EpsSeries,
        images: Mapping[int, EpsSeries] | Callable[[int], EpsSeries],
        order: int,
    ) -> EpsSeries:
    """
    Replace every jet of ``p`` by a series.

    Args:
        p:
            A polynomial, or a series of polynomials (then ``eps^k`` times
            the image of its ``k``-th coefficient is summed).
        images:
            Image of the jet of each order; the ``exp`` generator has
            order ``-1``.
        order:
            Truncation order of the result.

    Returns:
        The substituted series. Negative exponents go through
        :func:`series_invert`.
    """

    lookup = images if callable(images) else images.__getitem__
    cache = {}

    def power(jet_order: int, exp: int) -> EpsSeries:

        key = (jet_order, exp)

        if key not in cache:

            if exp == 1:

                cache[key] = lookup(jet_order).truncate(order)

            elif exp == -1:

                cache[key] = series_invert(power(jet_order, 1))

            else:

                unit = 1 if exp > 0 else -1
                cache[key] = (
                    power(jet_order, exp - unit) * power(jet_order, unit)
                )

        return cache[key]

    def substitute(poly) -> EpsSeries:

        if isinstance(poly, LogExtendedPoly):

            raise ValueError('Cannot substitute series into logarithms.')

        total = EpsSeries.zero(order)

        for mono, coef in poly.terms.items():

            term = EpsSeries.constant(coef, order)

            for jet_order, exp in mono:

                term = term * power(jet_order, exp)

            total = total + term

        return total

    if not isinstance(p, EpsSeries):

        return substitute(p)

    total = EpsSeries.zero(order)

    for k, c in enumerate(p.coeffs[:order + 1]):

        if not c.is_zero:

            total = total + substitute(c).mul_eps(k)

    return total
