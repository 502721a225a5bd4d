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
Lax operators ``Lambda^(2d) + U Lambda^d`` and their powers.

``d = 1`` is the operator of the q-deformed KdV hierarchy; ``d = -1`` the
Lax operator of the fractional Volterra hierarchy it is related to.
"""

from __future__ import annotations

__all__ = [
    'lax_operator',
    'lax_direction',
    'op_sqrt',
    'op_inverse',
    'op_power',
]

from .. import _conf, _errors
from .._session import _log
from ..epsops import (
    EpsSeries,
    shift_apply,
    symbol_apply,
    series_invert,
    one_plus_shift_inverse_symbol,
)
from ..jetring import jet, rational
from ._operator import Tail, LaurentShiftOp, op_mul


def lax_operator(
        order: int,
        field: str = 'U',
        d: int = 1,
        coefficient: EpsSeries | None = None,
    ) -> LaurentShiftOp:
    """
    The operator ``Lambda^(2d) + U Lambda^d``.

    Args:
        order:
            Truncation order of the coefficients.
        field:
            Name of the unknown function.
        d:
            ``1`` or ``-1``.
        coefficient:
            Replaces the unknown ``U`` by a given series.
    """

    if d not in (1, -1):

        raise ValueError(f'Invalid Lax direction: {d}')

    u = coefficient or EpsSeries.constant(jet(0, field), order, field)

    return LaurentShiftOp({2 * d: 1, d: u}, order = order, field = field)


def lax_direction(lax: LaurentShiftOp) -> tuple[int, EpsSeries]:
    """
    The direction ``d`` and the coefficient ``U`` of a Lax operator.

    Raises:
        ValueError: The operator is not of the form
            ``Lambda^(2d) + U Lambda^d``.
    """

    coeffs = lax.coefficients

    for d in (1, -1):

        if (
            lax.tail is Tail.FINITE and
            set(coeffs) == {2 * d, d} and
            coeffs[2 * d] == 1
        ):

            return d, coeffs[d]

    raise ValueError(f'Not a Lax operator Lambda^2d + U Lambda^d: `{lax}`.')


def _verify(lhs: LaurentShiftOp, rhs: LaurentShiftOp, what: str) -> None:

    if not _conf.get('verify_postconditions'):

        return

    diff = lhs.difference(rhs)

    if diff:

        _log(f'Lax: postcondition of {what} failed.')

        raise _errors.Mismatch(
            f'Postcondition of {what} failed at exponents {sorted(diff)}.',
            difference = diff,
            where = what,
        )


def op_sqrt(lax: LaurentShiftOp, depth: int = 4) -> LaurentShiftOp:
    """
    Square root ``Lambda^d + sum_k a_k Lambda^(-d k)``.

    Each ``a_k`` solves ``(Lambda^d + 1) a_k = -sum_(i+j=k-1) a_i
    Lambda^(-d i)(a_j)``, starting from ``a_0 = U / (Lambda^d + 1)``.

    Args:
        lax:
            ``Lambda^(2d) + U Lambda^d``.
        depth:
            Number of coefficients after ``a_0``.
    """

    d, u = lax_direction(lax)
    order = lax.order

    if depth < 0:

        raise ValueError(f'Invalid square root depth: {depth}')

    _log(f'Lax: computing L^(1/2) through Lambda^{-d * depth}.')

    inverse = one_plus_shift_inverse_symbol(d, order)
    a = [symbol_apply(inverse, u)]

    for k in range(1, depth + 1):

        acc = EpsSeries.zero(order, lax.field)

        for i in range(k):

            acc = acc + a[i] * shift_apply(-d * i, a[k - 1 - i])

        a.append(-symbol_apply(inverse, acc))

    coeffs = {d: 1}
    coeffs.update({-d * k: ak for k, ak in enumerate(a)})
    edge = -d * depth
    root = LaurentShiftOp(
        coeffs,
        order = order,
        tail = Tail.DOWNWARD if d == 1 else Tail.UPWARD,
        lo = edge if d == 1 else None,
        hi = None if d == 1 else edge,
        field = lax.field,
    )
    _verify(op_mul(root, root), lax, 'the square root')

    return root


def op_inverse(lax: LaurentShiftOp, depth: int = 4) -> LaurentShiftOp:
    """
    Inverse ``M = sum_(k >= -1) b_k Lambda^(d k)``.

    ``b_-1 = Lambda^-d (1 / U)`` and ``b_k = -Lambda^d(b_(k-1)) b_-1``.

    Args:
        lax:
            ``Lambda^(2d) + U Lambda^d``.
        depth:
            Index of the last coefficient, at least ``-1``.
    """

    d, u = lax_direction(lax)
    order = lax.order

    if depth < -1:

        raise ValueError(f'Invalid inverse depth: {depth}')

    _log(f'Lax: computing L^-1 through Lambda^{d * depth}.')

    first = shift_apply(-d, series_invert(u))
    coeffs = {-d: first}
    prev = first

    for k in range(depth + 1):

        prev = -(shift_apply(d, prev) * first)
        coeffs[d * k] = prev

    edge = d * depth
    inverse = LaurentShiftOp(
        coeffs,
        order = order,
        tail = Tail.UPWARD if d == 1 else Tail.DOWNWARD,
        lo = None if d == 1 else edge,
        hi = edge if d == 1 else None,
        field = lax.field,
    )
    one = LaurentShiftOp.shift(0, order, lax.field)
    _verify(op_mul(lax, inverse), one, 'the inverse (L M)')
    _verify(op_mul(inverse, lax), one, 'the inverse (M L)')

    return inverse


def op_power(lax: LaurentShiftOp, exponent, reach = 0) -> LaurentShiftOp:
    """
    ``L^exponent`` for an integer or a positive half-integer exponent.

    Args:
        lax:
            ``Lambda^(2d) + U Lambda^d``.
        exponent:
            Power; negative half-integers are not supported.
        reach:
            Exponent of ``Lambda`` down to which (``d = 1``, positive
            powers) or up to which the infinite tail must be known.
    """

    d, _ = lax_direction(lax)
    exponent = rational(exponent)
    twice = exponent * 2
    reach = rational(reach)

    if twice.denominator != 1:

        raise ValueError(f'Exponent {exponent} is not a half-integer.')

    twice = int(twice.numerator)

    if twice % 2 == 0:

        n = twice // 2

        if n >= 0:

            result = LaurentShiftOp.shift(0, lax.order, lax.field)

            for _ in range(n):

                result = op_mul(result, lax)

            return result

        p = -n
        depth = max(_ceil(d * reach) + p - 1, -1)
        m = op_inverse(lax, depth)
        result = m

        for _ in range(p - 1):

            result = op_mul(result, m)

        return result

    if twice < 0:

        raise ValueError('Negative half-integer powers are not supported.')

    p = twice // 2
    depth = max(2 * p - _floor(d * reach), 0)
    result = op_sqrt(lax, depth)

    for _ in range(p):

        result = op_mul(lax, result)

    return result


def _floor(q) -> int:

    return int(q.numerator) // int(q.denominator)


def _ceil(q) -> int:

    return -(int(-q.numerator) // int(q.denominator))
