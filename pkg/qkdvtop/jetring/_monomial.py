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
Exact rationals and jet monomials.

A monomial is a tuple of ``(order, exponent)`` pairs sorted by order, with
no zero exponents. Order ``-1`` stands for the invertible generator
``exp(w)`` of the w-field.
"""

from __future__ import annotations

__all__ = [
    'QQ',
    'Rational',
    'rational',
    'rational_str',
    'Monomial',
    'EXP_ORDER',
    'mono_mul',
    'mono_normalize',
    'mono_pow',
    'mono_inv',
    'mono_degree',
    'mono_max_order',
    'mono_key',
    'mono_exponent',
    'jet_name',
    'jet_order_of',
]

import re
import fractions
import functools

from sympy.polys.domains import QQ

from .. import _errors

Rational = QQ.dtype
Monomial = tuple[tuple[int, int], ...]
EXP_ORDER = -1

_LAURENT_ORDERS = {EXP_ORDER, 0, 1}


def rational(value) -> Rational:
    """
    Convert ints, fractions, strings like ``'7/960'`` and sympy numbers to
    an exact rational.
    """

    if isinstance(value, Rational):

        return value

    if isinstance(value, bool):

        raise TypeError('Booleans are not rationals.')

    if isinstance(value, int):

        return QQ(value)

    if isinstance(value, fractions.Fraction):

        return QQ(value.numerator, value.denominator)

    if isinstance(value, str):

        num, _, den = value.strip().partition('/')

        return QQ(int(num), int(den or 1))

    if hasattr(value, 'is_Rational') and value.is_Rational:

        return QQ.from_sympy(value)

    raise TypeError(f'Can not convert `{value!r}` to an exact rational.')


def rational_str(q: Rational) -> str:
    """
    ``num/den`` or ``num`` for integral values.
    """

    q = rational(q)

    return str(q.numerator) if q.denominator == 1 else (
        f'{q.numerator}/{q.denominator}'
    )


def _check(order: int, exponent: int) -> None:

    if exponent < 0 and order not in _LAURENT_ORDERS:

        raise _errors.LaurentRangeError(
            f'Negative exponent {exponent} on the jet of order {order}; '
            'only v, v_x and exp(w) may appear in denominators.'
        )


def mono_normalize(pairs) -> Monomial:
    """
    Sorted monomial from arbitrary (order, exponent) pairs, repeated orders
    merged and zero exponents dropped.
    """

    exps = {}

    for order, exp in pairs:

        exps[int(order)] = exps.get(int(order), 0) + int(exp)

    result = []

    for order in sorted(exps):

        exp = exps[order]

        if exp:

            _check(order, exp)
            result.append((order, exp))

    return tuple(result)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """
    Product of two monomials.
    """

    if not a:

        return b

    if not b:

        return a

    exps = dict(a)

    for order, exp in b:

        exps[order] = exps.get(order, 0) + exp

    result = []

    for order in sorted(exps):

        exp = exps[order]

        if exp:

            _check(order, exp)
            result.append((order, exp))

    return tuple(result)


def mono_pow(a: Monomial, n: int) -> Monomial:

    if n == 0:

        return ()

    result = tuple((order, exp * n) for order, exp in a)

    for order, exp in result:

        _check(order, exp)

    return result


def mono_inv(a: Monomial) -> Monomial:

    return mono_pow(a, -1)


def mono_degree(a: Monomial) -> int:
    """
    Total degree in the jet variables (the exp(w) generator not counted).
    """

    return sum(exp for order, exp in a if order != EXP_ORDER)


def mono_max_order(a: Monomial) -> int | None:
    """
    Highest jet order present, ``None`` for jet-free monomials.
    """

    orders = [order for order, _ in a if order != EXP_ORDER]

    return max(orders) if orders else None


def mono_exponent(a: Monomial, order: int) -> int:

    for o, exp in a:

        if o == order:

            return exp

    return 0


def mono_key(a: Monomial) -> tuple:
    """
    Canonical sort key: highest jet order, then total degree, then
    exponents from the highest jet down.
    """

    top = mono_max_order(a)

    return (
        -2 if top is None else top,
        mono_degree(a),
        tuple((-order, exp) for order, exp in reversed(a)),
    )


@functools.cache
def jet_name(order: int, field: str = 'v') -> str:
    """
    Printed name of a jet variable: ``v``, ``vx``, ``v2``, ``v3``, ...
    """

    if order == EXP_ORDER:

        return f'exp({field})'

    if order < 0:

        raise ValueError(f'Invalid jet order: {order}')

    return field if order == 0 else f'{field}x' if order == 1 else (
        f'{field}{order}'
    )


@functools.cache
def _name_pattern(field: str) -> re.Pattern:

    return re.compile(rf'^{re.escape(field)}(x|[2-9]|[1-9]\d+)?$')


def jet_order_of(name: str, field: str = 'v') -> int | None:
    """
    Inverse of :func:`jet_name` for jet variables; ``None`` if ``name`` is
    not a jet of ``field``.
    """

    match = _name_pattern(field).match(name)

    if not match:

        return None

    suffix = match.group(1)

    return 0 if suffix is None else 1 if suffix == 'x' else int(suffix)
