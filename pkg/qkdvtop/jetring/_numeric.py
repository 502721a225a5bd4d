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
Numeric evaluation at rational jet points and random polynomials for the
property checks.
"""

from __future__ import annotations

__all__ = ['eval_numeric', 'random_diffpoly', 'random_assignment']

import random
from typing import Mapping

from .. import _errors
from ._diffpoly import DiffPoly
from ._monomial import QQ, Rational, rational, jet_order_of


def eval_numeric(
        p: DiffPoly,
        assignment: Mapping[int | str, object],
    ) -> Rational:
    """
    Exact value of ``p`` at a rational point.

    Args:
        p:
            The polynomial.
        assignment:
            Values keyed by jet order or by jet name (``'v'``, ``'vx'``,
            ...). Jets missing from the assignment count as zero.

    Raises:
        DivisionByZero: A negative power of a zero value.
    """

    values = {}

    for key, value in assignment.items():

        order = key if isinstance(key, int) else jet_order_of(key, p.field)

        if order is None:

            raise KeyError(f'Not a jet of `{p.field}`: `{key}`.')

        values[order] = rational(value)

    total = QQ(0)

    for mono, coef in p.terms.items():

        term = coef

        for order, exp in mono:

            base = values.get(order, QQ(0))

            if not base and exp < 0:

                raise _errors.DivisionByZero(
                    f'Jet of order {order} is zero but appears with '
                    f'exponent {exp} in `{p}`.'
                )

            term = term * base ** exp

        total += term

    return total


def random_diffpoly(
        rng: random.Random,
        field: str = 'v',
        max_order: int = 3,
        max_terms: int = 4,
        max_degree: int = 3,
        laurent: bool = True,
        max_coef: int = 9,
    ) -> DiffPoly:
    """
    A random polynomial with small integer-over-integer coefficients.

    Args:
        rng:
            Seeded generator; the output is a function of its state.
        laurent:
            Allow negative exponents on ``v`` and ``v_x``.
    """

    terms = {}

    for _ in range(rng.randint(1, max_terms)):

        mono = []

        for _ in range(rng.randint(0, max_degree)):

            order = rng.randint(0, max_order)
            exp = rng.choice((-1, 1)) if laurent and order < 2 else 1
            mono.append((order, exp))

        coef = QQ(rng.randint(-max_coef, max_coef), rng.randint(1, max_coef))
        terms[tuple(mono)] = coef

    return DiffPoly(terms, field)


def random_assignment(
        rng: random.Random,
        max_order: int = 12,
        max_value: int = 7,
    ) -> dict[int, Rational]:
    """
    Random nonzero rational values for the jets up to ``max_order``.
    """

    return {
        s: QQ(rng.choice((-1, 1)) * rng.randint(1, max_value),
              rng.randint(1, max_value))
        for s in range(max_order + 1)
    }
