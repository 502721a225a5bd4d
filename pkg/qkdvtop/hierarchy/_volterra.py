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
The fractional Volterra hierarchy, the Volterra hierarchy and their
relation to the q-deformed KdV hierarchy.

The fractional Volterra operator is ``Lambda^-2 + U Lambda^-1`` with
``U = exp(W)``; its flows are computed in ``U``. The Volterra operator
``Lambda + V Lambda^-1`` is related to the q-deformed KdV hierarchy by the
Miura map ``V = 1 / (U(x + eps/2) U(x - eps/2))``.
"""

from __future__ import annotations

__all__ = [
    'fvh_flow',
    'fvh_lemma_check',
    'volterra_flow',
    'miura_image',
    'volterra_second_poisson',
    'volterra_first_poisson_numerator',
    'miura_volterra_verify',
]

import math
import functools

import pandas as pd

from .. import _report
from .._session import _log
from ..epsops import EpsSeries, shift_apply, series_invert, substitute_series
from ..jetring import QQ, jet, frechet, rational, log_monomial
from ..lattice import (
    LaurentShiftOp,
    op_mul,
    op_power,
    op_adjoint,
    op_project,
    lax_operator,
    op_commutator,
)
from ._constants import FlowIndex, c_negative, c_positive
from ._flows import _order, qkdv_flow, _bracket_coefficient
from ._poisson import (
    MulFactor,
    PoissonOp,
    ConstFactor,
    _symbol,
    second_poisson,
)


@functools.lru_cache(maxsize = 64)
def _fvh_flow(s, order: int) -> EpsSeries:

    idx = FlowIndex('fvh', s)
    lax = lax_operator(order + 1, d = -1)
    _log(f'Flows: computing {idx} through eps^{order}.')

    if idx.p < 0:

        p = int((-idx.p - QQ(1, 2)).numerator)
        part = op_project(op_power(lax, QQ(2 * p + 1, 2)), 'oplus')

    else:

        p = int(idx.p.numerator)
        part = -op_project(op_power(lax, -p, reach = QQ(1, 2)), 'ominus')

    return _bracket_coefficient(op_commutator(part, lax), -1, str(idx))


def fvh_flow(s, order: int | None = None) -> EpsSeries:
    """
    ``dU/dT_s`` of the fractional Volterra hierarchy, ``U = exp(W)``.

    Args:
        s:
            ``-p - 1/2`` for ``p >= 0`` or a positive integer ``p``.
        order:
            Truncation order.

    Raises:
        ValueError: ``s`` is not a time of the hierarchy.
        Mismatch: The Lax bracket has coefficients besides
            ``Lambda^-1``.
    """

    return _fvh_flow(rational(s), _order(order))


def fvh_lemma_check(idx: FlowIndex, order: int | None = None) -> dict:
    """
    Under ``eps -> -eps`` the fractional Volterra flows are the positive
    and negative q-deformed KdV flows.

    ``dU/dt^(1,p) = -c_(1,p) dU/dT_(-p-1/2)`` and
    ``dU/dt^(0,-p) = c_(0,-p) dU/dT_p``.

    Raises:
        Mismatch: The flows differ.
    """

    order = _order(order)
    p = idx.p

    if idx.family == 't1':

        other = fvh_flow(-p - QQ(1, 2), order).reflect() * -c_positive(p)

    elif idx.family == 't0neg':

        other = fvh_flow(p, order).reflect() * c_negative(p)

    else:

        raise ValueError(f'No fractional Volterra counterpart of {idx}.')

    return _report.require(
        'fvh-lemma',
        'Flows',
        qkdv_flow(idx, order) - other,
        where = str(idx),
    )


@functools.lru_cache(maxsize = 64)
def _volterra_flow(p: int, order: int) -> EpsSeries:

    n = order + 1
    v = EpsSeries.constant(jet(0, 'V'), n, 'V')
    lax = LaurentShiftOp({1: 1, -1: v}, order = n, field = 'V')
    power = LaurentShiftOp.shift(0, n, 'V')

    for _ in range(2 * p):

        power = op_mul(power, lax)

    bracket = op_commutator(op_project(power, 'plus'), lax)

    return _bracket_coefficient(bracket, -1, f'T~_{p}')


def volterra_flow(p: int, order: int | None = None) -> EpsSeries:
    """
    ``dV/dT~_p`` of the Volterra hierarchy ``eps dL/dT~_p =
    [(L^(2p))_+, L]``, ``L = Lambda + V Lambda^-1``.
    """

    FlowIndex('volterra', p)

    return _volterra_flow(p, _order(order))


def miura_image(order: int) -> EpsSeries:
    """
    ``V = 1 / (U(x + eps/2) U(x - eps/2))`` in the jets of ``U``.
    """

    u = EpsSeries.constant(jet(0, 'U'), order, 'U')

    return series_invert(shift_apply(QQ(1, 2), u) * shift_apply(QQ(-1, 2), u))


@functools.cache
def volterra_second_poisson(order: int) -> PoissonOp:
    """
    ``(2 / eps)(Lambda - Lambda^-1)`` acting on ``W = log V``.
    """

    return PoissonOp(
        [ConstFactor(_symbol('4*sinh(xi)/xi', order), 1)],
        name = 'P~2',
        skew = True,
    )


def volterra_first_poisson_numerator(v: EpsSeries) -> LaurentShiftOp:
    """
    ``(Lambda + 1) V (Lambda + 1) - (1 + Lambda^-1) V (1 + Lambda^-1)``,
    that is ``2 eps`` times the quadratic Volterra operator on ``W``.
    """

    order, field = v.order, v.field
    mult = LaurentShiftOp.multiplication(v)
    up = LaurentShiftOp({1: 1, 0: 1}, order = order, field = field)
    down = LaurentShiftOp({0: 1, -1: 1}, order = order, field = field)

    return up * mult * up - down * mult * down


def _miura_factor(order: int) -> PoissonOp:
    """
    Linearization of ``W = -(Lambda^(1/2) + Lambda^(-1/2)) log U``.
    """

    linear = frechet(log_monomial(jet(0, 'U')))

    if set(linear.coeffs) != {0}:

        raise ValueError(f'Expected a multiplication operator, got {linear}.')

    return PoissonOp(
        [
            ConstFactor(_symbol('-2*cosh(xi/2)', order)),
            MulFactor(EpsSeries.constant(linear.coeffs[0], order, 'U')),
        ],
        name = 'D',
    )


def _scaling_check(p: int, order: int) -> dict:

    u_t = qkdv_flow(FlowIndex('t0neg', p), order)
    ratio = u_t / jet(0, 'U')
    lhs = -(shift_apply(QQ(1, 2), ratio) + shift_apply(QQ(-1, 2), ratio))

    derivatives = [miura_image(order)]

    def image(jet_order: int) -> EpsSeries:

        while len(derivatives) <= jet_order:

            derivatives.append(derivatives[-1].dx())

        return derivatives[jet_order]

    w_flow = volterra_flow(p, order) / jet(0, 'V')
    factor = QQ((-1) ** p * math.factorial(p - 1), 2 ** (2 * p))
    rhs = substitute_series(w_flow, image, order) * factor

    return _report.require(
        'miura-flow-scaling',
        'Miura',
        lhs - rhs,
        where = f't^(0,-{p})',
    )


def miura_volterra_verify(order: int | None = None) -> pd.DataFrame:
    """
    The Miura map carries the q-deformed KdV structures to the Volterra
    ones.

    Checks that ``D P_2 D^+`` and ``D P_1 D^+`` are the Volterra Poisson
    operators for the linearization ``D`` of the map, the adjoint rule on
    ``D``, and that the negative flows become rescaled Volterra flows for
    ``p = 1, 2``.

    Raises:
        Mismatch: On the first failing check.
    """

    order = _order(order)
    _log(f'Miura: verifying the Volterra correspondence through eps^{order}.')
    rows = []

    d = _miura_factor(order)
    transformed = d @ second_poisson(order) @ d.adjoint()
    target = volterra_second_poisson(order)
    rows.append(_report.require(
        'miura-second-poisson',
        'Miura',
        None if transformed == target else (str(transformed), str(target)),
        where = 'D P2 D^+',
    ))

    u = EpsSeries.constant(jet(0, 'U'), order, 'U')
    inv_u = LaurentShiftOp.multiplication(series_invert(u))
    average = LaurentShiftOp({QQ(1, 2): 1, QQ(-1, 2): 1}, order = order)
    difference = LaurentShiftOp({1: 1, -1: -1}, order = order)
    lhs = average * inv_u * difference * inv_u * average
    rhs = volterra_first_poisson_numerator(miura_image(order))
    rows.append(_report.require(
        'miura-first-poisson',
        'Miura',
        lhs.difference(rhs),
        where = 'D P1 D^+',
    ))
    rows.append(_report.require(
        'first-poisson-skew',
        'Miura',
        op_adjoint(difference).difference(-difference),
        where = 'Lambda - Lambda^-1',
    ))

    linear = -(average * inv_u)
    rows.append(_report.require(
        'adjoint-rule',
        'Miura',
        op_adjoint(linear).difference(-(inv_u * average)),
        where = 'D^+',
    ))

    for p in (1, 2):

        rows.append(_scaling_check(p, order))

    return _report.report_frame(rows)
