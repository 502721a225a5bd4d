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
Flows of the extended q-deformed KdV hierarchy.

Positive and negative flows come from the Lax equation
``eps dL/dt = c [A, L]``, logarithmic flows from the recursion
``p dU/dt^(0,p) = R(dU/dt^(0,p-1))`` seeded with ``dU/dt^(0,0) = U_x``.
"""

from __future__ import annotations

__all__ = [
    'qkdv_flow',
    'residue_form_flow',
    'log_flow_f0_check',
    'evolutionary_derivative',
    'check_commutativity',
    'dispersionless_match',
    'recursion_check',
]

import functools

import pandas as pd

from .. import _conf, _errors, _report
from .._session import _log
from ..epsops import EpsSeries, shift_apply, symbol_apply, log_kernel_symbol
from ..jetring import QQ, DiffPoly, LogExtendedPoly, jet, partial
from ..lattice import (
    LaurentShiftOp,
    op_power,
    op_project,
    lax_operator,
    op_residue,
    op_commutator,
)
from ._constants import FlowIndex, c_log, c_negative, c_positive
from ._poisson import recursion_apply
from ._principal import (
    principal_flow,
    dispersionless_closed_form,
    dispersionless_symbol_flow,
)

QKDV_FAMILIES = ('t1', 't0neg', 't0')


def _order(order: int | None) -> int:

    return _conf.get('eps_order') if order is None else order


def _divide_eps(series: EpsSeries, where: str) -> EpsSeries:
    """
    ``series / eps`` for a series without ``eps^0`` term.
    """

    if not series.dispersionless.is_zero:

        _log(f'Lax: nonzero eps^0 term in {where}.')

        raise _errors.Mismatch(
            f'The eps^0 term of {where} does not vanish.',
            difference = series.dispersionless,
            where = where,
        )

    return series.div_eps(1)


def _bracket_coefficient(
        bracket: LaurentShiftOp,
        exponent: int,
        where: str,
    ) -> EpsSeries:
    """
    The only nonzero coefficient of a Lax bracket, divided by ``eps``.
    """

    stray = {
        p: c
        for p, c in bracket.coefficients.items()
        if p != exponent
    }
    _report.require('lax-bracket', 'Lax', stray, where = where)

    return _divide_eps(bracket.coeff(exponent), where)


def _lax_flow(idx: FlowIndex, order: int) -> EpsSeries:

    lax = lax_operator(order + 1)
    p = idx.p

    if idx.family == 't1':

        part = op_project(op_power(lax, QQ(2 * p + 1, 2)), 'plus')
        c = c_positive(p)

    else:

        part = op_project(op_power(lax, -p, reach = QQ(-1, 2)), 'minus')
        c = c_negative(p)

    bracket = op_commutator(part, lax)

    return _bracket_coefficient(bracket, 1, str(idx)) * c


@functools.lru_cache(maxsize = 256)
def _qkdv_flow(idx: FlowIndex, order: int) -> EpsSeries:

    _log(f'Flows: computing {idx} through eps^{order}.')

    if idx.family in ('t1', 't0neg'):

        return _lax_flow(idx, order)

    if idx.p == 0:

        return EpsSeries.constant(jet(1, 'U'), order, 'U')

    previous = _qkdv_flow(FlowIndex('t0', idx.p - 1), order)

    return recursion_apply(previous) / idx.p


def qkdv_flow(idx: FlowIndex, order: int | None = None) -> EpsSeries:
    """
    ``dU/dt`` for a positive, negative or logarithmic time.

    Args:
        idx:
            A time of family ``t1``, ``t0neg`` or ``t0``.
        order:
            Truncation order; defaults to the ``eps_order`` parameter.

    Raises:
        NotExact: The recursion met an argument that is not a total
            derivative.
        Mismatch: A Lax bracket has coefficients besides ``Lambda^1``, or
            an ``eps^0`` term where ``eps`` has to be divided out.
    """

    if idx.family not in QKDV_FAMILIES:

        raise ValueError(f'Not a time of the q-deformed KdV hierarchy: {idx}.')

    return _qkdv_flow(idx, _order(order))


def residue_form_flow(idx: FlowIndex, order: int | None = None) -> EpsSeries:
    """
    Positive and negative flows from the residues of the Lax operator.

    ``c_(1,p) U (1 - Lambda) res L^(p+1/2) / eps`` and
    ``c_(0,-p) (Lambda^-1 - Lambda) res(Lambda M^p) / eps``.
    """

    order = _order(order)
    lax = lax_operator(order + 1)
    p = idx.p

    if idx.family == 't1':

        u = EpsSeries.constant(jet(0, 'U'), order + 1, 'U')
        res = op_residue(op_power(lax, QQ(2 * p + 1, 2)))
        value = u * (res - shift_apply(1, res)) * c_positive(p)

    elif idx.family == 't0neg':

        power = op_power(lax, -p, reach = -1)
        res = shift_apply(1, power.coeff(-1))
        value = (shift_apply(-1, res) - shift_apply(1, res)) * c_negative(p)

    else:

        raise ValueError(f'No residue form for {idx}.')

    return _divide_eps(value, f'the residue form of {idx}')


def log_flow_f0_check(order: int | None = None) -> dict:
    """
    ``c_(0,0) U (1 - Lambda) f_0 / eps = U_x`` with
    ``f_0 = (2 eps dx / (Lambda - 1)) log U``.

    Raises:
        Mismatch: The two sides differ.
    """

    n = _order(order) + 1
    log_u = LogExtendedPoly(DiffPoly.zero('U'), {0: 1})
    f0 = symbol_apply(log_kernel_symbol(n), EpsSeries.constant(log_u, n, 'U'))
    u = EpsSeries.constant(jet(0, 'U'), n, 'U')
    lhs = _divide_eps(u * (f0 - shift_apply(1, f0)) * c_log(0), 'f_0')
    rhs = EpsSeries.constant(jet(1, 'U'), n - 1, 'U')

    return _report.require(
        'log-flow-f0',
        'Flows',
        lhs - rhs,
        where = 't^(0,0)',
        detail = f'through eps^{n - 1}',
    )


def evolutionary_derivative(x: EpsSeries, y: EpsSeries) -> EpsSeries:
    """
    ``D_X(Y) = sum_s dY/dU^(s) dx^s X``, the derivative of ``Y`` along
    the flow ``U_t = X``.
    """

    order = min(x.order, y.order)
    derivatives = [x.truncate(order)]
    total = EpsSeries.zero(order, y.field)

    for k, yk in enumerate(y.coeffs[:order + 1]):

        if yk.is_zero or yk.max_order is None:

            continue

        for s in range(yk.max_order + 1):

            grad = partial(yk, s)

            if grad.is_zero:

                continue

            while len(derivatives) <= s:

                derivatives.append(derivatives[-1].dx())

            total = total + (derivatives[s] * grad).mul_eps(k)

    return total


def check_commutativity(
        a: FlowIndex,
        b: FlowIndex,
        order: int | None = None,
    ) -> dict:
    """
    The commutator of two flows vanishes through ``eps^order``.

    Raises:
        Mismatch: The commutator has a nonzero coefficient.
    """

    order = _order(order)
    fa = qkdv_flow(a, order)
    fb = qkdv_flow(b, order)
    commutator = (
        evolutionary_derivative(fa, fb) -
        evolutionary_derivative(fb, fa)
    )

    return _report.require(
        'commutativity',
        'Flows',
        commutator,
        where = f'[{a}, {b}]',
        detail = f'[{a}, {b}] through eps^{order}',
    )


def _principal_counterpart(idx: FlowIndex) -> DiffPoly:

    if idx.family == 't1':

        return principal_flow(1, idx.p, 'U')

    return principal_flow(0, -idx.p if idx.family == 't0neg' else idx.p, 'U')


def dispersionless_match(idx: FlowIndex, order: int = 0) -> pd.DataFrame:
    """
    The ``eps^0`` part of a flow against the closed forms and the
    Principal Hierarchy.

    Args:
        idx:
            A positive, negative or logarithmic time.
        order:
            Truncation order of the flow computation.

    Raises:
        Mismatch: On the first differing comparison.
    """

    head = qkdv_flow(idx, order).dispersionless
    closed = dispersionless_closed_form(idx)
    where = str(idx)
    rows = [
        _report.require('closed-form', 'Dispersionless', head - closed, where),
        _report.require(
            'principal-hierarchy',
            'Dispersionless',
            head - _principal_counterpart(idx),
            where,
        ),
    ]

    if idx.family != 't0':

        rows.append(_report.require(
            'symbol-residue',
            'Dispersionless',
            head - dispersionless_symbol_flow(idx),
            where,
        ))

    return _report.report_frame(rows)


def recursion_check(idx: FlowIndex, order: int | None = None) -> dict:
    """
    The recursion operator maps a flow to the next one of its family.

    ``R(dU/dt^(1,p-1)) = (2p+1)/2 dU/dt^(1,p)``,
    ``R(dU/dt^(0,-p-1)) = -p dU/dt^(0,-p)`` and
    ``R(dU/dt^(0,p-1)) = p dU/dt^(0,p)``.

    Raises:
        Mismatch: The two sides differ.
    """

    order = _order(order)
    p = idx.p

    if idx.family == 't1' and p >= 1:

        source = FlowIndex('t1', p - 1)
        factor = QQ(2 * p + 1, 2)

    elif idx.family == 't0neg':

        source = FlowIndex('t0neg', p + 1)
        factor = QQ(-p)

    elif idx.family == 't0' and p >= 1:

        source = FlowIndex('t0', p - 1)
        factor = QQ(p)

    else:

        raise ValueError(f'No recursion relation ends at {idx}.')

    lhs = recursion_apply(qkdv_flow(source, order))
    rhs = qkdv_flow(idx, order) * factor

    return _report.require(
        'recursion',
        'Flows',
        lhs - rhs,
        where = f'R {source} -> {idx}',
    )
