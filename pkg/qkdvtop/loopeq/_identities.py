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
Identities satisfied by the solved free energies.
"""

from __future__ import annotations

__all__ = [
    'fixture_free_energy',
    'non_constant_part',
    'verify_linearization_identities',
    'lambda_expansion_identities',
    'compare_F_H',
    'genus1_canonical_check',
    'quasimiura_image',
    'quasimiura_verify',
    'fixture_check',
    'numeric_oracle',
]

import random
from typing import Mapping

import pandas as pd
import sympy as sp

from .. import _conf, _report
from .._session import _log
from ..data import _builtin
from ..epsops import (
    EpsSeries,
    eps_sign_substitute,
    sinhc_symbol,
    substitute_series,
    symbol_apply,
)
from ..hierarchy import (
    FlowIndex,
    evolutionary_derivative,
    principal_flow,
    qkdv_flow,
)
from ..jetring import (
    QQ,
    DiffPoly,
    LogExtendedPoly,
    dx,
    dx_n,
    eval_numeric,
    from_sympy,
    jet,
    parse,
    partial,
    random_assignment,
    substitute_log_change,
    to_sympy,
    w_gradients_from_v,
)
from ._models import loop_model
from ._solver import GenusSolution, solve_through

Value = DiffPoly | LogExtendedPoly
Solutions = Mapping[int, GenusSolution]


def fixture_free_energy(model: str, genus: int) -> Value | None:
    """
    Printed free energy of one genus, in the reporting field of the model.
    """

    data = _builtin.fixtures().get(loop_model(model).name, {})
    text = data.get('free_energy', {}).get(genus)

    return None if text is None else parse(text, data['field'])


def non_constant_part(p: Value) -> dict[int, DiffPoly]:
    """
    Nonzero partial derivatives of ``p``: empty iff ``p`` is a constant.
    """

    top = p.max_order

    if top is None:

        return {}

    return {
        s: d
        for s in range(top + 1)
        if not (d := partial(p, s)).is_zero
    }


def _solutions(model: str, solutions: Solutions | None, genus: int):

    return solve_through(model, genus) if solutions is None else solutions


def verify_linearization_identities(
        solutions: Solutions | None = None,
        genus: int | None = None,
    ) -> pd.DataFrame:
    """
    Two linear relations among the gradients of every genus.

    ``sum_s (s+1) dx^s(1/v) H_(g;s) = 0`` and
    ``sum_s v^(s) H_(g;s) = delta_(g,1) / 8``.

    Args:
        solutions:
            Solutions keyed by genus; solved for ``gfm-v4`` if omitted.
        genus:
            Highest genus when solving.

    Raises:
        Mismatch: On the first failing relation.
    """

    solutions = _solutions('gfm-v4', solutions, genus)
    inv_v = jet(0, 'v') ** -1
    rows = []

    for g, sol in sorted(solutions.items()):

        first = DiffPoly.zero('v')
        second = DiffPoly.zero('v')

        for s, h in enumerate(sol.gradients):

            first = first + dx_n(inv_v, s) * h * (s + 1)
            second = second + jet(s, 'v') * h

        if g == 1:

            second = second - QQ(1, 8)

        where = f'{sol.model} genus {g}'
        rows.extend([
            _report.require('translation', 'Loop equation', first, where),
            _report.require('dilaton', 'Loop equation', second, where),
        ])

    return _report.report_frame(rows)


def lambda_expansion_identities(
        solutions: Solutions | None = None,
        genus: int | None = None,
    ) -> pd.DataFrame:
    """
    The loop equation at ``lambda = oo`` reproduces the linear relations.

    Expands both sides of the ``gfm-v4`` equation in integer powers of
    ``1 / lambda``. The ``1 / lambda`` and ``1 / lambda^2`` coefficients of
    the left hand side are ``-1/2`` times the sums of
    :func:`verify_linearization_identities`; on the right hand side only
    the genus one source contributes, ``-1/16`` at ``1 / lambda^2``.

    Raises:
        Mismatch: On the first failing coefficient.
    """

    solutions = _solutions('gfm-v4', solutions, genus)
    model = loop_model('gfm-v4')
    grads = {g: sol.gradients for g, sol in solutions.items()}
    inv_v = jet(0, 'v') ** -1
    zero = DiffPoly.zero('v')
    rows = []

    for g, sol in sorted(solutions.items()):

        if sol.model != model.name:

            raise ValueError(
                'The expansion at infinity is implemented for `gfm-v4`.'
            )

        lhs = model.lhs(sol.gradients).at_infinity(-2)
        rhs = model.rhs(g, grads).at_infinity(-2)
        first = sum(
            (dx_n(inv_v, s) * h * (s + 1) for s, h in enumerate(sol.gradients)),
            zero,
        )
        second = sum(
            (jet(s, 'v') * h for s, h in enumerate(sol.gradients)),
            zero,
        )
        where = f'genus {g}'
        source = QQ(-1, 16) if g == 1 else QQ(0)

        rows.extend([
            _report.require(
                'lhs-lambda^-1',
                'Loop equation',
                lhs.get(-1, zero) + first * QQ(1, 2),
                where,
            ),
            _report.require(
                'lhs-lambda^-2',
                'Loop equation',
                lhs.get(-2, zero) + second * QQ(1, 2),
                where,
            ),
            _report.require(
                'rhs-lambda^-1',
                'Loop equation',
                rhs.get(-1, zero),
                where,
            ),
            _report.require(
                'rhs-lambda^-2',
                'Loop equation',
                rhs.get(-2, zero) - source,
                where,
            ),
            _report.require(
                'expansion-at-infinity',
                'Loop equation',
                {
                    k: c
                    for k in set(lhs) | set(rhs)
                    if not (c := lhs.get(k, zero) - rhs.get(k, zero)).is_zero
                },
                where,
            ),
        ])

    return _report.report_frame(rows)


def compare_F_H(
        genus: int | None = None,
        gfm: Solutions | None = None,
        fvh: Solutions | None = None,
    ) -> pd.DataFrame:
    """
    The two loop equations agree under ``w = log v``.

    Asserts ``F_g = (-2)^(g-1) H_g`` modulo constants, and that the
    w-gradients of ``H_g`` follow from the v-gradients by the chain rule.

    Raises:
        Mismatch: On the first failing genus.
    """

    gfm = _solutions('gfm-v4', gfm, genus)
    fvh = _solutions('fvh', fvh, genus)
    top = min(max(gfm, default = 0), max(fvh, default = 0))
    top = top if genus is None else min(top, genus)
    rows = []

    for g in range(1, top + 1):

        scale = QQ(-2) ** (g - 1)
        f_g = gfm[g].free_energy
        h_g = fvh[g].reported_free_energy
        back = substitute_log_change(h_g, 'w-to-v') * scale
        where = f'genus {g}'
        rows.append(_report.require(
            'F-equals-H',
            'Loop equation',
            non_constant_part(f_g - back),
            where,
            detail = f'F_{g} = {scale} H_{g}',
        ))

        w_grads = w_gradients_from_v(dict(enumerate(fvh[g].gradients)))
        rows.append(_report.require(
            'w-gradients',
            'Loop equation',
            {
                s: d
                for s, h in w_grads.items()
                if not (d := h * (1 / scale) - partial(h_g, s)).is_zero
            },
            where,
        ))

    return _report.report_frame(rows)


def genus1_canonical_check(sol: GenusSolution | None = None) -> dict:
    """
    Genus one free energy from the canonical coordinate formula.

    With ``u = v^2`` and ``J = 1 / (2v)`` the free energy is
    ``(1/24) log u_x - (1/24) log J`` up to a constant.

    Raises:
        Mismatch: The solved ``F_1`` differs by a non-constant.
    """

    sol = sol or solve_through('gfm-v4', 1)[1]
    v, vx = to_sympy(jet(0, 'v')), to_sympy(jet(1, 'v'))
    ux = 2 * v * vx
    jacobian = 1 / (2 * v)
    expr = sp.expand_log(
        sp.log(ux) / 24 - sp.log(jacobian) / 24,
        force = True,
    )
    # drop log(2)
    expr = sp.Add(*(t for t in sp.Add.make_args(expr) if t.free_symbols))
    canonical = from_sympy(expr, 'v')

    return _report.require(
        'canonical-genus-one',
        'Loop equation',
        non_constant_part(sol.free_energy - canonical),
        'genus 1',
    )


def _principal_in_v(idx: FlowIndex) -> DiffPoly:

    if idx.family == 't1':

        return principal_flow(1, idx.p, 'v')

    if idx.family in ('t0neg', 't0'):

        return principal_flow(0, -idx.p if idx.family == 't0neg' else idx.p)

    raise ValueError(f'Not a q-deformed KdV time: {idx}.')


def quasimiura_image(solutions: Solutions, order: int) -> EpsSeries:
    """
    ``U[v] = sinh(eps dx) / (eps dx) (v + eps^2 dx D_(t^(1,0)) Delta F)``.

    ``D_(t^(1,0))`` is the Principal Hierarchy derivation; the loop
    parameter is converted by ``eps^2 -> -eps^2 / 2``.
    """

    flow = principal_flow(1, 0, 'v')
    corrections = [DiffPoly.zero('v')] * (order + 1)

    for g in range(1, order // 2 + 1):

        f_g = solutions[g].free_energy
        derivative = sum(
            (
                partial(f_g, s) * dx_n(flow, s)
                for s in range((f_g.max_order or 0) + 1)
            ),
            DiffPoly.zero('v'),
        )
        corrections[2 * g] = dx(derivative)

    shifted = eps_sign_substitute(
        EpsSeries(corrections, order, 'v'),
        inverse = True,
    )
    seed = EpsSeries.constant(jet(0, 'v'), order, 'v') + shifted

    return symbol_apply(sinhc_symbol(order), seed)


def quasimiura_verify(
        idx: FlowIndex,
        genus: int,
        order: int,
        solutions: Solutions | None = None,
    ) -> dict:
    """
    The quasi-Miura image of the Principal Hierarchy solves the
    q-deformed KdV flow ``idx`` through ``eps^order``.

    Args:
        idx:
            A ``t1``, ``t0neg`` or ``t0`` time.
        genus:
            Highest genus of the ``gfm-v4`` free energy used.
        order:
            Truncation order, at most ``2 genus - 2``.

    Raises:
        ValueError: ``order`` exceeds ``2 genus - 2``.
        Mismatch: Carries the first nonzero order of epsilon.
    """

    if order > 2 * genus - 2:

        raise ValueError(
            f'Order {order} needs the free energy beyond genus {genus}.'
        )

    solutions = _solutions('gfm-v4', solutions, genus)
    _log(f'Quasi-Miura: checking {idx} through eps^{order}.')

    image = quasimiura_image(solutions, order)
    lhs = evolutionary_derivative(
        EpsSeries.constant(_principal_in_v(idx), order, 'v'),
        image,
    )
    derivatives = [image]

    def jets(jet_order: int) -> EpsSeries:

        while len(derivatives) <= jet_order:

            derivatives.append(derivatives[-1].dx())

        return derivatives[jet_order]

    rhs = substitute_series(qkdv_flow(idx, order), jets, order)
    first = (lhs - rhs).first_nonzero()

    return _report.require(
        'quasi-miura',
        'Quasi-Miura',
        None if first is None else first[1],
        where = str(idx) if first is None else f'{idx} at eps^{first[0]}',
    )


def fixture_check(
        model: str,
        solutions: Solutions | None = None,
        genus: int | None = None,
    ) -> pd.DataFrame:
    """
    Solved free energies against the printed ones, modulo constants.

    Raises:
        Mismatch: On the first differing genus.
    """

    solutions = _solutions(model, solutions, genus)
    rows = []

    for g, sol in sorted(solutions.items()):

        printed = fixture_free_energy(model, g)

        if printed is None:

            continue

        rows.append(_report.require(
            'fixture',
            'Loop equation',
            non_constant_part(sol.reported_free_energy - printed),
            f'{sol.model} genus {g}',
        ))

    return _report.report_frame(rows)


def numeric_oracle(
        model: str,
        genus: int = 2,
        cases: int = 20,
        seed: int | None = None,
        solutions: Solutions | None = None,
    ) -> dict:
    """
    Evaluate the solved and the printed free energy at random rational
    points; they must differ by the same constant at every point.

    Raises:
        ValueError: Genus one, where the free energy has logarithms.
        Mismatch: The differences are not all equal.
    """

    if genus < 2:

        raise ValueError('The numeric oracle needs genus 2 or higher.')

    solutions = _solutions(model, solutions, genus)
    solved = solutions[genus].reported_free_energy
    printed = fixture_free_energy(model, genus)
    seed = _conf.get('property_seed') if seed is None else seed
    rng = random.Random(seed)
    values = set()

    for _ in range(cases):

        point = random_assignment(rng, max_order = 3 * genus + 1)
        values.add(eval_numeric(solved, point) - eval_numeric(printed, point))

    return _report.require(
        'numeric-oracle',
        'Loop equation',
        None if len(values) == 1 else sorted(values),
        f'{model} genus {genus}',
        detail = f'{cases} points',
    )
