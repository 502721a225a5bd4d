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
The change of dependent variable ``w = log v`` on jets.
"""

from __future__ import annotations

__all__ = [
    'substitute_jets',
    'substitute_log_change',
    'w_gradients_from_v',
]

import functools
from typing import Literal, Mapping, Callable

from sympy import binomial

from ._calculus import dx
from ._diffpoly import (
    DiffPoly,
    LogExtendedPoly,
    jet,
    const,
    exp_generator,
)
from ._monomial import QQ, EXP_ORDER, mono_exponent

Direction = Literal['v-to-w', 'w-to-v']


def substitute_jets(
        p: DiffPoly,
        image: Callable[[int], DiffPoly],
        field: str,
    ) -> DiffPoly:
    """
    Replace every jet of order ``s`` in ``p`` by ``image(s)``.

    Negative powers need monomial images.
    """

    powers = {}

    def power(order: int, exp: int) -> DiffPoly:

        if (order, exp) not in powers:

            powers[(order, exp)] = image(order) ** exp

        return powers[(order, exp)]

    result = DiffPoly.zero(field)

    for mono, coef in p.terms.items():

        term = const(coef, field)

        for order, exp in mono:

            term = term * power(order, exp)

        result = result + term

    return result


@functools.cache
def _v_jet_in_w(order: int) -> DiffPoly:
    """
    ``v^(s) = dx^s(exp(w))`` as a w-field polynomial.
    """

    return exp_generator('w') if order == 0 else dx(_v_jet_in_w(order - 1))


@functools.cache
def _w_jet_in_v(order: int) -> DiffPoly:
    """
    ``w^(s) = dx^(s-1)(v_x / v)`` for ``s >= 1``, ``exp(w) = v``.
    """

    if order == EXP_ORDER:

        return jet(0, 'v')

    if order == 1:

        return jet(1, 'v') * jet(0, 'v') ** -1

    return dx(_w_jet_in_v(order - 1))


def _v_to_w(p: DiffPoly | LogExtendedPoly) -> DiffPoly | LogExtendedPoly:

    if isinstance(p, LogExtendedPoly):

        w = jet(0, 'w')
        result = _v_to_w(p.rational)
        logs = {}

        # log v = w, log v_x = w + log w_x
        for s, c in p.logs.items():

            result = result + w * c

            if s == 1:

                logs[1] = c

        return LogExtendedPoly.make(result, logs)

    if p.has_exp:

        raise ValueError(f'`{p}` is already written in the w-field.')

    return substitute_jets(p, _v_jet_in_w, 'w')


def _w_to_v(p: DiffPoly | LogExtendedPoly) -> DiffPoly | LogExtendedPoly:

    logs = {}

    if isinstance(p, LogExtendedPoly):

        if 0 in p.logs:

            raise ValueError('log(w) has no image in the v-field.')

        # log w_x = log v_x - log v
        if 1 in p.logs:

            logs = {1: p.logs[1], 0: -p.logs[1]}

        p = p.rational

    rest = {}

    for mono, coef in p.terms.items():

        if mono_exponent(mono, 0):

            if mono != ((0, 1),):

                raise ValueError(
                    'w may only enter linearly and alone, as log(v); '
                    f'got a term of `{p}`.'
                )

            logs[0] = logs.get(0, QQ(0)) + coef

        else:

            rest[mono] = coef

    result = substitute_jets(DiffPoly(rest, 'w'), _w_jet_in_v, 'v')

    return LogExtendedPoly.make(result, logs)


def substitute_log_change(
        p: DiffPoly | LogExtendedPoly,
        direction: Direction = 'w-to-v',
    ) -> DiffPoly | LogExtendedPoly:
    """
    Rewrite ``p`` under ``w = log v``.

    Args:
        p:
            Expression in the v-field (``v-to-w``) or the w-field
            (``w-to-v``).
        direction:
            ``v-to-w`` uses ``v^(s) = dx^s(exp(w))``; ``w-to-v`` uses
            ``w^(s) = dx^s(log v)`` and maps a bare ``w`` to ``log v``.
    """

    if direction == 'v-to-w':

        return _v_to_w(p)

    if direction == 'w-to-v':

        return _w_to_v(p)

    raise ValueError(f'Unknown direction: `{direction}`.')


def w_gradients_from_v(
        grads: Mapping[int, DiffPoly],
    ) -> dict[int, DiffPoly]:
    """
    Partial derivatives by the w-jets from those by the v-jets.

    Applies ``d/dw^(s) = sum_(t >= s) C(t, s) v^(t-s) d/dv^(t)`` and then
    rewrites the result in the w-field.

    Args:
        grads:
            ``partial(F, t)`` for the v-jets of a v-field function ``F``.

    Returns:
        ``partial(F o exp, s)`` for the w-jets, keyed by ``s``.
    """

    top = max(grads, default = -1)
    result = {}

    for s in range(top + 1):

        h = DiffPoly.zero('v')

        for t in range(s, top + 1):

            if t in grads:

                h = h + int(binomial(t, s)) * jet(t - s, 'v') * grads[t]

        result[s] = _v_to_w(h)

    return result
