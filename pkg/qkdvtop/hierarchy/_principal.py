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
The dispersionless limit: Principal Hierarchy densities and flows.
"""

from __future__ import annotations

__all__ = [
    'theta',
    'principal_flow',
    'dispersionless_closed_form',
    'dispersionless_symbol_flow',
]

import math
import functools

import sympy as sp

from ..jetring import (
    QQ,
    DiffPoly,
    LogExtendedPoly,
    dx,
    jet,
    partial,
    from_sympy,
)
from ._constants import (
    FlowIndex,
    c_negative,
    c_positive,
    double_factorial,
)


@functools.cache
def theta(alpha: int, p: int, field: str = 'v') -> DiffPoly | LogExtendedPoly:
    """
    Hamiltonian density ``theta_(alpha,p)`` of the Principal Hierarchy.

    Args:
        alpha:
            ``1`` for ``p >= 0`` or ``0`` for any integer ``p``.
        p:
            Level.
        field:
            Name of the unknown.
    """

    v = jet(0, field)

    if alpha == 1:

        if p < 0:

            raise ValueError(f'No density theta_(1,{p}).')

        return v ** (2 * p + 1) * QQ(1, math.factorial(p) * (2 * p + 1))

    if alpha != 0:

        raise ValueError(f'Invalid density index alpha = {alpha}.')

    if p == 0:

        return LogExtendedPoly(DiffPoly.zero(field), {0: QQ(1, 2)})

    if p > 0:

        return v ** (2 * p) * (
            QQ(2) ** (p - 1) / (double_factorial(2 * p - 1) * 2 * p)
        )

    q = -p

    return v ** (-2 * q) * QQ(
        (-1) ** (q + 1) * double_factorial(2 * q - 1),
        2 ** (q + 1) * 2 * q,
    )


def principal_flow(alpha: int, p: int, field: str = 'v') -> DiffPoly:
    """
    ``dv/dt^(alpha,p) = dx(d theta_(alpha,p+1) / dv)``.
    """

    return dx(partial(theta(alpha, p + 1, field), 0))


def dispersionless_closed_form(idx: FlowIndex, field: str = 'U') -> DiffPoly:
    """
    Dispersionless limit of a positive, negative or logarithmic flow.

    ``(2/p!) U^(2p+1) U_x``, ``(-1)^p (2p-1)!!/2^p U^(-2p) U_x`` and
    ``2^(2p-1) (p-1)!/(2p-1)! U^(2p) U_x``, the last one being ``U_x``
    for ``p = 0``.
    """

    u, ux = jet(0, field), jet(1, field)
    p = idx.p

    if idx.family == 't1':

        return u ** (2 * p + 1) * ux * QQ(2, math.factorial(p))

    if idx.family == 't0neg':

        return u ** (-2 * p) * ux * QQ(
            (-1) ** p * double_factorial(2 * p - 1),
            2 ** p,
        )

    if idx.family == 't0':

        if p == 0:

            return ux

        return u ** (2 * p) * ux * (
            QQ(2) ** (2 * p - 1) *
            QQ(math.factorial(p - 1), math.factorial(2 * p - 1))
        )

    raise ValueError(f'No closed dispersionless form for {idx}.')


def dispersionless_symbol_flow(idx: FlowIndex, field: str = 'U') -> DiffPoly:
    """
    Dispersionless flow from the symbol ``lambda(z) = z^2 + U z``.

    The residues of the fractional and negative powers of the symbol are
    expanded with sympy at ``z = oo`` and ``z = 0``, respectively.
    """

    u = sp.Symbol(field)
    z = sp.Symbol('z')
    p = idx.p

    if idx.family == 't1':

        expansion = sp.series(
            (1 + u * z) ** (sp.Rational(2 * p + 1, 2)),
            z, 0, 2 * p + 2,
        ).removeO()
        residue = from_sympy(expansion.coeff(z, 2 * p + 1), field)

        return jet(0, field) * dx(residue) * -c_positive(p)

    if idx.family == 't0neg':

        expansion = sp.series((1 + z / u) ** (-p), z, 0, p).removeO()
        residue = from_sympy(expansion.coeff(z, p - 1) * u ** (-p), field)

        return dx(residue) * (-2 * c_negative(p))

    raise ValueError(f'No residue formula for {idx}.')
