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
Hamiltonians of the positive, negative and logarithmic flows.
"""

from __future__ import annotations

__all__ = [
    'HamiltonianRecord',
    'hamiltonian',
    'second_hamiltonian',
    'hamiltonian_form_check',
]

import functools
import dataclasses

import pandas as pd

from .. import _report
from .._session import _log
from ..epsops import EpsSeries, shift_apply
from ..jetring import (
    QQ,
    DiffPoly,
    LogExtendedPoly,
    jet,
    density_from_gradient,
    variational_derivative,
)
from ..lattice import op_power, op_residue, lax_operator
from ._constants import FlowIndex, c_negative, c_positive
from ._flows import _order, qkdv_flow
from ._poisson import (
    apply_poisson,
    first_poisson,
    second_poisson,
    first_poisson_inverse,
)


@dataclasses.dataclass(frozen = True)
class HamiltonianRecord:
    """
    A local functional ``H = int h dx`` and its variational gradient.

    Attributes:
        name:
            Label like ``H_(1,0)`` or ``G_(0,-1)``.
        index:
            The time whose flow the functional generates.
        density:
            ``h`` as a series of possibly logarithmic polynomials.
        gradient:
            ``delta H / delta U``.
    """

    name: str
    index: FlowIndex
    density: EpsSeries
    gradient: EpsSeries


    def check(self) -> dict:
        """
        The variational derivative of the density is the gradient.

        Raises:
            Mismatch: On the first differing coefficient.
        """

        return _report.require(
            'variational-derivative',
            'Hamiltonians',
            self.density.map(variational_derivative) - self.gradient,
            where = self.name,
        )


    def scaled(self, factor, name: str) -> HamiltonianRecord:

        return HamiltonianRecord(
            name,
            self.index,
            self.density * factor,
            self.gradient * factor,
        )


    def to_json(self) -> dict:

        return {
            'name': self.name,
            'index': str(self.index),
            'density': self.density.to_json(),
            'gradient': self.gradient.to_json(),
        }


def _lax_hamiltonian(idx: FlowIndex, order: int) -> tuple:

    lax = lax_operator(order)
    p = idx.p

    if idx.family == 't1':

        c = c_positive(p)
        root = op_power(lax, QQ(2 * p + 1, 2), reach = -1)
        gradient = shift_apply(1, root.coeff(-1)) * (2 * c)
        density = (
            op_residue(op_power(lax, QQ(2 * p + 3, 2))) *
            (4 * c / (2 * p + 3))
        )

        return f'H_(1,{p})', density, gradient

    c = c_negative(p)
    power = op_power(lax, -p, reach = -1)
    gradient = shift_apply(1, power.coeff(-1)) * (-2 * c)

    if p == 1:

        log_u = LogExtendedPoly(DiffPoly.zero('U'), {0: QQ(1, 2)})
        density = EpsSeries.constant(log_u, order, 'U')

    else:

        density = (
            op_residue(op_power(lax, -(p - 1))) *
            (2 * c / (p - 1))
        )

    return f'H_(0,-{p})', density, gradient


def _log_hamiltonian(idx: FlowIndex, order: int) -> tuple:

    flow = qkdv_flow(idx, order)
    gradient = apply_poisson(first_poisson_inverse(order), flow)
    _log(f'Helmholtz: integrating the gradient of H_(0,{idx.p}).')
    density = gradient.map(density_from_gradient)

    return f'H_(0,{idx.p})', density, gradient


@functools.lru_cache(maxsize = 128)
def _hamiltonian(idx: FlowIndex, order: int) -> HamiltonianRecord:

    if idx.family in ('t1', 't0neg'):

        name, density, gradient = _lax_hamiltonian(idx, order)

    elif idx.family == 't0':

        name, density, gradient = _log_hamiltonian(idx, order)

    else:

        raise ValueError(f'No Hamiltonian for {idx}.')

    record = HamiltonianRecord(name, idx, density, gradient)
    record.check()

    return record


def hamiltonian(idx: FlowIndex, order: int | None = None) -> HamiltonianRecord:
    """
    The Hamiltonian of a flow with respect to ``P_1``.

    Positive and negative Hamiltonians come from residues of powers of the
    Lax operator; logarithmic ones are reconstructed from
    ``P_1^-1 dU/dt^(0,p)`` by integrating each coefficient.

    Raises:
        HelmholtzFailure: A reconstructed gradient is not variational.
        Mismatch: Density and gradient do not match.
    """

    return _hamiltonian(idx, _order(order))


def second_hamiltonian(
        idx: FlowIndex,
        order: int | None = None,
    ) -> HamiltonianRecord:
    """
    The Hamiltonian of a flow with respect to ``P_2``.

    ``G_(1,0) = 2 int U``, ``G_(1,p) = 2/(2p+1) H_(1,p-1)``,
    ``G_(0,-p) = -H_(0,-p-1)/p`` and ``G_(0,p) = H_(0,p-1)/p``.

    Raises:
        ValueError: For ``t^(0,0)``, whose flow is not generated by ``P_2``.
    """

    order = _order(order)
    p = idx.p

    if idx.family == 't1':

        if p == 0:

            return HamiltonianRecord(
                'G_(1,0)',
                idx,
                EpsSeries.constant(jet(0, 'U') * 2, order, 'U'),
                EpsSeries.constant(2, order, 'U'),
            )

        source, factor = FlowIndex('t1', p - 1), QQ(2, 2 * p + 1)
        name = f'G_(1,{p})'

    elif idx.family == 't0neg':

        source, factor = FlowIndex('t0neg', p + 1), QQ(-1, p)
        name = f'G_(0,-{p})'

    elif idx.family == 't0' and p >= 1:

        source, factor = FlowIndex('t0', p - 1), QQ(1, p)
        name = f'G_(0,{p})'

    else:

        raise ValueError(f'No second Hamiltonian for {idx}.')

    record = hamiltonian(source, order).scaled(factor, name)

    return dataclasses.replace(record, index = idx)


def hamiltonian_form_check(
        idx: FlowIndex,
        order: int | None = None,
    ) -> pd.DataFrame:
    """
    ``P_1 delta H / delta U`` and ``P_2 delta G / delta U`` reproduce the
    flow.

    For ``t^(0,0)`` the second check is that ``H_(0,-1)`` is a Casimir of
    ``P_2``.

    Raises:
        Mismatch: On the first failing check.
    """

    order = _order(order)
    flow = qkdv_flow(idx, order)
    first = hamiltonian(idx, order)
    where = str(idx)
    rows = [
        first.check(),
        _report.require(
            'first-hamiltonian-form',
            'Hamiltonians',
            apply_poisson(first_poisson(order), first.gradient) - flow,
            where,
        ),
    ]

    if idx.family == 't0' and idx.p == 0:

        casimir = hamiltonian(FlowIndex('t0neg', 1), order)
        rows.append(_report.require(
            'second-hamiltonian-casimir',
            'Hamiltonians',
            apply_poisson(second_poisson(order), casimir.gradient),
            where,
        ))

    else:

        second = second_hamiltonian(idx, order)
        rows.append(second.check())
        rows.append(_report.require(
            'second-hamiltonian-form',
            'Hamiltonians',
            apply_poisson(second_poisson(order), second.gradient) - flow,
            where,
        ))

    return _report.report_frame(rows)
