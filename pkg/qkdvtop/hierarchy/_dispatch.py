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
Flows of every hierarchy by time index.
"""

from __future__ import annotations

__all__ = ['flow']

from ..epsops import EpsSeries
from ._constants import FlowIndex
from ._flows import QKDV_FAMILIES, _order, qkdv_flow
from ._principal import principal_flow
from ._volterra import fvh_flow, volterra_flow


def flow(idx: FlowIndex, order: int | None = None) -> EpsSeries:
    """
    The flow of any time: q-deformed KdV flows of ``U``, Principal
    Hierarchy flows of ``v`` (constant in ``eps``), fractional Volterra
    flows of ``U = exp(W)`` and Volterra flows of ``V``.
    """

    order = _order(order)

    if idx.family in QKDV_FAMILIES:

        return qkdv_flow(idx, order)

    if idx.family == 'principal':

        return EpsSeries.constant(principal_flow(idx.alpha, idx.p), order)

    if idx.family == 'fvh':

        return fvh_flow(idx.p, order)

    return volterra_flow(idx.p, order)
