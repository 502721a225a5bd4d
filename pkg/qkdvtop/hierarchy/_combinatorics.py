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
A binomial identity among double factorials used in the construction of
the negative flows.
"""

from __future__ import annotations

__all__ = ['comb_identity_sides', 'comb_identity_check']

import pandas as pd
import sympy as sp

from .. import _report


def comb_identity_sides(s: int) -> tuple[sp.Rational, sp.Rational]:
    """
    Both sides of ``(s+1)! - 2^-s sum_k k C(s+1,k+1) (2s-2k-1)!! (2k-1)!!
    = (2s+1)!! / 2^s``.
    """

    total = sum(
        k * sp.binomial(s + 1, k + 1) *
        sp.factorial2(2 * s - 2 * k - 1) * sp.factorial2(2 * k - 1)
        for k in range(s + 1)
    )
    lhs = sp.factorial(s + 1) - sp.Rational(total, 2 ** s)
    rhs = sp.Rational(sp.factorial2(2 * s + 1), 2 ** s)

    return lhs, rhs


def comb_identity_check(s_max: int) -> pd.DataFrame:
    """
    The identity for ``s = 0, ..., s_max`` in exact arithmetic.

    Raises:
        Mismatch: For the first ``s`` where the sides differ.
    """

    if s_max < 0:

        raise ValueError(f'Invalid upper bound: {s_max}')

    rows = []

    for s in range(s_max + 1):

        lhs, rhs = comb_identity_sides(s)
        rows.append(_report.require(
            'comb-identity',
            'Combinatorics',
            lhs - rhs,
            where = f's = {s}',
            detail = str(rhs),
        ))

    return _report.report_frame(rows)
