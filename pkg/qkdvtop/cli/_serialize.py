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
Text and JSON output of the command line tools.
"""

from __future__ import annotations

__all__ = ['dumps', 'render_value', 'render_series', 'render_report']

import json

import pandas as pd
import sympy as sp

from ..epsops import EpsSeries
from ..jetring import DiffPoly, LogExtendedPoly, to_sympy

Value = DiffPoly | LogExtendedPoly


def dumps(payload) -> str:
    """
    Canonical JSON: sorted keys, so equal payloads give equal bytes.
    """

    return json.dumps(payload, sort_keys = True, indent = 2)


def render_value(p: Value, pretty: bool = False) -> str:

    return sp.pretty(to_sympy(p)) if pretty else str(p)


def render_series(
        series: EpsSeries,
        fmt: str = 'text',
        pretty: bool = False,
    ) -> str:

    if fmt == 'json':

        return dumps(series.to_json())

    if pretty:

        return sp.pretty(series.to_sympy())

    return '\n'.join(
        f'eps^{k}: {c}'
        for k, c in enumerate(series.coeffs)
        if not c.is_zero
    ) or '0'


def render_report(report: pd.DataFrame, fmt: str = 'text') -> str:

    if fmt == 'json':

        return dumps(report.to_dict(orient = 'records'))

    return report.to_string(index = False)