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
Verification reports.

A single check is a dict with the keys ``check``, ``topic``, ``passed`` and
``detail``; collections of checks are data frames with these columns.
"""

from __future__ import annotations

__all__ = ['COLUMNS', 'passed', 'is_zero', 'require', 'report_frame']

from typing import Any, Iterable

import pandas as pd

from . import _errors
from ._session import _log

COLUMNS = ['check', 'topic', 'passed', 'detail']


def passed(check: str, topic: str, detail: str = '') -> dict:

    return {'check': check, 'topic': topic, 'passed': True, 'detail': detail}


def is_zero(difference: Any) -> bool:

    if difference is None:

        return True

    if isinstance(difference, (dict, list, tuple, set)):

        return not difference

    zero = getattr(difference, 'is_zero', None)

    return zero if zero is not None else not difference


def require(
        check: str,
        topic: str,
        difference: Any,
        where: Any = None,
        detail: str = '',
    ) -> dict:
    """
    Report row for a check whose two sides differ by ``difference``.

    Raises:
        Mismatch: ``difference`` is nonzero.
    """

    if not is_zero(difference):

        _log(f'{topic}: check `{check}` failed at {where}.')

        raise _errors.Mismatch(
            f'Check `{check}` failed at {where}: `{difference}`.',
            difference = difference,
            where = where,
        )

    return passed(check, topic, detail)


def report_frame(rows: Iterable[dict]) -> pd.DataFrame:

    return pd.DataFrame(list(rows), columns = COLUMNS)
