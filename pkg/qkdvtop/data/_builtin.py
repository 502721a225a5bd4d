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

from __future__ import annotations

import functools as ft

from pypath_common import data as _data

_module_data = ft.partial(_data.load, module = 'qkdvtop')


def defaults() -> dict:
    """
    Built-in configuration defaults.
    """

    return _module_data('config')


def fixtures() -> dict:
    """
    Printed genus expansions of the loop equations, as raw strings.

    Returns:
        Dict keyed by model name (``gfm-v4``, ``fvh``), each with the jet
        field name and a dict of free energies keyed by genus.
    """

    return _module_data('fixtures')
