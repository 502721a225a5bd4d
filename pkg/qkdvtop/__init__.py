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
Exact symbolic engine for the extended q-deformed KdV hierarchy,
the fractional Volterra hierarchy and the loop equation of the one
dimensional generalized Frobenius manifold with potential v^4/12.
"""

__all__ = [
    '__version__',
    '__author__',
    'log',
    'session',
    'config',
    'setup',
    'errors',
    'data',
    'jetring',
    'epsops',
    'lattice',
    'hierarchy',
    'loopeq',
    'cli',
]

import lazy_import

from ._metadata import __author__, __version__
from ._session import log, _log, session
from ._conf import config, setup

from . import _errors as errors


_MODULES = [
    'data',
    'jetring',
    'epsops',
    'lattice',
    'hierarchy',
    'loopeq',
    'cli',
]

for _mod in _MODULES:

    globals()[_mod] = lazy_import.lazy_module(f'{__name__}.{_mod}')
