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
Access to the package configuration.

Defaults live in ``qkdvtop/data/config.yaml``; the session config merges
them with user overrides set by :func:`setup`.
"""

import os
import functools

from . import _session
from .data import _builtin

config = _session.session.config
setup = config.setup


@functools.cache
def _defaults() -> dict:

    return _builtin.defaults() or {}


def get(key: str):
    """
    Value of a configuration parameter, falling back to built-in defaults.
    """

    value = config.get(key)

    return _defaults().get(key) if value is None else value


def cachedir() -> str:
    """
    Directory of the genus solution cache.

    The ``QKDVTOP_CACHEDIR`` environment variable takes precedence over
    the ``cachedir`` parameter; without either the cache goes to
    ``~/.cache/qkdvtop``.
    """

    path = (
        os.environ.get('QKDVTOP_CACHEDIR') or
        get('cachedir') or
        os.path.join(os.path.expanduser('~'), '.cache', 'qkdvtop')
    )
    os.makedirs(path, exist_ok = True)

    return path
