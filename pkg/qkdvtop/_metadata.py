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
Package metadata (version, authors, etc) and the engine fingerprint.
"""

from __future__ import annotations

__all__ = ['get_metadata', 'engine_hash']

import os
import hashlib
import pathlib
import functools
import importlib.metadata

import toml

_VERSION = '0.1.0'

# Modules whose source determines the content of cached solutions.
_ENGINE_PACKAGES = ('jetring', 'loopeq')


def get_metadata() -> dict:
    """
    Basic package metadata.

    Reads ``pyproject.toml`` if the package runs from a source tree,
    otherwise the metadata of the installed distribution.
    """

    here = pathlib.Path(__file__).parent
    meta = {}

    for project_dir in (here, here.parent):

        toml_path = project_dir.joinpath('pyproject.toml').absolute()

        if os.path.exists(toml_path):

            poetry = toml.load(toml_path)['tool']['poetry']

            if poetry.get('name') != here.name:

                continue

            meta = {
                'name': poetry['name'],
                'version': poetry['version'],
                'author': poetry['authors'],
                'license': poetry['license'],
            }

            break

    if not meta:

        try:

            meta = {
                k.lower(): v for k, v in
                importlib.metadata.metadata(here.name).items()
            }

        except importlib.metadata.PackageNotFoundError:

            pass

    meta['version'] = meta.get('version', None) or _VERSION

    return meta


@functools.cache
def engine_hash() -> str:
    """
    Short fingerprint of the engine version and the solver sources.

    Cached genus solutions are keyed by this value, so any change in the
    code that produces them invalidates the cache.
    """

    digest = hashlib.sha256(str(__version__).encode())
    root = pathlib.Path(__file__).parent

    for package in _ENGINE_PACKAGES:

        for path in sorted(root.joinpath(package).glob('*.py')):

            digest.update(path.name.encode())
            digest.update(path.read_bytes())

    return digest.hexdigest()[:12]


metadata = get_metadata()
__version__ = metadata.get('version', None)
__author__ = metadata.get('author', None)
__license__ = metadata.get('license', None)
