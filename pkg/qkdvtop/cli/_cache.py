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
Disk cache of solved genera.

Entries live in ``<cachedir>/<model>-g<genus>-<engine hash>.json``; the
engine hash changes with the package version and the solver sources, so
stale entries are never read.
"""

from __future__ import annotations

__all__ = [
    'SCHEMA_VERSION',
    'CacheEntry',
    'engine_hash',
    'cache_path',
    'load',
    'store',
    'cached_solutions',
]

import os
import json
import hashlib
import tempfile
import dataclasses

from .. import _conf, _errors
from .._session import _log
from .._metadata import engine_hash
from ..loopeq import GenusSolution, integrate_genus, loop_model, solve_genus

SCHEMA_VERSION = 1


def _dumps(payload) -> str:

    return json.dumps(payload, sort_keys = True, indent = 1)


def _checksum(payload) -> str:

    return hashlib.sha256(_dumps(payload).encode()).hexdigest()


@dataclasses.dataclass(frozen = True)
class CacheEntry:
    """
    One cached genus: the solution JSON and its checksum.
    """

    model: str
    genus: int
    engine: str
    payload: dict


    @property
    def checksum(self) -> str:

        return _checksum(self.payload)


    def to_json(self) -> dict:

        return {
            'key': {
                'model': self.model,
                'genus': self.genus,
                'engine': self.engine,
                'schema': SCHEMA_VERSION,
            },
            'payload': self.payload,
            'checksum': self.checksum,
        }


def cache_path(model: str, genus: int, cachedir: str | None = None) -> str:

    cachedir = cachedir or _conf.cachedir()
    os.makedirs(cachedir, exist_ok = True)

    return os.path.join(cachedir, f'{model}-g{genus}-{engine_hash()}.json')


def load(
        model: str,
        genus: int,
        cachedir: str | None = None,
    ) -> GenusSolution | None:
    """
    Read a cached genus, ``None`` on a miss.

    Raises:
        CacheCorruption: The file is unreadable or fails its checksum.
    """

    path = cache_path(model, genus, cachedir)

    if not os.path.exists(path):

        return None

    try:

        with open(path) as fp:

            data = json.load(fp)

        payload = data['payload']
        checksum = data['checksum']

    except (OSError, ValueError, KeyError, TypeError) as e:

        raise _errors.CacheCorruption(
            f'Unreadable cache entry: {path}.',
            path = path,
        ) from e

    if data.get('key', {}).get('schema') != SCHEMA_VERSION:

        _log(f'Cache: ignoring `{path}` written with another schema.')

        return None

    if checksum != _checksum(payload):

        _log(f'Cache: checksum mismatch in `{path}`.')

        raise _errors.CacheCorruption(
            f'Checksum mismatch in cache entry: {path}.',
            path = path,
        )

    try:

        sol = GenusSolution.from_json(payload)

    except _errors.CacheCorruption as e:

        e.path = path

        raise

    _log(f'Cache: hit for genus {genus} of `{model}`.')

    return sol


def store(sol: GenusSolution, cachedir: str | None = None) -> str:
    """
    Write one genus atomically; returns the path.
    """

    path = cache_path(sol.model, sol.genus, cachedir)
    entry = CacheEntry(sol.model, sol.genus, engine_hash(), sol.to_json())
    fd, tmp = tempfile.mkstemp(dir = os.path.dirname(path), suffix = '.tmp')

    try:

        with os.fdopen(fd, 'w') as fp:

            fp.write(_dumps(entry.to_json()))

        os.replace(tmp, path)

    except BaseException:

        if os.path.exists(tmp):

            os.remove(tmp)

        raise

    _log(f'Cache: stored genus {sol.genus} of `{sol.model}` in `{path}`.')

    return path


def cached_solutions(
        model: str,
        genus: int,
        cachedir: str | None = None,
        enabled: bool = True,
    ) -> dict[int, GenusSolution]:
    """
    Solutions of genera ``1..genus``, read from the cache or solved.
    """

    model = loop_model(model).name
    solutions = {}

    for g in range(1, genus + 1):

        sol = load(model, g, cachedir) if enabled else None

        if sol is None:

            sol = integrate_genus(solve_genus(model, g, dict(solutions)))

            if enabled:

                store(sol, cachedir)

        solutions[g] = sol

    return solutions
