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
Settings of one command line run.
"""

from __future__ import annotations

__all__ = ['RunConfig']

import dataclasses

from .. import _conf

FORMATS = ('text', 'json')


@dataclasses.dataclass(frozen = True)
class RunConfig:
    """
    Command line flags merged over the configuration defaults.
    """

    eps_order: int
    genus_max: int
    model: str = 'gfm-v4'
    cachedir: str | None = None
    cache_enabled: bool = True
    output_format: str = 'text'
    pretty: bool = False


    @classmethod
    def from_args(cls, args) -> RunConfig:

        def pick(name: str, key: str | None = None):

            value = getattr(args, name, None)

            return _conf.get(key or name) if value is None else value

        return cls(
            eps_order = int(pick('eps', 'eps_order')),
            genus_max = int(pick('genus', 'genus_max')),
            model = getattr(args, 'model', None) or 'gfm-v4',
            cachedir = getattr(args, 'cachedir', None),
            cache_enabled = (
                bool(_conf.get('cache_enabled')) and
                not getattr(args, 'no_cache', False)
            ),
            output_format = pick('format', 'output_format'),
            pretty = bool(getattr(args, 'pretty', False)),
        )


    def validate(self, quasimiura: bool = False) -> RunConfig:
        """
        Raises:
            ValueError: Odd or negative ``eps_order``, unknown format, or an
                order too short for the quasi-Miura check.
        """

        if self.eps_order < 0 or self.eps_order % 2:

            raise ValueError(
                f'The epsilon order must be even, got {self.eps_order}.'
            )

        if self.genus_max < 1:

            raise ValueError(f'Genus must be positive, got {self.genus_max}.')

        if self.output_format not in FORMATS:

            raise ValueError(f'Unknown output format: {self.output_format}.')

        if quasimiura and self.eps_order < 2 * self.genus_max - 2:

            raise ValueError(
                f'The quasi-Miura check needs eps order at least '
                f'{2 * self.genus_max - 2} for genus {self.genus_max}.'
            )

        return self
