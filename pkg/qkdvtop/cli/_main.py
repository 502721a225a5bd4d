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
The ``qkdvtop`` command line tool.
"""

from __future__ import annotations

__all__ = ['build_parser', 'main']

import sys
import argparse

from .. import _conf, _errors
from .._session import _log
from .._metadata import __version__
from ..hierarchy import (
    FAMILIES,
    FlowIndex,
    flow,
    hamiltonian,
    second_hamiltonian,
    dispersionless_match,
)
from ..loopeq import MODELS, build_residual
from ._cache import cached_solutions
from ._runconfig import RunConfig
from ._serialize import (
    dumps,
    render_report,
    render_series,
    render_value,
)
from ._suites import SUITES, run_suite


def _common(parser: argparse.ArgumentParser) -> None:

    parser.add_argument(
        '--eps',
        type = int,
        default = None,
        help = 'Truncation order of epsilon series (even).',
    )
    parser.add_argument(
        '--format',
        choices = ('text', 'json'),
        default = None,
        help = 'Output format.',
    )
    parser.add_argument(
        '--pretty',
        action = 'store_true',
        help = 'Print expressions with sympy.pretty.',
    )


def _loop(parser: argparse.ArgumentParser) -> None:

    parser.add_argument('--model', choices = sorted(MODELS), default = None)
    parser.add_argument('--genus', type = int, default = None)
    parser.add_argument('--cachedir', default = None)
    parser.add_argument(
        '--no-cache',
        action = 'store_true',
        help = 'Neither read nor write the genus cache.',
    )


def _index(parser: argparse.ArgumentParser) -> None:

    parser.add_argument('--family', choices = FAMILIES, required = True)
    parser.add_argument(
        '--p',
        required = True,
        help = 'Level; a rational like -1/2 for the fvh family.',
    )
    parser.add_argument('--alpha', type = int, default = None)


def build_parser() -> argparse.ArgumentParser:

    parser = argparse.ArgumentParser(
        prog = 'qkdvtop',
        description = __doc__.strip(),
    )
    parser.add_argument(
        '--version',
        action = 'version',
        version = f'%(prog)s {__version__}',
    )
    commands = parser.add_subparsers(dest = 'command', required = True)

    cmd = commands.add_parser('flow', help = 'Print the flow of one time.')
    _index(cmd)
    _common(cmd)
    cmd.add_argument(
        '--check',
        action = 'store_true',
        help = 'Also compare the dispersionless limit with closed forms.',
    )

    cmd = commands.add_parser(
        'hamiltonian',
        help = 'Print the Hamiltonian density and gradient of one time.',
    )
    _index(cmd)
    _common(cmd)
    cmd.add_argument(
        '--second',
        action = 'store_true',
        help = 'The Hamiltonian of the second Poisson structure.',
    )

    cmd = commands.add_parser(
        'loopsolve',
        help = 'Solve a loop equation genus by genus.',
    )
    _loop(cmd)
    _common(cmd)

    cmd = commands.add_parser('verify', help = 'Run a verification suite.')
    cmd.add_argument('--suite', choices = SUITES, default = 'all')
    cmd.add_argument('--cases', type = int, default = None)
    _loop(cmd)
    _common(cmd)

    cmd = commands.add_parser(
        'export',
        help = 'Write solved genera as JSON.',
    )
    cmd.add_argument('--out', default = '-', help = 'Output file or `-`.')
    _loop(cmd)

    return parser


def _flow_index(args) -> FlowIndex:

    text = args.p if args.family == 'fvh' else int(args.p)

    return FlowIndex(args.family, text, args.alpha)


def cmd_flow(args, config: RunConfig) -> str:

    idx = _flow_index(args)
    series = flow(idx, config.eps_order)
    out = render_series(series, config.output_format, config.pretty)

    if args.check:

        out += '\n' + render_report(
            dispersionless_match(idx),
            config.output_format,
        )

    return out


def cmd_hamiltonian(args, config: RunConfig) -> str:

    idx = _flow_index(args)
    get = second_hamiltonian if args.second else hamiltonian
    record = get(idx, config.eps_order)

    if config.output_format == 'json':

        return dumps(record.to_json())

    return '\n'.join((
        f'{record.name} for {idx}',
        'density:',
        render_series(record.density, pretty = config.pretty),
        'gradient:',
        render_series(record.gradient, pretty = config.pretty),
    ))


def _solutions(config: RunConfig) -> dict:

    return cached_solutions(
        config.model,
        config.genus_max,
        cachedir = config.cachedir,
        enabled = config.cache_enabled,
    )


def cmd_loopsolve(args, config: RunConfig) -> str:

    solutions = _solutions(config)
    residual = build_residual(config.model, solutions, config.genus_max)

    if config.output_format == 'json':

        return dumps({
            'model': config.model,
            'free_energies': {
                str(g): str(sol.reported_free_energy)
                for g, sol in solutions.items()
            },
            'residual': {
                f'eps^{k} {label}': str(c)
                for (k, label), c in residual.items()
            },
        })

    lines = [
        f'genus {g}: {render_value(sol.reported_free_energy, config.pretty)}'
        for g, sol in solutions.items()
    ]
    lines.append(
        f'residual: {len(residual)} nonzero coefficients'
        if residual else
        'residual: 0'
    )

    return '\n'.join(lines)


def cmd_verify(args, config: RunConfig) -> tuple[str, bool]:

    config.validate(quasimiura = args.suite in ('paper', 'all'))
    report = run_suite(args.suite, config, args.cases)

    return render_report(report, config.output_format), bool(
        report['passed'].all()
    )


def cmd_export(args, config: RunConfig) -> str:

    text = dumps([
        sol.to_json() for sol in _solutions(config).values()
    ])

    if args.out != '-':

        with open(args.out, 'w') as fp:

            fp.write(text + '\n')

        return f'Wrote {len(text)} bytes to {args.out}.'

    return text


def main(argv: list[str] | None = None) -> int:
    """
    Run the command line tool; returns the exit status.
    """

    parser = build_parser()
    args = parser.parse_args(argv)

    if getattr(args, 'cachedir', None):

        _conf.setup(cachedir = args.cachedir)

    try:

        config = RunConfig.from_args(args).validate()
        ok = True

        if args.command == 'verify':

            out, ok = cmd_verify(args, config)

        else:

            out = globals()[f'cmd_{args.command}'](args, config)

    except (ValueError, _errors.QkdvtopError) as e:

        _log(f'CLI: `{args.command}` failed: {e}')
        parser.exit(2, f'qkdvtop {args.command}: error: {e}\n')

    sys.stdout.write(out + '\n')

    return 0 if ok else 1
