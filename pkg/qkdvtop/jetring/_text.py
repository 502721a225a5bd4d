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
Conversion between differential polynomials, sympy expressions and JSON.
"""

from __future__ import annotations

__all__ = [
    'to_sympy',
    'from_sympy',
    'parse',
    'to_json',
    'from_json',
]

import sympy as sp

from ._diffpoly import DiffPoly, LogExtendedPoly
from ._monomial import (
    QQ,
    EXP_ORDER,
    rational,
    jet_name,
    rational_str,
    jet_order_of,
)


def _symbol(order: int, field: str) -> sp.Expr:

    if order == EXP_ORDER:

        return sp.exp(sp.Symbol(field))

    return sp.Symbol(jet_name(order, field))


def to_sympy(p: DiffPoly | LogExtendedPoly) -> sp.Expr:
    """
    The expression as a sympy object, jets as symbols named like
    ``v``, ``vx``, ``v2``.
    """

    if isinstance(p, LogExtendedPoly):

        return to_sympy(p.rational) + sp.Add(*(
            QQ.to_sympy(c) * sp.log(_symbol(s, p.field))
            for s, c in p.logs.items()
        ))

    return sp.Add(*(
        QQ.to_sympy(coef) * sp.Mul(*(
            _symbol(order, p.field) ** exp for order, exp in mono
        ))
        for mono, coef in p.items()
    ))


def _factor_order(base: sp.Expr, field: str) -> tuple[int, int]:
    """
    Jet order and multiplicity of an atomic factor.
    """

    if isinstance(base, sp.exp):

        arg = base.args[0]
        coef, sym = arg.as_coeff_Mul()

        if sym == sp.Symbol(field) and coef.is_Integer:

            return EXP_ORDER, int(coef)

    elif isinstance(base, sp.Symbol):

        order = jet_order_of(base.name, field)

        if order is not None:

            return order, 1

    raise ValueError(f'Not a jet of `{field}`: `{base}`.')


def from_sympy(
        expr: sp.Expr,
        field: str = 'v',
    ) -> DiffPoly | LogExtendedPoly:
    """
    Convert a sympy expression in jet symbols.

    ``log`` is accepted on the jets of order 0 and 1 only.
    """

    expr = sp.expand(sp.sympify(expr))
    terms = {}
    logs = {}

    for term, coef in expr.as_coefficients_dict().items():

        coef = rational(coef)

        if isinstance(term, sp.log):

            order, mult = _factor_order(term.args[0], field)

            if mult != 1 or order not in (0, 1):

                raise ValueError(f'Unsupported logarithm: `{term}`.')

            logs[order] = logs.get(order, QQ(0)) + coef
            continue

        mono = []

        for base, exp in term.as_powers_dict().items():

            if base == 1:

                continue

            if not sp.sympify(exp).is_Integer:

                raise ValueError(f'Non-integer exponent in `{term}`.')

            order, mult = _factor_order(base, field)
            mono.append((order, mult * int(exp)))

        key = tuple(mono)
        terms[key] = terms.get(key, QQ(0)) + coef

    return LogExtendedPoly.make(DiffPoly(terms, field), logs)


def parse(text: str, field: str = 'v') -> DiffPoly | LogExtendedPoly:
    """
    Parse a formula like ``'v4*v/(576*vx**2) + log(vx)/24'``.
    """

    return from_sympy(sp.sympify(text.replace('^', '**')), field)


def to_json(p: DiffPoly | LogExtendedPoly):
    """
    JSON-ready form: a list of ``{exponents, coeff}`` entries in canonical
    order, wrapped with the log coefficients when present.
    """

    if isinstance(p, LogExtendedPoly):

        return {
            'rational': to_json(p.rational),
            'logs': {str(s): rational_str(c) for s, c in p.logs.items()},
            'field': p.field,
        }

    return [
        {
            'exponents': {str(order): exp for order, exp in mono},
            'coeff': rational_str(coef),
        }
        for mono, coef in p.items()
    ]


def from_json(data, field: str = 'v') -> DiffPoly | LogExtendedPoly:

    if isinstance(data, dict):

        field = data.get('field', field)

        return LogExtendedPoly.make(
            from_json(data['rational'], field),
            {int(s): rational(c) for s, c in data['logs'].items()},
        )

    return DiffPoly(
        {
            tuple((int(o), int(e)) for o, e in entry['exponents'].items()):
                rational(entry['coeff'])
            for entry in data
        },
        field,
    )
