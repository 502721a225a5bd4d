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
Verification suites run by ``qkdvtop verify``.

Every check is run in isolation; a failure becomes a report row instead
of stopping the suite.
"""

from __future__ import annotations

__all__ = [
    'SUITES',
    'run_checks',
    'exact_checks',
    'property_checks',
    'run_suite',
    'flow_display_check',
]

import random
import functools
import itertools
from typing import Callable, Iterable

import pandas as pd

from .. import _conf, _errors, _report
from .._session import _log
from ..epsops import (
    SymbolOp,
    EpsSeries,
    shift_apply,
    symbol_apply,
    series_invert,
    tanh_half_symbol,
    one_plus_shift_inverse_symbol,
)
from ..hierarchy import (
    FlowIndex,
    check_commutativity,
    comb_identity_check,
    dispersionless_match,
    fvh_lemma_check,
    first_poisson,
    hamiltonian_form_check,
    log_flow_f0_check,
    miura_volterra_verify,
    poisson_skew_defect,
    qkdv_flow,
    recursion_check,
    residue_form_flow,
    second_poisson,
)
from ..jetring import (
    QQ,
    DiffOp,
    antiderivative,
    dx,
    dx_n,
    jet,
    partial,
    eval_numeric,
    random_diffpoly,
    random_assignment,
    variational_derivative,
)
from ..lattice import (
    LaurentShiftOp,
    op_mul,
    op_adjoint,
    op_residue,
    op_commutator,
)
from ..loopeq import (
    LambdaRingElem,
    compare_F_H,
    fixture_check,
    genus1_canonical_check,
    lambda_expansion_identities,
    non_constant_part,
    numeric_oracle,
    quasimiura_verify,
    ring_reduce,
    verify_linearization_identities,
)
from ._cache import cached_solutions
from ._runconfig import RunConfig

SUITES = ('paper', 'properties', 'all')

Check = tuple[str, Callable[[], dict | pd.DataFrame]]


def run_checks(checks: Iterable[Check]) -> pd.DataFrame:
    """
    Run checks, turning package errors into failed rows.
    """

    rows = []

    for name, check in checks:

        try:

            result = check()

        except _errors.QkdvtopError as e:

            _log(f'Verify: `{name}` failed: {e}')
            rows.append({
                'check': name,
                'topic': type(e).__name__,
                'passed': False,
                'detail': str(e),
            })
            continue

        if isinstance(result, pd.DataFrame):

            records = result.to_dict(orient = 'records')

        else:

            records = [result]

        for record in records:

            record = dict(record)
            record['detail'] = f'{name}: {record.get("detail") or ""}'.strip()
            rows.append(record)

    return _report.report_frame(rows)


def flow_display_check(idx: FlowIndex, order: int) -> dict:
    """
    The lowest flows in operator form, with ``U^(+-) = Lambda^(+-1) U``.

    ``eps dU/dt^(1,0) = 4 U ((Lambda - 1) / (Lambda + 1) U)``,
    ``eps dU/dt^(1,1) = (32/3) (U (Lambda - 1) / (Lambda + 1) U
    Lambda / (Lambda + 1)) [((1 / (Lambda + 1)) U)^2]``,
    ``eps dU/dt^(0,-1) = (1/4) (1 / U^+ - 1 / U^-)`` and
    ``eps dU/dt^(0,-2) = -(1/16) (1 / (U^++ U^+ U^+) + 1 / (U^+ U^+ U)
    - 1 / (U U^- U^-) - 1 / (U^- U^- U^--))``.

    Raises:
        ValueError: No operator form is known for ``idx``.
        Mismatch: The operator form differs from :func:`qkdv_flow`.
    """

    n = order + 1
    u = EpsSeries.constant(jet(0, 'U'), n, 'U')
    inv = EpsSeries.constant(jet(0, 'U') ** -1, n, 'U')
    tanh_half = lambda f: symbol_apply(tanh_half_symbol(n), f)
    over_one_plus_shift = lambda f: symbol_apply(
        one_plus_shift_inverse_symbol(1, n),
        f,
    )

    if idx == FlowIndex('t1', 0):

        display = u * tanh_half(u) * 4

    elif idx == FlowIndex('t1', 1):

        inner = over_one_plus_shift(u) ** 2
        inner = shift_apply(1, over_one_plus_shift(inner))
        display = u * tanh_half(u * inner) * QQ(32, 3)

    elif idx == FlowIndex('t0neg', 1):

        display = (shift_apply(1, inv) - shift_apply(-1, inv)) * QQ(1, 4)

    elif idx == FlowIndex('t0neg', 2):

        at = {a: shift_apply(a, inv) for a in (-2, -1, 1, 2)}
        at[0] = inv
        display = (
            at[2] * at[1] * at[1] +
            at[1] * at[1] * at[0] -
            at[0] * at[-1] * at[-1] -
            at[-1] * at[-1] * at[-2]
        ) * QQ(-1, 16)

    else:

        raise ValueError(f'No operator display of {idx}.')

    return _report.require(
        'flow-display',
        'Flows',
        display.div_eps() - qkdv_flow(idx, order),
        where = str(idx),
    )


def exact_checks(config: RunConfig) -> list[Check]:
    """
    Checks of the exact statements, at the depth set by ``config``.
    """

    k = config.eps_order
    k6 = min(k, 6)
    k4 = min(k, 4)
    genus = config.genus_max
    t1 = lambda p: FlowIndex('t1', p)
    t0neg = lambda p: FlowIndex('t0neg', p)
    t0 = lambda p: FlowIndex('t0', p)

    @functools.cache
    def solutions(model: str) -> dict:

        return cached_solutions(
            model,
            genus,
            cachedir = config.cachedir,
            enabled = config.cache_enabled,
        )

    def residue_form(idx: FlowIndex) -> dict:

        return _report.require(
            'residue-form',
            'Flows',
            residue_form_flow(idx, k) - qkdv_flow(idx, k),
            where = str(idx),
        )

    checks = [
        (f'display {idx}', lambda idx = idx: flow_display_check(idx, k))
        for idx in (t1(0), t1(1), t0neg(1), t0neg(2))
    ]
    checks += [
        (f'residue form {idx}', lambda idx = idx: residue_form(idx))
        for idx in (t1(0), t1(1), t0neg(1), t0neg(2))
    ]
    checks.append(('log flow f0', lambda: log_flow_f0_check(k)))
    checks += [
        (f'dispersionless {idx}', lambda idx = idx: dispersionless_match(idx))
        for idx in (
            [t1(p) for p in range(4)] +
            [t0neg(p) for p in range(1, 4)] +
            [t0(p) for p in range(3)]
        )
    ]
    checks += [
        (
            f'hamiltonian form {idx}',
            lambda idx = idx: hamiltonian_form_check(idx, k6),
        )
        for idx in (
            [t1(p) for p in range(3)] +
            [t0neg(p) for p in range(1, 3)] +
            [t0(p) for p in range(3)]
        )
    ]
    checks += [
        (f'recursion {idx}', lambda idx = idx: recursion_check(idx, k6))
        for idx in (t1(1), t1(2), t0neg(1), t0neg(2), t0(1), t0(2))
    ]
    checks += [
        (
            f'commutativity [{a}, {b}]',
            lambda a = a, b = b: check_commutativity(a, b, k6),
        )
        for a, b in itertools.combinations(
            [t1(0), t1(1), t0neg(1), t0neg(2), t0(0), t0(1)],
            2,
        )
    ]
    checks += [
        (f'fvh lemma {idx}', lambda idx = idx: fvh_lemma_check(idx, k4))
        for idx in (t1(0), t1(1), t0neg(1), t0neg(2))
    ]
    checks += [
        ('miura volterra', lambda: miura_volterra_verify(k4)),
        ('comb identity', lambda: comb_identity_check(30)),
    ]
    checks += [
        (
            f'fixtures {model}',
            lambda model = model: fixture_check(model, solutions(model)),
        )
        for model in ('gfm-v4', 'fvh')
    ]
    checks += [
        (
            'F equals H',
            lambda: compare_F_H(
                genus,
                solutions('gfm-v4'),
                solutions('fvh'),
            ),
        ),
        (
            'linearization identities',
            lambda: verify_linearization_identities(solutions('gfm-v4')),
        ),
        (
            'expansion at infinity',
            lambda: lambda_expansion_identities(solutions('gfm-v4')),
        ),
        (
            'canonical genus one',
            lambda: genus1_canonical_check(solutions('gfm-v4')[1]),
        ),
    ]

    if genus >= 2:

        checks += [
            (
                f'numeric oracle {model}',
                lambda model = model: numeric_oracle(
                    model,
                    2,
                    solutions = solutions(model),
                ),
            )
            for model in ('gfm-v4', 'fvh')
        ]
        checks += [
            (
                f'quasi-miura {idx}',
                lambda idx = idx: quasimiura_verify(
                    idx,
                    genus,
                    min(k, 2 * genus - 2),
                    solutions('gfm-v4'),
                ),
            )
            for idx in (t1(0), t0neg(1))
        ]

    return checks


def _random_ring_elem(rng: random.Random) -> LambdaRingElem:

    return ring_reduce({
        (rng.randint(-2, 2), rng.randint(-4, 2)):
            random_diffpoly(rng, max_order = 2, max_terms = 2)
        for _ in range(rng.randint(1, 3))
    })


def _random_operator(rng: random.Random, order: int) -> LaurentShiftOp:

    coeffs = {
        QQ(rng.randint(-2, 2), 2):
            random_diffpoly(rng, 'U', max_order = 2, max_terms = 2)
        for _ in range(rng.randint(1, 3))
    }
    coeffs[0] = coeffs.get(0, 0) + 1

    return LaurentShiftOp(coeffs, order = order)


def _property(name: str, topic: str, cases: int, seed: int, body) -> dict:
    """
    Run ``body(rng)`` on ``cases`` generated inputs; ``body`` returns the
    difference of the two sides.
    """

    rng = random.Random(seed)

    for case in range(cases):

        _report.require(name, topic, body(rng), where = f'case {case}')

    return _report.passed(name, topic, f'{cases} cases')


def property_checks(
        cases: int | None = None,
        seed: int | None = None,
        order: int = 4,
    ) -> list[Check]:
    """
    Randomized algebraic properties, each on ``cases`` inputs.
    """

    cases = _conf.get('property_cases') if cases is None else cases
    seed = _conf.get('property_seed') if seed is None else seed
    poly = lambda rng: random_diffpoly(rng)

    def ring_axioms(rng):

        a, b, c = poly(rng), poly(rng), poly(rng)

        return {
            'associative': (a * b) * c - a * (b * c),
            'distributive': a * (b + c) - (a * b + a * c),
            'commutative': a * b - b * a,
        }

    def leibniz(rng):

        a, b = poly(rng), poly(rng)

        return dx(a * b) - (dx(a) * b + a * dx(b))

    def exactness(rng):

        a = poly(rng)

        return {
            'variational': variational_derivative(dx(a)),
            **{
                f'antiderivative {s}': d
                for s, d in non_constant_part(antiderivative(dx(a)) - a)
                    .items()
            },
        }

    def adjointness(rng):

        a = _random_operator(rng, order)
        b = _random_operator(rng, order)

        return {
            'involution': op_adjoint(op_adjoint(a)).difference(a),
            'anti-homomorphism': op_adjoint(op_mul(a, b)).difference(
                op_mul(op_adjoint(b), op_adjoint(a))
            ),
        }

    def shift_group(rng):

        a, b = QQ(rng.randint(-4, 4), 2), QQ(rng.randint(-4, 4), 2)
        f = EpsSeries.constant(poly(rng), order)

        return shift_apply(a, shift_apply(b, f)) - shift_apply(a + b, f)

    def window(rng):

        a = _random_operator(rng, order)
        b = _random_operator(rng, order)
        cut = QQ(rng.randint(-3, 1), 2)
        product = op_mul(a.restrict(lo = cut), b)
        below = None

        try:

            op_mul(
                a.restrict(lo = cut),
                b,
                window = (product.lo - QQ(1, 2), None),
            )

        except _errors.WindowUnderflow:

            below = True

        return {
            'agrees': product.difference(op_mul(a, b)),
            'underflow': None if below else f'nothing below {product.lo}',
        }

    def ring_associative(rng):

        a, b, c = (_random_ring_elem(rng) for _ in range(3))

        return (a * b) * c - a * (b * c)

    def ring_normal_form(rng):

        a, b = _random_ring_elem(rng), _random_ring_elem(rng)

        return {
            'idempotent': ring_reduce(a.terms) - a,
            'linear': ring_reduce(
                list(a.terms.items()) + list(b.terms.items())
            ) - (a + b),
        }

    def derivations_commute(rng):

        a = _random_ring_elem(rng)

        return a.d_lambda().dx() - a.dx().d_lambda()

    def commutation(rng):

        a = poly(rng)
        top = (a.max_order or 0) + 1

        return {
            s: (
                partial(dx(a), s) - dx(partial(a, s)) -
                (partial(a, s - 1) if s else 0)
            )
            for s in range(top + 1)
        }

    def oracle(rng):

        a, b = poly(rng), poly(rng)
        point = random_assignment(rng, max_order = 4)
        lhs = eval_numeric(a * b, point)
        rhs = eval_numeric(a, point) * eval_numeric(b, point)

        return None if lhs == rhs else (lhs, rhs)

    def diffop_involution(rng):

        op = DiffOp({
            rng.randint(0, 3): poly(rng)
            for _ in range(rng.randint(1, 3))
        })

        return op.adjoint().adjoint() - op

    def shift_homomorphism(rng):

        a = QQ(rng.randint(-4, 4), 2)
        f = EpsSeries.constant(poly(rng), order)
        g = EpsSeries.constant(poly(rng), order)

        return (
            shift_apply(a, f * g) -
            shift_apply(a, f) * shift_apply(a, g)
        )

    def symbol(rng, valuation = 0):

        coeffs = [
            QQ(rng.choice((-1, 1)) * rng.randint(1, 5), rng.randint(1, 5))
            for _ in range(order + 1)
        ]

        return SymbolOp(
            coeffs,
            valuation = valuation,
            precision = order + valuation,
        )

    def symbol_composition(rng):

        g, h = symbol(rng), symbol(rng)
        f = EpsSeries.constant(poly(rng), order)

        return symbol_apply(g * h, f) - symbol_apply(g, symbol_apply(h, f))

    def pole_consistency(rng):

        m = rng.randint(1, 2)
        state = rng.getstate()
        pole = symbol(rng, valuation = -m)
        rng.setstate(state)
        regular = symbol(rng)
        q = random_diffpoly(rng, max_order = 2, max_terms = 3)
        q = q - q.constant

        return (
            symbol_apply(pole, EpsSeries.constant(dx_n(q, m), order)) -
            symbol_apply(regular, EpsSeries.constant(q, order))
        )

    def inversion(rng):

        head = (
            jet(0) ** rng.choice((-2, -1, 1, 2)) *
            jet(1) ** rng.choice((-2, -1, 1, 2)) *
            QQ(rng.randint(1, 9), rng.randint(1, 9))
        )
        f = EpsSeries([head] + [poly(rng) for _ in range(order)], order)
        inv = series_invert(f)
        one = EpsSeries.constant(1, order)

        return {'right': f * inv - one, 'left': inv * f - one}

    def op_associative(rng):

        a, b, c = (_random_operator(rng, order) for _ in range(3))

        return op_mul(op_mul(a, b), c).difference(op_mul(a, op_mul(b, c)))

    def trace(rng):

        a = _random_operator(rng, order)
        b = _random_operator(rng, order)

        return op_residue(op_commutator(a, b)).map(variational_derivative)

    def poisson_skew(rng):

        f, g = (
            EpsSeries.constant(
                random_diffpoly(rng, 'U', max_order = 2, max_terms = 2),
                order,
                'U',
            )
            for _ in range(2)
        )

        return {
            P.name: poisson_skew_defect(P, f, g)
            for P in (first_poisson(order), second_poisson(order))
        }

    return [
        (
            name,
            lambda name = name, topic = topic, body = body: _property(
                name,
                topic,
                cases,
                seed,
                lambda rng: _nonzero(body(rng)),
            ),
        )
        for name, topic, body in (
            ('ring-axioms', 'Jets', ring_axioms),
            ('leibniz', 'Jets', leibniz),
            ('exactness', 'Jets', exactness),
            ('dx-partial-commutation', 'Jets', commutation),
            ('numeric-oracle', 'Jets', oracle),
            ('diffop-involution', 'Jets', diffop_involution),
            ('adjointness', 'Operators', adjointness),
            ('shift-group-law', 'Operators', shift_group),
            ('shift-homomorphism', 'Operators', shift_homomorphism),
            ('symbol-composition', 'Operators', symbol_composition),
            ('pole-consistency', 'Operators', pole_consistency),
            ('series-inversion', 'Operators', inversion),
            ('window-soundness', 'Operators', window),
            ('op-associative', 'Operators', op_associative),
            ('residue-trace', 'Operators', trace),
            ('poisson-skew', 'Operators', poisson_skew),
            ('ring-associative', 'Loop equation', ring_associative),
            ('ring-normal-form', 'Loop equation', ring_normal_form),
            ('derivations-commute', 'Loop equation', derivations_commute),
        )
    ]


def _nonzero(difference):

    if isinstance(difference, dict):

        return {
            k: d
            for k, d in difference.items()
            if d is not None and not _report.is_zero(d)
        }

    return difference


def run_suite(
        suite: str,
        config: RunConfig,
        cases: int | None = None,
    ) -> pd.DataFrame:
    """
    Run ``paper``, ``properties`` or ``all`` checks.
    """

    if suite not in SUITES:

        raise ValueError(f'Unknown suite: `{suite}`.')

    checks = []

    if suite in ('paper', 'all'):

        checks += exact_checks(config)

    if suite in ('properties', 'all'):

        checks += property_checks(cases)

    _log(f'Verify: running {len(checks)} checks of suite `{suite}`.')

    return run_checks(checks)
