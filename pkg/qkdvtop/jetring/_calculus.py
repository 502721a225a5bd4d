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
Derivations, antiderivatives and variational calculus on the jet space.
"""

from __future__ import annotations

__all__ = [
    'dx',
    'dx_n',
    'partial',
    'variational_derivative',
    'antiderivative',
    'frechet',
    'helmholtz_is_gradient',
    'density_from_gradient',
    'integrate_gradients',
]

from typing import Mapping

from .. import _errors
from .._session import _log
from ._diffop import DiffOp
from ._diffpoly import DiffPoly, LogExtendedPoly, jet
from ._monomial import QQ, EXP_ORDER, mono_mul, mono_exponent

_ZERO = QQ(0)

Value = DiffPoly | LogExtendedPoly


def _collect(terms: dict, field: str) -> DiffPoly:

    return DiffPoly._raw({m: c for m, c in terms.items() if c}, field)


def dx(p: Value) -> Value:
    """
    Total x-derivative.

    ``dx(v^(s)) = v^(s+1)``, ``dx(exp(w)) = exp(w) * w_x`` and
    ``dx(log v^(s)) = v^(s+1) / v^(s)``.
    """

    if isinstance(p, LogExtendedPoly):

        result = dx(p.rational)

        for s, c in p.logs.items():

            result = result + jet(s + 1, p.field) * jet(s, p.field) ** -1 * c

        return result

    terms = {}
    get = terms.get

    for mono, coef in p.terms.items():

        for order, exp in mono:

            if order == EXP_ORDER:

                new = mono_mul(mono, ((1, 1),))

            else:

                new = mono_mul(mono, ((order, -1), (order + 1, 1)))

            terms[new] = get(new, _ZERO) + coef * exp

    return _collect(terms, p.field)


def dx_n(p: Value, n: int) -> Value:

    for _ in range(n):

        p = dx(p)

    return p


def partial(p: Value, s: int) -> DiffPoly:
    """
    Partial derivative by the jet of order ``s``.

    In the w-field ``exp(w)`` depends on ``w``, so ``s = 0`` also
    differentiates the generator.
    """

    if isinstance(p, LogExtendedPoly):

        result = partial(p.rational, s)

        if s in p.logs:

            result = result + jet(s, p.field) ** -1 * p.logs[s]

        return result

    terms = {}
    get = terms.get

    for mono, coef in p.terms.items():

        exp = mono_exponent(mono, s)

        if exp:

            new = mono_mul(mono, ((s, -1),))
            terms[new] = get(new, _ZERO) + coef * exp

        if s == 0:

            gen = mono_exponent(mono, EXP_ORDER)

            if gen:

                terms[mono] = get(mono, _ZERO) + coef * gen

    return _collect(terms, p.field)


def variational_derivative(p: Value) -> DiffPoly:
    """
    Euler-Lagrange operator ``sum_s (-dx)^s partial(p, s)``.
    """

    result = DiffPoly.zero(p.field)
    top = p.max_order

    if top is None and isinstance(p, DiffPoly) and p.has_exp:

        top = 0

    if top is None:

        return result

    for s in range(top + 1):

        term = dx_n(partial(p, s), s)
        result = result - term if s % 2 else result + term

    return result


def _not_exact(p: DiffPoly, reason: str) -> _errors.NotExact:

    return _errors.NotExact(
        f'Not a total derivative ({reason}): `{p}`.',
        witness = variational_derivative(p),
    )


def antiderivative(p: DiffPoly) -> Value:
    """
    Formal inverse of :func:`dx` with zero integration constant.

    Works by stripping the highest jet: an exact polynomial of order ``n`` is
    affine in ``x_n``, and the coefficient of ``x_n`` is integrated in
    ``x_(n-1)``. ``1 / v`` and ``1 / v_x`` integrate to logarithms when
    their coefficient is constant.

    Raises:
        NotExact: ``p`` is not ``dx`` of an element of the ring; the
            exception carries the variational derivative of ``p``.
    """

    field = p.field
    rest = p
    result = DiffPoly.zero(field)
    logs = {}

    while not rest.is_zero:

        top = rest.max_order

        # a constant term only counts once no jet is left to strip
        if top is None or top == 0 or rest.has_exp:

            raise _not_exact(p, 'no highest jet to strip')

        step = {}
        step_logs = {}

        for mono, coef in rest.terms.items():

            exp = mono_exponent(mono, top)

            if not exp:

                continue

            if exp != 1:

                raise _not_exact(p, f'nonlinear in the jet of order {top}')

            below = mono_mul(mono, ((top, -1),))
            inner = mono_exponent(below, top - 1)

            if inner == -1:

                if mono_mul(below, ((top - 1, 1),)):

                    raise _not_exact(p, 'logarithm with a variable factor')

                step_logs[top - 1] = step_logs.get(top - 1, _ZERO) + coef

            else:

                step[mono_mul(below, ((top - 1, 1),))] = coef / (inner + 1)

        primitive = _collect(step, field)
        rest = rest - dx(LogExtendedPoly.make(primitive, step_logs))
        result = result + primitive

        for s, c in step_logs.items():

            logs[s] = logs.get(s, _ZERO) + c

    return LogExtendedPoly.make(result, logs)


def frechet(p: Value) -> DiffOp:
    """
    Linearization ``sum_s partial(p, s) d^s``.
    """

    top = p.max_order

    return DiffOp(
        {} if top is None else {s: partial(p, s) for s in range(top + 1)},
        p.field,
    )


def helmholtz_is_gradient(p: DiffPoly) -> bool:
    """
    True iff the Frechet derivative of ``p`` is self-adjoint, i.e. ``p`` is
    a variational derivative.
    """

    op = frechet(p)

    return op == op.adjoint()


def density_from_gradient(g: DiffPoly) -> Value:
    """
    A density whose variational derivative is ``g``.

    Uses the homotopy formula on homogeneous components: a component of
    degree ``d`` contributes ``u * g_d / (d + 1)``; in degree ``-1`` only
    ``c / u`` is supported, giving ``c * log u``.

    Raises:
        HelmholtzFailure: ``g`` is not a gradient or the density leaves the
            supported ring.
    """

    if not helmholtz_is_gradient(g):

        _log(f'Helmholtz: `{g}` is not a variational gradient.')

        raise _errors.HelmholtzFailure(
            f'The Frechet derivative of `{g}` is not self-adjoint.'
        )

    u = jet(0, g.field)
    density = DiffPoly.zero(g.field)
    logs = {}

    for degree, part in g.degree_parts().items():

        if degree == -1:

            for mono, coef in part.terms.items():

                if mono != ((0, -1),):

                    raise _errors.HelmholtzFailure(
                        f'Degree -1 gradient term `{coef}*{mono}` has no '
                        'density in the log-extended ring.'
                    )

                logs[0] = coef

        else:

            density = density + u * part / (degree + 1)

    result = LogExtendedPoly.make(density, logs)

    if variational_derivative(result) != g:

        raise _errors.HelmholtzFailure(
            f'Homotopy density of `{g}` does not reproduce it.'
        )

    return result


def integrate_gradients(
        grads: Mapping[int, DiffPoly],
        field: str = 'v',
    ) -> Value:
    """
    Reconstruct ``F`` from all of its partial derivatives.

    Args:
        grads:
            ``partial(F, s)`` for each jet order ``s``; missing orders are
            zero.
        field:
            Field of the result.

    Returns:
        ``F`` with zero additive constant, log-extended if needed.

    Raises:
        CompatibilityFailure: The mixed partials are not symmetric.
        RingEscape: A logarithm with a non-constant coefficient would be
            needed.
    """

    if any(g.has_exp for g in grads.values()):

        raise ValueError(
            'Potentials are reconstructed in jet fields without exp(w).'
        )

    zero = DiffPoly.zero(field)
    top = max(
        [s for s in grads] +
        [g.max_order for g in grads.values() if g.max_order is not None],
        default = -1,
    )

    for r in range(top + 1):

        for s in range(r + 1, top + 1):

            diff = (
                partial(grads.get(r, zero), s) -
                partial(grads.get(s, zero), r)
            )

            if diff:

                raise _errors.CompatibilityFailure(
                    f'Mixed partials by orders {r} and {s} differ.',
                    pair = (r, s),
                    difference = diff,
                )

    current = zero
    logs = {}

    for s in range(top, -1, -1):

        target = grads.get(s, zero) - partial(current, s)
        step = {}

        for mono, coef in target.terms.items():

            exp = mono_exponent(mono, s)

            if exp == -1:

                if mono_mul(mono, ((s, 1),)):

                    raise _errors.RingEscape(
                        f'Integrating `{target}` in the jet of order {s} '
                        'needs a logarithm with a variable coefficient.',
                        jet_order = s,
                    )

                logs[s] = logs.get(s, _ZERO) + coef

            else:

                step[mono_mul(mono, ((s, 1),))] = coef / (exp + 1)

        rational_part = (
            current.rational
            if isinstance(current, LogExtendedPoly) else
            current
        )
        current = LogExtendedPoly.make(
            rational_part + _collect(step, field),
            logs,
        )

    for s in range(top + 1):

        diff = partial(current, s) - grads.get(s, zero)

        if diff:

            raise _errors.CompatibilityFailure(
                f'Reconstructed potential misses the gradient of order {s}.',
                pair = (s, s),
                difference = diff,
            )

    return current
