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
The two loop equations in the coordinate ``v``.

Each equation is linear in the gradients ``H_(g;s) = dF_g / dv^(s)`` of
the current genus: ``sum_s H_(g;s) K_s = RHS_g``, where the kernels
``K_s`` do not depend on the genus and ``RHS_g`` is built from the lower
genera.
"""

from __future__ import annotations

__all__ = ['LoopModel', 'MODELS', 'loop_model']

import dataclasses
import functools
from typing import Callable, Mapping, Sequence

from sympy import binomial

from ..jetring import (
    QQ,
    Rational,
    DiffPoly,
    LogExtendedPoly,
    jet,
    partial,
    substitute_log_change,
)
from ._ring import LambdaRingElem, ring_reduce, sigma_power, lambda_power

Gradients = Sequence[DiffPoly]


def _v(n: int = 1) -> DiffPoly:

    return jet(0, 'v') ** n


@functools.cache
def _dx_n(elem: LambdaRingElem, k: int) -> LambdaRingElem:

    return elem if not k else _dx_n(elem, k - 1).dx()


@functools.cache
def _gfm_kernel(s: int) -> LambdaRingElem:

    half = QQ(1, 2)
    P = sigma_power(-2)
    D = sigma_power(-1)
    lam_inv = lambda_power(-1)

    kernel = _dx_n(P * (_v(-1) * half), s)

    if s:

        kernel += _dx_n(lam_inv * (D - _v(-1)) * half, s) * s

        for k in range(1, s + 1):

            kernel += (
                _dx_n(lam_inv * (D * _v() - 1) * half, k - 1) *
                _dx_n(D, s + 1 - k) *
                int(binomial(s, k))
            )

    return kernel


@functools.cache
def _fvh_kernel(s: int) -> LambdaRingElem:

    D = sigma_power(-1)
    lam_d = ring_reduce({(1, -1): 1})
    kernel = _dx_n(sigma_power(-2) * _v(3), s)

    for k in range(1, s + 1):

        kernel += (
            _dx_n(D * _v(), k - 1) *
            _dx_n(lam_d, s + 1 - k) *
            int(binomial(s, k))
        )

    return kernel


def _gfm_quadratic(k: int) -> LambdaRingElem:

    return _dx_n(sigma_power(-1), k + 1)


def _fvh_quadratic(k: int) -> LambdaRingElem:

    return _dx_n(ring_reduce({(1, -1): 1}), k + 1)


def _gfm_linear(k: int) -> LambdaRingElem:

    vvx = _v(2) * jet(1, 'v')

    return _dx_n(ring_reduce({(0, -6): vvx * QQ(1, 2)}), k + 1)


def _fvh_linear(k: int) -> LambdaRingElem:

    vvx = _v(2) * jet(1, 'v')

    return _dx_n(ring_reduce({(2, -6): vvx}), k + 1)


def _gfm_source() -> LambdaRingElem:

    return ring_reduce({(0, -4): QQ(-1, 16)})


def _fvh_source() -> LambdaRingElem:

    # -(2 lambda v^2 - v^4) / (8 sigma^4) = Theta^2 / 8 - Theta / 4 in w
    return ring_reduce({(1, -4): _v(2) * QQ(-1, 4), (0, -4): _v(4) * QQ(1, 8)})


@dataclasses.dataclass(frozen = True)
class LoopModel:
    """
    One loop equation, solved in the v-jets.

    Attributes:
        name:
            ``gfm-v4`` for the generalized Frobenius manifold with
            potential ``v^4 / 12``; ``fvh`` for the Hodge loop equation of
            the fractional Volterra hierarchy, rewritten in ``v = exp(w)``.
        quadratic_weight:
            Factor of the quadratic part of the right hand side.
        field:
            Jet field of the reported free energies.
        unknown_scale:
            The solver finds ``unknown_scale^(g-1)`` times the genus ``g``
            free energy of the reporting field.
    """

    name: str
    quadratic_weight: Rational
    field: str
    unknown_scale: int
    _kernel: Callable[[int], LambdaRingElem] = dataclasses.field(repr = False)
    _quadratic: Callable[[int], LambdaRingElem] = dataclasses.field(
        repr = False,
    )
    _linear: Callable[[int], LambdaRingElem] = dataclasses.field(
        repr = False,
    )
    _source: Callable[[], LambdaRingElem] = dataclasses.field(repr = False)


    def kernel(self, s: int) -> LambdaRingElem:
        """
        Coefficient ``K_s`` of ``H_(g;s)`` on the left hand side.
        """

        return self._kernel(s)


    def lhs(self, gradients: Gradients) -> LambdaRingElem:

        total = LambdaRingElem()

        for s, h in enumerate(gradients):

            if not h.is_zero:

                total += self.kernel(s) * h

        return total


    def rhs(
            self,
            genus: int,
            lower: Mapping[int, Gradients],
        ) -> LambdaRingElem:
        """
        Right hand side at ``epsilon^(2 genus - 2)``.

        Args:
            genus:
                Target genus.
            lower:
                Gradients of the genera below ``genus``; missing genera
                count as zero.
        """

        total = self._source() if genus == 1 else LambdaRingElem()
        previous = list(lower.get(genus - 1, ()))
        pairs = [
            (list(lower.get(g1, ())), list(lower.get(genus - g1, ())))
            for g1 in range(1, genus)
        ]
        size = max(
            [len(previous)] + [max(len(a), len(b)) for a, b in pairs],
            default = 0,
        )

        def at(grads: list, k: int) -> DiffPoly:

            return grads[k] if k < len(grads) else DiffPoly.zero('v')

        quadratic = LambdaRingElem()

        for k in range(size):

            inner = LambdaRingElem()

            for l in range(size):

                m = partial(at(previous, k), l)

                for a, b in pairs:

                    m = m + at(a, k) * at(b, l)

                if not m.is_zero:

                    inner += self._quadratic(l) * m

            if not inner.is_zero:

                quadratic += self._quadratic(k) * inner

        total += quadratic * self.quadratic_weight

        for k, h in enumerate(previous):

            if not h.is_zero:

                total += self._linear(k) * h

        return total


    def residual(
            self,
            genus: int,
            gradients: Mapping[int, Gradients],
        ) -> LambdaRingElem:
        """
        Left minus right hand side at ``epsilon^(2 genus - 2)``.
        """

        return (
            self.lhs(gradients.get(genus, ())) -
            self.rhs(genus, gradients)
        )


    def reported(
            self,
            genus: int,
            value: DiffPoly | LogExtendedPoly,
        ) -> DiffPoly | LogExtendedPoly:
        """
        A solved free energy in the reporting field.
        """

        if self.field == 'v':

            return value

        scale = QQ(self.unknown_scale) ** (genus - 1)

        return substitute_log_change(value, 'v-to-w') * (1 / scale)


MODELS = {
    'gfm-v4': LoopModel(
        name = 'gfm-v4',
        quadratic_weight = QQ(1, 2),
        field = 'v',
        unknown_scale = 1,
        _kernel = _gfm_kernel,
        _quadratic = _gfm_quadratic,
        _linear = _gfm_linear,
        _source = _gfm_source,
    ),
    'fvh': LoopModel(
        name = 'fvh',
        quadratic_weight = QQ(1),
        field = 'w',
        unknown_scale = -2,
        _kernel = _fvh_kernel,
        _quadratic = _fvh_quadratic,
        _linear = _fvh_linear,
        _source = _fvh_source,
    ),
}


def loop_model(model: str | LoopModel) -> LoopModel:
    """
    Look up a loop equation by name.

    Raises:
        ValueError: Unknown model name.
    """

    if isinstance(model, LoopModel):

        return model

    if model not in MODELS:

        raise ValueError(
            f'Unknown loop model: `{model}`; '
            f'available: {", ".join(MODELS)}.'
        )

    return MODELS[model]
