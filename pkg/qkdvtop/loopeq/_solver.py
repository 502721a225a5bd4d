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
Genus by genus solution of the loop equations.
"""

from __future__ import annotations

__all__ = [
    'GenusSolution',
    'build_residual',
    'solve_genus',
    'integrate_genus',
    'solve_through',
    'compatibility_matrix',
]

import json
import hashlib
import functools
import dataclasses
from typing import Mapping, Sequence

from .. import _conf, _errors
from .._session import _log
from ..jetring import (
    DiffPoly,
    LogExtendedPoly,
    partial,
    integrate_gradients,
    to_json,
    from_json,
)
from ._models import LoopModel, loop_model
from ._ring import basis_label, pole_label

Value = DiffPoly | LogExtendedPoly


def _digest(payload) -> str:

    text = json.dumps(payload, sort_keys = True, separators = (',', ':'))

    return hashlib.sha256(text.encode()).hexdigest()


@dataclasses.dataclass(frozen = True)
class GenusSolution:
    """
    The genus ``g`` part of a loop equation solution.

    Gradients and free energy are in the v-jets, as solved. For the
    ``fvh`` model they are ``(-2)^(g-1)`` times the derivatives of the
    w-field free energy ``H_g``, see :attr:`reported_free_energy`.
    """

    model: str
    genus: int
    gradients: tuple[DiffPoly, ...]
    free_energy: Value | None = None


    @property
    def loop_model(self) -> LoopModel:

        return loop_model(self.model)


    def gradient(self, s: int) -> DiffPoly:

        if 0 <= s < len(self.gradients):

            return self.gradients[s]

        return DiffPoly.zero('v')


    @property
    def reported_free_energy(self) -> Value | None:
        """
        The free energy in the reporting field of the model.
        """

        if self.free_energy is None:

            return None

        return self.loop_model.reported(self.genus, self.free_energy)


    def to_json(self) -> dict:

        payload = {
            'model': self.model,
            'genus': self.genus,
            'gradients': [to_json(h) for h in self.gradients],
            'free_energy': (
                None
                    if self.free_energy is None else
                to_json(self.free_energy)
            ),
        }
        payload['checksums'] = {
            'gradients': _digest(payload['gradients']),
            'free_energy': _digest(payload['free_energy']),
        }

        return payload


    @classmethod
    def from_json(cls, data: dict) -> GenusSolution:
        """
        Rebuild a solution, verifying the checksums.

        Raises:
            CacheCorruption: A checksum does not match.
        """

        checksums = data.get('checksums', {})

        for key in ('gradients', 'free_energy'):

            if checksums.get(key) != _digest(data.get(key)):

                raise _errors.CacheCorruption(
                    f'Checksum of `{key}` does not match for genus '
                    f'{data.get("genus")} of `{data.get("model")}`.'
                )

        free_energy = data['free_energy']

        return cls(
            model = data['model'],
            genus = int(data['genus']),
            gradients = tuple(from_json(h, 'v') for h in data['gradients']),
            free_energy = (
                None if free_energy is None else from_json(free_energy, 'v')
            ),
        )


Solutions = Mapping[int, GenusSolution | Sequence[DiffPoly]]


def _gradient_map(solutions: Solutions) -> dict[int, tuple[DiffPoly, ...]]:

    return {
        g: tuple(
            sol.gradients if isinstance(sol, GenusSolution) else sol
        )
        for g, sol in solutions.items()
    }


def build_residual(
        model: str | LoopModel,
        solutions: Solutions,
        genus: int | None = None,
    ) -> dict[tuple[int, str], DiffPoly]:
    """
    Nonzero coefficients of left minus right hand side.

    Args:
        model:
            The loop equation.
        solutions:
            Gradients or solutions keyed by genus; missing genera count as
            zero.
        genus:
            Highest genus collected; defaults to the highest one present,
            at least one.

    Returns:
        Coefficients keyed by the power of epsilon and the basis label.
    """

    model = loop_model(model)
    grads = _gradient_map(solutions)
    genus = genus or max(grads, default = 1)
    residual = {}

    for g in range(1, genus + 1):

        for key, c in model.residual(g, grads).terms.items():

            residual[(2 * g - 2, basis_label(key))] = c

    return residual


def _check_ring(h: DiffPoly, genus: int, s: int) -> None:

    top = h.max_order

    if top is not None and top > 3 * genus - s - 1:

        raise _errors.RingEscape(
            f'Gradient H_({genus};{s}) depends on the jet of order {top}.',
            jet_order = top,
        )


def solve_genus(
        model: str | LoopModel,
        genus: int,
        lower: Solutions | None = None,
    ) -> GenusSolution:
    """
    Solve the loop equation for the gradients of one genus.

    The unknowns ``H_(g;s)``, ``s = 0..3g-2``, are fixed by the
    coefficients of ``P^(s+1)``, highest pole first; the full residual is
    checked afterwards.

    Args:
        model:
            The loop equation.
        genus:
            Target genus, at least one.
        lower:
            Solutions of the lower genera; solved on demand if omitted.

    Raises:
        InconsistentSystem: The residual does not vanish, or a pivot is not
            invertible.
        RingEscape: A gradient depends on a jet above the allowed order.
    """

    model = loop_model(model)

    if genus < 1:

        raise ValueError(f'Genus must be positive, got {genus}.')

    if lower is None:

        lower = solve_through(model.name, genus - 1)

    grads = _gradient_map(lower)
    grads.pop(genus, None)

    _log(f'Loop equation: solving genus {genus} of `{model.name}`.')

    rhs = model.rhs(genus, grads)
    unknowns = 3 * genus - 1
    solved = {}

    for s in reversed(range(unknowns)):

        key = pole_label(s + 1)
        pivot = model.kernel(s).coeff(key)
        target = rhs.coeff(key)

        for r, h in solved.items():

            target = target - h * model.kernel(r).coeff(key)

        try:

            solved[s] = target / pivot

        except _errors.NotInvertible as e:

            raise _errors.InconsistentSystem(
                f'Pivot of P^{s + 1} is not invertible: `{pivot}`.',
                residual = pivot,
            ) from e

        _check_ring(solved[s], genus, s)

    gradients = tuple(solved[s] for s in range(unknowns))
    grads[genus] = gradients
    residual = model.residual(genus, grads)

    if not residual.is_zero:

        _log(
            f'Loop equation: genus {genus} of `{model.name}` leaves '
            f'{len(residual.terms)} nonzero coefficients.'
        )

        raise _errors.InconsistentSystem(
            f'Residual of genus {genus} does not vanish: `{residual}`.',
            residual = residual,
        )

    return GenusSolution(model.name, genus, gradients)


def integrate_genus(sol: GenusSolution) -> GenusSolution:
    """
    Attach the free energy with the solved gradients.

    The additive constant is zero.

    Raises:
        CompatibilityFailure: The gradients are not those of one function.
    """

    free_energy = integrate_gradients(dict(enumerate(sol.gradients)), 'v')

    for s, h in enumerate(sol.gradients):

        if partial(free_energy, s) != h:

            raise _errors.CompatibilityFailure(
                f'Free energy of genus {sol.genus} does not reproduce '
                f'H_({sol.genus};{s}).',
                pair = (s, s),
                difference = partial(free_energy, s) - h,
            )

    _log(
        f'Loop equation: free energy of genus {sol.genus} '
        f'of `{sol.model}` reconstructed.'
    )

    return dataclasses.replace(sol, free_energy = free_energy)


@functools.lru_cache(maxsize = None)
def _solve_through(model: str, genus: int) -> tuple[GenusSolution, ...]:

    if genus < 1:

        return ()

    lower = _solve_through(model, genus - 1)
    sol = solve_genus(model, genus, {s.genus: s for s in lower})

    return lower + (integrate_genus(sol),)


def solve_through(
        model: str | LoopModel,
        genus: int | None = None,
    ) -> dict[int, GenusSolution]:
    """
    Solve and integrate all genera up to ``genus``.

    Args:
        genus:
            Highest genus; defaults to the ``genus_max`` setting.
    """

    model = loop_model(model)
    genus = _conf.get('genus_max') if genus is None else genus

    return {s.genus: s for s in _solve_through(model.name, int(genus))}


def compatibility_matrix(sol: GenusSolution) -> dict[tuple[int, int], Value]:
    """
    Nonzero differences ``dH_r / dv^(s) - dH_s / dv^(r)``, ``r < s``.
    """

    n = len(sol.gradients)

    return {
        (r, s): diff
        for r in range(n)
        for s in range(r + 1, n)
        if not (
            diff := partial(sol.gradients[r], s) -
                partial(sol.gradients[s], r)
        ).is_zero
    }
