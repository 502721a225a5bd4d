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
Hamiltonian operators as compositions of multiplications and constant
coefficient operators ``dx^n g(eps dx)``.
"""

from __future__ import annotations

__all__ = [
    'MulFactor',
    'ConstFactor',
    'PoissonOp',
    'first_poisson',
    'second_poisson',
    'first_poisson_inverse',
    'recursion_operator',
    'apply_poisson',
    'recursion_apply',
    'poisson_skew_defect',
]

import functools
import dataclasses
from typing import Iterable

import sympy as sp

from .. import _errors
from .._session import _log
from ..epsops import XI, EpsSeries, SymbolOp, symbol_apply, sinhc_symbol
from ..jetring import (
    QQ,
    DiffPoly,
    LogExtendedPoly,
    Rational,
    jet,
    rational,
    antiderivative,
    variational_derivative,
)


@dataclasses.dataclass(frozen = True)
class MulFactor:
    """
    Multiplication by a series.
    """

    series: EpsSeries


    def apply(self, f: EpsSeries) -> EpsSeries:

        return self.series * f


    def adjoint(self) -> MulFactor:

        return self


    @property
    def scalar(self) -> Rational | None:
        """
        The value if the series is a rational constant.
        """

        head = self.series.dispersionless

        if (
            isinstance(head, DiffPoly) and
            head.is_constant and
            all(c.is_zero for c in self.series.coeffs[1:])
        ):

            return head.constant

        return None


    def __str__(self) -> str:

        return f'({self.series})'


@dataclasses.dataclass(frozen = True)
class ConstFactor:
    """
    The operator ``dx^n g(eps dx)`` for an analytic symbol ``g``.

    A negative ``n`` means ``-n`` antiderivatives, applied before ``g``.
    """

    symbol: SymbolOp
    n: int = 0


    def __post_init__(self):

        if self.symbol.valuation < 0:

            raise ValueError(
                'Constant factors take symbols without a pole at zero.'
            )


    def apply(self, f: EpsSeries) -> EpsSeries:

        if self.n < 0:

            f = f.map(functools.partial(_antiderivative, times = -self.n))

        f = symbol_apply(self.symbol, f)

        for _ in range(max(self.n, 0)):

            f = f.dx()

        return f


    def adjoint(self) -> ConstFactor:

        return ConstFactor(self.symbol.reflect() * (-1) ** self.n, self.n)


    def __str__(self) -> str:

        d = '' if not self.n else 'dx' if self.n == 1 else f'dx^{self.n}'

        return f'{d}[{self.symbol.to_sympy()}]'


Factor = MulFactor | ConstFactor


def _antiderivative(c, times: int):

    for _ in range(times):

        if c.is_zero:

            return c

        if isinstance(c, LogExtendedPoly):

            raise _errors.NotExact(
                f'No antiderivative of the logarithmic term `{c}`.',
            )

        c = antiderivative(c)

    return c


def _canonical(
        scalar: Rational,
        factors: Iterable[Factor],
    ) -> tuple[Rational, tuple[Factor, ...]]:

    out = []

    for f in factors:

        if isinstance(f, MulFactor) and f.scalar is not None:

            scalar *= f.scalar

            continue

        if out and type(out[-1]) is type(f):

            last = out.pop()

            if isinstance(f, MulFactor):

                merged = MulFactor(last.series * f.series)

                if merged.scalar is not None:

                    scalar *= merged.scalar

                    continue

            else:

                merged = ConstFactor(last.symbol * f.symbol, last.n + f.n)

            out.append(merged)

            continue

        out.append(f)

    if not scalar:

        return QQ(0), ()

    for i, f in enumerate(out):

        if isinstance(f, ConstFactor):

            out[i] = ConstFactor(f.symbol * scalar, f.n)
            scalar = QQ(1)

            break

    return scalar, tuple(out)


class PoissonOp:
    """
    The composition ``scalar * F_1 o F_2 o ... o F_k``.

    Factors are kept in a canonical form: adjacent factors of the same
    kind are merged and the scalar is absorbed by the first constant
    coefficient factor.

    Args:
        factors:
            The factors, leftmost first.
        scalar:
            Rational prefactor.
        name:
            Label used in logs and reports.
        skew:
            Check skew-adjointness on construction.

    Raises:
        Mismatch: ``skew`` is set and the adjoint is not the negative of
            the operator.
    """

    def __init__(
            self,
            factors: Iterable[Factor],
            scalar = 1,
            name: str = 'P',
            skew: bool = False,
        ):

        self.scalar, self.factors = _canonical(rational(scalar), factors)
        self.name = name

        if skew:

            self.check_skew()


    def adjoint(self) -> PoissonOp:

        return PoissonOp(
            [f.adjoint() for f in reversed(self.factors)],
            self.scalar,
            name = f'{self.name}^+',
        )


    def __neg__(self) -> PoissonOp:

        return PoissonOp(self.factors, -self.scalar, name = f'-{self.name}')


    def __matmul__(self, other: PoissonOp) -> PoissonOp:

        return PoissonOp(
            self.factors + other.factors,
            self.scalar * other.scalar,
            name = f'{self.name} {other.name}',
        )


    def check_skew(self) -> None:

        if self.adjoint() != -self:

            _log(f'Poisson: `{self.name}` is not skew-adjoint.')

            raise _errors.Mismatch(
                f'Operator `{self.name}` is not skew-adjoint.',
                difference = (self.adjoint(), -self),
                where = self.name,
            )


    def apply(self, f: EpsSeries) -> EpsSeries:

        for factor in reversed(self.factors):

            f = factor.apply(f)

        return f * self.scalar


    def __call__(self, f: EpsSeries) -> EpsSeries:

        return self.apply(f)


    def __eq__(self, other) -> bool:

        if not isinstance(other, PoissonOp):

            return NotImplemented

        return self.scalar == other.scalar and self.factors == other.factors


    def __hash__(self) -> int:

        return hash(self.factors)


    def __str__(self) -> str:

        body = ' o '.join(str(f) for f in self.factors) or '1'

        return body if self.scalar == 1 else f'{self.scalar} * {body}'


    def __repr__(self) -> str:

        return f'<PoissonOp {self.name}: {self}>'


def _unknown(order: int) -> EpsSeries:

    return EpsSeries.constant(jet(0, 'U'), order, 'U')


@functools.cache
def _symbol(expr: str, precision: int) -> SymbolOp:

    return SymbolOp.from_expr(sp.sympify(expr, locals = {'xi': XI}), precision)


@functools.cache
def first_poisson(order: int) -> PoissonOp:
    """
    ``P_1 = (Lambda - Lambda^-1) / (2 eps) = dx o sinh(eps dx) / (eps dx)``.
    """

    return PoissonOp(
        [ConstFactor(sinhc_symbol(order), 1)],
        name = 'P1',
        skew = True,
    )


@functools.cache
def second_poisson(order: int) -> PoissonOp:
    """
    ``P_2 = (2 / eps) U (Lambda - 1) / (Lambda + 1) U``.
    """

    u = MulFactor(_unknown(order))

    return PoissonOp(
        [u, ConstFactor(_symbol('tanh(xi/2)/xi', order), 1), u],
        scalar = 2,
        name = 'P2',
        skew = True,
    )


@functools.cache
def first_poisson_inverse(order: int) -> PoissonOp:
    """
    ``P_1^-1 = (eps dx / sinh(eps dx)) o dx^-1`` on exact arguments.
    """

    return PoissonOp(
        [ConstFactor(_symbol('xi/sinh(xi)', order), -1)],
        name = 'P1^-1',
    )


@functools.cache
def recursion_operator(order: int) -> PoissonOp:
    """
    ``R = P_2 P_1^-1``.
    """

    recursion = second_poisson(order) @ first_poisson_inverse(order)
    recursion.name = 'R'

    return recursion


def apply_poisson(P: PoissonOp, g: EpsSeries) -> EpsSeries:
    """
    Apply a Hamiltonian operator, factors right to left.

    Raises:
        NotExact: An antiderivative inside ``P`` got a non-exact argument.
    """

    return P.apply(g)


def recursion_apply(g: EpsSeries) -> EpsSeries:
    """
    ``R(g)`` for ``g`` in the image of ``P_1``.

    Raises:
        NotExact: ``g`` is not a total derivative coefficient by
            coefficient.
    """

    return recursion_operator(g.order).apply(g)


def poisson_skew_defect(
        P: PoissonOp,
        f: EpsSeries,
        g: EpsSeries,
    ) -> EpsSeries:
    """
    Variational derivative of ``f P(g) + g P(f)``, zero for skew ``P``.
    """

    return (f * P.apply(g) + g * P.apply(f)).map(variational_derivative)
