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
The ring generated over the jets of ``v`` by the spectral parameter
``lambda`` and ``sigma = (v^2 - lambda)^(1/2)``.

Elements are kept in a unique normal form over the basis ``lambda^m`` and
``lambda^m sigma`` (any integer ``m``), ``P^k`` and ``D P^k`` (``k >= 1``),
with differential polynomial coefficients. ``P = sigma^-2`` and
``D = sigma^-1`` are the period data of the loop equations.
"""

from __future__ import annotations

__all__ = [
    'LambdaRingElem',
    'ring_reduce',
    'basis_label',
    'pole_label',
    'sigma_power',
    'lambda_power',
]

import functools
from typing import Iterable, Mapping

from sympy import binomial

from ..jetring import QQ, DiffPoly, dx, jet, const, as_diffpoly

FIELD = 'v'

Key = tuple[int, int]


def _is_normal(key: Key) -> bool:

    m, n = key

    return n in (0, 1) or (m == 0 and n < 0)


def basis_label(key: Key) -> str:
    """
    Printed name of the basis element ``lambda^m sigma^n``.
    """

    m, n = key

    if n >= 0:

        lam = 'lambda' if m == 1 else f'lambda^{m}'
        sigma = 'sigma' if n else ''

        if not m:

            return sigma or '1'

        return f'{lam}*{sigma}' if sigma else lam

    if n % 2:

        k = (-n - 1) // 2

        return 'D' if not k else 'D*P' if k == 1 else f'D*P^{k}'

    k = -n // 2

    return 'P' if k == 1 else f'P^{k}'


def pole_label(k: int) -> Key:
    """
    Key of ``P^k``.
    """

    return 0, -2 * k


@functools.cache
def _v_power(n: int) -> DiffPoly:

    return jet(0, FIELD) ** n


@functools.cache
def _reduce(m: int, n: int) -> tuple[tuple[Key, DiffPoly], ...]:
    """
    Normal form of ``lambda^m sigma^n``.
    """

    if _is_normal((m, n)):

        return (((m, n), const(1, FIELD)),)

    out = {}

    def add(terms, factor: DiffPoly) -> None:

        for key, c in terms:

            out[key] = out.get(key, DiffPoly.zero(FIELD)) + c * factor

    if n >= 2:

        # sigma^2 = v^2 - lambda
        add(_reduce(m, n - 2), _v_power(2))
        add(_reduce(m + 1, n - 2), const(-1, FIELD))

    elif m > 0:

        # lambda = v^2 - sigma^2
        add(_reduce(m - 1, n), _v_power(2))
        add(_reduce(m - 1, n + 2), const(-1, FIELD))

    else:

        # 1 / (lambda sigma^2) = (1 / lambda + 1 / sigma^2) / v^2
        add(_reduce(m, n + 2), _v_power(-2))
        add(_reduce(m + 1, n), _v_power(-2))

    return tuple((k, c) for k, c in sorted(out.items()) if not c.is_zero)


def ring_reduce(
        raw: Mapping[Key, object] | Iterable[tuple[Key, object]],
    ) -> LambdaRingElem:
    """
    Normal form of ``sum c * lambda^m * sigma^n``.

    Args:
        raw:
            Coefficients keyed by ``(m, n)``, any integers.
    """

    items = raw.items() if isinstance(raw, Mapping) else raw
    out = {}

    for (m, n), c in items:

        c = as_diffpoly(c, FIELD)

        if c.is_zero:

            continue

        for key, factor in _reduce(m, n):

            out[key] = out.get(key, DiffPoly.zero(FIELD)) + c * factor

    return LambdaRingElem._raw(out)


def sigma_power(n: int) -> LambdaRingElem:

    return ring_reduce({(0, n): 1})


def lambda_power(m: int) -> LambdaRingElem:

    return ring_reduce({(m, 0): 1})


class LambdaRingElem:
    """
    An element in normal form.

    Use :func:`ring_reduce` to build elements from arbitrary monomials
    ``lambda^m sigma^n``; the constructor accepts normal keys only.

    Args:
        terms:
            Coefficients keyed by normal ``(m, n)``: ``n`` in ``{0, 1}``,
            or ``m = 0`` and ``n < 0``.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms: Mapping[Key, object] | None = None):

        terms = terms or {}

        for key in terms:

            if not _is_normal(key):

                raise ValueError(f'Not a normal basis key: {key}.')

        self._terms = {
            k: c
            for k, c in (
                (k, as_diffpoly(c, FIELD))
                for k, c in sorted(terms.items())
            )
            if not c.is_zero
        }


    @classmethod
    def _raw(cls, terms: dict) -> LambdaRingElem:

        new = cls.__new__(cls)
        new._terms = {
            k: c for k, c in sorted(terms.items()) if not c.is_zero
        }

        return new


    @classmethod
    def scalar(cls, c) -> LambdaRingElem:

        return cls._raw({(0, 0): as_diffpoly(c, FIELD)})


    @property
    def terms(self) -> Mapping[Key, DiffPoly]:

        return dict(self._terms)


    @property
    def is_zero(self) -> bool:

        return not self._terms


    def coeff(self, key: Key) -> DiffPoly:

        return self._terms.get(key) or DiffPoly.zero(FIELD)


    def labelled(self) -> dict[str, DiffPoly]:
        """
        Coefficients keyed by basis label.
        """

        return {basis_label(k): c for k, c in self._terms.items()}


    @property
    def pole_order(self) -> int:
        """
        Highest power of ``sigma^-1``, zero without poles.
        """

        return max(
            (-n for m, n in self._terms if not m and n < 0),
            default = 0,
        )


    def __add__(self, other):

        if not isinstance(other, LambdaRingElem):

            other = LambdaRingElem.scalar(other)

        out = dict(self._terms)

        for k, c in other._terms.items():

            out[k] = out[k] + c if k in out else c

        return LambdaRingElem._raw(out)


    __radd__ = __add__


    def __neg__(self) -> LambdaRingElem:

        return LambdaRingElem._raw({k: -c for k, c in self._terms.items()})


    def __sub__(self, other):

        return self + (-other)


    def __rsub__(self, other):

        return (-self) + other


    def __mul__(self, other):

        if not isinstance(other, LambdaRingElem):

            other = as_diffpoly(other, FIELD)

            return LambdaRingElem._raw(
                {k: c * other for k, c in self._terms.items()}
            )

        raw = {}

        for (m1, n1), c1 in self._terms.items():

            for (m2, n2), c2 in other._terms.items():

                key = (m1 + m2, n1 + n2)
                raw[key] = raw[key] + c1 * c2 if key in raw else c1 * c2

        return ring_reduce(raw)


    __rmul__ = __mul__


    def dx(self) -> LambdaRingElem:
        """
        Total x-derivative, ``dx(sigma) = v v_x / sigma``.
        """

        vvx = jet(0, FIELD) * jet(1, FIELD)
        raw = {}

        for (m, n), c in self._terms.items():

            raw[(m, n)] = raw.get((m, n), DiffPoly.zero(FIELD)) + dx(c)

            if n:

                key = (m, n - 2)
                raw[key] = raw.get(key, DiffPoly.zero(FIELD)) + c * vvx * n

        return ring_reduce(raw)


    def dx_n(self, k: int) -> LambdaRingElem:

        result = self

        for _ in range(k):

            result = result.dx()

        return result


    def d_lambda(self) -> LambdaRingElem:
        """
        Derivative by ``lambda``, ``d sigma / d lambda = -1 / (2 sigma)``.
        """

        raw = {}

        for (m, n), c in self._terms.items():

            if m:

                key = (m - 1, n)
                raw[key] = raw.get(key, DiffPoly.zero(FIELD)) + c * m

            if n:

                key = (m, n - 2)
                raw[key] = (
                    raw.get(key, DiffPoly.zero(FIELD)) + c * QQ(-n, 2)
                )

        return ring_reduce(raw)


    def at_infinity(self, lowest: int) -> dict[int, DiffPoly]:
        """
        Integer powers of ``lambda`` in the expansion at ``lambda = oo``.

        Odd powers of ``sigma`` expand in half-integer powers and are
        left out.

        Args:
            lowest:
                Lowest power of ``lambda`` kept.

        Returns:
            Coefficients keyed by the power of ``lambda``.
        """

        out = {}

        for (m, n), c in self._terms.items():

            if n % 2:

                continue

            a = n // 2
            i = 0

            # (v^2 - lambda)^a = sum_i (-1)^(a+i) C(a,i) v^(2i) lambda^(a-i)
            while m + a - i >= lowest:

                if a < 0 or i <= a:

                    sign = -1 if (a + i) % 2 else 1
                    term = c * _v_power(2 * i) * (sign * int(binomial(a, i)))
                    power = m + a - i
                    out[power] = out.get(power, DiffPoly.zero(FIELD)) + term

                i += 1

        return {p: c for p, c in sorted(out.items()) if not c.is_zero}


    def __eq__(self, other) -> bool:

        if not isinstance(other, LambdaRingElem):

            return NotImplemented

        return self._terms == other._terms


    def __hash__(self) -> int:

        return hash(tuple(self._terms.items()))


    def __str__(self) -> str:

        parts = [
            f'({c})' + ('' if k == (0, 0) else f'*{basis_label(k)}')
            for k, c in self._terms.items()
        ]

        return ' + '.join(parts) or '0'


    def __repr__(self) -> str:

        return f'<LambdaRingElem {self}>'
