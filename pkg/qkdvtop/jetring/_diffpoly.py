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
Differential polynomials in the jets of one scalar field.

Coefficients are exact rationals; exponents may be negative on the jets of
order 0 and 1 (and on the ``exp(w)`` generator of the w-field). Values are
immutable.
"""

from __future__ import annotations

__all__ = [
    'DiffPoly',
    'LogExtendedPoly',
    'jet',
    'const',
    'exp_generator',
    'log_monomial',
    'as_diffpoly',
]

import types
from typing import Iterable, Mapping

from .. import _errors
from ._monomial import (
    QQ,
    EXP_ORDER,
    Monomial,
    Rational,
    jet_name,
    mono_inv,
    mono_key,
    mono_mul,
    mono_pow,
    rational,
    mono_normalize,
    mono_degree,
    rational_str,
    mono_max_order,
)

_ZERO = QQ(0)
_ONE = QQ(1)

_SCALARS = (int, Rational)


def _coef_str(coef: Rational, body: str) -> tuple[bool, str]:

    negative = coef < 0
    coef = -coef if negative else coef

    if not body:

        return negative, rational_str(coef)

    if coef == 1:

        return negative, body

    if coef.denominator == 1:

        return negative, f'{coef.numerator}*{body}'

    return negative, f'({rational_str(coef)})*{body}'


def _mono_str(mono: Monomial, field: str) -> str:

    positive = sorted(
        ((o, e) for o, e in mono if e > 0 and o != EXP_ORDER),
        reverse = True,
    )
    negative = sorted(
        ((o, e) for o, e in mono if e < 0 and o != EXP_ORDER),
        reverse = True,
    )
    gen = [(o, e) for o, e in mono if o == EXP_ORDER]

    return '*'.join(
        jet_name(o, field) + ('' if e == 1 else f'^{e}')
        for o, e in positive + negative + gen
    )


def _join(parts: list[tuple[bool, str]]) -> str:

    if not parts:

        return '0'

    neg, body = parts[0]
    out = ('-' if neg else '') + body

    for neg, body in parts[1:]:

        out += (' - ' if neg else ' + ') + body

    return out


class DiffPoly:
    """
    Exact differential polynomial: a sparse map from monomials to rationals.

    Args:
        terms:
            Mapping from monomials (tuples of ``(order, exponent)`` pairs)
            to rational coefficients. Monomials are normalized, duplicates
            summed and zero coefficients dropped.
        field:
            Name of the dependent variable: ``v``, ``U``, ``w``, ...
    """

    __slots__ = ('_terms', 'field', '_hash')

    def __init__(
            self,
            terms: Mapping | None = None,
            field: str = 'v',
        ):

        clean = {}

        for mono, coef in (terms or {}).items():

            mono = mono_normalize(mono)
            clean[mono] = clean.get(mono, _ZERO) + rational(coef)

        self._terms = {m: c for m, c in clean.items() if c}
        self.field = field
        self._hash = None


    @classmethod
    def _raw(cls, terms: dict, field: str) -> DiffPoly:

        new = cls.__new__(cls)
        new._terms = terms
        new.field = field
        new._hash = None

        return new


    @classmethod
    def zero(cls, field: str = 'v') -> DiffPoly:

        return cls._raw({}, field)


    @classmethod
    def one(cls, field: str = 'v') -> DiffPoly:

        return cls._raw({(): _ONE}, field)


    @property
    def terms(self) -> Mapping[Monomial, Rational]:

        return types.MappingProxyType(self._terms)


    def items(self) -> list[tuple[Monomial, Rational]]:
        """
        Terms in canonical order, highest monomial first.
        """

        return sorted(
            self._terms.items(),
            key = lambda t: mono_key(t[0]),
            reverse = True,
        )


    def __len__(self) -> int:

        return len(self._terms)


    def __bool__(self) -> bool:

        return bool(self._terms)


    @property
    def is_zero(self) -> bool:

        return not self._terms


    @property
    def is_constant(self) -> bool:

        return all(not m for m in self._terms)


    @property
    def constant(self) -> Rational:

        return self._terms.get((), _ZERO)


    @property
    def is_monomial(self) -> bool:

        return len(self._terms) == 1


    @property
    def max_order(self) -> int | None:
        """
        Highest jet order present, ``None`` for constants.
        """

        orders = [
            o for o in map(mono_max_order, self._terms) if o is not None
        ]

        return max(orders) if orders else None


    @property
    def has_exp(self) -> bool:

        return any(o == EXP_ORDER for m in self._terms for o, _ in m)


    def orders(self) -> set[int]:

        return {o for m in self._terms for o, _ in m}


    def coefficient(self, mono: Monomial) -> Rational:

        return self._terms.get(mono, _ZERO)


    def degree_parts(self) -> dict[int, DiffPoly]:
        """
        Homogeneous components keyed by total degree in the jets.
        """

        parts = {}

        for mono, coef in self._terms.items():

            parts.setdefault(mono_degree(mono), {})[mono] = coef

        return {d: DiffPoly._raw(t, self.field) for d, t in parts.items()}


    def with_field(self, field: str) -> DiffPoly:
        """
        The same polynomial read as a polynomial in another field.
        """

        return DiffPoly._raw(self._terms, field)


    def _coerce(self, other) -> DiffPoly:

        if isinstance(other, DiffPoly):

            if other.field != self.field:

                if other.is_constant:

                    return other.with_field(self.field)

                if not self.is_constant:

                    raise ValueError(
                        f'Mixing fields `{self.field}` and `{other.field}`.'
                    )

            return other

        if isinstance(other, _SCALARS):

            other = rational(other)

            return DiffPoly._raw({(): other} if other else {}, self.field)

        return NotImplemented


    def _field_with(self, other: DiffPoly) -> str:

        return other.field if self.is_constant else self.field


    def __add__(self, other):

        other = self._coerce(other)

        if other is NotImplemented:

            return NotImplemented

        terms = dict(self._terms)
        get = terms.get

        for mono, coef in other._terms.items():

            value = get(mono, _ZERO) + coef

            if value:

                terms[mono] = value

            else:

                terms.pop(mono, None)

        return DiffPoly._raw(terms, self._field_with(other))


    __radd__ = __add__


    def __neg__(self) -> DiffPoly:

        return DiffPoly._raw(
            {m: -c for m, c in self._terms.items()},
            self.field,
        )


    def __sub__(self, other):

        other = self._coerce(other)

        if other is NotImplemented:

            return NotImplemented

        return self + (-other)


    def __rsub__(self, other):

        return (-self) + other


    def __mul__(self, other):

        if isinstance(other, _SCALARS):

            other = rational(other)

            if not other:

                return DiffPoly.zero(self.field)

            return DiffPoly._raw(
                {m: c * other for m, c in self._terms.items()},
                self.field,
            )

        other = self._coerce(other)

        if other is NotImplemented:

            return NotImplemented

        terms = {}
        get = terms.get

        for m1, c1 in self._terms.items():

            for m2, c2 in other._terms.items():

                mono = mono_mul(m1, m2)
                terms[mono] = get(mono, _ZERO) + c1 * c2

        return DiffPoly._raw(
            {m: c for m, c in terms.items() if c},
            self._field_with(other),
        )


    __rmul__ = __mul__


    def inverse(self) -> DiffPoly:
        """
        Inverse of a monomial.

        Raises:
            NotInvertible: For zero or non-monomial polynomials, or when the
                inverse would put a jet of order two or higher in a
                denominator.
        """

        if not self.is_monomial:

            raise _errors.NotInvertible(
                f'Only monomials are invertible, got `{self}`.'
            )

        (mono, coef), = self._terms.items()

        try:

            inv = mono_inv(mono)

        except _errors.LaurentRangeError as e:

            raise _errors.NotInvertible(str(e)) from e

        return DiffPoly._raw({inv: 1 / coef}, self.field)


    def __truediv__(self, other):

        if isinstance(other, _SCALARS):

            return self * (1 / rational(other))

        other = self._coerce(other)

        if other is NotImplemented:

            return NotImplemented

        return self * other.inverse()


    def __rtruediv__(self, other):

        return self.inverse() * other


    def __pow__(self, n: int) -> DiffPoly:

        if not isinstance(n, int):

            return NotImplemented

        if n < 0:

            return self.inverse() ** -n

        if self.is_monomial:

            (mono, coef), = self._terms.items()

            return DiffPoly._raw({mono_pow(mono, n): coef ** n}, self.field)

        result = DiffPoly.one(self.field)
        base = self

        while n:

            if n & 1:

                result = result * base

            n >>= 1

            if n:

                base = base * base

        return result


    def __eq__(self, other) -> bool:

        if isinstance(other, LogExtendedPoly):

            return other == self

        if isinstance(other, _SCALARS):

            other = rational(other)

            return self._terms == ({(): other} if other else {})

        if not isinstance(other, DiffPoly):

            return NotImplemented

        return self._terms == other._terms and (
            self.field == other.field or self.is_constant
        )


    def __hash__(self) -> int:

        if self._hash is None:

            self._hash = hash(frozenset(self._terms.items()))

        return self._hash


    def __str__(self) -> str:

        return _join([
            _coef_str(coef, _mono_str(mono, self.field))
            for mono, coef in self.items()
        ])


    def __repr__(self) -> str:

        return f'<DiffPoly[{self.field}] {self}>'


def jet(order: int, field: str = 'v') -> DiffPoly:
    """
    The jet variable of the given order, e.g. ``jet(2)`` is ``v_xx``.
    """

    if order < 0:

        raise ValueError(f'Invalid jet order: {order}')

    return DiffPoly._raw({((order, 1),): _ONE}, field)


def const(value, field: str = 'v') -> DiffPoly:

    value = rational(value)

    return DiffPoly._raw({(): value} if value else {}, field)


def exp_generator(field: str = 'w') -> DiffPoly:
    """
    The invertible generator ``exp(w)`` of the w-field.
    """

    return DiffPoly._raw({((EXP_ORDER, 1),): _ONE}, field)


def as_diffpoly(value, field: str = 'v') -> DiffPoly:

    if isinstance(value, DiffPoly):

        return value

    return const(value, field)


class LogExtendedPoly:
    """
    A differential polynomial plus rational multiples of ``log v`` and
    ``log v_x``.

    Args:
        rational_part:
            The polynomial part.
        logs:
            Coefficients of ``log`` of the jets of order 0 and 1.
    """

    __slots__ = ('rational', 'logs')

    def __init__(
            self,
            rational_part: DiffPoly,
            logs: Mapping[int, object] | None = None,
        ):

        logs = {int(s): rational(c) for s, c in (logs or {}).items()}

        if set(logs) - {0, 1}:

            raise ValueError(
                'Logarithms are only allowed on the jets of order 0 and 1.'
            )

        self.rational = rational_part
        self.logs = types.MappingProxyType(
            {s: c for s, c in sorted(logs.items()) if c}
        )


    @property
    def field(self) -> str:

        return self.rational.field


    @property
    def is_zero(self) -> bool:

        return self.rational.is_zero and not self.logs


    @property
    def max_order(self) -> int | None:

        orders = [o for o in (self.rational.max_order,) if o is not None]
        orders.extend(self.logs)

        return max(orders) if orders else None


    @staticmethod
    def make(
            rational_part: DiffPoly,
            logs: Mapping,
        ) -> DiffPoly | LogExtendedPoly:
        """
        Build a log-extended value, collapsing to a DiffPoly without logs.
        """

        logs = {s: c for s, c in logs.items() if c}

        return LogExtendedPoly(rational_part, logs) if logs else rational_part


    def _split(self, other) -> tuple[DiffPoly, Mapping]:

        if isinstance(other, LogExtendedPoly):

            return other.rational, other.logs

        if isinstance(other, DiffPoly):

            return other, {}

        if isinstance(other, _SCALARS):

            return const(other, self.field), {}

        return None, None


    def __add__(self, other):

        rat, logs = self._split(other)

        if rat is None:

            return NotImplemented

        merged = dict(self.logs)

        for s, c in logs.items():

            merged[s] = merged.get(s, _ZERO) + c

        return LogExtendedPoly.make(self.rational + rat, merged)


    __radd__ = __add__


    def __neg__(self) -> LogExtendedPoly:

        return LogExtendedPoly(
            -self.rational,
            {s: -c for s, c in self.logs.items()},
        )


    def __sub__(self, other):

        return self + (-other)


    def __rsub__(self, other):

        return (-self) + other


    def __mul__(self, other):

        if isinstance(other, DiffPoly):

            if not other.is_constant:

                raise ValueError(
                    'Logarithmic terms can only be multiplied by constants.'
                )

            other = other.constant

        if not isinstance(other, _SCALARS):

            return NotImplemented

        other = rational(other)

        return LogExtendedPoly.make(
            self.rational * other,
            {s: c * other for s, c in self.logs.items()},
        )


    __rmul__ = __mul__


    def __truediv__(self, other):

        if isinstance(other, _SCALARS):

            return self * (1 / rational(other))

        return NotImplemented


    def __eq__(self, other) -> bool:

        rat, logs = self._split(other)

        if rat is None:

            return NotImplemented

        return self.rational == rat and dict(self.logs) == dict(logs)


    def __hash__(self) -> int:

        return hash((self.rational, frozenset(self.logs.items())))


    def __str__(self) -> str:

        parts = [
            _coef_str(c, f'log({jet_name(s, self.field)})')
            for s, c in sorted(self.logs.items(), reverse = True)
        ]
        rat = str(self.rational)

        if not parts:

            return rat

        out = _join(parts)

        if not self.rational.is_zero:

            out += (' - ' + rat[1:]) if rat.startswith('-') else (' + ' + rat)

        return out


    def __repr__(self) -> str:

        return f'<LogExtendedPoly[{self.field}] {self}>'


def log_monomial(p: DiffPoly) -> LogExtendedPoly | DiffPoly:
    """
    Logarithm of a monomial in the jets of order 0 and 1, dropping the
    constant ``log`` of its coefficient.

    Raises:
        ValueError: If ``p`` is not such a monomial.
    """

    if not p.is_monomial:

        raise ValueError(f'Logarithm of a non-monomial: `{p}`.')

    (mono, _), = p.terms.items()
    logs = {}

    for order, exp in mono:

        if order not in (0, 1):

            raise ValueError(
                f'Logarithm of the jet of order {order} is not supported.'
            )

        logs[order] = QQ(exp)

    return LogExtendedPoly.make(DiffPoly.zero(p.field), logs)
