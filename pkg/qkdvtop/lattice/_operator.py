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
Pseudo-difference operators ``sum_p a_p Lambda^p`` with epsilon series
coefficients, known on an explicit window of exponents.
"""

from __future__ import annotations

__all__ = [
    'Tail',
    'LaurentShiftOp',
    'op_mul',
    'op_commutator',
    'op_residue',
    'op_project',
    'op_adjoint',
]

import enum
from typing import Mapping

from .. import _errors
from ..epsops import EpsSeries, shift_apply
from ..jetring import DiffPoly, LogExtendedPoly, Rational, rational
from ._lattice import HalfLattice


class Tail(enum.Enum):
    """
    Direction in which an operator is an infinite series.
    """

    DOWNWARD = 'downward'
    UPWARD = 'upward'
    FINITE = 'finite'


_SCALARS = (int, Rational)


def _max(a, b):

    return b if a is None else a if b is None else max(a, b)


def _min(a, b):

    return b if a is None else a if b is None else min(a, b)


class LaurentShiftOp:
    """
    A pseudo-difference operator.

    Coefficients are known on the window ``[lo, hi]``; ``None`` on either
    side means every coefficient beyond the stored ones is known to be
    zero. Reading a coefficient outside the window raises
    :class:`WindowUnderflow`.

    Args:
        coeffs:
            Map from shift exponent to coefficient. Polynomials and
            scalars are promoted to series of the truncation order.
        order:
            Truncation order of all coefficients; defaults to the lowest
            order among the given series.
        tail:
            Series direction of the operator.
        lo, hi:
            Known window.
        field:
            Field of the coefficients.
    """

    __slots__ = ('_coeffs', 'order', 'tail', 'lo', 'hi', 'field', 'lattice')

    def __init__(
            self,
            coeffs: Mapping,
            order: int | None = None,
            tail: Tail = Tail.FINITE,
            lo = None,
            hi = None,
            field: str = 'U',
            lattice: HalfLattice | None = None,
        ):

        self.lattice = lattice or HalfLattice.default()
        self.tail = Tail(tail)
        self.lo = None if lo is None else self.lattice.check(lo)
        self.hi = None if hi is None else self.lattice.check(hi)
        self.field = field

        if order is None:

            orders = [
                c.order for c in coeffs.values() if isinstance(c, EpsSeries)
            ]

            if not orders:

                raise ValueError('Truncation order required.')

            order = min(orders)

        self.order = order
        clean = {}

        for p, c in coeffs.items():

            p = self.lattice.check(p)

            if not self.known(p):

                continue

            if isinstance(c, EpsSeries):

                c = c.truncate(order)

            elif isinstance(c, (DiffPoly, LogExtendedPoly, *_SCALARS)):

                c = EpsSeries.constant(c, order, field)

            else:

                raise TypeError(f'Invalid operator coefficient: {c!r}')

            if not c.is_zero:

                clean[p] = c

        self._coeffs = dict(sorted(clean.items(), reverse = True))


    @classmethod
    def shift(
            cls,
            p,
            order: int,
            field: str = 'U',
        ) -> LaurentShiftOp:
        """
        The operator ``Lambda^p``.
        """

        return cls({p: 1}, order = order, field = field)


    @classmethod
    def multiplication(cls, f: EpsSeries) -> LaurentShiftOp:
        """
        Multiplication by ``f``, the coefficient of ``Lambda^0``.
        """

        return cls({0: f}, order = f.order, field = f.field)


    def _like(self, coeffs, tail = None, lo = None, hi = None, order = None):

        return LaurentShiftOp(
            coeffs,
            order = self.order if order is None else order,
            tail = self.tail if tail is None else tail,
            lo = lo,
            hi = hi,
            field = self.field,
            lattice = self.lattice,
        )


    @property
    def coefficients(self) -> Mapping[Rational, EpsSeries]:
        """
        The nonzero known coefficients, highest exponent first.
        """

        return dict(self._coeffs)


    @property
    def window(self) -> tuple:

        return self.lo, self.hi


    def known(self, p) -> bool:

        p = rational(p)

        return (self.lo is None or p >= self.lo) and (
            self.hi is None or p <= self.hi
        )


    def coeff(self, p) -> EpsSeries:
        """
        Coefficient of ``Lambda^p``.

        Raises:
            WindowUnderflow: ``p`` is outside the known window.
        """

        p = self.lattice.check(p)

        if not self.known(p):

            raise _errors.WindowUnderflow(
                f'Coefficient of Lambda^{p} is outside the known window '
                f'[{self.lo}, {self.hi}].',
                exponent = p,
            )

        return self._coeffs.get(p) or EpsSeries.zero(self.order, self.field)


    @property
    def bottom(self) -> Rational | None:
        """
        Lowest exponent that may carry a nonzero coefficient, ``None`` if
        unbounded.
        """

        if self.lo is not None:

            return None

        return min(self._coeffs, default = None)


    @property
    def top(self) -> Rational | None:
        """
        Highest exponent that may carry a nonzero coefficient, ``None`` if
        unbounded.
        """

        if self.hi is not None:

            return None

        return max(self._coeffs, default = None)


    @property
    def is_zero(self) -> bool:
        """
        True if every known coefficient vanishes.
        """

        return not self._coeffs


    def restrict(self, lo = None, hi = None) -> LaurentShiftOp:
        """
        Forget the coefficients outside ``[lo, hi]``.
        """

        lo = _max(self.lo, None if lo is None else rational(lo))
        hi = _min(self.hi, None if hi is None else rational(hi))

        return self._like(self._coeffs, lo = lo, hi = hi)


    def truncate(self, order: int) -> LaurentShiftOp:

        return self._like(
            self._coeffs,
            lo = self.lo,
            hi = self.hi,
            order = order,
        )


    def map(self, fn) -> LaurentShiftOp:
        """
        Apply ``fn`` to every coefficient series.
        """

        return self._like(
            {p: fn(c) for p, c in self._coeffs.items()},
            lo = self.lo,
            hi = self.hi,
        )


    def __add__(self, other):

        if isinstance(other, (EpsSeries, DiffPoly, *_SCALARS)):

            other = self._like({0: other}, tail = Tail.FINITE)

        if not isinstance(other, LaurentShiftOp):

            return NotImplemented

        tails = {self.tail, other.tail} - {Tail.FINITE}

        if len(tails) > 1:

            raise ValueError('Cannot add downward and upward operators.')

        lo = _max(self.lo, other.lo)
        hi = _min(self.hi, other.hi)
        coeffs = dict(self._coeffs)

        for p, c in other._coeffs.items():

            coeffs[p] = coeffs[p] + c if p in coeffs else c

        return self._like(
            coeffs,
            tail = tails.pop() if tails else Tail.FINITE,
            lo = lo,
            hi = hi,
            order = min(self.order, other.order),
        )


    __radd__ = __add__


    def __neg__(self) -> LaurentShiftOp:

        return self.map(lambda c: -c)


    def __sub__(self, other):

        return self + (-other)


    def __rsub__(self, other):

        return (-self) + other


    def __mul__(self, other):

        if isinstance(other, LaurentShiftOp):

            return op_mul(self, other)

        if isinstance(other, _SCALARS):

            return self.map(lambda c: c * other)

        return NotImplemented


    def __rmul__(self, other):
        """
        Left multiplication ``f * A = sum_p (f a_p) Lambda^p``.
        """

        if isinstance(other, (EpsSeries, DiffPoly, *_SCALARS)):

            return self.map(lambda c: other * c)

        return NotImplemented


    def __truediv__(self, other):

        return self.map(lambda c: c / other)


    def agrees_with(self, other: LaurentShiftOp, lo = None, hi = None) -> bool:
        """
        Coefficient-wise equality on the common known window, optionally
        narrowed to ``[lo, hi]``.
        """

        return not self.difference(other, lo, hi)


    def difference(
            self,
            other: LaurentShiftOp,
            lo = None,
            hi = None,
        ) -> dict[Rational, EpsSeries]:
        """
        Nonzero coefficients of ``self - other`` on the common known window.
        """

        lo = _max(_max(self.lo, other.lo), None if lo is None else rational(lo))
        hi = _min(_min(self.hi, other.hi), None if hi is None else rational(hi))
        out = {}

        for p in set(self._coeffs) | set(other._coeffs):

            if (lo is not None and p < lo) or (hi is not None and p > hi):

                continue

            diff = self.coeff(p) - other.coeff(p)

            if not diff.is_zero:

                out[p] = diff

        return out


    def __eq__(self, other) -> bool:

        if not isinstance(other, LaurentShiftOp):

            return NotImplemented

        return (
            self.window == other.window and
            self.order == other.order and
            self._coeffs == other._coeffs
        )


    def __hash__(self) -> int:

        return hash((tuple(self._coeffs.items()), self.lo, self.hi))


    def __str__(self) -> str:

        parts = []

        for p, c in self._coeffs.items():

            shift = (
                '' if p == 0 else
                'S' if p == 1 else
                f'S^{p}' if p.denominator == 1 else
                f'S^({p})'
            )

            if c == 1 and shift:

                parts.append(shift)

            else:

                parts.append(f'{c}' + (f'*{shift}' if shift else ''))

        body = ' + '.join(parts) or '0'

        if self.lo is not None:

            body += f' + O(S^{self.lo} and below)'

        if self.hi is not None:

            body += f' + O(S^{self.hi} and above)'

        return body


    def __repr__(self) -> str:

        return f'<LaurentShiftOp[{self.tail.value}] {self}>'


    def to_json(self) -> dict:

        return {
            'tail': self.tail.value,
            'window': [
                None if b is None else str(b)
                for b in (self.lo, self.hi)
            ],
            'order': self.order,
            'field': self.field,
            'coeffs': {str(p): c.to_json() for p, c in self._coeffs.items()},
        }


    @classmethod
    def from_json(cls, data: Mapping) -> LaurentShiftOp:

        return cls(
            {
                rational(p): EpsSeries.from_json(c)
                for p, c in data['coeffs'].items()
            },
            order = data['order'],
            tail = Tail(data['tail']),
            lo = data['window'][0] and rational(data['window'][0]),
            hi = data['window'][1] and rational(data['window'][1]),
            field = data['field'],
        )


def op_mul(
        a: LaurentShiftOp,
        b: LaurentShiftOp,
        window: tuple | None = None,
    ) -> LaurentShiftOp:
    """
    Composition ``A B`` with ``Lambda^p f = (Lambda^p f) Lambda^p``.

    Args:
        a, b:
            The operands; a downward and an upward operand cannot be
            composed.
        window:
            ``(lo, hi)`` of requested exponents; ``None`` entries mean as
            far as the operands allow.

    Raises:
        WindowUnderflow: A requested coefficient depends on unknown
            coefficients of an operand.
    """

    if {a.tail, b.tail} == {Tail.DOWNWARD, Tail.UPWARD}:

        raise ValueError('Cannot compose downward and upward operators.')

    order = min(a.order, b.order)
    tails = {a.tail, b.tail} - {Tail.FINITE}
    tail = tails.pop() if tails else Tail.FINITE

    if any(x.is_zero and x.window == (None, None) for x in (a, b)):

        return a._like({}, tail = tail, order = order)

    # exponents below known_lo (above known_hi) read unknown coefficients
    known_lo = None
    known_hi = None

    for x, y in ((a, b), (b, a)):

        if x.lo is not None:

            if y.top is None:

                raise _errors.WindowUnderflow(
                    'No coefficient of the product is determined by the '
                    'known windows of the operands.',
                    exponent = x.lo,
                )

            known_lo = _max(known_lo, x.lo + y.top)

        if x.hi is not None:

            if y.bottom is None:

                raise _errors.WindowUnderflow(
                    'No coefficient of the product is determined by the '
                    'known windows of the operands.',
                    exponent = x.hi,
                )

            known_hi = _min(known_hi, x.hi + y.bottom)

    lo, hi = window or (None, None)
    lo = None if lo is None else rational(lo)
    hi = None if hi is None else rational(hi)

    if lo is not None and known_lo is not None and lo < known_lo:

        raise _errors.WindowUnderflow(
            f'Coefficient of Lambda^{lo} of the product needs unknown '
            f'coefficients; the product is known from Lambda^{known_lo}.',
            exponent = lo,
        )

    if hi is not None and known_hi is not None and hi > known_hi:

        raise _errors.WindowUnderflow(
            f'Coefficient of Lambda^{hi} of the product needs unknown '
            f'coefficients; the product is known up to Lambda^{known_hi}.',
            exponent = hi,
        )

    lo = known_lo if lo is None else lo
    hi = known_hi if hi is None else hi
    out = {}

    for p, ap in a._coeffs.items():

        for q, bq in b._coeffs.items():

            n = p + q

            if (lo is not None and n < lo) or (hi is not None and n > hi):

                continue

            term = ap.truncate(order) * shift_apply(p, bq.truncate(order))
            out[n] = out[n] + term if n in out else term

    return a._like(out, tail = tail, lo = lo, hi = hi, order = order)


def op_commutator(
        a: LaurentShiftOp,
        b: LaurentShiftOp,
        window: tuple | None = None,
    ) -> LaurentShiftOp:
    """
    ``A B - B A`` on the requested window.
    """

    return op_mul(a, b, window) - op_mul(b, a, window)


def op_residue(a: LaurentShiftOp) -> EpsSeries:
    """
    Coefficient of ``Lambda^0``.
    """

    return a.coeff(0)


def _cuts(part: str, step: Rational) -> tuple:

    zero = rational(0)
    cuts = {
        'plus': (zero, None),
        'minus': (None, -step),
        'oplus': (None, zero),
        'ominus': (step, None),
    }

    if part not in cuts:

        raise ValueError(f'Unknown projection: `{part}`.')

    return cuts[part]


def op_project(a: LaurentShiftOp, part: str) -> LaurentShiftOp:
    """
    Projection on a range of exponents.

    ``plus`` keeps the exponents ``>= 0`` and ``minus`` those ``< 0``;
    ``oplus`` keeps ``<= 0`` and ``ominus`` keeps ``> 0``, the cuts for a
    series in ``Lambda^-1``.

    Raises:
        WindowUnderflow: Part of the kept range next to the cut is unknown.
    """

    cut_lo, cut_hi = _cuts(part, a.lattice.step)
    lo, hi = a.lo, a.hi

    if cut_lo is not None:

        if not a.known(cut_lo):

            raise _errors.WindowUnderflow(
                f'Projection `{part}` needs the coefficient of '
                f'Lambda^{cut_lo}.',
                exponent = cut_lo,
            )

        lo = None

    if cut_hi is not None:

        if not a.known(cut_hi):

            raise _errors.WindowUnderflow(
                f'Projection `{part}` needs the coefficient of '
                f'Lambda^{cut_hi}.',
                exponent = cut_hi,
            )

        hi = None

    kept = {
        p: c
        for p, c in a.coefficients.items()
        if (cut_lo is None or p >= cut_lo) and (cut_hi is None or p <= cut_hi)
    }

    return a._like(
        kept,
        tail = a.tail if lo is not None or hi is not None else Tail.FINITE,
        lo = lo,
        hi = hi,
    )


def op_adjoint(a: LaurentShiftOp) -> LaurentShiftOp:
    """
    Formal adjoint, ``(f Lambda^p)^+ = (Lambda^-p f) Lambda^-p``.
    """

    flip = {
        Tail.DOWNWARD: Tail.UPWARD,
        Tail.UPWARD: Tail.DOWNWARD,
        Tail.FINITE: Tail.FINITE,
    }

    return a._like(
        {-p: shift_apply(-p, c) for p, c in a.coefficients.items()},
        tail = flip[a.tail],
        lo = None if a.hi is None else -a.hi,
        hi = None if a.lo is None else -a.lo,
    )
