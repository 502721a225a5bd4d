import pytest

from qkdvtop import errors
from qkdvtop.jetring import QQ, jet
from qkdvtop.epsops import EpsSeries, shift_apply
from qkdvtop.lattice import (
    Tail,
    HalfLattice,
    LaurentShiftOp,
    op_mul,
    op_sqrt,
    op_power,
    op_adjoint,
    op_inverse,
    op_project,
    op_residue,
    lax_operator,
    op_commutator,
)

K = 4
U, Ux = jet(0, 'U'), jet(1, 'U')


def _u(order = K):

    return EpsSeries.constant(U, order, 'U')


def test_half_lattice():

    lattice = HalfLattice(2)

    assert lattice.contains(QQ(3, 2))
    assert not lattice.contains(QQ(1, 3))
    assert lattice.points(-1, 0) == [-1, QQ(-1, 2), 0]

    with pytest.raises(ValueError, match = 'not a multiple'):

        lattice.check(QQ(1, 3))


def test_composition_rule():

    shift = LaurentShiftOp.shift(1, K)
    u = LaurentShiftOp.multiplication(_u())
    product = op_mul(shift, u)

    assert sorted(product.coefficients) == [1]
    assert product.coeff(1) == shift_apply(1, _u())
    assert op_mul(shift, shift) == LaurentShiftOp.shift(2, K)


def test_commutator():

    lax = lax_operator(K)
    shift = LaurentShiftOp.shift(1, K)
    u = LaurentShiftOp.multiplication(_u())

    assert op_commutator(lax, lax).is_zero
    assert op_commutator(shift, u).coeff(1) == shift_apply(1, _u()) - _u()


def test_window_underflow():

    op = LaurentShiftOp({0: U, -1: U}, order = K, lo = -1)

    with pytest.raises(errors.WindowUnderflow) as exc:

        op.coeff(-2)

    assert exc.value.exponent == -2


def test_adjoint():

    a = LaurentShiftOp({1: U, 0: Ux}, order = K)
    b = lax_operator(K)

    assert op_adjoint(op_adjoint(a)) == a
    assert op_adjoint(op_mul(a, b)) == op_mul(op_adjoint(b), op_adjoint(a))
    assert op_adjoint(a).coeff(-1) == shift_apply(-1, _u())


def test_sqrt():

    root = op_sqrt(lax_operator(K), depth = 3)
    a0 = root.coeff(0)

    assert root.tail is Tail.DOWNWARD
    assert root.coeff(1) == EpsSeries.constant(1, K, 'U')
    assert a0[0] == U * QQ(1, 2)
    assert a0[1] == Ux * QQ(-1, 4)
    assert sorted(op_project(root, 'plus').coefficients) == [0, 1]


def test_inverse():

    inverse = op_inverse(lax_operator(K), depth = 2)
    b_minus = inverse.coeff(-1)
    b_zero = inverse.coeff(0)

    assert inverse.tail is Tail.UPWARD
    assert b_minus[0] == U ** -1
    assert b_zero[0] == -U ** -2
    assert op_residue(
        op_mul(LaurentShiftOp.shift(1, K), inverse, window = (0, 0)),
    ) == EpsSeries([U ** -1], K, 'U')


def test_power():

    lax = lax_operator(K)

    assert op_power(lax, 1) == lax
    assert op_power(lax, 0) == LaurentShiftOp.shift(0, K)

    with pytest.raises(ValueError, match = 'Negative half-integer'):

        op_power(lax, QQ(-1, 2))

    with pytest.raises(ValueError, match = 'not a half-integer'):

        op_power(lax, QQ(1, 3))


def test_to_json():

    lax = lax_operator(K)

    assert LaurentShiftOp.from_json(lax.to_json()) == lax
