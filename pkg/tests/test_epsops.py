import pytest

from qkdvtop import errors
from qkdvtop.jetring import QQ, DiffPoly, LogExtendedPoly, jet
from qkdvtop.epsops import (
    SymbolOp,
    EpsSeries,
    shift_apply,
    symbol_apply,
    sinhc_symbol,
    series_invert,
    tanh_half_symbol,
    log_kernel_symbol,
    substitute_series,
    eps_sign_substitute,
    one_plus_shift_inverse_symbol,
)

U, Ux, Uxx, U3 = (jet(s, 'U') for s in range(4))
v, vx, vxx = (jet(s) for s in range(3))


def test_series_basics():

    f = EpsSeries([v, 0, vx], 4)

    assert f.order == 4
    assert f.dispersionless == v
    assert f.first_nonzero() == (0, v)
    assert EpsSeries.zero(2).first_nonzero() is None
    assert f.mul_eps(2)[4] == vx
    assert f.mul_eps(2).div_eps(2) == f.truncate(2)
    assert EpsSeries([v, vx], 1).reflect() == EpsSeries([v, -vx], 1)
    assert EpsSeries.from_json(f.to_json()) == f

    with pytest.raises(ValueError, match = 'nonzero'):

        f.div_eps(1)

    with pytest.raises(ValueError, match = 'Cannot extend'):

        f.truncate(6)


def test_shift_apply():

    f = EpsSeries.constant(v, 2)

    assert shift_apply(1, f) == EpsSeries([v, vx, vxx * QQ(1, 2)], 2)
    assert shift_apply(0, f) is f
    assert shift_apply(QQ(-1, 2), f)[1] == -vx * QQ(1, 2)

    with pytest.raises(ValueError, match = 'not a multiple of 1/2'):

        shift_apply(QQ(1, 3), f)


def test_shift_group_law():

    f = EpsSeries([v ** 2, vx], 4)

    assert shift_apply(
        QQ(1, 2),
        shift_apply(QQ(-3, 2), f),
    ) == shift_apply(-1, f)


def test_series_invert():

    f = shift_apply(1, EpsSeries.constant(U, 2, 'U'))
    inv = series_invert(f)

    assert inv[0] == U ** -1
    assert inv[1] == -Ux * U ** -2
    assert f * inv == EpsSeries.constant(1, 2, 'U')

    with pytest.raises(errors.NotInvertible):

        series_invert(EpsSeries.constant(v + 1, 2))


def test_eps_sign_substitute():

    f = EpsSeries([v, 0, vx, 0, vxx], 4)
    g = eps_sign_substitute(f)

    assert g == EpsSeries([v, 0, -2 * vx, 0, 4 * vxx], 4)
    assert eps_sign_substitute(g, inverse = True) == f

    with pytest.raises(errors.OddPower) as exc:

        eps_sign_substitute(EpsSeries([v, vx], 2))

    assert exc.value.order == 1


def test_tanh_half_symbol():

    out = symbol_apply(tanh_half_symbol(5), EpsSeries.constant(U, 4, 'U'))

    assert out == EpsSeries(
        [0, Ux * QQ(1, 2), 0, U3 * QQ(-1, 24), 0],
        4,
        'U',
    )


def test_one_plus_shift_inverse_symbol():

    out = symbol_apply(
        one_plus_shift_inverse_symbol(1, 3),
        EpsSeries.constant(U, 3, 'U'),
    )

    assert out == EpsSeries(
        [U * QQ(1, 2), Ux * QQ(-1, 4), 0, U3 * QQ(1, 48)],
        3,
        'U',
    )


def test_log_kernel_symbol():

    log_u = LogExtendedPoly.make(DiffPoly.zero('U'), {0: 1})
    out = symbol_apply(
        log_kernel_symbol(2),
        EpsSeries.constant(log_u, 2, 'U'),
    )

    assert out[0] == log_u * 2
    assert out[1] == -Ux * U ** -1
    assert out[2] == (Uxx * U ** -1 - Ux ** 2 * U ** -2) * QQ(1, 6)


def test_sinhc_symbol():

    out = symbol_apply(sinhc_symbol(2), EpsSeries.constant(v, 2))

    assert out == EpsSeries([v, 0, vxx * QQ(1, 6)], 2)


def test_symbol_with_pole():

    inv_xi = SymbolOp.xi_power(-1, 3)

    assert symbol_apply(inv_xi, EpsSeries.constant(vx, 2)) == (
        EpsSeries.constant(v, 2)
    )

    with pytest.raises(errors.NotExact):

        symbol_apply(inv_xi, EpsSeries.constant(vx ** 2, 2))


def test_symbol_precision():

    with pytest.raises(ValueError, match = 'known only through'):

        symbol_apply(tanh_half_symbol(3), EpsSeries.constant(U, 6, 'U'))


def test_substitute_series():

    out = substitute_series(v ** 2, {0: EpsSeries([v, vx], 2)}, 2)

    assert out == EpsSeries([v ** 2, 2 * v * vx, vx ** 2], 2)
