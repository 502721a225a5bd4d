import pytest

from qkdvtop import errors
from qkdvtop.jetring import (
    QQ,
    DiffOp,
    DiffPoly,
    LogExtendedPoly,
    dx,
    jet,
    const,
    parse,
    dx_n,
    partial,
    to_json,
    to_sympy,
    from_json,
    from_sympy,
    eval_numeric,
    frechet,
    antiderivative,
    random_diffpoly,
    exp_generator,
    helmholtz_is_gradient,
    log_monomial,
    integrate_gradients,
    w_gradients_from_v,
    substitute_log_change,
    variational_derivative,
)

v = jet(0)
vx = jet(1)
vxx = jet(2)


def test_arithmetic_and_printing():

    p = vx ** -1 * QQ(1, 24)

    assert str(p) == '(1/24)*vx^-1'
    assert (v + 1) * (v - 1) == v ** 2 - 1
    assert (v * vx) / vx == v
    assert (v + vx - v).is_monomial
    assert const(0).is_zero
    assert const(QQ(3, 4)).constant == QQ(3, 4)
    assert (v ** 3 * vxx).max_order == 2


def test_laurent_range():

    with pytest.raises(errors.LaurentRangeError):

        DiffPoly({((2, -1),): 1})

    with pytest.raises(errors.NotInvertible):

        vxx ** -1

    with pytest.raises(errors.NotInvertible, match = 'Only monomials'):

        (v + 1).inverse()


def test_mixed_fields():

    with pytest.raises(ValueError, match = 'Mixing fields'):

        v + jet(0, 'U')

    assert (const(2, 'U') + v).field == 'v'


def test_dx():

    assert dx(v ** 2) == 2 * v * vx
    assert dx(vx ** -1) == -vxx * vx ** -2
    assert dx_n(v, 3) == jet(3)
    assert dx(exp_generator('w')) == exp_generator('w') * jet(1, 'w')

    log_v = LogExtendedPoly.make(DiffPoly.zero(), {0: 1})

    assert dx(log_v) == vx * v ** -1


def test_partial_and_variational_derivative():

    p = v * vx ** 2 * QQ(1, 2)

    assert partial(v ** 2 * vx, 0) == 2 * v * vx
    assert partial(p, 1) == v * vx
    assert variational_derivative(p) == -vx ** 2 * QQ(1, 2) - v * vxx
    assert variational_derivative(dx(v ** 3 * vx ** -1)).is_zero


def test_antiderivative():

    p = v ** 3 * vx ** -1 + v * vxx

    assert antiderivative(dx(p)) == p
    assert antiderivative(vx * v ** -1) == LogExtendedPoly.make(
        DiffPoly.zero(),
        {0: 1},
    )


def test_antiderivative_with_constant_term():

    p = dx(v * vx ** -1)

    assert p == 1 - v * vxx * vx ** -2
    assert antiderivative(p) == v * vx ** -1
    assert antiderivative(dx(v ** 2 * vx ** -1) * 3) == v ** 2 * vx ** -1 * 3


def test_antiderivative_not_exact():

    with pytest.raises(errors.NotExact) as exc:

        antiderivative(vx ** 2)

    assert exc.value.witness == -2 * vxx

    with pytest.raises(errors.NotExact, match = 'no highest jet'):

        antiderivative(vx + 1)

    with pytest.raises(errors.NotExact):

        antiderivative(const(QQ(1, 5)))


@pytest.mark.parametrize(
    'p, coeffs',
    [
        (v ** 2 * vx, {0: 2 * v * vx, 1: v ** 2}),
        (vx ** -1, {1: -vx ** -2}),
        (v * vxx, {0: vxx, 2: v}),
    ],
)
def test_frechet(p, coeffs):

    op = frechet(p)

    assert op == DiffOp(coeffs)
    # directional derivative along v -> v + t f
    assert op.apply(vx) == sum(
        (c * dx_n(vx, s) for s, c in coeffs.items()),
        DiffPoly.zero(),
    )


def test_frechet_of_total_derivative():

    p = v ** 3 * vx ** -1
    d = DiffOp({1: 1})

    assert frechet(dx(p)) == d @ frechet(p)
    assert frechet(const(3)).is_zero


def test_log_monomial():

    log_p = log_monomial(v ** 2 * vx ** -1 * QQ(3, 7))

    assert log_p == LogExtendedPoly(DiffPoly.zero(), {0: 2, 1: -1})
    assert dx(log_p) == dx(v ** 2 * vx ** -1) * v ** -2 * vx
    assert frechet(log_monomial(v)) == DiffOp({0: v ** -1})

    with pytest.raises(ValueError, match = 'non-monomial'):

        log_monomial(v + 1)

    with pytest.raises(ValueError, match = 'order 2'):

        log_monomial(vxx)


def test_helmholtz():

    assert helmholtz_is_gradient(variational_derivative(v ** 2 * vx ** 2))
    assert not helmholtz_is_gradient(vx)


def test_integrate_gradients():

    assert integrate_gradients({0: vx, 1: v}) == v * vx

    with pytest.raises(errors.CompatibilityFailure) as exc:

        integrate_gradients({0: vx, 1: 2 * v})

    assert exc.value.pair == (0, 1)


def test_log_change():

    w = jet(0, 'w')
    ew = exp_generator('w')
    fisher = vx ** 2 * v ** -1

    assert substitute_log_change(v, 'v-to-w') == ew
    assert substitute_log_change(fisher, 'v-to-w') == ew * jet(1, 'w') ** 2
    assert substitute_log_change(
        substitute_log_change(fisher, 'v-to-w'),
        'w-to-v',
    ) == fisher
    assert substitute_log_change(
        parse('log(vx)'),
        'v-to-w',
    ) == LogExtendedPoly(w, {1: 1})

    with pytest.raises(ValueError, match = 'Unknown direction'):

        substitute_log_change(v, 'sideways')


def test_w_gradients_from_v():

    grads = w_gradients_from_v({0: 2 * v})

    assert grads == {0: 2 * exp_generator('w') ** 2}


def test_eval_numeric():

    p = parse('v^2*vx^-1')

    assert eval_numeric(p, {'v': 2, 'vx': 4}) == 1
    assert eval_numeric(p, {0: QQ(1, 2), 1: 1}) == QQ(1, 4)

    with pytest.raises(errors.DivisionByZero):

        eval_numeric(p, {'v': 2})


def test_text_forms(rng):

    p = random_diffpoly(rng)
    q = parse('v4*v/(576*vx**2) + log(vx)/24')

    assert from_sympy(to_sympy(p)) == p
    assert from_json(to_json(p)) == p
    assert from_json(to_json(q)) == q
    assert isinstance(q, LogExtendedPoly)
    assert q.logs[1] == QQ(1, 24)
