import pytest

import sympy as sp

from qkdvtop import errors
from qkdvtop.hierarchy import FlowIndex
from qkdvtop.data import fixtures
from qkdvtop.jetring import QQ, jet, parse, to_sympy, eval_numeric
from qkdvtop.loopeq import (
    MODELS,
    GenusSolution,
    LambdaRingElem,
    loop_model,
    compare_F_H,
    solve_genus,
    ring_reduce,
    sigma_power,
    lambda_power,
    pole_label,
    basis_label,
    fixture_check,
    solve_through,
    build_residual,
    numeric_oracle,
    non_constant_part,
    quasimiura_verify,
    compatibility_matrix,
    genus1_canonical_check,
    fixture_free_energy,
    lambda_expansion_identities,
    verify_linearization_identities,
)

v = jet(0)
vx = jet(1)
D = sigma_power(-1)
P = sigma_power(-2)


def _same_modulo_constants(a, b):

    return non_constant_part(a - b) == {}


def test_basis_labels():

    assert basis_label(pole_label(1)) == 'P'
    assert basis_label(pole_label(2)) == 'P^2'
    assert basis_label((0, -1)) == 'D'
    assert basis_label((0, -3)) == 'D*P'
    assert basis_label((0, -5)) == 'D*P^2'
    assert basis_label((1, 0)) == 'lambda'
    assert basis_label((2, 1)) == 'lambda^2*sigma'
    assert basis_label((0, 1)) == 'sigma'
    assert basis_label((0, 0)) == '1'
    assert basis_label((-1, 0)) == 'lambda^-1'


def test_ring_normal_form():

    assert D * D == P
    assert lambda_power(1) * P == LambdaRingElem({(0, -2): v ** 2, (0, 0): -1})
    assert lambda_power(-1) * P == LambdaRingElem({
        (-1, 0): v ** -2,
        (0, -2): v ** -2,
    })
    assert sigma_power(2) == LambdaRingElem({(0, 0): v ** 2, (1, 0): -1})
    assert (P * P).labelled() == {'P^2': QQ(1)}
    assert (D * P).pole_order == 3
    assert lambda_power(2).pole_order == 0
    assert ring_reduce({(1, -2): 1}) == lambda_power(1) * P

    with pytest.raises(ValueError, match = 'Not a normal basis key'):

        LambdaRingElem({(1, -2): 1})


def test_ring_derivations():

    assert D.dx() == LambdaRingElem({(0, -3): -(v * vx)})
    assert P.dx() == LambdaRingElem({(0, -4): v * vx * -2})
    assert P.dx_n(0) == P
    assert P.d_lambda() == P * P
    assert D.d_lambda() == LambdaRingElem({(0, -3): QQ(1, 2)})
    assert lambda_power(1).d_lambda() == LambdaRingElem.scalar(1)
    assert P.d_lambda().dx() == P.dx().d_lambda()


def test_expansion_at_infinity():

    assert P.at_infinity(-2) == {-1: -1, -2: -(v ** 2)}
    # odd powers of sigma are half-integer in lambda
    assert D.at_infinity(-3) == {}
    assert lambda_power(1).at_infinity(-2) == {1: 1}


def test_models():

    assert set(MODELS) == {'gfm-v4', 'fvh'}
    assert loop_model('fvh').field == 'w'
    assert loop_model(MODELS['gfm-v4']) is MODELS['gfm-v4']

    with pytest.raises(ValueError):

        loop_model('kdv')


def test_residual_of_empty_solution():

    assert build_residual('gfm-v4', {}) == {(0, 'P^2'): QQ(1, 16)}


def test_gfm_genus_one(gfm_solutions):

    sol = gfm_solutions[1]

    assert sol.gradients == (v ** -1 * QQ(1, 12), vx ** -1 * QQ(1, 24))
    assert _same_modulo_constants(
        sol.free_energy,
        parse('log(vx)/24 + log(v)/12'),
    )
    assert build_residual('gfm-v4', {1: sol}) == {}


def test_gfm_genus_two(gfm_solutions):

    sol = gfm_solutions[2]

    assert len(sol.gradients) == 5
    assert sol.gradient(4) == v * vx ** -2 * QQ(1, 576)
    assert sol.gradient(7).is_zero
    assert eval_numeric(sol.gradient(4), {'v': 1, 'vx': 2}) == QQ(1, 2304)
    assert compatibility_matrix(sol) == {}
    assert build_residual('gfm-v4', gfm_solutions) == {}


def test_fvh_genus_one(fvh_solutions):

    reported = fvh_solutions[1].reported_free_energy

    assert _same_modulo_constants(
        reported,
        parse('log(wx)/24 + w/8', 'w'),
    )
    assert build_residual('fvh', fvh_solutions) == {}


def test_solve_genus_errors():

    with pytest.raises(ValueError, match = 'Genus must be positive'):

        solve_genus('gfm-v4', 0)


def test_solve_genus_with_given_lower(gfm_solutions):

    sol = solve_genus('gfm-v4', 2, {1: gfm_solutions[1]})

    assert sol.free_energy is None
    assert sol.gradients == gfm_solutions[2].gradients


def test_solution_json(gfm_solutions):

    sol = gfm_solutions[1]
    data = sol.to_json()

    assert GenusSolution.from_json(data) == sol

    data['checksums']['gradients'] = '0' * 64

    with pytest.raises(errors.CacheCorruption, match = 'gradients'):

        GenusSolution.from_json(data)


def test_linear_identities(gfm_solutions):

    assert verify_linearization_identities(gfm_solutions)['passed'].all()
    assert lambda_expansion_identities(gfm_solutions)['passed'].all()


def test_compare_F_H(gfm_solutions, fvh_solutions):

    report = compare_F_H(2, gfm_solutions, fvh_solutions)

    assert len(report) == 4
    assert report['passed'].all()


def test_genus_one_canonical(gfm_solutions):

    assert genus1_canonical_check(gfm_solutions[1])['passed']


@pytest.mark.parametrize('genus', [1, 2, 3])
@pytest.mark.parametrize('model', ['gfm-v4', 'fvh'])
def test_fixture_formulas_parse(model, genus):

    raw = fixtures()[model]
    value = fixture_free_energy(model, genus)

    assert raw['field'] == loop_model(model).field
    assert value.max_order == 3 * genus - 2
    assert sp.expand(
        to_sympy(value) - sp.sympify(raw['free_energy'][genus])
    ) == 0


def test_fixtures(gfm_solutions, fvh_solutions):

    assert fixture_free_energy('gfm-v4', 9) is None
    assert fixture_check('gfm-v4', gfm_solutions)['passed'].all()
    assert fixture_check('fvh', fvh_solutions)['passed'].all()


def test_numeric_oracle(gfm_solutions):

    assert numeric_oracle(
        'gfm-v4',
        cases = 5,
        seed = 3,
        solutions = gfm_solutions,
    )['passed']

    with pytest.raises(ValueError, match = 'genus 2 or higher'):

        numeric_oracle('gfm-v4', genus = 1)


def test_quasimiura(gfm_solutions):

    report = quasimiura_verify(FlowIndex('t1', 0), 2, 2, gfm_solutions)

    assert report['passed']

    with pytest.raises(ValueError, match = 'beyond genus'):

        quasimiura_verify(FlowIndex('t1', 0), 1, 2, gfm_solutions)


def test_genus_three():

    gfm = solve_through('gfm-v4', 3)
    fvh = solve_through('fvh', 3)

    assert fixture_check('gfm-v4', gfm)['passed'].all()
    assert fixture_check('fvh', fvh)['passed'].all()
    assert compare_F_H(3, gfm, fvh)['passed'].all()
    assert verify_linearization_identities(gfm)['passed'].all()
    assert numeric_oracle('fvh', 3, cases = 5, seed = 1, solutions = fvh)[
        'passed'
    ]
