import pytest
import itertools
import sympy as sp

from qkdvtop import _report, errors
from qkdvtop.cli import flow_display_check
from qkdvtop.jetring import QQ, DiffPoly, LogExtendedPoly, jet
from qkdvtop.epsops import EpsSeries
from qkdvtop.hierarchy import (
    FlowIndex,
    flow,
    c_log,
    theta,
    c_negative,
    c_positive,
    qkdv_flow,
    hamiltonian,
    principal_flow,
    recursion_apply,
    fvh_lemma_check,
    recursion_check,
    second_hamiltonian,
    log_flow_f0_check,
    residue_form_flow,
    comb_identity_check,
    comb_identity_sides,
    check_commutativity,
    dispersionless_match,
    hamiltonian_form_check,
    MulFactor,
    PoissonOp,
    first_poisson,
    second_poisson,
    poisson_skew_defect,
    miura_volterra_verify,
)

K = 4
U, Ux, Uxx, U3 = (jet(s, 'U') for s in range(4))


def test_flow_index():

    assert str(FlowIndex('t1', 0)) == 't^(1,0)'
    assert str(FlowIndex('t0neg', 2)) == 't^(0,-2)'
    assert FlowIndex.parse('fvh,-1/2').p == QQ(-1, 2)
    assert FlowIndex.parse('principal,1,0') == FlowIndex('principal', 0, 1)

    with pytest.raises(ValueError, match = 'Invalid flow index'):

        FlowIndex('t0neg', 0)

    with pytest.raises(ValueError, match = 'Invalid flow index'):

        FlowIndex('fvh', QQ(1, 2))

    with pytest.raises(ValueError, match = 'Unknown flow family'):

        FlowIndex('kdv', 1)


def test_constants():

    assert c_positive(0) == -4
    assert c_negative(1) == QQ(-1, 4)
    assert c_log(0) == QQ(-1, 2)


def test_principal_hierarchy():

    v, vx = jet(0), jet(1)

    assert principal_flow(1, 0) == 2 * v * vx
    assert principal_flow(0, 0) == vx
    assert theta(0, 0) == LogExtendedPoly(DiffPoly.zero(), {0: QQ(1, 2)})

    with pytest.raises(ValueError):

        theta(1, -1)


def test_first_positive_flow():

    f = qkdv_flow(FlowIndex('t1', 0), K)

    assert f == EpsSeries(
        [2 * U * Ux, 0, U * U3 * QQ(-1, 6), 0, f[4]],
        K,
        'U',
    )
    assert f == residue_form_flow(FlowIndex('t1', 0), K)


def test_first_negative_flow():

    f = qkdv_flow(FlowIndex('t0neg', 1), K)

    assert f[0] == Ux * U ** -2 * QQ(-1, 2)
    assert f[1].is_zero
    assert f == residue_form_flow(FlowIndex('t0neg', 1), K)


def test_logarithmic_flows():

    assert qkdv_flow(FlowIndex('t0', 0), K) == EpsSeries.constant(Ux, K, 'U')
    assert qkdv_flow(FlowIndex('t0', 1), K)[0] == 2 * U ** 2 * Ux
    assert recursion_apply(
        recursion_apply(EpsSeries.constant(Ux, K, 'U')),
    )[0] == U ** 4 * Ux * QQ(8, 3)
    assert log_flow_f0_check(K)['passed']


@pytest.mark.parametrize(
    'idx',
    [
        FlowIndex('t1', 0),
        FlowIndex('t1', 1),
        FlowIndex('t0neg', 1),
        FlowIndex('t0neg', 2),
        FlowIndex('t0', 0),
        FlowIndex('t0', 1),
    ],
)
def test_dispersionless_match(idx):

    report = dispersionless_match(idx, 2)

    assert report['passed'].all()
    assert len(report) == (2 if idx.family == 't0' else 3)


def test_dispatch():

    assert flow(FlowIndex('principal', 0, 1), 2) == EpsSeries.constant(
        2 * jet(0) * jet(1),
        2,
    )
    assert flow(FlowIndex('t0', 0), 2).field == 'U'

    with pytest.raises(ValueError, match = 'Not a time'):

        qkdv_flow(FlowIndex('principal', 0, 1), 2)


TIMES = [
    FlowIndex('t1', 0),
    FlowIndex('t1', 1),
    FlowIndex('t0neg', 1),
    FlowIndex('t0neg', 2),
    FlowIndex('t0', 0),
    FlowIndex('t0', 1),
]


@pytest.mark.parametrize(
    'a, b',
    list(itertools.combinations(TIMES, 2)),
    ids = str,
)
def test_commutativity(a, b):

    assert check_commutativity(a, b, K)['passed']


@pytest.mark.slow
@pytest.mark.parametrize(
    'a, b',
    [
        (FlowIndex('t1', 0), FlowIndex('t1', 2)),
        (FlowIndex('t1', 2), FlowIndex('t0neg', 2)),
        (FlowIndex('t0neg', 2), FlowIndex('t0', 1)),
    ],
    ids = str,
)
def test_commutativity_eps6(a, b):

    assert check_commutativity(a, b, 6)['passed']


@pytest.mark.parametrize(
    'idx',
    [
        FlowIndex('t1', 1),
        FlowIndex('t1', 2),
        FlowIndex('t0neg', 1),
        FlowIndex('t0neg', 2),
        FlowIndex('t0', 1),
    ],
    ids = str,
)
def test_recursion(idx):

    assert recursion_check(idx, K)['passed']


def test_recursion_errors():

    with pytest.raises(ValueError, match = 'No recursion'):

        recursion_check(FlowIndex('t1', 0), K)

    with pytest.raises(ValueError, match = 'No recursion'):

        recursion_check(FlowIndex('t0', 0), K)


@pytest.mark.slow
@pytest.mark.parametrize(
    'idx',
    [FlowIndex('t1', 2), FlowIndex('t0neg', 2)],
    ids = str,
)
def test_recursion_eps6(idx):

    assert recursion_check(idx, 6)['passed']


@pytest.mark.parametrize(
    'idx',
    [
        FlowIndex('t1', 0),
        FlowIndex('t1', 1),
        FlowIndex('t0neg', 1),
        FlowIndex('t0neg', 2),
    ],
    ids = str,
)
def test_flow_displays(idx):

    assert flow_display_check(idx, K)['passed']


def test_flow_display_unknown():

    with pytest.raises(ValueError, match = 'No operator display'):

        flow_display_check(FlowIndex('t0', 0), K)


def test_poisson_skew_defect():

    f = EpsSeries.constant(U ** 2 * Ux, K, 'U')
    g = EpsSeries.constant(U ** -1 + Uxx, K, 'U')
    u = EpsSeries.constant(U, K, 'U')

    assert poisson_skew_defect(first_poisson(K), f, g).is_zero
    assert poisson_skew_defect(second_poisson(K), f, g).is_zero

    symmetric = PoissonOp([MulFactor(u)], name = 'U')

    assert poisson_skew_defect(symmetric, u, u)[0] == U ** 2 * 6


def test_hamiltonians():

    h = hamiltonian(FlowIndex('t0neg', 1), K)

    assert h.name == 'H_(0,-1)'
    assert h.gradient[0] == U ** -1 * QQ(1, 2)
    assert second_hamiltonian(FlowIndex('t1', 0), K).name == 'G_(1,0)'

    with pytest.raises(ValueError, match = 'No second Hamiltonian'):

        second_hamiltonian(FlowIndex('t0', 0), K)


@pytest.mark.parametrize(
    'idx',
    [
        FlowIndex('t1', 0),
        FlowIndex('t1', 1),
        FlowIndex('t1', 2),
        FlowIndex('t0neg', 1),
        FlowIndex('t0neg', 2),
        FlowIndex('t0', 0),
    ],
    ids = str,
)
def test_hamiltonian_forms(idx):

    assert hamiltonian_form_check(idx, K)['passed'].all()


@pytest.mark.slow
@pytest.mark.parametrize(
    'idx',
    [FlowIndex('t1', 2), FlowIndex('t0neg', 2)],
    ids = str,
)
def test_hamiltonian_forms_eps6(idx):

    assert hamiltonian_form_check(idx, 6)['passed'].all()


def test_log_hamiltonian():

    report = hamiltonian_form_check(FlowIndex('t0', 1), K)

    assert report['passed'].all()


def test_fvh_lemma():

    assert fvh_lemma_check(FlowIndex('t1', 0), K)['passed']
    assert fvh_lemma_check(FlowIndex('t0neg', 1), K)['passed']


def test_miura_volterra():

    report = miura_volterra_verify(K)

    assert report['passed'].all()
    assert set(report['check']) >= {
        'miura-second-poisson',
        'miura-first-poisson',
        'miura-flow-scaling',
    }


def test_comb_identity():

    assert comb_identity_sides(0) == (1, 1)
    assert comb_identity_sides(2) == (sp.Rational(15, 4), sp.Rational(15, 4))
    assert comb_identity_check(30)['passed'].all()

    with pytest.raises(ValueError):

        comb_identity_check(-1)


def test_mismatch_carries_difference():

    with pytest.raises(errors.Mismatch) as exc:

        _report.require('demo', 'Flows', jet(0), where = 'here')

    assert exc.value.where == 'here'
    assert exc.value.difference == jet(0)
