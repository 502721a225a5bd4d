import random
import tempfile

import pytest

import qkdvtop as qk


@pytest.fixture(scope = 'session', autouse = True)
def tmp_cache():
    """
    Make sure the test suite is run with an empty genus cache, and safely
    remove it on exit.
    """

    tempdir = tempfile.TemporaryDirectory()

    qk.config.setup(cachedir = tempdir.name)

    yield tempdir.name

    tempdir.cleanup()


@pytest.fixture(scope = 'function')
def rng():

    return random.Random(20240118)


@pytest.fixture(scope = 'session')
def gfm_solutions():

    from qkdvtop.loopeq import solve_through

    return solve_through('gfm-v4', 2)


@pytest.fixture(scope = 'session')
def fvh_solutions():

    from qkdvtop.loopeq import solve_through

    return solve_through('fvh', 2)
