import os
import json
import argparse

import pytest

from qkdvtop import errors
from qkdvtop.cli import (
    SUITES,
    RunConfig,
    load,
    main,
    store,
    cache_path,
    run_checks,
    cached_solutions,
    property_checks,
)


def _run(capsys, *argv) -> tuple[int, str]:

    status = main(list(argv))

    return status, capsys.readouterr().out


def test_flow(capsys):

    status, out = _run(
        capsys,
        'flow', '--family', 't1', '--p', '0', '--eps', '2',
    )

    assert status == 0
    assert out.startswith('eps^0: ')
    assert 'eps^1' not in out


def test_flow_json(capsys):

    status, out = _run(
        capsys,
        'flow', '--family', 't0neg', '--p', '1', '--eps', '2',
        '--format', 'json',
    )

    assert status == 0
    assert json.loads(out)


def test_hamiltonian_json(capsys):

    status, out = _run(
        capsys,
        'hamiltonian', '--family', 't1', '--p', '0', '--eps', '2',
        '--format', 'json',
    )
    record = json.loads(out)

    assert status == 0
    assert record['index'] == 't^(1,0)'
    assert {'name', 'density', 'gradient'} <= set(record)


def test_loopsolve(capsys):

    status, out = _run(capsys, 'loopsolve', '--genus', '1')
    lines = out.strip().split('\n')

    assert status == 0
    assert lines[0].startswith('genus 1: ')
    assert lines[-1] == 'residual: 0'


def test_loopsolve_json(capsys):

    status, out = _run(
        capsys,
        'loopsolve', '--genus', '1', '--model', 'fvh', '--format', 'json',
    )
    payload = json.loads(out)

    assert status == 0
    assert payload['model'] == 'fvh'
    assert list(payload['free_energies']) == ['1']
    assert payload['residual'] == {}


def test_export(capsys, tmp_path):

    out_file = tmp_path / 'genera.json'
    status, out = _run(
        capsys,
        'export', '--genus', '2', '--out', str(out_file),
    )

    assert status == 0
    assert out.startswith('Wrote ')

    with open(out_file) as fp:

        data = json.load(fp)

    assert [d['genus'] for d in data] == [1, 2]
    assert all(d['model'] == 'gfm-v4' for d in data)


def test_verify_properties(capsys):

    status, out = _run(
        capsys,
        'verify', '--suite', 'properties', '--cases', '2',
        '--format', 'json',
    )
    rows = json.loads(out)

    assert status == 0
    assert len(rows) == 19
    assert all(row['passed'] for row in rows)


def test_usage_errors(capsys):

    with pytest.raises(SystemExit) as e:

        main(['flow', '--family', 't1', '--p', '0', '--eps', '3'])

    assert e.value.code == 2
    assert 'must be even' in capsys.readouterr().err

    with pytest.raises(SystemExit) as e:

        main(['flow', '--family', 't2', '--p', '0'])

    assert e.value.code == 2

    with pytest.raises(SystemExit) as e:

        main(['hamiltonian', '--family', 't0', '--p', '0', '--second'])

    assert e.value.code == 2
    assert 'No second Hamiltonian' in capsys.readouterr().err


def test_run_config():

    args = argparse.Namespace(eps = None, genus = 2, format = 'json')
    config = RunConfig.from_args(args)

    assert config.eps_order == 8
    assert config.genus_max == 2
    assert config.model == 'gfm-v4'
    assert config.output_format == 'json'
    assert config.validate(quasimiura = True) is config

    with pytest.raises(ValueError, match = 'quasi-Miura'):

        RunConfig(eps_order = 2, genus_max = 3).validate(quasimiura = True)

    with pytest.raises(ValueError, match = 'Unknown output format'):

        RunConfig(8, 2, output_format = 'xml').validate()


def test_cache(tmp_path):

    cachedir = str(tmp_path)
    first = cached_solutions('gfm-v4', 1, cachedir = cachedir)
    path = cache_path('gfm-v4', 1, cachedir)

    assert os.path.exists(path)
    assert load('gfm-v4', 1, cachedir) == first[1]
    assert load('gfm-v4', 2, cachedir) is None
    assert cached_solutions('gfm-v4', 1, cachedir = cachedir) == first

    with open(path) as fp:

        entry = json.load(fp)

    entry['payload']['genus'] = 5

    with open(path, 'w') as fp:

        json.dump(entry, fp)

    with pytest.raises(errors.CacheCorruption, match = 'Checksum mismatch'):

        load('gfm-v4', 1, cachedir)

    with open(path, 'w') as fp:

        fp.write('{')

    with pytest.raises(errors.CacheCorruption, match = 'Unreadable'):

        load('gfm-v4', 1, cachedir)

    assert store(first[1], cachedir) == path
    assert load('gfm-v4', 1, cachedir) == first[1]


def test_cache_disabled(tmp_path):

    cachedir = str(tmp_path)
    cached_solutions('fvh', 1, cachedir = cachedir, enabled = False)

    assert not os.listdir(cachedir)


def test_property_suite():

    assert SUITES == ('paper', 'properties', 'all')

    report = run_checks(property_checks(cases = 5, seed = 7))

    assert len(report) == 19
    assert report['passed'].all()
    assert set(report['topic']) == {'Jets', 'Operators', 'Loop equation'}


@pytest.mark.slow
def test_property_suite_full():

    report = run_checks(property_checks(cases = 200, seed = 20240118))

    assert report['passed'].all(), report[~report['passed']]['detail']
    assert report['detail'].str.endswith('200 cases').all()
