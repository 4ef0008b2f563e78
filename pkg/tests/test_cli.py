import json
import os

import pytest
from cli_test_helpers import ArgvContext, EnvironContext
from click.testing import CliRunner

import polarperm
from polarperm import cli


def document(tmp_path, entries, kind='matrix', ring='rational', name='input.json'):
    path = tmp_path / name
    path.write_text(json.dumps({'kind': kind, 'ring': ring, 'n': len(entries), 'entries': entries}))
    return str(path)


def invoke(*args):
    runner = CliRunner()
    return runner.invoke(cli.main, ['--log-level', 'SILENT', '--workers', '1'] + list(args))


def test_cli():
    """
    Does CLI stop execution w/o a command argument?
    """
    with ArgvContext('polarperm'), pytest.raises(SystemExit):
        polarperm.cli.main()
        pytest.fail("CLI doesn't abort asking for a command argument")


def test_run_as_module():
    """
    Can this package be run as a Python module?
    """
    exit_status = os.system('python -m polarperm --help')
    assert exit_status == 0


def test_compute_permanent_identity(tmp_path):
    path = document(tmp_path, [[1, 2], [3, 4]])
    result = invoke('compute', '--fn', 'per', '--method', 'identity', '--gamma', '0,0', path)
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == '10'
    assert 'method: per_identity' in lines
    assert 'muls: 4' in lines


@pytest.mark.parametrize('method', ['definitional', 'identity', 'ryser', 'polarized'])
def test_compute_permanent_methods_agree(tmp_path, method):
    path = document(tmp_path, [[1, "1/2", 0], [2, -1, 3], [0, 4, "-2/3"]])
    result = invoke('compute', '--fn', 'per', '--method', method, path)
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == '12'


def test_compute_singular_determinant(tmp_path):
    path = document(tmp_path, [[1, 2], [2, 4]])
    result = invoke('compute', '--fn', 'det', '--method', 'identity', path)
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == '0'


def test_compute_determinant_with_gamma(tmp_path):
    path = document(tmp_path, [[1, 2], [3, 4]])
    result = invoke('compute', '--fn', 'det', '--method', 'identity', '--gamma', '-3/2', path)
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == '-2'


def test_compute_symbolic_determinant(tmp_path):
    path = document(tmp_path, [['a', 'b'], ['c', 'd']], ring='symbolic')
    result = invoke('compute', '--fn', 'det', '--method', 'identity', path)
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == 'a*d - b*c'


def test_compute_symmetrized_permanent(tmp_path):
    unit = [[1, 0], [0, 1]]
    zero = [[0, 0], [0, 0]]
    path = document(tmp_path, [[unit, zero], [zero, unit]], ring='matrix2')
    identity = invoke('compute', '--fn', 'eper', '--method', 'identity', '--delta', '[[1,2],[3,4]]', path)
    definitional = invoke('compute', '--fn', 'eper', '--method', 'definitional', path)
    assert identity.exit_code == 0 and definitional.exit_code == 0
    assert identity.output.splitlines()[0] == definitional.output.splitlines()[0] == '[[1, 0], [0, 1]]'


def test_compute_space_determinant(tmp_path):
    path = document(tmp_path, [[[1, 2], [3, 4]], [[5, 6], [7, 8]]], kind='cube')
    identity = invoke('compute', '--fn', 'detp', '--method', 'identity', path)
    definitional = invoke('compute', '--fn', 'detp', '--method', 'definitional', path)
    assert identity.exit_code == 0
    assert identity.output.splitlines()[0] == definitional.output.splitlines()[0]


@pytest.mark.parametrize('args', [
    ['--fn', 'det', '--method', 'definitional', '--gamma', '1'],
    ['--fn', 'det', '--method', 'ryser'],
    ['--fn', 'per', '--method', 'identity', '--delta', '1'],
    ['--fn', 'eper', '--method', 'polarized'],
    ['--fn', 'trace', '--method', 'identity'],
])
def test_compute_usage_errors(tmp_path, args):
    path = document(tmp_path, [[1, 2], [3, 4]])
    result = invoke('compute', *args, path)
    assert result.exit_code == 2


@pytest.mark.parametrize('entries,args', [
    ([[1, 2, 3], [4, 5, 6]], ['--fn', 'per', '--method', 'identity']),
    ([[1, 2], [3, 4]], ['--fn', 'per', '--method', 'identity', '--gamma', '1,2,3']),
    ([[1, 2], [3, 4]], ['--fn', 'det', '--method', 'identity', '--gamma', '1,2']),
    ([[1, 2], [3, 4]], ['--fn', 'detp', '--method', 'identity']),
])
def test_compute_input_errors(tmp_path, entries, args):
    path = tmp_path / 'input.json'
    path.write_text(json.dumps({'kind': 'matrix', 'ring': 'rational', 'n': 2, 'entries': entries}))
    result = invoke('compute', *args, str(path))
    assert result.exit_code == 2


def test_compute_rejects_noncommutative_determinant(tmp_path):
    path = document(tmp_path, [[[[1, 0], [0, 1]]]], ring='matrix2')
    result = invoke('compute', '--fn', 'det', '--method', 'definitional', path)
    assert result.exit_code == 2


def test_compute_missing_file(tmp_path):
    result = invoke('compute', '--fn', 'per', '--method', 'identity', str(tmp_path / 'missing.json'))
    assert result.exit_code == 2


def test_compute_malformed_file(tmp_path):
    path = tmp_path / 'input.json'
    path.write_text('{"kind": "matrix", ')
    result = invoke('compute', '--fn', 'per', '--method', 'identity', str(path))
    assert result.exit_code == 2


def test_verify_determinant_suite():
    result = invoke('verify', '--suite', 'thm3', '--n', '4', '--trials', '50', '--seed', '1')
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert len(lines) == 51
    assert all(line.startswith('PASS thm3 n=4 trial=') for line in lines[:-1])
    assert lines[-1] == 'checks: 50 passed: 50 failed: 0'


def test_verify_all_is_deterministic():
    runner = CliRunner()
    outputs = []
    for workers in ('1', '1', '4'):
        with EnvironContext(POLARPERM_WORKERS=workers, LOG_LEVEL='SILENT'):
            result = runner.invoke(cli.main, ['verify', '--suite', 'all', '--seed', '1', '--trials', '3'])
        assert result.exit_code == 0
        outputs.append(result.output)
    assert outputs[0] == outputs[1] == outputs[2]
    assert 'FAIL' not in outputs[0]


def test_verify_reports_failures(monkeypatch):
    from polarperm import verify
    ryser = verify.per_ryser
    monkeypatch.setattr(verify, 'per_ryser', lambda ring, m: ring.add(ryser(ring, m), ring.one()))
    result = invoke('verify', '--suite', 'thm2', '--n', '2', '--trials', '2')
    assert result.exit_code == 1
    assert result.output.count('FAIL thm2') == 2


def test_bench(tmp_path):
    out = tmp_path / 'bench.jsonl'
    args = ['bench', '--nmin', '1', '--nmax', '3', '--seed', '4', '--out', str(out)]
    first = invoke(*args)
    second = invoke(*args)
    assert first.exit_code == 0
    assert first.output == second.output
    assert first.output.splitlines()[0].split()[:2] == ['method', 'n']
    records = [json.loads(line) for line in out.read_text().splitlines()]
    assert len(records) == len(first.output.splitlines()) - 1
    assert 'wall_time' not in records[0]


def test_bench_selected_methods_with_timings():
    result = invoke('bench', '--nmin', '2', '--nmax', '2', '--method', 'per_ryser', '--method', 'per_identity',
                    '--timings')
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert 'wall_time' in lines[0]
    assert [line.split()[0] for line in lines[1:]] == ['per_identity', 'per_ryser']


def test_bench_bad_range():
    assert invoke('bench', '--nmin', '4', '--nmax', '2').exit_code == 2
    assert invoke('bench', '--nmin', '1', '--nmax', '9').exit_code == 2


def test_compute_deeply_nested_input(tmp_path):
    path = tmp_path / 'input.json'
    path.write_text('{"kind":"matrix","ring":"rational","n":1,"entries":' + '[' * 100000 + ']' * 100000 + '}')
    result = invoke('compute', '--fn', 'per', '--method', 'identity', str(path))
    assert result.exit_code == 2


def test_compute_deeply_nested_delta(tmp_path):
    unit = [[1, 0], [0, 1]]
    path = document(tmp_path, [[unit]], ring='matrix2')
    result = invoke('compute', '--fn', 'eper', '--method', 'identity', '--delta', '[' * 100000 + ']' * 100000, path)
    assert result.exit_code == 2
