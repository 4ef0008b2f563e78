import pytest

from polarperm.helpers import LogLevel
from polarperm.identities import IdentityCheck, eper_definitional
from polarperm.rings import MatrixRing
from polarperm.sampling import random_integer_matrix, seeded, with_duplicated_row
from polarperm.verify import SUITES, CheckResult, Verifier, _vanishing_eper_instances, check_permanent, summary

@pytest.mark.parametrize('suite', SUITES)
def test_each_suite_passes(suite):
    results = Verifier(seed=3, trials=2, log_level=LogLevel.SILENT).run(suite)
    assert results
    assert all(result.passed for result in results), [r.line() for r in results if not r.passed]
    assert {result.suite for result in results} == {suite}

def test_determinant_suite_at_order_four():
    results = Verifier(seed=1, trials=50, n=4, log_level=LogLevel.SILENT).run('thm3')
    assert len(results) == 50
    assert all(result.passed for result in results)

def test_suites_are_reproducible_alone_and_together():
    alone = Verifier(seed=5, trials=1, log_level=LogLevel.SILENT).run('cor1')
    together = Verifier(seed=5, trials=1, log_level=LogLevel.SILENT).run('all')
    assert [r for r in together if r.suite == 'cor1'] == alone

def test_workers_do_not_change_results():
    serial = Verifier(seed=2, trials=2, log_level=LogLevel.SILENT).run('thm2')
    parallel = Verifier(seed=2, trials=2, workers=3, log_level=LogLevel.SILENT).run('thm2')
    assert serial == parallel

def test_orders():
    assert Verifier(n=4).orders('thm2') == (4,)
    assert Verifier().orders('thm4') == (2, 3)

def test_a_wrong_value_is_reported(monkeypatch):
    from polarperm import verify
    matrix = random_integer_matrix(seeded('broken'), 2)
    good = check_permanent('n=2 trial=1', matrix, [[0, 0]])
    assert good.passed and good.residual == '0'

    ryser = verify.per_ryser
    monkeypatch.setattr(verify, 'per_ryser', lambda ring, m: ring.add(ryser(ring, m), ring.one()))
    bad = check_permanent('n=2 trial=1', matrix, [[0, 0]])
    assert not bad.passed
    assert bad.residual == '1'
    assert bad.line() == 'FAIL thm2 n=2 trial=1 residual=1'

def test_vanishing_instances():
    rng = seeded('vanishing', 3)
    ring = MatrixRing(2)
    for matrix in _vanishing_eper_instances(rng, 3):
        assert ring.is_zero(eper_definitional(ring, matrix))

def test_summary():
    results = [CheckResult('thm2', 'a', True), CheckResult('thm2', 'b', False, '3'), CheckResult('thm3', 'c', True)]
    assert summary(results) == 'checks: 3 passed: 2 failed: 1'
    assert results[0].line() == 'PASS thm2 a residual=0'

def test_first_failure_is_reported(monkeypatch):
    from polarperm import verify
    rng = seeded('first-failure', 3)
    matrix = random_integer_matrix(rng, 3)
    monkeypatch.setattr(verify, 'check_corollary1', lambda ring, m, t: IdentityCheck(False, ring.one()))
    monkeypatch.setattr(verify, 'det_zero_criterion', lambda ring, m: False)
    result = verify.check_corollary1_instance('n=3 trial=1', matrix, with_duplicated_row(rng, matrix), matrix)
    assert not result.passed
    assert result.residual == 't=1: 1'

def test_space_determinant_suite_is_symbolic_up_to_order_three():
    labels = [result.label for result in Verifier(seed=1, trials=1, log_level=LogLevel.SILENT).run('thm5')]
    assert 'symbolic n=2' in labels and 'symbolic n=3' in labels
