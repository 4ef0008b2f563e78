"""
Oracle suites. Each suite draws seeded random instances, evaluates the identity forms and compares them, with
zero tolerance, against the definitional forms and any extra oracle available.
"""
from dataclasses import dataclass
from fractions import Fraction

from .helpers import Logger, LogLevel
from .identities import (FreeParams, check_corollary1, check_corollary2, det_definitional, det_gaussian,
                         det_identity, det_zero_criterion, detp_definitional, detp_identity, eper_definitional,
                         eper_identity, eper_zero_criterion, per_definitional, per_identity, per_polarized,
                         per_ryser)
from .matrices import SquareMatrix
from .parallel import ordered_map
from .rings import CountingRing, MatrixElement, MatrixRing, MultiPoly, PolyRing, RationalRing, gamma_name
from .sampling import (random_integer, random_integer_cube, random_integer_matrix, random_matrix2_matrix,
                       random_matrix_element, random_nonsingular_matrix, random_rational, random_rational_matrix,
                       seeded, symbolic_cube, symbolic_gammas, symbolic_matrix, with_duplicated_row)

SUITES = ('thm2', 'thm3', 'thm4', 'thm5', 'cor1', 'cor2', 'polarization')

DEFAULT_ORDERS = {
    'thm2': (2, 3, 4, 5, 6),
    'thm3': (2, 3, 4, 5),
    'thm4': (2, 3),
    'thm5': (2, 3),
    'cor1': (2, 3, 4, 5),
    'cor2': (2, 3),
    'polarization': (2, 3, 4),
}

SYMBOLIC_ORDERS = {
    'thm2': (2, 3),
    'thm3': (2, 3),
    'thm5': (2, 3),
}


@dataclass(frozen=True)
class CheckResult:
    suite: str
    label: str
    passed: bool
    residual: str = '0'

    def line(self):
        return '%s %s %s residual=%s' % ('PASS' if self.passed else 'FAIL', self.suite, self.label, self.residual)


def _first_residual(ring, pairs):
    """The first nonzero difference among (value, expected) pairs, formatted; '0' if there is none."""
    for value, expected in pairs:
        difference = ring.sub(value, expected)
        if not ring.is_zero(difference):
            return ring.format(difference)
    return '0'


def _result(suite, label, ring, pairs):
    residual = _first_residual(ring, pairs)
    return CheckResult(suite, label, residual == '0', residual)


# ---------------------------------------------------------------------------------------------------------------
# Check functions. Module-level so they can run in worker processes.
# ---------------------------------------------------------------------------------------------------------------

def check_permanent(label, matrix, gamma_vectors):
    ring = RationalRing()
    expected = per_definitional(ring, matrix)
    pairs = [(per_ryser(ring, matrix), expected)]
    pairs += [(per_identity(ring, matrix, FreeParams(tuple(gammas))), expected) for gammas in gamma_vectors]
    return _result('thm2', label, ring, pairs)


def check_permanent_symbolic(n):
    ring = PolyRing()
    matrix = symbolic_matrix(n)
    expected = per_definitional(ring, matrix)
    pairs = [(per_identity(ring, matrix), expected),
             (per_identity(ring, matrix, FreeParams(symbolic_gammas(n))), expected)]
    return _result('thm2', 'symbolic n=%d' % n, ring, pairs)


def check_determinant(label, matrix, gammas):
    ring = RationalRing()
    expected = det_definitional(ring, matrix)
    pairs = [(det_gaussian(matrix), expected)]
    pairs += [(det_identity(ring, matrix, gamma), expected) for gamma in gammas]
    return _result('thm3', label, ring, pairs)


def check_determinant_symbolic(n):
    ring = PolyRing()
    matrix = symbolic_matrix(n)
    expected = det_definitional(ring, matrix)
    pairs = [(det_identity(ring, matrix), expected),
             (det_identity(ring, matrix, MultiPoly.variable(gamma_name(1))), expected)]
    return _result('thm3', 'symbolic n=%d' % n, ring, pairs)


def check_corollary1_instance(label, matrix, singular, nonsingular):
    ring = RationalRing()
    n = matrix.n
    residual = '0'
    passed = True
    for t in range(1, n):
        outcome = check_corollary1(ring, matrix, t)
        if not outcome.holds:
            passed = False
            residual = 't=%d: %s' % (t, ring.format(outcome.residual))
            break
    for name, case in (('random', matrix), ('singular', singular), ('nonsingular', nonsingular)):
        if passed and det_zero_criterion(ring, case) != ring.is_zero(det_definitional(ring, case)):
            passed = False
            residual = 'criterion disagrees with det on the %s matrix' % name
    if passed and (not det_zero_criterion(ring, singular) or det_zero_criterion(ring, nonsingular)):
        passed = False
        residual = 'criterion misjudged a constructed matrix'
    return CheckResult('cor1', label, passed, residual)


def check_symmetrized_permanent(label, matrix, deltas):
    ring = MatrixRing(2)
    expected = eper_definitional(ring, matrix)
    pairs = [(eper_identity(ring, matrix), expected)]
    pairs += [(eper_identity(ring, matrix, delta), expected) for delta in deltas]
    return _result('thm4', label, ring, pairs)


def check_corollary2_instance(label, matrix, vanishing):
    ring = MatrixRing(2)
    n = matrix.n
    for m in range(1, n):
        outcome = check_corollary2(ring, matrix, m)
        if not outcome.holds:
            return CheckResult('cor2', label, False, 'm=%d: %s' % (m, ring.format(outcome.residual)))
    for name, case in [('random', matrix)] + [('vanishing #%d' % i, c) for i, c in enumerate(vanishing, 1)]:
        eper_vanishes = ring.is_zero(eper_definitional(ring, case))
        if eper_zero_criterion(ring, case) != eper_vanishes:
            return CheckResult('cor2', label, False, 'criterion disagrees with eper on the %s matrix' % name)
        if name != 'random' and not eper_vanishes:
            return CheckResult('cor2', label, False, 'constructed %s matrix has nonzero eper' % name)
    return CheckResult('cor2', label, True)


def check_space_determinant(label, cube):
    ring = RationalRing()
    return _result('thm5', label, ring, [(detp_identity(ring, cube), detp_definitional(ring, cube))])


def check_space_determinant_symbolic(n):
    ring = PolyRing()
    cube = symbolic_cube(n)
    return _result('thm5', 'symbolic n=%d' % n, ring, [(detp_identity(ring, cube), detp_definitional(ring, cube))])


def check_polarization(label, matrix, gamma_columns):
    base = RationalRing()
    expected = per_definitional(base, matrix)
    pairs = []
    for gamma in gamma_columns:
        ring = CountingRing(base)
        pairs.append((per_polarized(ring, matrix, gamma), expected))
        if ring.counter.f_evals != 1 << matrix.n:
            return CheckResult('polarization', label, False,
                               'F evaluated %d times, expected %d' % (ring.counter.f_evals, 1 << matrix.n))
    return _result('polarization', label, base, pairs)


# ---------------------------------------------------------------------------------------------------------------
# Instance construction (always in the calling process, so output never depends on the worker count)
# ---------------------------------------------------------------------------------------------------------------

def _vanishing_eper_instances(rng, n):
    """A matrix with a zero row, and a matrix of scalar 2 x 2 entries whose scalar permanent is 0."""
    matrix = random_matrix2_matrix(rng, n)
    rows = [list(row) for row in matrix.rows]
    rows[rng.randrange(n)] = [MatrixElement.scalar(0, 2)] * n
    zero_row = SquareMatrix.of(rows)

    rational = RationalRing()
    scalar = None
    for _ in range(1000):
        candidate = random_integer_matrix(rng, n, -1, 1)
        if rational.is_zero(per_definitional(rational, candidate)):
            scalar = candidate
            break
    if scalar is None:
        scalar = SquareMatrix.of([[Fraction(0)] * n for _ in range(n)])
    return zero_row, scalar.map(lambda value: MatrixElement.scalar(value, 2))


class Verifier:
    """Builds and runs the oracle suites for a seed."""

    def __init__(self, seed=1, trials=10, n=None, workers=1, log_level=LogLevel.INFO):
        self.__seed = seed
        self.__trials = trials
        self.__n = n
        self.__workers = workers
        self.__logger = Logger(log_level, 'Verifier')

    def get_seed(self):
        return self.__seed

    def orders(self, suite):
        if self.__n is not None:
            return (self.__n,)
        return DEFAULT_ORDERS[suite]

    def tasks(self, suite):
        """(function, args) pairs for one suite, built from the suite's own random stream."""
        rng = seeded(self.__seed, suite)
        tasks = []
        for n in self.orders(suite):
            for trial in range(1, self.__trials + 1):
                label = 'n=%d trial=%d' % (n, trial)
                tasks.append(self.__trial_task(suite, rng, n, label))
        for n in SYMBOLIC_ORDERS.get(suite, ()):
            if self.__n is None or self.__n == n:
                tasks.append(({'thm2': check_permanent_symbolic,
                               'thm3': check_determinant_symbolic,
                               'thm5': check_space_determinant_symbolic}[suite], (n,)))
        return tasks

    def __trial_task(self, suite, rng, n, label):
        if suite == 'thm2':
            matrix = random_integer_matrix(rng, n)
            gammas = [[random_rational(rng) for _ in range(n)] for _ in range(5)]
            return check_permanent, (label, matrix, gammas)
        if suite == 'thm3':
            return check_determinant, (label, random_rational_matrix(rng, n),
                                       [None, Fraction(1), Fraction(-3, 2), random_rational(rng)])
        if suite == 'cor1':
            matrix = random_rational_matrix(rng, n)
            return check_corollary1_instance, (label, matrix, with_duplicated_row(rng, random_integer_matrix(rng, n)),
                                               random_nonsingular_matrix(rng, n))
        if suite == 'thm4':
            matrix = random_matrix2_matrix(rng, n)
            return check_symmetrized_permanent, (label, matrix, [random_matrix_element(rng) for _ in range(5)])
        if suite == 'cor2':
            matrix = random_matrix2_matrix(rng, n)
            return check_corollary2_instance, (label, matrix, _vanishing_eper_instances(rng, n))
        if suite == 'thm5':
            return check_space_determinant, (label, random_integer_cube(rng, n))
        if suite == 'polarization':
            matrix = random_rational_matrix(rng, n)
            return check_polarization, (label, matrix, [tuple(random_integer(rng) for _ in range(n))
                                                        for _ in range(3)])
        raise KeyError(suite)

    def run(self, suite='all'):
        """
        Run one suite, or every suite for 'all'.

        :return: list of CheckResult in a fixed order.
        """
        suites = SUITES if suite == 'all' else (suite,)
        results = []
        for name in suites:
            tasks = self.tasks(name)
            self.__logger.info('Running %s: %d check(s)...' % (name, len(tasks)))
            suite_results = ordered_map(_run_task, tasks, self.__workers)
            failed = [result for result in suite_results if not result.passed]
            if failed:
                self.__logger.error('%s: %d of %d check(s) failed.' % (name, len(failed), len(suite_results)))
            else:
                self.__logger.debug(name, 'all %d check(s) passed' % len(suite_results))
            results.extend(suite_results)
        return results


def _run_task(function, args):
    return function(*args)


def summary(results):
    failed = sum(1 for result in results if not result.passed)
    return 'checks: %d passed: %d failed: %d' % (len(results), len(results) - failed, failed)
