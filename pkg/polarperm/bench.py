"""
Operation counts of the evaluators. Each run goes through a CountingRing wrapped around the evaluator's ring, so
all methods are measured by the same instrument and none of them carries counting code of its own.
"""
import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from . import identities
from .errors import DomainError, MethodDisagreementError
from .helpers import Logger, LogLevel
from .matrices import CubeMatrix
from .parallel import ordered_map
from .rings import CountingRing, ring_for
from .sampling import random_integer_cube, random_integer_matrix, random_matrix2_matrix, seeded

MAX_BENCH_ORDER = 8
TABLE_FIELDS = ('method', 'n', 'adds', 'muls', 'power_muls', 'powers', 'int_divs', 'f_evals')


@dataclass
class OpCountReport:
    method: str
    n: int
    adds: int = 0
    muls: int = 0
    power_muls: int = 0
    powers: int = 0
    int_divs: int = 0
    f_evals: int = 0
    wall_time: float = 0.0
    value: Any = field(default=None, compare=False)

    def record(self, timings=False):
        """Row as an ordered dict with the stable field order of the comparison table."""
        row = {name: getattr(self, name) for name in TABLE_FIELDS}
        if timings:
            row['wall_time'] = round(self.wall_time, 6)
        return row


@dataclass(frozen=True)
class Method:
    name: str
    function: str
    evaluate: Callable
    max_n: int
    ring_kind: str = 'rational'
    shape: str = 'matrix'


def _register(*methods):
    return {method.name: method for method in methods}


METHODS = _register(
    Method('per_definitional', 'per', identities.per_definitional, 8),
    Method('per_identity', 'per', identities.per_identity, 8),
    Method('per_ryser', 'per', identities.per_ryser, 8),
    Method('per_polarized', 'per', identities.per_polarized, 6),
    Method('det_definitional', 'det', identities.det_definitional, 8),
    Method('det_identity', 'det', identities.det_identity, 8),
    Method('eper_definitional', 'eper', identities.eper_definitional, 4, 'matrix2'),
    Method('eper_identity', 'eper', identities.eper_identity, 6, 'matrix2'),
    Method('detp_definitional', 'detp', identities.detp_definitional, 5, shape='cube'),
    Method('detp_identity', 'detp', identities.detp_identity, 6, shape='cube'),
)


def get_method(name):
    try:
        return METHODS[name]
    except KeyError:
        raise DomainError("Unknown method '%s'. Known methods: %s" % (name, ', '.join(METHODS)))


def random_subject(method, n, seed):
    """The seeded input a method is benchmarked on; methods of the same shape and ring share it."""
    rng = seeded(seed, method.shape, method.ring_kind, n)
    if method.shape == 'cube':
        return random_integer_cube(rng, n)
    if method.ring_kind == 'matrix2':
        return random_matrix2_matrix(rng, n)
    return random_integer_matrix(rng, n)


def count_ops(method_name, subject, ring=None, workers=1, **options):
    """
    Run one evaluator on an instrumented ring.

    :param method_name: A key of METHODS.
    :param subject: The SquareMatrix or CubeMatrix to evaluate.
    :param ring: The ring of the entries; defaults to the method's ring.
    :param options: Extra keyword arguments of the evaluator (params, gamma or delta).
    :return: OpCountReport whose value equals the uninstrumented result.
    """
    method = get_method(method_name)
    if (method.shape == 'cube') != isinstance(subject, CubeMatrix):
        raise DomainError("Method '%s' expects a %s." % (method.name, method.shape))
    base = ring if ring is not None else ring_for(method.ring_kind)
    plain = method.evaluate(base, subject, workers=workers, **options)

    counting = CountingRing(base)
    started = time.perf_counter()
    value = method.evaluate(counting, subject, workers=workers, **options)
    elapsed = time.perf_counter() - started
    if not base.eq(value, plain):
        raise MethodDisagreementError("Instrumented '%s' returned %s instead of %s."
                                      % (method.name, base.format(value), base.format(plain)))
    return OpCountReport(method.name, subject.n, wall_time=elapsed, value=value, **counting.counter.as_dict())


def _measure(method_name, n, seed):
    method = get_method(method_name)
    return count_ops(method_name, random_subject(method, n, seed))


def compare_methods(n_min, n_max, seed, methods=None, workers=1, log_level=LogLevel.INFO):
    """
    Count operations of every method for every n in n_min..n_max on seeded random integer inputs.

    Methods computing the same matrix function must agree on each input before any count is reported.

    :return: list of OpCountReport, ordered by n and then by method registration order.
    """
    log = Logger(log_level, 'Benchmark')
    if not 1 <= n_min <= n_max <= MAX_BENCH_ORDER:
        raise DomainError('Need 1 <= nmin <= nmax <= %d, got %d..%d.' % (MAX_BENCH_ORDER, n_min, n_max))
    for name in methods or ():
        get_method(name)
    names = [name for name in METHODS if not methods or name in methods]

    tasks = []
    for n in range(n_min, n_max + 1):
        for name in names:
            if n > METHODS[name].max_n:
                log.warn("Skipping %s at n=%d (above its limit of %d)." % (name, n, METHODS[name].max_n))
                continue
            tasks.append((name, n, seed))
    log.info('Measuring %d method/size combinations with seed %s...' % (len(tasks), seed))
    reports = ordered_map(_measure, tasks, workers)

    _check_agreement(reports, seed)
    log.info('All methods agree.')
    return reports


def _check_agreement(reports, seed):
    groups = {}
    for report in reports:
        method = METHODS[report.method]
        groups.setdefault((method.function, report.n), []).append(report)
    for (function, n), members in groups.items():
        ring = ring_for(METHODS[members[0].method].ring_kind)
        reference = members[0]
        for report in members[1:]:
            if not ring.eq(report.value, reference.value):
                dump = {
                    'function': function,
                    'n': n,
                    'seed': seed,
                    'values': {member.method: ring.format(member.value) for member in members},
                }
                raise MethodDisagreementError('Methods disagree on %s at n=%d: %s' % (function, n, json.dumps(dump)),
                                              dump)


def format_table(reports, timings=False):
    """Aligned text table, one row per report."""
    header = list(TABLE_FIELDS) + (['wall_time'] if timings else [])
    rows = [[_cell(value) for value in report.record(timings).values()] for report in reports]
    widths = [max(len(header[i]), *(len(row[i]) for row in rows)) if rows else len(header[i])
              for i in range(len(header))]
    lines = ['  '.join(name.ljust(width) if i == 0 else name.rjust(width)
                       for i, (name, width) in enumerate(zip(header, widths)))]
    for row in rows:
        lines.append('  '.join(cell.ljust(width) if i == 0 else cell.rjust(width)
                               for i, (cell, width) in enumerate(zip(row, widths))))
    return '\n'.join(lines) + '\n'


def _cell(value):
    if isinstance(value, float):
        return '%.6f' % value
    return str(value)


def format_records(reports, timings=False):
    """JSON Lines, one object per report with the table's field order."""
    return ''.join(json.dumps(report.record(timings)) + '\n' for report in reports)


def write_records(reports, path, timings=False):
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(format_records(reports, timings))
