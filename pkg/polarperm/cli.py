#!/usr/bin/env python

import json

import click

from .bench import METHODS, MAX_BENCH_ORDER, TABLE_FIELDS, compare_methods, count_ops, format_table, write_records
from .errors import DocumentError, DomainError, IdentityViolation, MethodDisagreementError
from .helpers import Logger, MatrixDocument
from .matrices import FreeParams
from .parallel import WORKERS_ENVVAR, default_workers
from .verify import SUITES, Verifier, summary

LOG_LEVELS = ['TRACE', 'DEBUG', 'INFO', 'WARN', 'ERROR', 'FATAL', 'SILENT']

FUNCTIONS = {
    'per': ('definitional', 'identity', 'ryser', 'polarized'),
    'det': ('definitional', 'identity'),
    'eper': ('definitional', 'identity'),
    'detp': ('definitional', 'identity'),
}


@click.group()
@click.option('--log-level', envvar='LOG_LEVEL', default='INFO',
              type=click.Choice(LOG_LEVELS, case_sensitive=False),
              help="Determines how much information is written to stderr. polarperm will first check to see if this "
                   "argument is provided. If not, it will check for a 'LOG_LEVEL' environment variable. If the "
                   "'LOG_LEVEL' environment variable isn't set, it will default to INFO.")
@click.option('--workers', envvar=WORKERS_ENVVAR, default=default_workers, type=click.IntRange(min=1),
              help="Number of worker processes for the outer sums. Falls back to the %s environment variable, then "
                   "to the number of CPU cores. Results never depend on it." % WORKERS_ENVVAR)
@click.pass_context
def main(ctx, log_level, workers):
    """
    Exact permanents, determinants and related matrix functions through polynomial identities
    """
    log = Logger(log_level, 'Main')
    log.trace('Log level set to ' + log.level.name)
    log.debug('workers', str(workers))
    ctx.obj = {'log': log, 'workers': workers}


def _scalar(ring, text):
    """A command-line scalar: JSON when it parses as JSON (ints, nested arrays), the raw text otherwise."""
    try:
        literal = json.loads(text)
    except ValueError:
        literal = text.strip()
    except RecursionError:
        raise DomainError('%s... nests too deeply.' % text[:20])
    return ring.parse(literal)


def _evaluator_options(fn, method, ring, n, gamma, delta):
    if delta is not None and not (fn == 'eper' and method == 'identity'):
        raise click.UsageError('--delta is only accepted by --fn eper --method identity.')
    if gamma is not None and not (fn in ('per', 'det') and method in ('identity', 'polarized')):
        raise click.UsageError('--gamma is only accepted by --fn per/det with --method identity, or by --fn per '
                               '--method polarized.')
    if delta is not None:
        return {'delta': _scalar(ring, delta)}
    if gamma is None:
        return {}
    values = [_scalar(ring, item) for item in gamma.split(',')]
    if fn == 'det':
        if len(values) != 1:
            raise DomainError('The determinant identity takes a single gamma, got %d values.' % len(values))
        return {'gamma': values[0]}
    if len(values) != n:
        raise DomainError('Expected %d gamma values, got %d.' % (n, len(values)))
    if method == 'polarized':
        return {'gamma': tuple(values)}
    return {'params': FreeParams(tuple(values))}


@main.command()
@click.option('--fn', 'function', required=True, type=click.Choice(list(FUNCTIONS)),
              help="The matrix function: per, det, eper (symmetrized permanent) or detp (space-matrix determinant).")
@click.option('--method', required=True, type=click.Choice(['definitional', 'identity', 'ryser', 'polarized']),
              help="The evaluator: the defining permutation sum, the polynomial identity, Ryser's formula (per only) "
                   "or the polarization formula applied to per(x, ..., x) (per only).")
@click.option('--gamma', default=None,
              help="Free parameters of the identity as a comma-separated list: n values for per, one value for det. "
                   "Defaults to zeros. Example: '--gamma 1,-3/2,0'.")
@click.option('--delta', default=None,
              help="The free ring element of the eper identity, e.g. '[[1,0],[0,2]]'. Defaults to zero.")
@click.argument('document', type=click.File('rb'))
@click.pass_obj
def compute(obj, function, method, gamma, delta, document):
    """
    Evaluates a matrix function of the matrix or cube in DOCUMENT and prints the value followed by the operation
    counts
    """
    log = obj['log']
    if method not in FUNCTIONS[function]:
        raise click.UsageError("--method %s is not available for --fn %s (choose from %s)."
                               % (method, function, ', '.join(FUNCTIONS[function])))
    try:
        parsed = MatrixDocument.parse(document.read())
        log.trace('Parsed document', parsed.dump())
        expected_kind = 'cube' if function == 'detp' else 'matrix'
        if parsed.kind != expected_kind:
            raise DomainError("--fn %s needs a %s document, got a %s." % (function, expected_kind, parsed.kind))
        ring = parsed.ring_instance()
        if function != 'eper' and not ring.commutative:
            raise DomainError("--fn %s needs a commutative ring; the '%s' ring is not one." % (function, parsed.ring))
        options = _evaluator_options(function, method, ring, parsed.n, gamma, delta)
        subject = parsed.to_matrix()
        log.info('Computing %s of a %s %s (n=%d) by the %s method...'
                 % (function, parsed.ring, parsed.kind, parsed.n, method))
        report = count_ops('%s_%s' % (function, method), subject, ring, obj['workers'], **options)
    except (DocumentError, DomainError) as e:
        log.fatal(str(e), 2)
    except (IdentityViolation, MethodDisagreementError) as e:
        log.fatal(str(e), 1)

    click.echo(ring.format(report.value))
    for name, value in report.record().items():
        click.echo('%s: %s' % (name, value))


@main.command()
@click.option('--suite', default='all', type=click.Choice(list(SUITES) + ['all']),
              help="The identity to check against its oracles. Defaults to all.")
@click.option('--n', 'order', default=None, type=click.IntRange(2, 6),
              help="Only check matrices of this order. Defaults to each suite's own range of orders.")
@click.option('--trials', default=10, type=click.IntRange(min=1),
              help="Random instances per order. Defaults to 10.")
@click.option('--seed', default=1, type=int,
              help="Seed of the random instances. The same seed always produces the same checks. Defaults to 1.")
@click.pass_obj
def verify(obj, suite, order, trials, seed):
    """
    Checks the polynomial identities against the definitional forms on seeded random and symbolic inputs
    """
    log = obj['log']
    verifier = Verifier(seed, trials, order, obj['workers'], log.level)
    results = verifier.run(suite)
    for result in results:
        click.echo(result.line())
    click.echo(summary(results))
    failed = [result for result in results if not result.passed]
    if failed:
        log.fatal('%d check(s) failed.' % len(failed), 1)
    log.info('All checks passed.')


@main.command()
@click.option('--nmin', default=1, type=click.IntRange(1, MAX_BENCH_ORDER),
              help="Smallest matrix order to measure. Defaults to 1.")
@click.option('--nmax', default=6, type=click.IntRange(1, MAX_BENCH_ORDER),
              help="Largest matrix order to measure. Defaults to 6.")
@click.option('--seed', default=1, type=int,
              help="Seed of the random inputs. Defaults to 1.")
@click.option('--out', default=None, type=click.Path(dir_okay=False, writable=True),
              help="Also write the rows as JSON Lines to this file.")
@click.option('--method', 'methods', multiple=True, type=click.Choice(list(METHODS)),
              help="Only measure this method. Can be given more than once. Defaults to every method.")
@click.option('--timings/--no-timings', default=False,
              help="Adds wall-clock times to the output. Defaults to --no-timings, which keeps the output "
                   "reproducible.")
@click.pass_obj
def bench(obj, nmin, nmax, seed, out, methods, timings):
    """
    Counts ring operations of every evaluator on seeded random inputs and prints a comparison table
    """
    log = obj['log']
    try:
        reports = compare_methods(nmin, nmax, seed, methods, obj['workers'], log.level)
    except DomainError as e:
        log.fatal(str(e), 2)
    except MethodDisagreementError as e:
        log.error(json.dumps(e.dump, sort_keys=True))
        log.fatal(str(e), 1)

    click.echo(format_table(reports, timings), nl=False)
    if out:
        write_records(reports, out, timings)
        log.info('Wrote %d record(s) with fields %s to %s' % (len(reports), ', '.join(TABLE_FIELDS), out))
