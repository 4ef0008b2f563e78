"""
Worker-pool helpers. Sums are split into contiguous chunks of a deterministic stream and each chunk is summed in
its own process with a fresh copy of the ring; chunk results are then added in chunk order and per-worker
operation counters merged, so values and counts do not depend on the worker count.
"""
import os
from concurrent.futures import ProcessPoolExecutor

from .combinatorics import split_range, stream_slice

WORKERS_ENVVAR = 'POLARPERM_WORKERS'


def default_workers():
    configured = os.environ.get(WORKERS_ENVVAR)
    if configured:
        try:
            return max(1, int(configured))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _sum_chunk(ring, term, stream, start, stop):
    local = ring.spawn()
    value = local.sum(term(local, item) for item in stream_slice(stream(), start, stop))
    return value, local.counter


def sum_terms(ring, term, stream, total, workers=1):
    """
    Sum ``term(ring, item)`` over ``stream()``.

    :param ring: The ring to add in; a CountingRing gets the merged counts of every worker.
    :param term: Picklable callable (ring, item) -> element.
    :param stream: Picklable zero-argument callable returning the restartable item stream.
    :param total: Number of items ``stream()`` yields.
    :param workers: Process count; 1 sums in the calling process.
    """
    if workers <= 1 or total < 2:
        return ring.sum(term(ring, item) for item in stream())
    bounds = split_range(total, workers)
    with ProcessPoolExecutor(max_workers=len(bounds)) as pool:
        futures = [pool.submit(_sum_chunk, ring, term, stream, start, stop) for start, stop in bounds]
        results = [future.result() for future in futures]
    for _, counter in results:
        if counter is not None:
            ring.counter.merge(counter)
    return ring.sum(value for value, _ in results)


def _apply(task):
    function, args = task
    return function(*args)


def ordered_map(function, argument_tuples, workers=1):
    """``[function(*args) for args in argument_tuples]``, possibly computed in worker processes."""
    argument_tuples = list(argument_tuples)
    if workers <= 1 or len(argument_tuples) < 2:
        return [function(*args) for args in argument_tuples]
    with ProcessPoolExecutor(max_workers=min(workers, len(argument_tuples))) as pool:
        return list(pool.map(_apply, [(function, args) for args in argument_tuples]))
