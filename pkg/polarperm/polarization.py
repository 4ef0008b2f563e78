"""
Recovering a symmetric polyadditive n-ary function f from its diagonal F(x) = f(x, ..., x):

    f(x_1, ..., x_n) = { (-1)^n F(gamma) + sum_{k=1..n} (-1)^(n-k) sum_{j_1<...<j_k} F(gamma + x_j1 + ... + x_jk) } / n!

for any gamma in the semigroup.
"""
import operator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce
from math import factorial
from typing import Callable

from .errors import DomainError
from .matrices import SquareMatrix


@dataclass(frozen=True)
class DiagonalFunction:
    """F: H -> Phi together with the arity n of the function it is the diagonal of and the addition of H."""
    arity: int
    evaluator: Callable
    combine: Callable = operator.add

    def __call__(self, x):
        return self.evaluator(x)


def _subset_masks(n):
    # binary-counter order over subsets of {1..n}, the empty set first
    return range(1 << n)


def polarize(group, function, xs, gamma, workers=1):
    """
    Evaluate the polarization formula.

    :param group: Ring whose addition and division by integers carry the values of F.
    :param function: The DiagonalFunction F.
    :param xs: The n arguments x_1..x_n, elements of H.
    :param gamma: Any element of H.
    :param workers: Threads evaluating F; the sum is formed in subset order whatever the count.
    :return: f(x_1, ..., x_n), computed with exactly 2^n calls of F.
    """
    xs = list(xs)
    n = function.arity
    if n < 1 or len(xs) != n:
        raise DomainError('The diagonal function has arity %d but %d argument(s) were given.' % (n, len(xs)))

    points = []
    signs = []
    for mask in _subset_masks(n):
        chosen = [xs[j] for j in range(n) if mask >> j & 1]
        points.append(reduce(function.combine, chosen, gamma))
        signs.append(-1 if (n - len(chosen)) % 2 else 1)

    if workers > 1 and group.counter is None:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(function, points))
    else:
        values = [function(point) for point in points]
    if group.counter is not None:
        group.counter.f_evals += len(values)

    total = group.sum(group.signed(value, sign) for value, sign in zip(values, signs))
    return group.exact_div_by_int(total, factorial(n))


def column_space(ring):
    """Entrywise addition of column vectors (tuples of ring elements), the semigroup H for matrix functions."""
    def combine(x, y):
        return tuple(ring.add(a, b) for a, b in zip(x, y))
    return combine


def per_diagonal(ring, n):
    """F(x) = per(x, ..., x), the permanent of the matrix whose n columns all equal x."""
    from .identities import per_definitional

    def evaluate(column):
        return per_definitional(ring, SquareMatrix.from_columns([column] * n))
    return DiagonalFunction(n, evaluate, column_space(ring))
