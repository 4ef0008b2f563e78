"""
Permutations with parity, diagonals and subdiagonals of a square matrix, row/column submatrix selectors and the
symmetrization operator. Every enumerator is a lazy, restartable generator with a fixed order: permutations in
lexicographic order of their one-line notation, subsets by size and then lexicographically.
"""
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, islice, permutations
from math import factorial

from .errors import DomainError

MAX_ORDER = 10


class Parity(Enum):
    EVEN = 'even'
    ODD = 'odd'

    @property
    def sign(self):
        return 1 if self is Parity.EVEN else -1

    @classmethod
    def of(cls, value):
        if isinstance(value, Parity):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DomainError("Parity must be 'even' or 'odd', got %r." % (value,))


def inversion_count(mapping):
    return sum(1 for a, b in combinations(mapping, 2) if a > b)


@dataclass(frozen=True)
class Permutation:
    """sigma in one-line notation, 1-based: mapping[i - 1] == sigma(i)."""
    mapping: tuple
    parity: Parity

    @classmethod
    def of(cls, mapping):
        mapping = tuple(mapping)
        if sorted(mapping) != list(range(1, len(mapping) + 1)):
            raise DomainError('%r is not a permutation of 1..%d.' % (mapping, len(mapping)))
        return cls(mapping, Parity.ODD if inversion_count(mapping) % 2 else Parity.EVEN)

    @property
    def n(self):
        return len(self.mapping)

    @property
    def sign(self):
        return self.parity.sign

    def __call__(self, i):
        return self.mapping[i - 1]


@dataclass(frozen=True)
class SignedDiagonal:
    """
    The entries a_{i sigma(i)} for the rows i in ``rows`` of a parent permutation sigma. Parity belongs to the
    parent, and keeping the parent makes each (parent, row subset) pair its own item.
    """
    parent: Permutation
    rows: tuple

    @property
    def positions(self):
        return tuple((i, self.parent(i)) for i in self.rows)

    @property
    def length(self):
        return len(self.rows)

    @property
    def parity(self):
        return self.parent.parity

    @property
    def sign(self):
        return self.parent.sign

    def entries(self, matrix):
        return [matrix.at(i, j) for i, j in self.positions]


@dataclass(frozen=True)
class SubmatrixSelector:
    """A row subset and a column subset (1-based, increasing) picking out one r x s submatrix."""
    rows: tuple
    cols: tuple

    @property
    def r(self):
        return len(self.rows)

    @property
    def s(self):
        return len(self.cols)

    @property
    def sign(self):
        return -1 if (self.r + self.s) % 2 else 1

    def entries(self, matrix):
        return [matrix.at(i, j) for i in self.rows for j in self.cols]


def _check_order(n):
    if not 1 <= n <= MAX_ORDER:
        raise DomainError('Matrix order must lie in 1..%d, got %d.' % (MAX_ORDER, n))


def enumerate_permutations(n):
    """All n! permutations of 1..n with their parity, in lexicographic order."""
    _check_order(n)
    for mapping in permutations(range(1, n + 1)):
        yield Permutation.of(mapping)


def enumerate_diagonals(n, parity):
    """The full diagonals l(sigma) over the permutations of the given parity."""
    parity = Parity.of(parity)
    rows = tuple(range(1, n + 1))
    for sigma in enumerate_permutations(n):
        if sigma.parity is parity:
            yield SignedDiagonal(sigma, rows)


def enumerate_subdiagonals(n, k, parity):
    """
    Every (parent diagonal, k-subset of its rows) pair whose parent has the given parity. For k = n - 1 the
    parent is determined by the subdiagonal, so the stream has no repeated position sets. k = 0 yields one empty
    subdiagonal per parent.
    """
    parity = Parity.of(parity)
    _check_order(n)
    if not 0 <= k <= n:
        raise DomainError('Subdiagonal length must lie in 0..%d, got %d.' % (n, k))
    for sigma in enumerate_permutations(n):
        if sigma.parity is parity:
            for rows in combinations(range(1, n + 1), k):
                yield SignedDiagonal(sigma, rows)


def enumerate_subsets(n):
    """Nonempty subsets of 1..n by size, then lexicographically."""
    for size in range(1, n + 1):
        yield from combinations(range(1, n + 1), size)


def enumerate_submatrices(n):
    """All (2^n - 1)^2 selectors with a nonempty row subset and a nonempty column subset."""
    _check_order(n)
    for rows in enumerate_subsets(n):
        for cols in enumerate_subsets(n):
            yield SubmatrixSelector(rows, cols)


def su(ring, elements):
    """Sum of the given elements; zero for an empty list."""
    return ring.sum(elements)


def sym(ring, factors):
    """
    Symmetrized product (1/m!) * sum over sigma in S_m of x_sigma(1) ... x_sigma(m).

    :param ring: Ring of the factors; needs exact division by integers.
    :param factors: Ordered, nonempty list of ring elements.
    """
    factors = list(factors)
    if not factors:
        raise DomainError('Sym needs at least one factor.')
    m = len(factors)
    if m == 1:
        return factors[0]
    total = ring.sum(ring.product(factors[i - 1] for i in sigma.mapping) for sigma in enumerate_permutations(m))
    return ring.exact_div_by_int(total, factorial(m))


def split_range(total, parts):
    """Cut range(total) into at most ``parts`` contiguous (start, stop) chunks of near-equal size."""
    parts = max(1, min(parts, total))
    size, extra = divmod(total, parts)
    bounds = []
    start = 0
    for index in range(parts):
        stop = start + size + (1 if index < extra else 0)
        bounds.append((start, stop))
        start = stop
    return bounds


def stream_slice(stream, start, stop):
    return islice(stream, start, stop)
