from fractions import Fraction
from itertools import islice

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polarperm.combinatorics import (MAX_ORDER, Parity, Permutation, enumerate_diagonals, enumerate_permutations,
                                     enumerate_subdiagonals, enumerate_submatrices, enumerate_subsets, split_range,
                                     stream_slice, su, sym)
from polarperm.errors import DomainError
from polarperm.matrices import SquareMatrix
from polarperm.rings import MatrixElement, MatrixRing, MultiPoly, PolyRing, RationalRing


def cycle_sign(mapping):
    """Sign from the cycle decomposition: (-1)^(n - number of cycles)."""
    n = len(mapping)
    seen = set()
    cycles = 0
    for start in range(1, n + 1):
        if start in seen:
            continue
        cycles += 1
        current = start
        while current not in seen:
            seen.add(current)
            current = mapping[current - 1]
    return -1 if (n - cycles) % 2 else 1


def test_permutation_counts():
    assert [sigma.mapping for sigma in enumerate_permutations(1)] == [(1,)]
    assert next(enumerate_permutations(1)).parity is Parity.EVEN
    perms = list(enumerate_permutations(3))
    assert len(perms) == 6
    assert sum(1 for p in perms if p.parity is Parity.EVEN) == 3
    assert sum(1 for p in perms if p.parity is Parity.ODD) == 3


def test_permutations_are_lexicographic():
    mappings = [sigma.mapping for sigma in enumerate_permutations(4)]
    assert mappings == sorted(mappings)
    assert len(set(mappings)) == 24


@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_parity_matches_cycle_decomposition(n):
    for sigma in enumerate_permutations(n):
        assert sigma.sign == cycle_sign(sigma.mapping)


@pytest.mark.parametrize('n', [0, MAX_ORDER + 1])
def test_permutation_order_out_of_range(n):
    with pytest.raises(DomainError):
        list(enumerate_permutations(n))


def test_permutation_validation():
    assert Permutation.of((2, 1))(1) == 2
    with pytest.raises(DomainError):
        Permutation.of((1, 1))


def test_diagonals():
    even = [d.positions for d in enumerate_diagonals(2, 'even')]
    odd = [d.positions for d in enumerate_diagonals(2, Parity.ODD)]
    assert even == [((1, 1), (2, 2))]
    assert odd == [((1, 2), (2, 1))]
    assert len(list(enumerate_diagonals(4, 'even'))) == 12
    with pytest.raises(DomainError):
        list(enumerate_diagonals(2, 'neither'))


def test_subdiagonals():
    positions = [d.positions for d in enumerate_subdiagonals(2, 1, 'even')]
    assert positions == [((1, 1),), ((2, 2),)]
    assert len(list(enumerate_subdiagonals(3, 2, 'even'))) == 9
    empty = list(enumerate_subdiagonals(3, 0, 'odd'))
    assert len(empty) == 3 and all(d.length == 0 for d in empty)
    with pytest.raises(DomainError):
        list(enumerate_subdiagonals(2, 3, 'even'))


@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_subdiagonals_of_length_n_minus_1_have_one_parent(n):
    seen = {}
    for parity in Parity:
        for diagonal in enumerate_subdiagonals(n, n - 1, parity):
            key = frozenset(diagonal.positions)
            assert key not in seen, 'two parents share %s' % sorted(key)
            seen[key] = diagonal.parent


def test_subsets_order():
    assert list(enumerate_subsets(3)) == [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]


@pytest.mark.parametrize('n,count', [(1, 1), (2, 9), (3, 49)])
def test_submatrix_counts(n, count):
    assert len(list(enumerate_submatrices(n))) == count


def test_submatrix_order_and_sign():
    selectors = list(enumerate_submatrices(2))
    assert (selectors[0].rows, selectors[0].cols) == ((1,), (1,))
    assert (selectors[-1].rows, selectors[-1].cols) == ((1, 2), (1, 2))
    assert selectors[0].sign == 1
    assert selectors[2].sign == -1


def test_su():
    ring = RationalRing()
    assert su(ring, []) == 0
    a, d = MultiPoly.variable('a_1_1'), MultiPoly.variable('a_2_2')
    assert su(PolyRing(), [a, d]) == a + d
    matrix = SquareMatrix.of([[Fraction(i * 3 + j) for j in range(3)] for i in range(3)])
    full = list(enumerate_submatrices(3))[-1]
    row_sums = [sum(row, Fraction(0)) for row in matrix.rows]
    assert su(ring, full.entries(matrix)) == sum(row_sums, Fraction(0))


def test_sym():
    ring = MatrixRing(2)
    x = MatrixElement.of([[1, 2], [0, 1]])
    y = MatrixElement.of([[0, 1], [1, 0]])
    assert sym(ring, [x]) == x
    assert sym(ring, [x, y]) == (x * y + y * x).scale(Fraction(1, 2))
    assert sym(RationalRing(), [Fraction(2), Fraction(3), Fraction(5)]) == 30
    with pytest.raises(DomainError):
        sym(ring, [])


@given(st.lists(st.lists(st.integers(-4, 4), min_size=2, max_size=2), min_size=2, max_size=2), st.integers(1, 4))
def test_sym_of_equal_factors_is_a_power(entries, m):
    x = MatrixElement.of(entries)
    ring = MatrixRing(2)
    assert sym(ring, [x] * m) == ring.power(x, m)
    assert sym(RationalRing(), [Fraction(entries[0][1], 3)] * m) == Fraction(entries[0][1], 3) ** m


@given(st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=6), min_size=1, max_size=4))
def test_commutative_sym_is_the_plain_product(factors):
    ring = RationalRing()
    assert sym(ring, factors) == ring.product(factors)


def test_split_range():
    assert split_range(10, 3) == [(0, 4), (4, 7), (7, 10)]
    assert split_range(2, 8) == [(0, 1), (1, 2)]
    assert split_range(5, 1) == [(0, 5)]
    chunks = [list(stream_slice(enumerate_subsets(4), start, stop)) for start, stop in split_range(15, 4)]
    assert [item for chunk in chunks for item in chunk] == list(enumerate_subsets(4))
    assert list(islice(enumerate_subsets(4), 0, 2)) == chunks[0][:2]
