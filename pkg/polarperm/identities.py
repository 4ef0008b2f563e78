"""
Matrix functions in two forms each: the defining sum over permutations, and the polynomial identity obtained
from the polarization formula. Identity forms that involve only +, -, n-th powers and a final division by n!
(det_identity, eper_identity and the corollary checks) never call ``ring.mul`` directly.

Every evaluator takes the ring first and accepts ``workers``; the outer sum is then split across processes.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import chain
from math import factorial
from typing import Any

from .combinatorics import (Parity, enumerate_diagonals, enumerate_permutations, enumerate_subdiagonals,
                            enumerate_submatrices, enumerate_subsets, su, sym)
from .errors import DomainError, IdentityViolation
from .matrices import CubeMatrix, FreeParams, SquareMatrix
from .parallel import sum_terms
from .polarization import per_diagonal, polarize
from .rings import RationalRing

__all__ = ['SquareMatrix', 'CubeMatrix', 'FreeParams', 'IdentityCheck',
           'per_definitional', 'per_identity', 'per_ryser', 'per_polarized',
           'det_definitional', 'det_identity', 'det_gaussian', 'check_corollary1', 'det_zero_criterion',
           'eper_definitional', 'eper_identity', 'check_corollary2', 'eper_zero_criterion',
           'detp_definitional', 'detp_identity']


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of evaluating lhs - rhs of an identity: ``holds`` is True iff the residual is zero."""
    holds: bool
    residual: Any

    def __bool__(self):
        return self.holds


def _all_subsets(n):
    yield ()
    yield from enumerate_subsets(n)


def _require_integral(ring, matrix, value):
    base = getattr(ring, 'base', ring)
    if not isinstance(base, RationalRing):
        return value
    if all(Fraction(a).denominator == 1 for row in matrix.rows for a in row) and Fraction(value).denominator != 1:
        raise IdentityViolation('det_identity gave the non-integer %s for an integer matrix.' % base.format(value))
    return value


# ---------------------------------------------------------------------------------------------------------------
# Permanent
# ---------------------------------------------------------------------------------------------------------------

def _diagonal_product(matrix, ring, sigma):
    return ring.product(matrix.at(i, sigma(i)) for i in range(1, matrix.n + 1))


def per_definitional(ring, matrix, workers=1):
    """per(A) = sum over sigma in S_n of a_1sigma(1) * ... * a_nsigma(n)."""
    n = matrix.n
    return sum_terms(ring, partial(_diagonal_product, matrix), partial(enumerate_permutations, n),
                     factorial(n), workers)


def _per_identity_term(matrix, gammas, ring, columns):
    if not columns:
        return ring.product(gammas)
    factors = (ring.sub(gammas[i - 1], su(ring, [matrix.at(i, j) for j in columns]))
               for i in range(1, matrix.n + 1))
    return ring.signed(ring.product(factors), -1 if len(columns) % 2 else 1)


def per_identity(ring, matrix, params=None, workers=1):
    """
    The first polynomial identity for the permanent:

        per(A) = prod_i gamma_i + sum_{k=1..n} (-1)^k sum_{j_1<...<j_k} prod_i (gamma_i - a_ij1 - ... - a_ijk)

    :param params: FreeParams with n gammas; all zero when omitted.
    """
    n = matrix.n
    if params is None:
        gammas = (ring.zero(),) * n
    else:
        gammas = tuple(params.require(n))
    return sum_terms(ring, partial(_per_identity_term, matrix, gammas), partial(_all_subsets, n), 1 << n, workers)


def _ryser_term(matrix, ring, columns):
    n = matrix.n
    factors = (su(ring, [matrix.at(i, j) for j in columns]) for i in range(1, n + 1))
    return ring.signed(ring.product(factors), -1 if (n + len(columns)) % 2 else 1)


def per_ryser(ring, matrix, workers=1):
    """Baseline: (-1)^n sum over nonempty column sets S of (-1)^|S| prod_i sum_{j in S} a_ij."""
    n = matrix.n
    return sum_terms(ring, partial(_ryser_term, matrix), partial(enumerate_subsets, n), (1 << n) - 1, workers)


def per_polarized(ring, matrix, gamma=None, workers=1):
    """per(A) recovered by polarizing F(x) = per(x, ..., x) over the columns of A."""
    n = matrix.n
    if gamma is None:
        gamma = (ring.zero(),) * n
    return polarize(ring, per_diagonal(ring, n), matrix.columns(), tuple(gamma), workers)


# ---------------------------------------------------------------------------------------------------------------
# Determinant
# ---------------------------------------------------------------------------------------------------------------

def _signed_diagonal_product(matrix, ring, sigma):
    return ring.signed(_diagonal_product(matrix, ring, sigma), sigma.sign)


def det_definitional(ring, matrix, workers=1):
    """det(A) = sum over sigma of (-1)^inv(sigma) a_1sigma(1) * ... * a_nsigma(n)."""
    n = matrix.n
    return sum_terms(ring, partial(_signed_diagonal_product, matrix), partial(enumerate_permutations, n),
                     factorial(n), workers)


def det_gaussian(matrix):
    """Fraction-exact Gaussian elimination; an independent determinant oracle over the rationals."""
    rows = [[Fraction(a) for a in row] for row in matrix.rows]
    n = len(rows)
    det = Fraction(1)
    for column in range(n):
        pivot = next((r for r in range(column, n) if rows[r][column] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != column:
            rows[column], rows[pivot] = rows[pivot], rows[column]
            det = -det
        det *= rows[column][column]
        for r in range(column + 1, n):
            factor = rows[r][column] / rows[column][column]
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[column])]
    return det


def _diagonal_collections(n):
    # L_n^(e) minus L_n^(o), then minus (L_{n-1}^(e) minus L_{n-1}^(o))
    return chain(((1, l) for l in enumerate_diagonals(n, Parity.EVEN)),
                 ((-1, l) for l in enumerate_diagonals(n, Parity.ODD)),
                 ((-1, l) for l in enumerate_subdiagonals(n, n - 1, Parity.EVEN)),
                 ((1, l) for l in enumerate_subdiagonals(n, n - 1, Parity.ODD)))


def _diagonal_power_term(matrix, exponent, gamma, ring, item):
    sign, diagonal = item
    total = su(ring, diagonal.entries(matrix))
    if gamma is not None:
        total = ring.add(gamma, total)
    return ring.signed(ring.power(total, exponent), sign)


def _diagonal_power_sum(ring, matrix, exponent, gamma, workers):
    n = matrix.n
    return sum_terms(ring, partial(_diagonal_power_term, matrix, exponent, gamma),
                     partial(_diagonal_collections, n), factorial(n) * (n + 1), workers)


def det_identity(ring, matrix, gamma=None, workers=1):
    """
    det(A) = (1/n!) { [sum_{L_n^(e)} (gamma + su(l))^n - sum_{L_n^(o)} (gamma + su(l))^n]
                      - [sum_{L_{n-1}^(e)} (gamma + su(l))^n - sum_{L_{n-1}^(o)} (gamma + su(l))^n] }

    for any gamma; gamma omitted is the gamma = 0 form.
    """
    n = matrix.n
    total = _diagonal_power_sum(ring, matrix, n, gamma, workers)
    return _require_integral(ring, matrix, ring.exact_div_by_int(total, factorial(n)))


def check_corollary1(ring, matrix, t, workers=1):
    """Residual of sum_{L_n} +-su^t(l) = sum_{L_{n-1}} +-su^t(l), which vanishes for t = 1..n-1."""
    n = matrix.n
    if not 1 <= t <= n - 1:
        raise DomainError('The exponent t must lie in 1..%d, got %d.' % (n - 1, t))
    residual = _diagonal_power_sum(ring, matrix, t, None, workers)
    return IdentityCheck(ring.is_zero(residual), residual)


def det_zero_criterion(ring, matrix, workers=1):
    """True iff the t = n residual vanishes; it equals n! det(A), so this is det(A) = 0 over the rationals."""
    return ring.is_zero(_diagonal_power_sum(ring, matrix, matrix.n, None, workers))


# ---------------------------------------------------------------------------------------------------------------
# Symmetrized permanent over a noncommutative ring
# ---------------------------------------------------------------------------------------------------------------

def _symmetrized_diagonal(matrix, ring, sigma):
    return sym(ring, [matrix.at(i, sigma(i)) for i in range(1, matrix.n + 1)])


def eper_definitional(ring, matrix, workers=1):
    """eper(A) = sum over sigma of Sym(a_1sigma(1), ..., a_nsigma(n))."""
    n = matrix.n
    return sum_terms(ring, partial(_symmetrized_diagonal, matrix), partial(enumerate_permutations, n),
                     factorial(n), workers)


def _selector_power_term(matrix, exponent, delta, ring, selector):
    total = su(ring, selector.entries(matrix))
    if delta is not None:
        total = ring.add(delta, total)
    return ring.signed(ring.power(total, exponent), selector.sign)


def _selector_power_sum(ring, matrix, exponent, delta, workers):
    n = matrix.n
    return sum_terms(ring, partial(_selector_power_term, matrix, exponent, delta),
                     partial(enumerate_submatrices, n), ((1 << n) - 1) ** 2, workers)


def eper_identity(ring, matrix, delta=None, workers=1):
    """
    eper(A) = (1/n!) { sum_{r,s=1..n} (-1)^(r+s) sum_{B in Phi_rs(A)} (delta + su(B))^n - delta^n }

    Phi_rs(A) is every r x s submatrix, the full matrix included. The empty row subsets of the underlying double
    polarization contribute -delta^n, which cancels the delta^n coefficient of the double sum; with delta omitted
    (delta = 0) the correction vanishes.
    """
    n = matrix.n
    total = _selector_power_sum(ring, matrix, n, delta, workers)
    if delta is not None:
        total = ring.sub(total, ring.power(delta, n))
    return ring.exact_div_by_int(total, factorial(n))


def check_corollary2(ring, matrix, m, workers=1):
    """Residual of sum_{r,s} (-1)^(r+s) sum_B su^m(B) = 0, valid for m = 1..n-1."""
    n = matrix.n
    if not 1 <= m <= n - 1:
        raise DomainError('The exponent m must lie in 1..%d, got %d.' % (n - 1, m))
    residual = _selector_power_sum(ring, matrix, m, None, workers)
    return IdentityCheck(ring.is_zero(residual), residual)


def eper_zero_criterion(ring, matrix, workers=1):
    """True iff sum_{r,s} (-1)^(r+s) sum_B su^n(B) vanishes; that sum is n! eper(A)."""
    return ring.is_zero(_selector_power_sum(ring, matrix, matrix.n, None, workers))


# ---------------------------------------------------------------------------------------------------------------
# Determinant of a space matrix
# ---------------------------------------------------------------------------------------------------------------

def _signed_assembled_permanent(cube, ring, sigma):
    return ring.signed(per_definitional(ring, cube.assemble(sigma.mapping)), sigma.sign)


def detp_definitional(ring, cube, workers=1):
    """Det_p = sum over sigma of (-1)^inv(sigma) per(alpha^(1)_sigma(1), ..., alpha^(n)_sigma(n))."""
    n = cube.n
    return sum_terms(ring, partial(_signed_assembled_permanent, cube), partial(enumerate_permutations, n),
                     factorial(n), workers)


def _detp_identity_term(cube, ring, sigma):
    n = cube.n
    column_sums = [su(ring, [cube.at(t, sigma(i), i) for i in range(1, n + 1)]) for t in range(1, n + 1)]
    full = ring.product(column_sums)
    dropped = ring.sum(ring.product(ring.sub(column_sums[t - 1], cube.at(t, sigma(s), s)) for t in range(1, n + 1))
                       for s in range(1, n + 1))
    return ring.signed(ring.sub(full, dropped), sigma.sign)


def detp_identity(ring, cube, workers=1):
    """
    Det_p = [sum_even - sum_odd] prod_t (sum_i a^(i)_{t sigma(i)})
            - [sum_even - sum_odd] sum_s prod_t (-a^(s)_{t sigma(s)} + sum_i a^(i)_{t sigma(i)})
    """
    n = cube.n
    return sum_terms(ring, partial(_detp_identity_term, cube), partial(enumerate_permutations, n),
                     factorial(n), workers)
