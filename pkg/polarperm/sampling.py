"""Seeded random instances. Every generator draws from the ``random.Random`` it is given and nothing else."""
import random
from fractions import Fraction

from .matrices import CubeMatrix, SquareMatrix
from .rings import MatrixElement, MultiPoly, cell_name, gamma_name


def seeded(*parts):
    """A Random seeded by the joined parts; str seeds hash the same way on every run and platform."""
    return random.Random(':'.join(str(part) for part in parts))


def random_integer(rng, low=-5, high=5):
    return Fraction(rng.randint(low, high))


def random_rational(rng, low=-9, high=9, max_denominator=5):
    return Fraction(rng.randint(low, high), rng.randint(1, max_denominator))


def random_integer_matrix(rng, n, low=-5, high=5):
    return SquareMatrix.of([[random_integer(rng, low, high) for _ in range(n)] for _ in range(n)])


def random_rational_matrix(rng, n):
    return SquareMatrix.of([[random_rational(rng) for _ in range(n)] for _ in range(n)])


def random_matrix_element(rng, dim=2, low=-3, high=3):
    return MatrixElement.of([[rng.randint(low, high) for _ in range(dim)] for _ in range(dim)])


def random_matrix2_matrix(rng, n, low=-3, high=3):
    """An n x n matrix whose entries are random 2 x 2 integer matrices."""
    return SquareMatrix.of([[random_matrix_element(rng, 2, low, high) for _ in range(n)] for _ in range(n)])


def random_integer_cube(rng, n, low=-3, high=3):
    return CubeMatrix.of([random_integer_matrix(rng, n, low, high) for _ in range(n)])


def symbolic_matrix(n):
    """The matrix of distinct indeterminates a_i_j."""
    return SquareMatrix.of([[MultiPoly.variable(cell_name(i, j)) for j in range(1, n + 1)] for i in range(1, n + 1)])


def symbolic_gammas(n):
    return tuple(MultiPoly.variable(gamma_name(i)) for i in range(1, n + 1))


def symbolic_cube(n):
    """The cube of distinct indeterminates a_i_j_k (k is the section)."""
    return CubeMatrix.of([[[MultiPoly.variable('a_%d_%d_%d' % (i, j, k)) for j in range(1, n + 1)]
                           for i in range(1, n + 1)] for k in range(1, n + 1)])


def with_duplicated_row(rng, matrix):
    """Copy one row over another, giving a singular matrix."""
    rows = [list(row) for row in matrix.rows]
    source, target = rng.sample(range(len(rows)), 2)
    rows[target] = list(rows[source])
    return SquareMatrix.of(rows)


def random_nonsingular_matrix(rng, n, low=-3, high=3):
    """L * U with L unit lower triangular and U upper triangular with nonzero diagonal; det is prod diag(U)."""
    lower = [[Fraction(1) if i == j else (random_integer(rng, low, high) if j < i else Fraction(0))
              for j in range(n)] for i in range(n)]
    upper = [[(rng.choice([-2, -1, 1, 2]) if i == j else (random_integer(rng, low, high) if j > i else 0))
              for j in range(n)] for i in range(n)]
    return SquareMatrix.of([[sum((lower[i][k] * upper[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
                            for i in range(n)])
