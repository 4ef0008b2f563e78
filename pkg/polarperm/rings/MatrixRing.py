from dataclasses import dataclass
from fractions import Fraction

from .RationalRing import format_rational, parse_rational, rational_literal
from .Ring import Ring
from ..errors import DomainError


@dataclass(frozen=True)
class MatrixElement:
    """A d x d matrix of rationals, used as an element of the (noncommutative) matrix ring."""
    entries: tuple

    @classmethod
    def of(cls, rows):
        rows = tuple(tuple(Fraction(value) for value in row) for row in rows)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise DomainError('A matrix ring element must be a nonempty square array.')
        return cls(rows)

    @classmethod
    def scalar(cls, value, dim):
        value = Fraction(value)
        return cls(tuple(tuple(value if i == j else Fraction(0) for j in range(dim)) for i in range(dim)))

    @property
    def dim(self):
        return len(self.entries)

    def _check(self, other):
        if not isinstance(other, MatrixElement):
            return NotImplemented
        if other.dim != self.dim:
            raise DomainError('Cannot combine %dx%d and %dx%d matrices.' % (self.dim, self.dim, other.dim, other.dim))
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return MatrixElement(tuple(tuple(a + b for a, b in zip(left, right))
                                   for left, right in zip(self.entries, other.entries)))

    def __neg__(self):
        return MatrixElement(tuple(tuple(-a for a in row) for row in self.entries))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        columns = tuple(zip(*other.entries))
        return MatrixElement(tuple(tuple(sum((a * b for a, b in zip(row, column)), Fraction(0)) for column in columns)
                                   for row in self.entries))

    def scale(self, factor):
        factor = Fraction(factor)
        return MatrixElement(tuple(tuple(a * factor for a in row) for row in self.entries))

    def __str__(self):
        return '[' + ', '.join('[' + ', '.join(format_rational(a) for a in row) + ']' for row in self.entries) + ']'


class MatrixRing(Ring):
    """d x d rational matrices: associative, noncommutative for d >= 2, divisible by every nonzero integer."""

    def __init__(self, dim=2):
        if dim < 1:
            raise DomainError('The matrix ring needs a positive dimension, got %d.' % dim)
        self.dim = dim

    @property
    def description(self):
        return '%dx%d rational matrices' % (self.dim, self.dim)

    @property
    def commutative(self):
        return self.dim == 1

    def zero(self):
        return MatrixElement.scalar(0, self.dim)

    def one(self):
        return MatrixElement.scalar(1, self.dim)

    def from_int(self, k):
        return MatrixElement.scalar(k, self.dim)

    def _div_int(self, x, k):
        return x.scale(Fraction(1, k))

    def format(self, x):
        return str(x)

    def parse(self, literal):
        """A document scalar: a d x d nested array of rational literals."""
        if not isinstance(literal, list) or len(literal) != self.dim \
                or any(not isinstance(row, list) or len(row) != self.dim for row in literal):
            raise DomainError('Expected a %dx%d array of rationals, got %r.' % (self.dim, self.dim, literal))
        return MatrixElement.of([[parse_rational(value) for value in row] for row in literal])

    def literal(self, x):
        return [[rational_literal(a) for a in row] for row in x.entries]

    def __repr__(self):
        return 'MatrixRing(dim=%d)' % self.dim
