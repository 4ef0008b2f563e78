from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class SquareMatrix:
    """
    An n x n matrix of ring elements. Indices passed to ``at``, ``row`` and ``column`` are 1-based, matching
    the a_ij notation; ``rows`` holds the raw 0-based tuples.
    """
    rows: tuple

    @classmethod
    def of(cls, rows):
        rows = tuple(tuple(row) for row in rows)
        if not rows:
            raise DomainError('A matrix needs at least one row.')
        for index, row in enumerate(rows, 1):
            if len(row) != len(rows):
                raise DomainError('Row %d has %d entries; a %dx%d matrix needs %d.'
                                  % (index, len(row), len(rows), len(rows), len(rows)))
        return cls(rows)

    @classmethod
    def from_columns(cls, columns):
        return cls.of(zip(*columns))

    @property
    def n(self):
        return len(self.rows)

    def at(self, i, j):
        return self.rows[i - 1][j - 1]

    def row(self, i):
        return self.rows[i - 1]

    def column(self, j):
        return tuple(row[j - 1] for row in self.rows)

    def columns(self):
        return tuple(zip(*self.rows))

    def map(self, function):
        return SquareMatrix(tuple(tuple(function(value) for value in row) for row in self.rows))


@dataclass(frozen=True)
class CubeMatrix:
    """
    An n x n x n space matrix of commutative ring elements, stored as its sections A_1..A_n; ``at(i, j, k)``
    is a_ij^(k).
    """
    sections: tuple

    @classmethod
    def of(cls, sections):
        sections = tuple(section if isinstance(section, SquareMatrix) else SquareMatrix.of(section)
                         for section in sections)
        if not sections:
            raise DomainError('A cube needs at least one section.')
        for index, section in enumerate(sections, 1):
            if section.n != len(sections):
                raise DomainError('Section %d is %dx%d; a cube with %d sections needs %dx%d.'
                                  % (index, section.n, section.n, len(sections), len(sections), len(sections)))
        return cls(sections)

    @property
    def n(self):
        return len(self.sections)

    def section(self, k):
        return self.sections[k - 1]

    def at(self, i, j, k):
        return self.sections[k - 1].at(i, j)

    def assemble(self, mapping):
        """The n x n matrix whose column i is column mapping[i] of section A_i (mapping is 1-based)."""
        return SquareMatrix.from_columns(self.section(i).column(j) for i, j in enumerate(mapping, 1))


@dataclass(frozen=True)
class FreeParams:
    """Free elements of an identity: gamma_1..gamma_n, a single gamma, or delta."""
    gammas: tuple = ()

    def require(self, count, name='gamma'):
        if len(self.gammas) != count:
            raise DomainError('Expected %d %s value(s), got %d.' % (count, name, len(self.gammas)))
        return self.gammas
