import re
from dataclasses import dataclass
from fractions import Fraction

from .RationalRing import format_rational, parse_rational
from .Ring import Ring
from ..errors import DomainError

VARIABLE_PATTERN = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')
_DIGITS = re.compile(r'(\d+)')


def natural_key(name):
    """Sort key that orders a_2_1 before a_10_1."""
    return tuple((0, int(piece)) if piece.isdigit() else (1, piece) for piece in _DIGITS.split(name) if piece)


def monomial_key(monomial):
    # higher total degree first, then by variable order with larger exponents first
    degree = sum(exponent for _, exponent in monomial)
    return -degree, tuple((natural_key(name), -exponent) for name, exponent in monomial)


def cell_name(i, j):
    return 'a_%d_%d' % (i, j)


def gamma_name(i):
    return 'g_%d' % i


def _multiply_monomials(left, right):
    exponents = dict(left)
    for name, exponent in right:
        exponents[name] = exponents.get(name, 0) + exponent
    return tuple(sorted(exponents.items(), key=lambda item: natural_key(item[0])))


@dataclass(frozen=True)
class MultiPoly:
    """
    A polynomial in commuting named indeterminates with rational coefficients.

    ``terms`` is a tuple of (monomial, coefficient) pairs where a monomial is a tuple of (name, exponent) pairs
    sorted by name. Terms are kept in canonical order without zero coefficients, so two polynomials are equal
    exactly when their ``terms`` are.
    """
    terms: tuple = ()

    @classmethod
    def from_mapping(cls, mapping):
        kept = [(monomial, Fraction(coefficient)) for monomial, coefficient in mapping.items() if coefficient != 0]
        kept.sort(key=lambda term: monomial_key(term[0]))
        return cls(tuple(kept))

    @classmethod
    def constant(cls, value):
        return cls.from_mapping({(): Fraction(value)})

    @classmethod
    def variable(cls, name):
        if not VARIABLE_PATTERN.match(name):
            raise DomainError("'%s' is not a valid indeterminate name." % name)
        return cls.from_mapping({((name, 1),): Fraction(1)})

    def as_mapping(self):
        return dict(self.terms)

    def __add__(self, other):
        other = _coerce(other)
        total = self.as_mapping()
        for monomial, coefficient in other.terms:
            total[monomial] = total.get(monomial, 0) + coefficient
        return MultiPoly.from_mapping(total)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(tuple((monomial, -coefficient) for monomial, coefficient in self.terms))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        total = {}
        for left, a in self.terms:
            for right, b in other.terms:
                monomial = _multiply_monomials(left, right)
                total[monomial] = total.get(monomial, 0) + a * b
        return MultiPoly.from_mapping(total)

    __rmul__ = __mul__

    def scale(self, factor):
        factor = Fraction(factor)
        if factor == 0:
            return MultiPoly()
        return MultiPoly(tuple((monomial, coefficient * factor) for monomial, coefficient in self.terms))

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e for _, e in monomial) for monomial, _ in self.terms), default=0)

    def variables(self):
        names = {name for monomial, _ in self.terms for name, _ in monomial}
        return tuple(sorted(names, key=natural_key))

    def evaluate(self, assignment):
        """Substitute rationals for every indeterminate; raises KeyError for an unassigned one."""
        total = Fraction(0)
        for monomial, coefficient in self.terms:
            value = coefficient
            for name, exponent in monomial:
                value *= Fraction(assignment[name]) ** exponent
            total += value
        return total

    def __str__(self):
        if not self.terms:
            return '0'
        pieces = []
        for index, (monomial, coefficient) in enumerate(self.terms):
            negative = coefficient < 0
            magnitude = -coefficient if negative else coefficient
            factors = ['%s^%d' % (name, e) if e > 1 else name for name, e in monomial]
            if magnitude != 1 or not factors:
                factors.insert(0, format_rational(magnitude))
            body = '*'.join(factors)
            if index == 0:
                pieces.append('-' + body if negative else body)
            else:
                pieces.append(('- ' if negative else '+ ') + body)
        return ' '.join(pieces)


def _coerce(value):
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return MultiPoly.constant(value)
    raise TypeError('Cannot combine a polynomial with %r.' % (value,))


class PolyRing(Ring):
    """Polynomials with rational coefficients in commuting named indeterminates."""

    commutative = True
    description = 'polynomials over the rationals (named commuting indeterminates)'

    def zero(self):
        return MultiPoly()

    def one(self):
        return MultiPoly.constant(1)

    def from_int(self, k):
        return MultiPoly.constant(k)

    def is_zero(self, x):
        return x.is_zero()

    def _div_int(self, x, k):
        return x.scale(Fraction(1, k))

    def format(self, x):
        return str(x)

    def parse(self, literal):
        """A document scalar: an integer, a 'p/q' string or a variable name."""
        if isinstance(literal, str) and VARIABLE_PATTERN.match(literal.strip()):
            return MultiPoly.variable(literal.strip())
        return MultiPoly.constant(parse_rational(literal))

    def literal(self, x):
        if not x.terms:
            return 0
        if len(x.terms) == 1:
            monomial, coefficient = x.terms[0]
            if not monomial:
                return coefficient.numerator if coefficient.denominator == 1 else format_rational(coefficient)
            if len(monomial) == 1 and monomial[0][1] == 1 and coefficient == 1:
                return monomial[0][0]
        return str(x)
