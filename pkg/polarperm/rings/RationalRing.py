import re
from fractions import Fraction

from .Ring import Ring
from ..errors import DomainError

RATIONAL_PATTERN = re.compile(r'^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$')


def parse_rational(text):
    """
    Read an exact rational from an int or from a 'p' / 'p/q' string.

    :param text: An int, or a string such as '-3' or '3/4'.
    :return: A Fraction in lowest terms.
    """
    if isinstance(text, bool):
        raise DomainError('Booleans are not rational numbers.')
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise DomainError("Expected an integer or a 'p/q' string, got %r." % (text,))
    match = RATIONAL_PATTERN.match(text)
    if match is None:
        raise DomainError("'%s' is not an exact rational." % text)
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise DomainError("'%s' has a zero denominator." % text)
    return Fraction(int(match.group(1)), denominator)


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%d/%d' % (value.numerator, value.denominator)


def rational_literal(value):
    """The JSON scalar for a rational: a bare int when integral, otherwise a 'p/q' string."""
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else format_rational(value)


class RationalRing(Ring):
    """Exact rationals over Python's arbitrary-precision integers."""

    commutative = True
    description = 'rationals (exact, arbitrary precision)'

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def _div_int(self, x, k):
        return Fraction(x) / k

    def format(self, x):
        return format_rational(x)

    def parse(self, literal):
        return parse_rational(literal)

    def literal(self, x):
        return rational_literal(x)
