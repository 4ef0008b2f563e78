from .Ring import Ring
from ..errors import DivisibilityError


class IntegerRing(Ring):
    """
    Python ints. Division by an integer is only defined when it leaves no remainder, so any identity evaluated
    here doubles as a check that its division by n! really is exact.
    """

    commutative = True
    description = 'integers (exact division only)'

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, k):
        return int(k)

    def _div_int(self, x, k):
        quotient, remainder = divmod(x, k)
        if remainder:
            raise DivisibilityError('%d is not divisible by %d.' % (x, k))
        return quotient

    def format(self, x):
        return str(x)
