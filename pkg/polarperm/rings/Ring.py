from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import reduce

from ..errors import DomainError, InvalidDivisorError


@dataclass(frozen=True)
class RingSpec:
    """What a ring promises: whether it commutes and what to call it."""
    commutative: bool
    description: str


class Ring(ABC):
    """
    A ring with exact division by nonzero integers.

    Elements are immutable values supporting ``+``, unary ``-``, ``-``, ``*`` and ``==``. A ring object supplies
    the constants, the division by integers and the canonical text form, and routes every operation through its
    methods so that a wrapper (see CountingRing) can observe them.
    """

    commutative = True
    description = 'abstract ring'

    @property
    def spec(self):
        return RingSpec(self.commutative, self.description)

    @abstractmethod
    def zero(self):
        pass

    @abstractmethod
    def one(self):
        pass

    @abstractmethod
    def from_int(self, k):
        """The image of the integer k under the unique map Z -> ring."""

    @abstractmethod
    def _div_int(self, x, k):
        pass

    @abstractmethod
    def format(self, x):
        """Canonical text of an element."""

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def eq(self, x, y):
        return x == y

    def is_zero(self, x):
        return self.eq(x, self.zero())

    def exact_div_by_int(self, x, k):
        """
        Divide x by the nonzero integer k exactly.

        :param x: A ring element.
        :param k: A nonzero integer.
        :return: y with k*y == x.
        """
        if k == 0:
            raise InvalidDivisorError('Cannot divide a ring element by the integer 0.')
        if k == 1:
            return x
        return self._div_int(x, k)

    def power(self, x, n):
        """Raise x to the nonnegative integer power n by square-and-multiply."""
        if n < 0:
            raise DomainError('Ring powers need a nonnegative exponent, got %d.' % n)
        result = None
        base = x
        while n:
            if n & 1:
                result = base if result is None else self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return self.one() if result is None else result

    def sum(self, elements):
        """Add up an iterable; the first element seeds the sum and an empty iterable gives zero."""
        iterator = iter(elements)
        try:
            first = next(iterator)
        except StopIteration:
            return self.zero()
        return reduce(self.add, iterator, first)

    def product(self, elements):
        """Multiply an iterable left to right; the empty product is one."""
        iterator = iter(elements)
        try:
            first = next(iterator)
        except StopIteration:
            return self.one()
        return reduce(self.mul, iterator, first)

    def signed(self, x, sign):
        return x if sign > 0 else self.neg(x)

    def spawn(self):
        """A ring to hand to a worker. Uninstrumented rings are stateless, so this is the ring itself."""
        return self

    @property
    def counter(self):
        return None

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))

    def __repr__(self):
        return '%s()' % type(self).__name__


def exact_div_by_int(ring, x, k):
    return ring.exact_div_by_int(x, k)


def ring_power(ring, x, n):
    return ring.power(x, n)


def integer_sign(k):
    return -1 if k % 2 else 1
