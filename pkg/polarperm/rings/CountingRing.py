from dataclasses import dataclass, fields

from .Ring import Ring


@dataclass
class OpCounter:
    """
    Tallies of ring operations. ``muls`` are free-standing multiplications; multiplications done while raising
    to a power are tallied in ``power_muls`` and each power call once in ``powers``.
    """
    adds: int = 0
    muls: int = 0
    power_muls: int = 0
    powers: int = 0
    int_divs: int = 0
    f_evals: int = 0

    def merge(self, other):
        for field in fields(self):
            setattr(self, field.name, getattr(self, field.name) + getattr(other, field.name))
        return self

    def as_dict(self):
        return {field.name: getattr(self, field.name) for field in fields(self)}


class CountingRing(Ring):
    """
    Wraps any ring and counts every operation routed through it. Values are computed by the wrapped ring, so
    results are identical to an uninstrumented run.
    """

    def __init__(self, base, counter=None):
        self.__base = base
        self.__counter = counter if counter is not None else OpCounter()
        self.__power_depth = 0

    @property
    def base(self):
        return self.__base

    @property
    def counter(self):
        return self.__counter

    @property
    def commutative(self):
        return self.__base.commutative

    @property
    def description(self):
        return 'counted ' + self.__base.description

    def spawn(self):
        return CountingRing(self.__base)

    def zero(self):
        return self.__base.zero()

    def one(self):
        return self.__base.one()

    def from_int(self, k):
        return self.__base.from_int(k)

    def format(self, x):
        return self.__base.format(x)

    def eq(self, x, y):
        return self.__base.eq(x, y)

    def is_zero(self, x):
        return self.__base.is_zero(x)

    def add(self, x, y):
        self.__counter.adds += 1
        return self.__base.add(x, y)

    def neg(self, x):
        self.__counter.adds += 1
        return self.__base.neg(x)

    def sub(self, x, y):
        self.__counter.adds += 1
        return self.__base.sub(x, y)

    def mul(self, x, y):
        if self.__power_depth:
            self.__counter.power_muls += 1
        else:
            self.__counter.muls += 1
        return self.__base.mul(x, y)

    def _div_int(self, x, k):
        return self.__base.exact_div_by_int(x, k)

    def exact_div_by_int(self, x, k):
        self.__counter.int_divs += 1
        return super().exact_div_by_int(x, k)

    def power(self, x, n):
        self.__counter.powers += 1
        self.__power_depth += 1
        try:
            return super().power(x, n)
        finally:
            self.__power_depth -= 1

    def __eq__(self, other):
        return isinstance(other, CountingRing) and self.__base == other.base

    def __hash__(self):
        return hash(('CountingRing', self.__base))

    def __repr__(self):
        return 'CountingRing(%r)' % self.__base
