from .Ring import Ring, RingSpec, exact_div_by_int, ring_power, integer_sign
from .RationalRing import RationalRing, parse_rational, format_rational
from .IntegerRing import IntegerRing
from .MultiPoly import MultiPoly, PolyRing, cell_name, gamma_name
from .MatrixRing import MatrixElement, MatrixRing
from .CountingRing import CountingRing, OpCounter

RING_KINDS = ('rational', 'symbolic', 'matrix2')


def ring_for(kind):
    """The ring named in a matrix document."""
    if kind == 'rational':
        return RationalRing()
    if kind == 'symbolic':
        return PolyRing()
    if kind == 'matrix2':
        return MatrixRing(2)
    raise KeyError(kind)
