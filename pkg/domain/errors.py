"""
Exception hierarchy for exact Lie-theoretic computations
"""


class OrbitKitError(Exception):
    """Base class for all domain errors"""


class DivisionByZero(OrbitKitError, ZeroDivisionError):
    """Exact division by a zero scalar"""


class IndexOutOfRange(OrbitKitError, IndexError):
    """Variable or coordinate index outside its declared range"""


class DimensionMismatch(OrbitKitError, ValueError):
    """Operands of incompatible sizes"""


class NotNilpotent(OrbitKitError, ValueError):
    """Matrix passed to the nilpotent exponential has N^n != 0"""


class NotUnipotent(OrbitKitError, ValueError):
    """Matrix passed to the unipotent logarithm has (U - I)^n != 0"""


class SingularMatrix(OrbitKitError, ValueError):
    """Matrix has no inverse"""


class ConstantLambda(OrbitKitError, ValueError):
    """Weight with all entries equal: its isotropy algebra is the whole of gl_n"""


class NotBlockSorted(OrbitKitError, ValueError):
    """Equal weight entries are not contiguous"""


class OutsideBigCell(OrbitKitError, ValueError):
    """Element has no factorization u * u_minus * t (a trailing block minor vanishes)"""


class OutsideChart(OutsideBigCell):
    """Image of a point leaves the designated chart"""


class OutsideOverlap(OutsideChart):
    """Point does not lie in the intersection of two charts"""


class WrongSupport(OrbitKitError, ValueError):
    """Unipotent matrix has entries outside the expected root support"""


class NotTangent(OrbitKitError, ValueError):
    """Matrix is not in the image of ad at the orbit point"""


class MissingWitness(OrbitKitError, ValueError):
    """Orbit point carries no group element g with F = Ad(g) lambda"""


class InvalidEncoding(OrbitKitError, ValueError):
    """Malformed serialized value"""


class ConfigError(OrbitKitError, ValueError):
    """Invalid run configuration"""
