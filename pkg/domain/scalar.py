"""
Exact scalars: Gaussian rationals and forward-mode jets
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .errors import DimensionMismatch, DivisionByZero, IndexOutOfRange, InvalidEncoding

RationalLike = Union[int, Fraction]


class GaussianRational:
    """
    Exact element of Q(i), kept in canonical form

    Both parts are Fractions, so numerators and denominators are always
    coprime with positive denominators and equality is structural.

    Attributes:
        re: Real part
        im: Imaginary part
    """
    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("floating-point input is not exact")
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def of(cls, value: Any) -> "GaussianRational":
        """
        Coerce an int, Fraction, string or GaussianRational

        Args:
            value: Value to coerce

        Returns:
            Equivalent GaussianRational
        """
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot interpret {value!r} as an exact scalar")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """
        Parse forms like "3", "-1/2", "2i", "1/2-3/4i"

        Args:
            text: Textual scalar

        Returns:
            Parsed GaussianRational
        """
        body = text.replace(" ", "")
        if not body:
            raise InvalidEncoding("empty scalar")
        try:
            if not body.endswith("i"):
                return cls(Fraction(body))
            body = body[:-1]
            split = max(body.rfind("+"), body.rfind("-"))
            if split > 0:
                real_part, imag_part = body[:split], body[split:]
            else:
                real_part, imag_part = "0", body
            if imag_part in ("", "+"):
                imag_part = "1"
            elif imag_part == "-":
                imag_part = "-1"
            return cls(Fraction(real_part), Fraction(imag_part))
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidEncoding(f"cannot parse scalar {text!r}") from e

    # Arithmetic

    def __add__(self, other: Any) -> "GaussianRational":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "GaussianRational":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Any) -> "GaussianRational":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other: Any) -> "GaussianRational":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return GaussianRational(self.re * o.re)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "GaussianRational":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "GaussianRational":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __pos__(self) -> "GaussianRational":
        return self

    def inverse(self) -> "GaussianRational":
        if self.is_zero():
            raise DivisionByZero("division by zero scalar")
        if not self.im:
            return GaussianRational(1 / self.re)
        norm = self.norm()
        return GaussianRational(self.re / norm, -self.im / norm)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared absolute value"""
        return self.re * self.re + self.im * self.im

    # Predicates and comparison

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: Any) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({str(self)!r})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        imag = "" if abs(self.im) == 1 else str(abs(self.im))
        if not self.re:
            return f"{'-' if self.im < 0 else ''}{imag}i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{imag}i"

    # Serialization

    def to_dict(self) -> Dict[str, Dict[str, str]]:
        """Convert to the JSON object used in reports"""
        return {
            're': {'num': str(self.re.numerator), 'den': str(self.re.denominator)},
            'im': {'num': str(self.im.numerator), 'den': str(self.im.denominator)},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GaussianRational":
        """Create from the JSON object, rejecting non-canonical fractions"""
        try:
            return cls(_fraction_from_dict(data['re']), _fraction_from_dict(data['im']))
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, InvalidEncoding):
                raise
            raise InvalidEncoding(f"malformed scalar {data!r}") from e


def _fraction_from_dict(data: Dict[str, str]) -> Fraction:
    num = int(data['num'])
    den = int(data['den'])
    if den <= 0:
        raise InvalidEncoding(f"denominator must be positive, got {den}")
    if gcd(num, den) != 1 and not (num == 0 and den == 1):
        raise InvalidEncoding(f"fraction {num}/{den} is not in lowest terms")
    return Fraction(num, den)


def _coerce(value: Any) -> Optional[GaussianRational]:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)


def scalar_arith(a: Any, b: Any, op: str) -> GaussianRational:
    """
    Exact field operation on two scalars

    Args:
        a: Left operand
        b: Right operand
        op: One of add, sub, mul, div

    Returns:
        Canonical result
    """
    x, y = GaussianRational.of(a), GaussianRational.of(b)
    if op == 'add':
        return x + y
    if op == 'sub':
        return x - y
    if op == 'mul':
        return x * y
    if op == 'div':
        return x / y
    raise ValueError(f"unknown operation: {op}")


class Jet:
    """
    First-order jet: a value together with its partial derivatives

    Jets may be nested; the tag records the nesting depth. A jet with a
    higher tag wraps jets of lower tags, which it treats as constants.

    Attributes:
        value: Value at the base point (a scalar or a lower-tag jet)
        partials: One partial derivative per seeded variable
        tag: Nesting depth, starting at 1
    """
    __slots__ = ("value", "partials", "tag")

    def __init__(self, value: Any, partials: Sequence[Any], tag: int = 1):
        self.value = _as_ring(value)
        self.partials = tuple(_as_ring(p) for p in partials)
        self.tag = tag

    @property
    def n_vars(self) -> int:
        return len(self.partials)

    def partial(self, k: int) -> Any:
        if not 0 <= k < len(self.partials):
            raise IndexOutOfRange(f"variable {k} outside 0..{len(self.partials) - 1}")
        return self.partials[k]

    def _split(self, other: Any) -> Optional[Tuple[Any, Optional[Tuple[Any, ...]]]]:
        # (value, partials) of other at this tag; partials None for constants
        if isinstance(other, Jet):
            if other.tag == self.tag:
                if len(other.partials) != len(self.partials):
                    raise DimensionMismatch(
                        f"jets over {len(self.partials)} and {len(other.partials)} variables")
                return other.value, other.partials
            if other.tag > self.tag:
                return None
            return other, None
        c = _coerce(other)
        if c is None:
            return None
        return c, None

    def __add__(self, other: Any) -> "Jet":
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        v, p = parts
        if p is None:
            return Jet(self.value + v, self.partials, self.tag)
        return Jet(self.value + v, tuple(a + b for a, b in zip(self.partials, p)), self.tag)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Jet":
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        v, p = parts
        if p is None:
            return Jet(self.value - v, self.partials, self.tag)
        return Jet(self.value - v, tuple(a - b for a, b in zip(self.partials, p)), self.tag)

    def __rsub__(self, other: Any) -> "Jet":
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        v, p = parts
        if p is None:
            return Jet(v - self.value, tuple(-a for a in self.partials), self.tag)
        return Jet(v - self.value, tuple(b - a for a, b in zip(self.partials, p)), self.tag)

    def __mul__(self, other: Any) -> "Jet":
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        v, p = parts
        if p is None:
            return Jet(self.value * v, tuple(a * v for a in self.partials), self.tag)
        sv = self.value
        return Jet(sv * v, tuple(a * v + sv * b for a, b in zip(self.partials, p)), self.tag)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Jet":
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        v, p = parts
        if base_value(v).is_zero():
            raise DivisionByZero("division by a jet with zero value")
        if p is None:
            return Jet(self.value / v, tuple(a / v for a in self.partials), self.tag)
        q = self.value / v
        return Jet(q, tuple((a - q * b) / v for a, b in zip(self.partials, p)), self.tag)

    def __rtruediv__(self, other: Any) -> "Jet":
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        v, p = parts
        if base_value(self.value).is_zero():
            raise DivisionByZero("division by a jet with zero value")
        q = v / self.value
        if p is None:
            return Jet(q, tuple(-(q * a) / self.value for a in self.partials), self.tag)
        return Jet(q, tuple((b - q * a) / self.value for a, b in zip(self.partials, p)), self.tag)

    def __neg__(self) -> "Jet":
        return Jet(-self.value, tuple(-a for a in self.partials), self.tag)

    def __pos__(self) -> "Jet":
        return self

    def is_zero(self) -> bool:
        return is_exact_zero(self.value) and all(is_exact_zero(a) for a in self.partials)

    def __eq__(self, other: Any) -> bool:
        try:
            parts = self._split(other)
        except DimensionMismatch:
            return False
        if parts is None:
            return NotImplemented
        v, p = parts
        if p is None:
            return self.value == v and all(is_exact_zero(a) for a in self.partials)
        return self.value == v and all(a == b for a, b in zip(self.partials, p))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        partials = ", ".join(str(a) for a in self.partials)
        return f"Jet({self.value}; [{partials}], tag={self.tag})"


def _as_ring(value: Any) -> Any:
    if isinstance(value, (GaussianRational, Jet)):
        return value
    c = _coerce(value)
    if c is None:
        raise TypeError(f"not an exact ring element: {value!r}")
    return c


def as_ring(value: Any) -> Any:
    """Normalize ints and Fractions to GaussianRational, leaving jets alone"""
    return _as_ring(value)


def depth(value: Any) -> int:
    """Nesting depth of a ring element (0 for plain scalars)"""
    return value.tag if isinstance(value, Jet) else 0


def base_value(value: Any) -> GaussianRational:
    """Innermost scalar value of a possibly nested jet"""
    while isinstance(value, Jet):
        value = value.value
    return GaussianRational.of(value)


def is_exact_zero(value: Any) -> bool:
    if isinstance(value, Jet):
        return value.is_zero()
    return GaussianRational.of(value).is_zero()


def jet_lift(a: Any, var_index: int, n_vars: int, tag: Optional[int] = None) -> Jet:
    """
    Seed variable var_index at value a

    Args:
        a: Base value
        var_index: Index of the seeded variable
        n_vars: Total number of variables
        tag: Nesting depth; defaults to one above the depth of a

    Returns:
        Jet with unit partial at var_index
    """
    if not 0 <= var_index < n_vars:
        raise IndexOutOfRange(f"variable {var_index} outside 0..{n_vars - 1}")
    partials = [ZERO] * n_vars
    partials[var_index] = ONE
    return Jet(a, partials, depth(a) + 1 if tag is None else tag)


def lift_vector(values: Sequence[Any]) -> List[Jet]:
    """Seed every entry of values as its own variable, all at one common tag"""
    tag = 1 + max((depth(v) for v in values), default=0)
    return [jet_lift(v, k, len(values), tag) for k, v in enumerate(values)]


def value_at(value: Any, tag: int) -> Any:
    """Strip one jet level with the given tag"""
    if isinstance(value, Jet) and value.tag == tag:
        return value.value
    return value


def partial_at(value: Any, k: int, tag: int) -> Any:
    """Partial derivative k at the given tag (zero for values constant at that tag)"""
    if isinstance(value, Jet) and value.tag == tag:
        return value.partial(k)
    return ZERO
