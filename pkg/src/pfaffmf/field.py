"""Rational square roots and elements of a real quadratic extension Q(sqrt(d))."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


class NotASquareError(ValueError):
    """Raised when a square root does not exist in the active field."""


def rational_sqrt(x) -> Fraction | None:
    """Return the non-negative rational square root of ``x``, or None."""
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class QuadraticNumber:
    """The number ``a + b*sqrt(d)`` with rational a, b and a fixed non-square rational d.

    Mixes freely with ``int`` and ``Fraction``. Results whose irrational part
    vanishes stay QuadraticNumber instances but compare and hash equal to the
    rational value.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=2):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = Fraction(d)
        if rational_sqrt(self.d) is not None:
            raise ValueError(f"extension parameter {d} is a rational square")

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise ValueError("cannot mix different quadratic extensions")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.a * o.a + self.d * self.b * o.b,
                               self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> QuadraticNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadraticNumber division by zero")
        return QuadraticNumber(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.d})"
        coef = {1: "", -1: "-"}.get(self.b, f"{self.b}*")
        if self.a == 0:
            return f"{coef}{root}"
        sign = "+" if self.b > 0 else "-"
        mag = "" if abs(self.b) == 1 else f"{abs(self.b)}*"
        return f"({self.a}{sign}{mag}{root})"

    def __repr__(self):
        return f"QuadraticNumber({self.a}, {self.b}, {self.d})"


def sqrt_in_field(x, extension=None):
    """Square root of the rational ``x`` in Q, or in Q(sqrt(extension)) when given.

    Returns the root with non-negative leading part; raises NotASquareError
    when no root exists in the active field.
    """
    x = Fraction(x)
    r = rational_sqrt(x)
    if r is not None:
        return r
    if extension is not None:
        d = Fraction(extension)
        r = rational_sqrt(x / d)
        if r is not None:
            return QuadraticNumber(0, r, d)
    where = "Q" if extension is None else f"Q(sqrt({extension}))"
    raise NotASquareError(f"{x} is not a square in {where}")


def to_fraction(x) -> Fraction:
    """Convert a rational-valued field element to Fraction."""
    if isinstance(x, QuadraticNumber):
        if x.b != 0:
            raise ValueError(f"{x} is not rational")
        return x.a
    return Fraction(x)
