"""Exact arithmetic substrate: rationals and the real quadratic field Q(sqrt(13)).

Rationals are plain :class:`fractions.Fraction` (arbitrary precision, always
canonical, denominator positive).  ``QuadExt`` adds exact arithmetic for
numbers of the form a + b*sqrt(13) with rational a, b; since sqrt(13) is
irrational the representation is unique and comparisons can be decided
without any floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering

Rational = Fraction

_SQRT13_RE = re.compile(r"^(?P<a>[^+]*)\+(?P<b>[^+]*)\*sqrt13$")


def parse_rational(text: str) -> Fraction:
    """Parse the text form "p/q" (q omitted when 1) into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    """Inverse of :func:`parse_rational`; "p/q" with q omitted when 1."""
    return str(q)


@total_ordering
class QuadExt:
    """An element a + b*sqrt(13) of the field Q(sqrt(13)).

    Immutable.  All arithmetic is exact; the sign (and hence every
    comparison) is decided by integer reasoning on a^2 versus 13*b^2,
    never by floating evaluation.
    """

    __slots__ = ("rational_part", "root13_part")

    def __init__(self, rational_part=0, root13_part=0):
        object.__setattr__(self, "rational_part", Fraction(rational_part))
        object.__setattr__(self, "root13_part", Fraction(root13_part))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @staticmethod
    def _coerce(x) -> "QuadExt":
        if isinstance(x, QuadExt):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadExt(x)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(self.rational_part + other.rational_part,
                       self.root13_part + other.root13_part)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.rational_part, -self.root13_part)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.rational_part, self.root13_part
        c, d = other.rational_part, other.root13_part
        return QuadExt(a * c + 13 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.rational_part, -self.root13_part)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c, d = other.rational_part, other.root13_part
        norm = c * c - 13 * d * d
        if norm == 0:
            # c^2 = 13 d^2 has no nonzero rational solutions, so this is 0/0
            raise ZeroDivisionError("division by zero in Q(sqrt13)")
        return self * other.conjugate() * QuadExt(Fraction(1, 1) / norm)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (QuadExt(1) / self) ** (-n)
        result = QuadExt(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- ordering -----------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(13): -1, 0 or +1."""
        a, b = self.rational_part, self.root13_part
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: |a| vs |b|*sqrt13, i.e. a^2 vs 13 b^2
        bigger_rational = a * a > 13 * b * b
        if a > 0:
            return 1 if bigger_rational else -1
        return -1 if bigger_rational else 1

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.rational_part == other.rational_part
                and self.root13_part == other.root13_part)

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        return hash((self.rational_part, self.root13_part))

    def __bool__(self):
        return self.rational_part != 0 or self.root13_part != 0

    # -- conversion / display ----------------------------------------------

    def is_rational(self) -> bool:
        return self.root13_part == 0

    def to_float(self) -> float:
        """Double-precision approximation, for display only."""
        return float(self.rational_part) + float(self.root13_part) * 13 ** 0.5

    def __str__(self):
        return f"{self.rational_part}+{self.root13_part}*sqrt13"

    def __repr__(self):
        return f"QuadExt({self.rational_part!r}, {self.root13_part!r})"


def parse_quadext(text: str) -> QuadExt:
    """Parse the text form "a+b*sqrt13" with a, b in rational text form."""
    m = _SQRT13_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a Q(sqrt13) element: {text!r}")
    return QuadExt(parse_rational(m.group("a")), parse_rational(m.group("b")))


def format_quadext(x: QuadExt) -> str:
    return str(x)


SQRT13 = QuadExt(0, 1)
