"""Exact arithmetic in the quadratic field Q(sqrt3).

Elements are a + b*sqrt(3) with rational a, b.  The block-diagonalization
coefficients for the quaternary scheme live in this field (odd-weight rows
pick up a single sqrt(3) factor), so certificate verification needs exact
field arithmetic with a decidable sign.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]

_SQRT3 = math.sqrt(3.0)


class QuadExt:
    """Number a + b*sqrt(3) with a, b rational. Immutable."""

    __slots__ = ("a", "b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    # construction helpers

    @staticmethod
    def coerce(x: "QuadExt | RationalLike") -> "QuadExt":
        if isinstance(x, QuadExt):
            return x
        return QuadExt(x, 0)

    # arithmetic

    def __add__(self, other):
        o = QuadExt.coerce(other)
        return QuadExt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = QuadExt.coerce(other)
        return QuadExt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return QuadExt.coerce(other) - self

    def __neg__(self):
        return QuadExt(-self.a, -self.b)

    def __mul__(self, other):
        o = QuadExt.coerce(other)
        # (a + b r)(c + d r) = (ac + 3bd) + (ad + bc) r  with r = sqrt(3)
        return QuadExt(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        # 1/(a + b r) = (a - b r)/(a^2 - 3 b^2); the norm vanishes only at 0
        nrm = self.a * self.a - 3 * self.b * self.b
        if nrm == 0:
            raise ZeroDivisionError("QuadExt division by zero")
        return QuadExt(self.a / nrm, -self.b / nrm)

    def __truediv__(self, other):
        return self * QuadExt.coerce(other).inverse()

    def __rtruediv__(self, other):
        return QuadExt.coerce(other) * self.inverse()

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b)

    # exact predicates

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        """Exact sign: -1, 0, or +1."""
        a, b = self.a, self.b
        if b == 0:
            return -1 if a < 0 else (1 if a > 0 else 0)
        if a == 0:
            return -1 if b < 0 else 1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with 3 b^2, the larger magnitude wins
        d = a * a - 3 * b * b
        if a > 0:  # b < 0
            return 1 if d > 0 else (-1 if d < 0 else 0)
        return -1 if d > 0 else (1 if d < 0 else 0)

    # comparisons

    def __eq__(self, other):
        if isinstance(other, (QuadExt, int, Fraction)):
            return (self - other).is_zero()
        return NotImplemented

    def __lt__(self, other):
        return (self - QuadExt.coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - QuadExt.coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - QuadExt.coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - QuadExt.coerce(other)).sign() >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # conversions

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * _SQRT3

    def __repr__(self):
        if self.b == 0:
            return f"QuadExt({self.a})"
        return f"QuadExt({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt3"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*sqrt3"


ZERO = QuadExt(0)
ONE = QuadExt(1)
SQRT3 = QuadExt(0, 1)


def sqrt3_pow(e: int) -> QuadExt:
    """sqrt(3)**e for a nonnegative integer exponent, exact."""
    if e < 0:
        raise ValueError("negative exponent")
    base = Fraction(3) ** (e // 2)
    if e % 2 == 0:
        return QuadExt(base, 0)
    return QuadExt(0, base)
