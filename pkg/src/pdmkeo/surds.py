"""Exact quadratic surds a + b*sqrt(d) over the rationals.

Inversion of a (xi, zeta) point into a two-term ordering needs square
roots of rationals. Keeping them symbolic (rational a, b and squarefree
integer d) lets round-trips back to (xi, zeta) stay exact: conjugate
pairs cancel in the weighted means.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering


def _split_square(n: int) -> tuple[int, int]:
    """Return (s, d) with n = s*s*d and d squarefree, for n >= 1."""
    s, d = 1, n
    i = 2
    while i * i <= d:
        q, r = divmod(d, i * i)
        if r == 0:
            s *= i
            d = q
        else:
            i += 1
    return s, d


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)  # exact binary value
    raise TypeError(f"cannot interpret {x!r} as a rational")


@total_ordering
class Surd:
    """Exact value a + b*sqrt(d), normalized so d is squarefree and d = 1
    collapses the value to the rational a.

    Arithmetic stays within one quadratic field: combining two surds with
    different irrational parts raises ArithmeticError.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=1):
        a = _as_fraction(a)
        b = _as_fraction(b)
        d = int(d)
        if d < 0:
            raise ValueError(f"negative radicand {d}")
        if b != 0 and d > 1:
            s, d0 = _split_square(d)
            b *= s
            d = d0
        if d <= 1 or b == 0:
            # sqrt(0) = 0, sqrt(1) = 1: fold into the rational part
            a, b, d = a + b * d, Fraction(0), 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Surd is immutable")

    @classmethod
    def sqrt(cls, r) -> "Surd":
        """Exact square root of a non-negative rational."""
        r = _as_fraction(r)
        if r < 0:
            raise ValueError(f"square root of negative rational {r}")
        if r == 0:
            return cls(0)
        # sqrt(p/q) = sqrt(p*q)/q
        n = r.numerator * r.denominator
        s, d = _split_square(n)
        return cls(0, Fraction(s, r.denominator), d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ArithmeticError(f"{self} is irrational")
        return self.a

    def _coerce(self, other):
        if isinstance(other, Surd):
            return other
        if isinstance(other, (int, Fraction)):
            return Surd(other)
        return None

    def _common_d(self, other: "Surd") -> int:
        if self.b == 0:
            return other.d
        if other.b == 0:
            return self.d
        if self.d != other.d:
            raise ArithmeticError(
                f"incompatible radicands sqrt({self.d}) and sqrt({other.d})"
            )
        return self.d

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._common_d(o)
        return Surd(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._common_d(o)
        return Surd(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._common_d(o)
        norm = o.a * o.a - o.b * o.b * d
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        conj = Surd(o.a, -o.b, d)
        num = self * conj
        return Surd(num.a / norm, num.b / norm, d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def _sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 against b^2 d (cannot be equal, d squarefree > 1)
        rational_wins = a * a > b * b * d
        if a > 0:
            return 1 if rational_wins else -1
        return -1 if rational_wins else 1

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and (self.b == 0 or self.d == o.d)

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        try:
            return (self - o)._sign() < 0
        except ArithmeticError:
            # different fields: fall back to exact-enough float ordering
            return float(self) < float(o)

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.d})"
        if abs(self.b) != 1:
            root = f"{abs(self.b)}*{root}"
        sign = "-" if self.b < 0 else "+"
        if self.a == 0:
            return f"-{root}" if self.b < 0 else root
        return f"{self.a}{sign}{root}"

    def __repr__(self):
        return f"Surd({self.a!r}, {self.b!r}, {self.d})"


def exact(x) -> Fraction | Surd:
    """Coerce to an exact scalar: Fraction for rational input, Surd kept as is."""
    if isinstance(x, Surd):
        return x.as_fraction() if x.is_rational else x
    return _as_fraction(x)
