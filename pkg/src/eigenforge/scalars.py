"""Exact complex rational scalars: the field Q(i), built on Fraction pairs.

Everything downstream (polynomials, matrices, subspaces) stores its
coefficients as GaussRational values, so equality tests are exact and no
floating point enters the symbolic paths.
"""

from __future__ import annotations

import math
from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {type(x).__name__}")


class GaussRational:
    """A number a + b*i with a, b exact rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    # -- basic protocol ------------------------------------------------

    def __repr__(self):
        return f"GaussRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)

    def __hash__(self):
        return hash((self.re, self.im))

    def __eq__(self, other):
        other = as_scalar(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = as_scalar(other)
        if other is None:
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        other = as_scalar(other)
        if other is None:
            return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = as_scalar(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = as_scalar(other)
        if other is None:
            return NotImplemented
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_scalar(other)
        if other is None:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = as_scalar(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure -----------------------------------------------------

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        "Squared modulus, an exact nonnegative rational."
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def is_rational_real(self) -> bool:
        return self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))


ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)


def as_scalar(x):
    "Coerce ints, Fractions and GaussRationals; return None when impossible."
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRational(x)
    return None


def scalar(x, im=0) -> GaussRational:
    s = as_scalar(x)
    if s is None:
        raise TypeError(f"not a scalar: {x!r}")
    if im:
        s = s + GaussRational(0, im)
    return s


# -- exact square roots ------------------------------------------------
#
# Needed for the isotropic-vector searches: to split a hyperbolic pair one
# must solve s^2 = c exactly, and the search degrades to floating point
# only when c has no square root inside Q(i).


def rational_sqrt(q: Fraction):
    "Exact square root of a nonnegative rational, or None if irrational."
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn = math.isqrt(num)
    rd = math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def sqrt_in_qi(c: GaussRational):
    """Exact square root of c in Q(i), or None when none exists.

    For c = x + yi a root p + qi must satisfy p^2 - q^2 = x and 2pq = y,
    which forces |c| rational and (x + |c|)/2 a rational square.
    """
    x, y = c.re, c.im
    if y == 0:
        if x >= 0:
            r = rational_sqrt(x)
            return None if r is None else GaussRational(r)
        r = rational_sqrt(-x)
        return None if r is None else GaussRational(0, r)
    mod = rational_sqrt(x * x + y * y)
    if mod is None:
        return None
    p = rational_sqrt((x + mod) / 2)
    if p is None or p == 0:
        return None
    return GaussRational(p, y / (2 * p))


def is_square_in_qi(c: GaussRational) -> bool:
    return sqrt_in_qi(c) is not None


# -- printing ----------------------------------------------------------


def _format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(c: GaussRational) -> str:
    """Canonical text form: rationals as p/q, the unit as i, mixed as p/q+r/s*i."""
    re, im = c.re, c.im
    if im == 0:
        return _format_fraction(re)
    if im == 1:
        imtxt = "i"
    elif im == -1:
        imtxt = "-i"
    else:
        imtxt = f"{_format_fraction(im)}*i"
    if re == 0:
        return imtxt
    joiner = "+" if not imtxt.startswith("-") else ""
    return f"{_format_fraction(re)}{joiner}{imtxt}"
