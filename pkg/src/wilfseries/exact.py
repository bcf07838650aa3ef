"""Exact scalar arithmetic: rationals, numbers of the form r + s*pi, and
the factorial / binomial / double-factorial families everything else rests on.

All sequence values in this package live in Q or in Q + Q*pi.  The rational
field is ``fractions.Fraction`` (always normalized, arbitrary precision);
the two-dimensional ring gets its own small type, :class:`PiLinear`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

#: The exact rational scalar type used throughout.
Rational = Fraction

Scalar = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True, eq=False)
class PiLinear:
    """An exact number rat + pi_part*pi with both components rational.

    Since pi is transcendental, two such numbers are equal iff their
    components are equal, and the representation is unique.  Addition,
    subtraction and scaling by a rational are componentwise.  There is
    deliberately no product of two PiLinear values: that would produce a
    pi**2 term, which never occurs in any quantity this package computes,
    so attempting it raises ``TypeError``.
    """

    rat: Fraction
    pi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "rat", _as_fraction(self.rat))
        object.__setattr__(self, "pi", _as_fraction(self.pi))

    # -- ring structure (module over Q) -----------------------------------
    def __add__(self, other):
        if isinstance(other, PiLinear):
            return PiLinear(self.rat + other.rat, self.pi + other.pi)
        if isinstance(other, (int, Fraction)):
            return PiLinear(self.rat + other, self.pi)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return PiLinear(-self.rat, -self.pi)

    def __sub__(self, other):
        if isinstance(other, (PiLinear, int, Fraction)):
            return self + (-other if isinstance(other, PiLinear) else PiLinear(-other, 0))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return PiLinear(other - self.rat, -self.pi)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, PiLinear):
            raise TypeError("product of two pi-linear numbers leaves the ring (pi**2 term)")
        if isinstance(other, (int, Fraction)):
            return PiLinear(self.rat * other, self.pi * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PiLinear(self.rat / other, self.pi / other)
        return NotImplemented

    # -- comparisons -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, PiLinear):
            return self.rat == other.rat and self.pi == other.pi
        if isinstance(other, (int, Fraction)):
            return self.pi == 0 and self.rat == other
        return NotImplemented

    def __hash__(self):
        if self.pi == 0:
            return hash(self.rat)
        return hash((self.rat, self.pi))

    def __bool__(self):
        return bool(self.rat) or bool(self.pi)

    # -- presentation ------------------------------------------------------
    def __str__(self):
        return f"{self.rat} + {self.pi}*pi"

    def __repr__(self):
        return f"PiLinear({self.rat!r}, {self.pi!r})"

    def evalf(self, pi_value):
        """Numeric value given a numeric (float/mpf) approximation of pi."""
        return self.rat + self.pi * pi_value

    def to_json(self) -> dict:
        return {"rat": str(self.rat), "pi": str(self.pi)}

    @classmethod
    def from_json(cls, record: dict) -> "PiLinear":
        return cls(Fraction(record["rat"]), Fraction(record["pi"]))


#: pi/4 exactly, as a PiLinear value.
PI_QUARTER = PiLinear(Fraction(0), Fraction(1, 4))


def double_factorial(m: int) -> Fraction:
    """m!! extended to negative odd arguments.

    For m >= 0 this is the usual product m(m-2)(m-4)... down to 1 or 2,
    with 0!! = 1.  The odd case extends to negative arguments by the
    reflection (-(2k+1))!! = (-1)^k / (2k-1)!!, so (-1)!! = 1, (-3)!! = -1,
    (-5)!! = 1/3, ...  Negative even arguments are outside the domain.
    """
    if not isinstance(m, int):
        raise TypeError("double factorial wants an integer")
    if m >= -1:
        if m <= 0:
            return Fraction(1)
        prod = 1
        for j in range(m, 0, -2):
            prod *= j
        return Fraction(prod)
    if m % 2 == 0:
        raise ValueError(f"double factorial undefined for negative even {m}")
    k = (-m - 1) // 2  # m = -(2k+1)
    sign = -1 if k % 2 else 1
    return Fraction(sign) / double_factorial(2 * k - 1)


def falling_factorial(x, n: int) -> Fraction:
    """<x>_n = x(x-1)...(x-n+1), with the empty product 1 at n = 0."""
    if n < 0:
        raise ValueError("falling factorial wants n >= 0")
    x = _as_fraction(x)
    prod = Fraction(1)
    for i in range(n):
        prod *= x - i
    return prod


def rising_factorial(x, n: int) -> Fraction:
    """(x)_n = x(x+1)...(x+n-1), the Pochhammer symbol."""
    if n < 0:
        raise ValueError("rising factorial wants n >= 0")
    x = _as_fraction(x)
    prod = Fraction(1)
    for i in range(n):
        prod *= x + i
    return prod


def binomial(n: int, k: int) -> int:
    """C(n, k) for integer n >= 0, zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial wants a nonnegative upper index")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rational_binomial(x, l: int) -> Fraction:
    """C(x, l) = <x>_l / l! for rational x and integer l >= 0."""
    if l < 0:
        raise ValueError("rational binomial wants l >= 0")
    return falling_factorial(x, l) / math.factorial(l)


# sigma(k) = 2^(k/2) sin(3k*pi/4) is an integer for every k >= 0; it obeys
# sigma(k+4) = -4 sigma(k) with start 0, 1, -2, 2, which is how we compute it.
_SIGMA_BASE = (0, 1, -2, 2)


def sigma(k: int) -> int:
    """2^(k/2) * sin(3k*pi/4), always an integer; zero exactly when 4 | k."""
    if k < 0:
        raise ValueError("sigma wants k >= 0")
    return (-4) ** (k // 4) * _SIGMA_BASE[k % 4]
