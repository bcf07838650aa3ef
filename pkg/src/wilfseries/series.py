"""Truncated formal power series with exact coefficients.

A :class:`FormalSeries` holds coefficients c_0..c_N of a series truncated at
order N.  Coefficients are either all rational or rational mixed with
:class:`~wilfseries.exact.PiLinear` values; binary operations truncate to the
smaller order.  Everything is exact — there is no floating point in here.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .exact import PiLinear, _as_fraction


def _coerce(c):
    if isinstance(c, PiLinear):
        return c
    return _as_fraction(c)


class FormalSeries:
    """An exactly truncated power series sum_{n<=order} c_n x^n."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = [_coerce(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            if len(coeffs) < order + 1:
                coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
            else:
                coeffs = coeffs[: order + 1]
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def ring(self) -> str:
        return "pi-linear" if any(isinstance(c, PiLinear) for c in self.coeffs) else "rational"

    def coeff(self, n: int):
        """c_n, or 0 beyond the truncation order."""
        return self.coeffs[n] if 0 <= n <= self.order else Fraction(0)

    # -- operator sugar over the free functions below ----------------------
    def __add__(self, other):
        if isinstance(other, FormalSeries):
            n = min(self.order, other.order)
            return FormalSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])
        if isinstance(other, (int, Fraction, PiLinear)):
            head = self.coeffs[0] + other
            return FormalSeries((head,) + self.coeffs[1:])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return FormalSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, FormalSeries):
            return mul(self, other)
        if isinstance(other, (int, Fraction, PiLinear)):
            return FormalSeries([c * other for c in self.coeffs])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, PiLinear)):
            return FormalSeries([other * c for c in self.coeffs])
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:5])
        tail = ", ..." if self.order >= 5 else ""
        return f"FormalSeries([{shown}{tail}], order={self.order})"

    def truncate(self, order: int) -> "FormalSeries":
        return FormalSeries(self.coeffs, order)

    def to_json(self) -> dict:
        if self.ring == "pi-linear":
            coeffs = [c.to_json() if isinstance(c, PiLinear) else PiLinear(c, 0).to_json()
                      for c in self.coeffs]
        else:
            coeffs = [str(c) for c in self.coeffs]
        return {"order": self.order, "ring": self.ring, "coeffs": coeffs}


def mul(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    """Cauchy product, truncated to the smaller of the two orders."""
    n = min(a.order, b.order)
    out = []
    for m in range(n + 1):
        acc = Fraction(0)
        for i in range(m + 1):
            acc = acc + a.coeffs[i] * b.coeffs[m - i]
        out.append(acc)
    return FormalSeries(out)


def compose_vanishing(outer: FormalSeries, inner: FormalSeries) -> FormalSeries:
    """outer(inner(x)) for an inner series with zero constant term.

    Evaluated by Horner's scheme over truncated series, so only coefficients
    up to the common order ever matter.
    """
    if inner.coeffs[0] != 0:
        raise ValueError("composition needs a vanishing inner constant term")
    n = min(outer.order, inner.order)
    g = inner.truncate(n)
    acc = FormalSeries([outer.coeffs[n]], order=n)
    for i in range(n - 1, -1, -1):
        acc = mul(acc, g) + outer.coeffs[i]
    return acc


def reciprocal(a: FormalSeries) -> FormalSeries:
    """1 / a for a series with nonzero rational constant term."""
    a0 = a.coeffs[0]
    if isinstance(a0, PiLinear):
        raise ValueError("reciprocal is only defined over the rational ring")
    if a0 == 0:
        raise ValueError("reciprocal needs a nonzero constant term")
    inv = [Fraction(1) / a0]
    for m in range(1, a.order + 1):
        acc = Fraction(0)
        for i in range(1, m + 1):
            acc += a.coeffs[i] * inv[m - i]
        inv.append(-acc / a0)
    return FormalSeries(inv)


def sqrt_one_plus(u: FormalSeries) -> FormalSeries:
    """(1 + u)^(1/2) for a rational series u with zero constant term.

    Coefficients come from matching squares: s_0 = 1 and
    2 s_n = u_n - sum_{k=1}^{n-1} s_k s_{n-k}.
    """
    if u.coeffs[0] != 0:
        raise ValueError("sqrt_one_plus wants a vanishing constant term")
    if any(isinstance(c, PiLinear) for c in u.coeffs):
        raise ValueError("sqrt_one_plus is only defined over the rational ring")
    s = [Fraction(1)]
    for m in range(1, u.order + 1):
        acc = Fraction(0)
        for k in range(1, m):
            acc += s[k] * s[m - k]
        s.append((u.coeffs[m] - acc) / 2)
    return FormalSeries(s)


def exp_arg_series(c, order: int) -> FormalSeries:
    """The series of exp(c*x): coefficients c^n / n!."""
    c = _as_fraction(c)
    return FormalSeries([c ** n / math.factorial(n) for n in range(order + 1)])


def derivative(a: FormalSeries) -> FormalSeries:
    """Termwise derivative; the order drops by one."""
    if a.order == 0:
        return FormalSeries([Fraction(0)])
    return FormalSeries([(n + 1) * a.coeffs[n + 1] for n in range(a.order)])


def integrate(a: FormalSeries) -> FormalSeries:
    """Termwise antiderivative with zero constant; the order grows by one."""
    out = [Fraction(0)]
    for n in range(a.order + 1):
        out.append(a.coeffs[n] / (n + 1))
    return FormalSeries(out)


# -- reciprocal coefficients as a single determinant -------------------------

def _det_bareiss(a: list[list[int]]) -> int:
    """Exact determinant of an integer matrix, fraction-free elimination."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def wronski_reciprocal(alphas: Sequence, n: int) -> Fraction:
    """Coefficient beta_n of 1/sum(alpha_k x^k) as one n x n determinant.

    beta_n = (-1)^n / alpha_0^(n+1) * det M where M[i][j] = alpha_(i-j+1)
    (entries with negative index are zero: alpha_0 sits on the
    superdiagonal).  The determinant is evaluated fraction-free after
    clearing denominators, which keeps every intermediate an integer.
    """
    if n < 1:
        raise ValueError("wronski_reciprocal wants n >= 1")
    alphas = [_as_fraction(a) for a in alphas]
    if len(alphas) < n + 1:
        raise ValueError("need coefficients alpha_0..alpha_n")
    if alphas[0] == 0:
        raise ValueError("reciprocal needs a nonzero constant term")
    lcm = 1
    for a in alphas[: n + 1]:
        lcm = lcm * a.denominator // math.gcd(lcm, a.denominator)
    entries = [int(a * lcm) for a in alphas[: n + 1]]
    mat = [[entries[i - j + 1] if 0 <= i - j + 1 else 0 for j in range(n)] for i in range(n)]
    det = Fraction(_det_bareiss(mat), lcm ** n)
    return (-1) ** n * det / alphas[0] ** (n + 1)
