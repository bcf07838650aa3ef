"""High-precision floating cross-checks for the exact sequences (mpmath).

Everything exact lives elsewhere; this module only evaluates functions,
infinite series and asymptotic formulas numerically so the closed forms can
be compared against something they were not derived from.  Every comparison
tolerance used by callers is derived from an explicit truncation/tail bound
or a recorded exact computation — see the test suite.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath as mp

from . import sequences as sq
from .exact import PiLinear, double_factorial

DEFAULT_DIGITS = 50


def _to_mpf(value):
    """Exact rational or PiLinear -> mpf at the current working precision."""
    if isinstance(value, PiLinear):
        return _to_mpf(value.rat) + _to_mpf(value.pi) * mp.pi
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / value.denominator
    return mp.mpf(value)


def eval_wilf(x, digits: int = DEFAULT_DIGITS):
    """arctan(sqrt(2e^-x - 1))/sqrt(2e^-x - 1) for real |x| < ln 2."""
    with mp.workdps(digits):
        x = mp.mpf(x)
        if abs(x) >= mp.log(2):
            raise ValueError("eval_wilf wants |x| < ln 2")
        u = 2 * mp.e ** (-x) - 1
        r = mp.sqrt(u)
        return mp.atan(r) / r


def eval_c_generating(x, digits: int = DEFAULT_DIGITS):
    """(pi/4 - arctan(sqrt(2e^-x - 1)))/sqrt(2e^-x - 1) for real |x| < ln 2."""
    with mp.workdps(digits):
        x = mp.mpf(x)
        if abs(x) >= mp.log(2):
            raise ValueError("eval_c_generating wants |x| < ln 2")
        u = 2 * mp.e ** (-x) - 1
        r = mp.sqrt(u)
        return (mp.pi / 4 - mp.atan(r)) / r


def wilf_partial_sum(x, order: int = 40, digits: int = DEFAULT_DIGITS):
    """sum_{n<=order} a_n x^n with the exact coefficients a_n = b_n pi - c_n."""
    with mp.workdps(digits):
        x = mp.mpf(x)
        total = mp.mpf(0)
        for n in range(order + 1):
            total += _to_mpf(sq.a_coeff(n).value) * x ** n
        return total


def c_partial_sum(x, order: int = 40, digits: int = DEFAULT_DIGITS):
    """sum_{n<=order} c_n x^n with the exact coefficients."""
    with mp.workdps(digits):
        x = mp.mpf(x)
        total = mp.mpf(0)
        for n in range(order + 1):
            total += _to_mpf(sq.c_seq(n)) * x ** n
        return total


def c_tail_bound(x, order: int = 40, digits: int = DEFAULT_DIGITS):
    """Geometric tail bound for | sum_{n>order} c_n x^n |.

    The series has radius ln 2, so c_n <= M (1/ln2)^n with the constant M
    measured from the exact prefix (c_n (ln2)^n is decreasing there).  The
    bound is M r^(order+1)/(1-r) with r = |x|/ln2, and requires |x| < ln 2.
    """
    with mp.workdps(digits):
        x = mp.mpf(x)
        ln2 = mp.log(2)
        r = abs(x) / ln2
        if r >= 1:
            raise ValueError("tail bound needs |x| < ln 2")
        m_const = max(_to_mpf(sq.c_seq(n)) * ln2 ** n for n in range(1, order + 1))
        return m_const * r ** (order + 1) / (1 - r)


def hyp2f1_at_minus1(n: int, digits: int = DEFAULT_DIGITS):
    """2F1(n+1/2, n+1; n+3/2; -1) numerically.

    The defining series diverges at -1 once n >= 1, so this sums the Pfaff
    transform 2^-(n+1/2) 2F1(n+1/2, 1/2; n+3/2; 1/2), whose terms halve.
    """
    if n < 0:
        raise ValueError("hyp2f1_at_minus1 wants n >= 0")
    with mp.workdps(digits + 10):
        a = n + mp.mpf(1) / 2
        c = n + mp.mpf(3) / 2
        half = mp.mpf(1) / 2
        term = mp.mpf(1)
        total = mp.mpf(1)
        cutoff = mp.mpf(10) ** (-(digits + 8))
        for m in range(20 * (digits + 10)):
            term = term * (a + m) * (half + m) / ((c + m) * (m + 1)) * half
            total += term
            if abs(term) < cutoff * abs(total):
                break
        else:
            raise ArithmeticError("hypergeometric series failed to converge")
        return total * mp.mpf(2) ** (-a)


PI_SERIES_IDS = ("limit-T", "sqrt3-arctanh-form", "sqrt3-binom-form", "pi-2F1")


def pi_series(rep_id: str, terms: int, digits: int = DEFAULT_DIGITS):
    """Partial sum of one of the exact series representations of pi.

    limit-T            -4 T(terms)
    sqrt3-arctanh-form 12 sqrt(3) sum_{n=1}^{terms} (-1)^n T(n) (sqrt3 - 1)^n
    sqrt3-binom-form   4 sqrt(3) sum_{n=0}^{terms} 6^-n sum_k (-1)^(k+1) C(2n-k,n) sigma(k)/k
    pi-2F1             the exact pi/4 identity at n = terms, with the 2F1
                       factor evaluated numerically (error set by precision,
                       not by terms)
    """
    if terms < 1:
        raise ValueError("pi_series wants terms >= 1")
    with mp.workdps(digits + 10):
        if rep_id == "limit-T":
            return -4 * _to_mpf(sq.t_seq(terms))
        if rep_id == "sqrt3-arctanh-form":
            s3 = mp.sqrt(3)
            total = mp.mpf(0)
            for n in range(1, terms + 1):
                total += (-1) ** n * _to_mpf(sq.t_seq(n)) * (s3 - 1) ** n
            return 12 * s3 * total
        if rep_id == "sqrt3-binom-form":
            acc = Fraction(0)
            for n in range(terms + 1):
                acc -= sq.sigma_binomial_sum(n) / Fraction(6) ** n
            return 4 * mp.sqrt(3) * _to_mpf(acc)
        if rep_id == "pi-2F1":
            n = terms
            f = hyp2f1_at_minus1(n, digits)
            lead = _to_mpf(double_factorial(2 * n) / double_factorial(2 * n + 1))
            rest = _to_mpf(Fraction(math.factorial(n) ** 2, math.factorial(2 * n))
                           * sq.sigma_binomial_sum(n))
            return 4 * (lead * f - rest)
    raise ValueError(f"unknown pi series id {rep_id!r}; known: {PI_SERIES_IDS}")


def series_representation_check(seq_name: str, n: int, terms: int,
                                digits: int = DEFAULT_DIGITS):
    """Partial sum of the infinite-series representation of b_n, d_n or e_n.

    All three share the kernel (2j+1)!!/((2j)!! 2^j), whose terms decay like
    2^-j, so ``terms`` extra summands buy roughly ``terms`` more bits.
    The d and e forms hold for n >= 1.  (In the d sum the exponent on
    j - 1/2 is n - 1: with exponent n the same sum gives (n+1) d_{n+1},
    i.e. the coefficients of the reciprocal generating function.)
    """
    if seq_name not in ("b", "d", "e"):
        raise ValueError("series_representation_check wants seq in {b, d, e}")
    if seq_name in ("d", "e") and n < 1:
        raise ValueError(f"the {seq_name} series representation needs n >= 1")
    with mp.workdps(digits + 10):
        dfr = mp.mpf(1)  # (2j+1)!!/(2j)!! at j = 0
        total = mp.mpf(0)
        for j in range(terms):
            jph = mp.mpf(2 * j + 1) / 2  # j + 1/2
            if seq_name == "b":
                term = jph ** (n - 1) * dfr / mp.mpf(2) ** (j + mp.mpf(7) / 2)
            elif seq_name == "d":
                term = (jph - 1) ** (n - 1) / jph * dfr / mp.mpf(2) ** (j + mp.mpf(3) / 2)
            else:
                term = -(jph ** (n - 1) / (jph - 1)) * dfr / mp.mpf(2) ** (j + mp.mpf(3) / 2)
            total += term
            dfr = dfr * (2 * j + 3) / (2 * j + 2)
        return total / math.factorial(n)


def asymptotic_trend(seq_name: str, n: int, digits: int = DEFAULT_DIGITS):
    """Ratio exact/asymptote, computed in log space.

    For b: 4 n! b_n against sqrt(2/ln2) (n/(e ln2))^n.
    For c: 2 (n+1)! c_{n+1} against (e pi/sqrt(2 ln2)) (n/(e ln2))^(n+1).
    The exact side is a big integer, so its log is computed directly from it.
    """
    if n < 50:
        raise ValueError("asymptotic_trend wants n >= 50 for log-space stability")
    with mp.workdps(digits + 15):
        ln2 = mp.log(2)
        logn = mp.log(n)
        if seq_name == "b":
            exact_log = mp.log(mp.mpf(sq.b_scaled_int(n)))
            target = mp.log(2 / ln2) / 2 + n * (logn - 1 - mp.log(ln2))
        elif seq_name == "c":
            exact_log = mp.log(mp.mpf(sq.c_scaled_int(n + 1)))
            target = 1 + mp.log(mp.pi) - mp.log(2 * ln2) / 2 + (n + 1) * (logn - 1 - mp.log(ln2))
        else:
            raise ValueError("asymptotic_trend wants seq in {b, c}")
        return mp.exp(exact_log - target)


def pi_gap(n: int, digits: int = DEFAULT_DIGITS):
    """|pi - c_n/b_n|.

    The gap shrinks roughly geometrically in n (far faster than the
    precision a caller is likely to request), so n guard digits are added
    internally; otherwise the subtraction would return rounding noise.
    """
    if n < 1:
        raise ValueError("pi_gap wants n >= 1")
    ratio = sq.pi_approx(n)
    with mp.workdps(digits + n + 15):
        return abs(mp.pi - _to_mpf(ratio))
