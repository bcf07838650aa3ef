"""The named coefficient sequences of arctan(sqrt(2e^-z - 1))/sqrt(2e^-z - 1).

Writing W(z) for that function, its Maclaurin coefficient of z^n is
a_n = b_n*pi - c_n with b_n, c_n >= 0 rational, and c_n/b_n -> pi.  This
module computes a_n, b_n, c_n in closed form (alternating Stirling sums),
together with the square-root companion sequences d_n, e_n, the tail sums
T(n) of sum (-1)^k sigma(k)/(2^k k), and independent routes to all of them:
power-series pipelines, single determinants, and hypergeometric values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import combinat
from . import series as fps
from .exact import PiLinear, binomial, double_factorial, sigma


# -- T(n): partial sums of sum (-1)^k sigma(k) / (2^k k) ----------------------

_t_vals: list[Fraction] = [Fraction(0)]


def t_seq(n: int) -> Fraction:
    """T(n) = sum_{k=1}^{n} (-1)^k sigma(k)/(2^k k); T(n) -> -pi/4."""
    if n < 0:
        raise ValueError("t_seq wants n >= 0")
    while len(_t_vals) <= n:
        m = len(_t_vals)
        _t_vals.append(_t_vals[-1] + Fraction((-1) ** m * sigma(m), 2 ** m * m))
    return _t_vals[n]


# -- the recurring inner sum over sigma ---------------------------------------

_sigma_sum_cache: dict[int, Fraction] = {}


def sigma_binomial_sum(k: int) -> Fraction:
    """sum_{l=1}^{k} (-1)^l C(2k-l, k) sigma(l) / l.

    The binomial is updated incrementally along l, so one call is O(k).
    """
    if k < 0:
        raise ValueError("sigma_binomial_sum wants k >= 0")
    hit = _sigma_sum_cache.get(k)
    if hit is not None:
        return hit
    total = Fraction(0)
    if k >= 1:
        binom = math.comb(2 * k - 1, k)
        for l in range(1, k + 1):
            total += Fraction((-1) ** l * binom * sigma(l), l)
            # C(2k-l-1, k) = C(2k-l, k) * (k-l) / (2k-l), an exact division
            binom = binom * (k - l) // (2 * k - l)
    _sigma_sum_cache[k] = total
    return total


_q_cache: dict[int, Fraction] = {}


def _q_inner(k: int) -> Fraction:
    """k!/2^k * sigma_binomial_sum(k): the bracket inside the c_n closed form.

    Equals sum_l P(k, l) T(l), which the identity tests confirm.
    """
    hit = _q_cache.get(k)
    if hit is None:
        hit = Fraction(math.factorial(k), 2 ** k) * sigma_binomial_sum(k)
        _q_cache[k] = hit
    return hit


# -- closed forms for b, c, d, e ----------------------------------------------

_b_cache: dict[int, Fraction] = {}
_c_cache: dict[int, Fraction] = {}
_d_cache: dict[int, Fraction] = {}
_e_cache: dict[int, Fraction] = {}


def b_seq(n: int) -> Fraction:
    """b_n = (1/4) (-1)^n/n! sum_k (-1)^k S(n,k) (2k-1)!!.

    These are the coefficients of 1/(4 sqrt(2e^-x - 1)); 4 n! b_n is a
    positive integer (OEIS A014307).
    """
    if n < 0:
        raise ValueError("b_seq wants n >= 0")
    hit = _b_cache.get(n)
    if hit is not None:
        return hit
    row = combinat.stirling2_row(n)
    total = Fraction(0)
    df = Fraction(1)  # (2k-1)!!, starting at k = 0 with (-1)!! = 1
    for k in range(n + 1):
        if k:
            df *= 2 * k - 1
        if row[k]:
            total += (-1) ** k * row[k] * df
    val = Fraction((-1) ** n, 4 * math.factorial(n)) * total
    _b_cache[n] = val
    return val


def c_seq(n: int) -> Fraction:
    """c_n = (-1)^(n+1)/n! sum_{k=1}^{n} (-1)^k S(n,k) k!/2^k
    sum_{l=1}^{k} (-1)^l C(2k-l, k) sigma(l)/l.

    Coefficients of (pi/4 - arctan(sqrt(2e^-x-1)))/sqrt(2e^-x-1);
    2 n! c_n is a positive integer for n >= 1 (OEIS A180875).
    """
    if n < 0:
        raise ValueError("c_seq wants n >= 0")
    hit = _c_cache.get(n)
    if hit is not None:
        return hit
    row = combinat.stirling2_row(n)
    total = Fraction(0)
    for k in range(1, n + 1):
        if row[k]:
            total += (-1) ** k * row[k] * _q_inner(k)
    val = Fraction((-1) ** (n + 1), math.factorial(n)) * total
    _c_cache[n] = val
    return val


def d_seq(n: int) -> Fraction:
    """d_n = (-1)^n/n! sum_k (-1)^k S(n,k) (2k-3)!!; the z^n coefficient of
    sqrt(2e^-z - 1) is -d_n.  n! d_n is an integer (OEIS A014304 for n >= 1).
    """
    if n < 0:
        raise ValueError("d_seq wants n >= 0")
    hit = _d_cache.get(n)
    if hit is not None:
        return hit
    row = combinat.stirling2_row(n)
    total = Fraction(0)
    df = Fraction(-1)  # (2k-3)!!, starting at k = 0 with (-3)!! = -1
    for k in range(n + 1):
        if k == 1:
            df = Fraction(1)  # (-1)!!
        elif k >= 2:
            df *= 2 * k - 3
        if row[k]:
            total += (-1) ** k * row[k] * df
    val = Fraction((-1) ** n, math.factorial(n)) * total
    _d_cache[n] = val
    return val


_h_cache: dict[int, Fraction] = {}


def _half_scaled_df_sum(k: int) -> Fraction:
    """sum_l S(k,l) (2l-3)!!/2^l, the inner sum of the e_n closed form."""
    hit = _h_cache.get(k)
    if hit is not None:
        return hit
    row = combinat.stirling2_row(k)
    total = Fraction(0)
    df = Fraction(-1)
    for l in range(k + 1):
        if l == 1:
            df = Fraction(1)
        elif l >= 2:
            df *= 2 * l - 3
        if row[l]:
            total += row[l] * df / 2 ** l
    _h_cache[k] = total
    return total


def e_seq(n: int) -> Fraction:
    """e_n: coefficients of sqrt(e^x (2 - e^x)) = sqrt(1 - (e^x - 1)^2).

    Closed form -(1/(2n)!!) sum_k C(n,k) 2^k sum_l S(k,l) (2l-3)!!/2^l;
    n! e_n is an integer.
    """
    if n < 0:
        raise ValueError("e_seq wants n >= 0")
    hit = _e_cache.get(n)
    if hit is not None:
        return hit
    total = Fraction(0)
    for k in range(n + 1):
        total += binomial(n, k) * Fraction(2) ** k * _half_scaled_df_sum(k)
    val = -total / double_factorial(2 * n)
    _e_cache[n] = val
    return val


def sqrt_series_coeff(n: int) -> Fraction:
    """The z^n Maclaurin coefficient of sqrt(2e^-z - 1), which is -d_n."""
    return -d_seq(n)


# -- the Wilf coefficient itself ----------------------------------------------

@dataclass(frozen=True)
class WilfCoefficient:
    """Maclaurin coefficient a_n = b_n*pi - c_n of arctan(sqrt(2e^-z-1))/sqrt(2e^-z-1)."""

    n: int
    b: Fraction
    c: Fraction

    @property
    def value(self) -> PiLinear:
        return PiLinear(-self.c, self.b)


def a_coeff(n: int) -> WilfCoefficient:
    """The n-th Maclaurin coefficient, split into its pi and rational parts."""
    return WilfCoefficient(n=n, b=b_seq(n), c=c_seq(n))


def pi_approx(n: int) -> Fraction:
    """The rational c_n / b_n, which converges to pi as n grows."""
    return c_seq(n) / b_seq(n)


# -- scaled integer views (handy for big n and OEIS cross-reference) ----------

def b_scaled_int(n: int) -> int:
    """4 n! b_n as an integer (raises if, impossibly, it is not one)."""
    val = 4 * math.factorial(n) * b_seq(n)
    if val.denominator != 1:
        raise ArithmeticError(f"4 {n}! b_{n} is not an integer: {val}")
    return val.numerator


def c_scaled_int(n: int) -> int:
    """2 n! c_n as an integer, defined for n >= 1."""
    if n < 1:
        raise ValueError("c_scaled_int wants n >= 1")
    val = 2 * math.factorial(n) * c_seq(n)
    if val.denominator != 1:
        raise ArithmeticError(f"2 {n}! c_{n} is not an integer: {val}")
    return val.numerator


def stirling_even_double_factorial_sum(n: int) -> Fraction:
    """(-1)^n sum_{k=1}^{n} (-1)^k S(n,k) (2k-2)!!  (a positive integer)."""
    if n < 1:
        raise ValueError("wants n >= 1")
    row = combinat.stirling2_row(n)
    total = Fraction(0)
    df = Fraction(1)  # (2k-2)!! starting at k = 1 with 0!! = 1
    for k in range(1, n + 1):
        if k >= 2:
            df *= 2 * k - 2
        total += (-1) ** k * row[k] * df
    return (-1) ** n * total


# -- expansions of arctan-type functions about z = 1 ---------------------------

def arctan_over_z_at1(n: int) -> PiLinear:
    """Coefficient of (z-1)^n in arctan(z)/z: exactly (-1)^n (pi/4 + T(n))."""
    if n < 0:
        raise ValueError("arctan_over_z_at1 wants n >= 0")
    s = (-1) ** n
    return PiLinear(s * t_seq(n), Fraction(s, 4))


def arctan_sqrt_at1(n: int) -> PiLinear:
    """Coefficient of (z-1)^n in arctan(sqrt(z))/sqrt(z).

    Computed two ways — through the kernel P(n,k) against pi/4 + T(k), and
    through the sigma binomial sum — and cross-checked on every call:

        (-1)^n/(2n)!! sum_k P(n,k) (pi/4 + T(k))
      = (-1)^n/2^n [ (2n-1)!! pi/4 + n!/2^n sum_k (-1)^k C(2n-k,n) sigma(k)/k ] / n!
    """
    if n < 0:
        raise ValueError("arctan_sqrt_at1 wants n >= 0")
    rat = Fraction(0)
    pi_part = Fraction(0)
    for k in range(n + 1):
        p = combinat.p_kernel(n, k)
        rat += p * t_seq(k)
        pi_part += Fraction(p, 4)
    scale = Fraction((-1) ** n) / double_factorial(2 * n)
    via_kernel = PiLinear(scale * rat, scale * pi_part)

    scale2 = Fraction((-1) ** n, 2 ** n * math.factorial(n))
    via_sigma = PiLinear(
        scale2 * Fraction(math.factorial(n), 2 ** n) * sigma_binomial_sum(n),
        scale2 * double_factorial(2 * n - 1) / 4,
    )
    if via_kernel != via_sigma:
        raise ArithmeticError(f"arctan_sqrt_at1({n}): the two closed forms disagree")
    return via_kernel


def gauss_2f1_special(n: int) -> PiLinear:
    """2F1(n+1/2, n+1; n+3/2; -1) exactly:

        (2n+1)!!/(2n)!! * pi/4 + (2n+1)/2^(2n) sum_k (-1)^k C(2n-k,n) sigma(k)/k.
    """
    if n < 0:
        raise ValueError("gauss_2f1_special wants n >= 0")
    pi_part = double_factorial(2 * n + 1) / double_factorial(2 * n) / 4
    rat = Fraction(2 * n + 1, 2 ** (2 * n)) * sigma_binomial_sum(n)
    return PiLinear(rat, pi_part)


def a_coeff_via_2f1(n: int) -> PiLinear:
    """a_n from the hypergeometric expansion
    (-1)^n/n! sum_k (-1)^k S(n,k) (2k)!!/(2k+1) 2F1(k+1/2, k+1; k+3/2; -1)."""
    row = combinat.stirling2_row(n)
    total = PiLinear(0, 0)
    for k in range(n + 1):
        if row[k]:
            w = Fraction((-1) ** k * row[k]) * double_factorial(2 * k) / (2 * k + 1)
            total = total + gauss_2f1_special(k) * w
    return total * Fraction((-1) ** n, math.factorial(n))


# -- Bell-polynomial specialization of the square-root derivatives ------------

def sqrt_derivative_values(count: int) -> list[Fraction]:
    """x_m = -m! * [z^m] sqrt(2e^-z - 1) for m = 1..count: 1, 0, 1, 3, 16, 105, ..."""
    return [-math.factorial(m) * sqrt_series_coeff(m) for m in range(1, count + 1)]


def bell_sqrt_special(n: int, k: int) -> Fraction:
    """B_{n,k} of the sequence above, in closed form:
    (-1)^n/k! sum_{l=k}^{n} (-1)^l S(n,l) P(l,k)."""
    if k > n or k < 0:
        raise ValueError("bell_sqrt_special wants n >= k >= 0")
    total = Fraction(0)
    for l in range(k, n + 1):
        total += (-1) ** l * combinat.stirling2(n, l) * combinat.p_kernel(l, k)
    return Fraction((-1) ** n) * total / math.factorial(k)


# -- power-series pipelines (independent of every closed form above) ----------

def wilf_inner_series(order: int) -> fps.FormalSeries:
    """2e^-z - 2: what must be composed into an expansion about 1."""
    return fps.exp_arg_series(-1, order) * 2 - 2


def sqrt_series(order: int) -> fps.FormalSeries:
    """sqrt(2e^-z - 1) through the series square root; coefficients -d_n."""
    return fps.sqrt_one_plus(wilf_inner_series(order))


def b_generating_series(order: int) -> fps.FormalSeries:
    """1/(4 sqrt(2e^-x - 1)): coefficients b_n, via the series reciprocal."""
    return fps.reciprocal(sqrt_series(order)) * Fraction(1, 4)


def wilf_series(order: int) -> fps.FormalSeries:
    """arctan(sqrt(2e^-z-1))/sqrt(2e^-z-1) by composing the expansion of
    arctan(sqrt(w))/sqrt(w) about w = 1 with 2e^-z - 2.  Pi-linear ring."""
    outer = fps.FormalSeries([arctan_sqrt_at1(k) for k in range(order + 1)])
    return fps.compose_vanishing(outer, wilf_inner_series(order))


def flat_sqrt_exp_series(order: int) -> fps.FormalSeries:
    """sqrt(e^x (2 - e^x)) = e^(x/2) sqrt(1 + (1 - e^x)): coefficients e_n."""
    u = 1 - fps.exp_arg_series(1, order)
    return fps.mul(fps.exp_arg_series(Fraction(1, 2), order), fps.sqrt_one_plus(u))


def recip_flat_sqrt_exp_series(order: int) -> fps.FormalSeries:
    """1/sqrt(e^x (2 - e^x)): coefficients (n+1) d_{n+1}."""
    return fps.reciprocal(flat_sqrt_exp_series(order))


# -- determinant routes --------------------------------------------------------

def b_via_determinant(n: int) -> Fraction:
    """b_n from one n x n determinant over the sqrt(2e^-x - 1) coefficients."""
    alphas = [sqrt_series_coeff(k) for k in range(n + 1)]
    return fps.wronski_reciprocal(alphas, n) / 4


def d_via_determinant(n: int) -> Fraction:
    """d_n from one n x n determinant over the b_k (reciprocal direction)."""
    alphas = [b_seq(k) for k in range(n + 1)]
    return -fps.wronski_reciprocal(alphas, n) / 4


def d_e_determinants(n: int) -> tuple[Fraction, Fraction]:
    """(d_{n+1}, e_n) from determinants over the e_k and the (k+1) d_{k+1}.

    sqrt(e^x(2-e^x)) and its reciprocal are each other's reciprocals, so
    each coefficient family is a determinant in the other.
    """
    from_e = fps.wronski_reciprocal([e_seq(k) for k in range(n + 1)], n) / (n + 1)
    from_d = fps.wronski_reciprocal(
        [(k + 1) * d_seq(k + 1) for k in range(n + 1)], n
    )
    return from_e, from_d


# -- identities that tie the kernels together ----------------------------------

def p_kernel_row_sum(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of sum_k P(n,k) = (2n-1)!!."""
    lhs = sum((combinat.p_kernel(n, k) for k in range(n + 1)), Fraction(0))
    return lhs, double_factorial(2 * n - 1)


def p_kernel_t_sum(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of sum_l P(n,l) T(l) = n!/2^n sum_k (-1)^k C(2n-k,n) sigma(k)/k."""
    lhs = sum((combinat.p_kernel(n, l) * t_seq(l) for l in range(n + 1)), Fraction(0))
    rhs = Fraction(math.factorial(n), 2 ** n) * sigma_binomial_sum(n)
    return lhs, rhs


def curious_binomial_sum(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of sum_l C(l, n-l) (-2)^l/l! sum_k P(l,k) = (-2)^n."""
    lhs = Fraction(0)
    for l in range(n + 1):
        coef = binomial(l, n - l)
        if coef:
            lhs += coef * Fraction((-2) ** l, math.factorial(l)) * p_kernel_row_sum(l)[0]
    return lhs, Fraction((-2) ** n)


def curious_binomial_t_sum(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of sum_l C(l, n-l) (-2)^l/l! sum_k P(l,k) T(k) = (-2)^n T(n)."""
    lhs = Fraction(0)
    for l in range(n + 1):
        coef = binomial(l, n - l)
        if coef:
            lhs += coef * Fraction((-2) ** l, math.factorial(l)) * p_kernel_t_sum(l)[0]
    return lhs, Fraction((-2) ** n) * t_seq(n)


def b_recursion_sides(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of (n+1)! b_{n+1} = 1/4 + sum_{j=1}^{n} [C(n+1,j) - 1] j! b_j."""
    if n < 0:
        raise ValueError("b_recursion_sides wants n >= 0")
    lhs = math.factorial(n + 1) * b_seq(n + 1)
    rhs = Fraction(1, 4)
    for j in range(1, n + 1):
        rhs += (binomial(n + 1, j) - 1) * math.factorial(j) * b_seq(j)
    return lhs, rhs
