"""Unit and property tests for the exact scalar layer."""

import math
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wilfseries.exact import (
    PI_QUARTER,
    PiLinear,
    binomial,
    double_factorial,
    falling_factorial,
    rational_binomial,
    rising_factorial,
    sigma,
)

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=40)
pi_linears = st.builds(PiLinear, rationals, rationals)


# -- PiLinear ring structure ---------------------------------------------------

def test_pi_quarter_components():
    assert PI_QUARTER.rat == 0
    assert PI_QUARTER.pi == Fraction(1, 4)


def test_equality_and_scalars():
    assert PiLinear(Fraction(3, 2), 0) == Fraction(3, 2)
    assert PiLinear(2, 0) == 2
    assert PiLinear(2, 1) != 2
    assert PiLinear(1, 2) == PiLinear(Fraction(1), Fraction(2))


@given(pi_linears, pi_linears, pi_linears)
def test_addition_is_associative_and_commutative(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x


@given(pi_linears)
def test_additive_inverse(x):
    assert x + (-x) == PiLinear(0, 0)
    assert x - x == 0


@given(pi_linears, rationals, rationals)
def test_scalar_multiplication_distributes(x, a, b):
    assert (a + b) * x == a * x + b * x
    assert a * (b * x) == (a * b) * x


@given(pi_linears, pi_linears, rationals)
def test_scaling_distributes_over_addition(x, y, a):
    assert a * (x + y) == a * x + a * y


@given(pi_linears, rationals)
def test_division_inverts_scaling(x, a):
    if a != 0:
        assert (x * a) / a == x


def test_product_of_two_pi_linears_is_rejected():
    with pytest.raises(TypeError):
        PiLinear(1, 1) * PiLinear(1, 1)
    with pytest.raises(TypeError):
        PI_QUARTER * PI_QUARTER


@given(pi_linears)
def test_json_round_trip(x):
    assert PiLinear.from_json(x.to_json()) == x


def test_string_forms():
    assert str(PiLinear(Fraction(-1, 2), Fraction(1, 4))) == "-1/2 + 1/4*pi"
    assert str(PiLinear(0, 0)) == "0 + 0*pi"


def test_evalf_matches_components():
    x = PiLinear(Fraction(1, 2), Fraction(1, 3))
    assert x.evalf(3.0) == 0.5 + 1.0


def test_truthiness():
    assert not PiLinear(0, 0)
    assert PiLinear(1, 0)
    assert PiLinear(0, 1)


# -- factorial families --------------------------------------------------------

def test_double_factorial_small_values():
    assert [double_factorial(m) for m in range(9)] == [1, 1, 2, 3, 8, 15, 48, 105, 384]
    assert double_factorial(0) == 1
    assert double_factorial(-1) == 1


def test_double_factorial_negative_odd_extension():
    assert double_factorial(-3) == -1
    assert double_factorial(-5) == Fraction(1, 3)
    assert double_factorial(-7) == Fraction(-1, 15)


def test_double_factorial_negative_even_rejected():
    with pytest.raises(ValueError):
        double_factorial(-2)
    with pytest.raises(ValueError):
        double_factorial(-8)


@given(st.integers(min_value=1, max_value=200))
def test_double_factorial_pairing(m):
    assert double_factorial(m) * double_factorial(m - 1) == math.factorial(m)


@given(st.integers(min_value=1, max_value=60))
def test_negative_odd_reflection(k):
    assert double_factorial(-(2 * k + 1)) == Fraction((-1) ** k) / double_factorial(2 * k - 1)


@given(st.integers(min_value=0, max_value=40), st.integers(min_value=-5, max_value=45))
def test_binomial_matches_math_comb(n, k):
    if 0 <= k <= n:
        assert binomial(n, k) == math.comb(n, k)
    else:
        assert binomial(n, k) == 0


def test_binomial_rejects_negative_upper():
    with pytest.raises(ValueError):
        binomial(-1, 0)


@given(rationals, st.integers(min_value=0, max_value=12))
def test_falling_rising_reflection(x, n):
    assert falling_factorial(x, n) == (-1) ** n * rising_factorial(-x, n)


@given(st.integers(min_value=0, max_value=30), st.integers(min_value=0, max_value=30))
def test_rational_binomial_agrees_on_integers(n, l):
    assert rational_binomial(n, l) == binomial(n, l)


def test_rational_binomial_half():
    assert rational_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert rational_binomial(Fraction(-1, 2), 3) == Fraction(-5, 16)


# -- sigma ----------------------------------------------------------------------

def test_sigma_base_values():
    assert [sigma(k) for k in range(9)] == [0, 1, -2, 2, 0, -4, 8, -8, 0]


@given(st.integers(min_value=0, max_value=200))
def test_sigma_recurrence(k):
    assert sigma(k + 4) == -4 * sigma(k)


@given(st.integers(min_value=0, max_value=60))
def test_sigma_is_the_sine_expression(k):
    with mp.workdps(30):
        val = mp.mpf(2) ** (mp.mpf(k) / 2) * mp.sin(3 * k * mp.pi / 4)
        assert abs(val - sigma(k)) < mp.mpf(10) ** -15


def test_sigma_rejects_negative():
    with pytest.raises(ValueError):
        sigma(-1)
