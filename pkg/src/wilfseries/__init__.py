"""Exact Maclaurin coefficients of W(z) = arctan(sqrt(2e^-z - 1))/sqrt(2e^-z - 1).

Every coefficient is b_n*pi - c_n with b_n, c_n explicit nonnegative
rationals, and c_n/b_n converges to pi.  The package computes the closed
forms, the companion integer sequences, the combinatorial identities behind
them, and high-precision numeric cross-checks.
"""

from .exact import PI_QUARTER, PiLinear, Rational, binomial, double_factorial, sigma
from .sequences import (
    WilfCoefficient,
    a_coeff,
    b_seq,
    c_seq,
    d_seq,
    e_seq,
    gauss_2f1_special,
    pi_approx,
    t_seq,
)

__all__ = [
    "PI_QUARTER",
    "PiLinear",
    "Rational",
    "WilfCoefficient",
    "a_coeff",
    "b_seq",
    "binomial",
    "c_seq",
    "d_seq",
    "double_factorial",
    "e_seq",
    "gauss_2f1_special",
    "pi_approx",
    "sigma",
    "t_seq",
]

__version__ = "0.1.0"
