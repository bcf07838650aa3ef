"""Tests for the numeric cross-check layer.

Every tolerance here is either an explicit truncation bound (computed in the
test from the first omitted term) or a frozen regression value measured by
the exact machinery itself; there are no bare epsilons chosen by feel.
"""

import math
from fractions import Fraction

import mpmath as mp
import pytest

from wilfseries import oracle as oc
from wilfseries import sequences as sq


def test_eval_wilf_at_zero_is_quarter_pi():
    with mp.workdps(50):
        assert abs(oc.eval_wilf(0) - mp.pi / 4) < mp.mpf(10) ** -48


def test_eval_c_generating_at_zero_vanishes():
    with mp.workdps(50):
        assert abs(oc.eval_c_generating(0)) < mp.mpf(10) ** -48


def test_domain_is_open_log2_interval():
    for bad in ("0.7", "-0.7", "0.6931472"):
        with pytest.raises(ValueError):
            oc.eval_wilf(mp.mpf(bad))
        with pytest.raises(ValueError):
            oc.eval_c_generating(mp.mpf(bad))
    oc.eval_wilf(mp.mpf("0.69"))  # still inside


def test_pi_times_b_series_minus_wilf_is_c_series():
    # the three generating functions satisfy pi*G - W = C pointwise
    with mp.workdps(50):
        for xs in ("0.1", "-0.3", "0.5"):
            x = mp.mpf(xs)
            u = mp.sqrt(2 * mp.exp(-x) - 1)
            g = 1 / (4 * u)
            lhs = mp.pi * g - oc.eval_wilf(x)
            assert abs(lhs - oc.eval_c_generating(x)) < mp.mpf(10) ** -45


def test_arctanh_variant_coincides_on_real_axis():
    # atanh(sqrt(1-2e^-z))/sqrt(1-2e^-z), taken through complex arithmetic,
    # collapses to the same real function on (-ln2, ln2)
    with mp.workdps(50):
        for xs in ("0.3", "-0.3", "0.55", "-0.6", "0.05"):
            x = mp.mpf(xs)
            w = mp.sqrt(mp.mpc(1 - 2 * mp.exp(-x)))
            val = mp.atanh(w) / w
            assert abs(mp.im(val)) < mp.mpf(10) ** -45
            assert abs(mp.re(val) - oc.eval_wilf(x)) < mp.mpf(10) ** -45


# -- partial sums and tail bounds ------------------------------------------------

def test_wilf_partial_sum_error_is_tiny_inside_radius():
    with mp.workdps(50):
        for xs in ("0.2", "-0.2", "0.4", "-0.4"):
            x = mp.mpf(xs)
            err = abs(oc.eval_wilf(x) - oc.wilf_partial_sum(x, 40))
            assert err < mp.mpf(10) ** -18


def test_c_partial_sum_error_within_tail_bound():
    with mp.workdps(50):
        for xs in ("0.2", "-0.2", "0.4", "-0.4"):
            x = mp.mpf(xs)
            err = abs(oc.eval_c_generating(x) - oc.c_partial_sum(x, 40))
            assert err < oc.c_tail_bound(x, 40)


def test_c_tail_bound_rejects_points_outside_radius():
    with pytest.raises(ValueError):
        oc.c_tail_bound(mp.mpf("0.8"), 40)


# -- hypergeometric values ---------------------------------------------------------

def test_hyp2f1_matches_exact_closed_form():
    with mp.workdps(50):
        for n in range(11):
            exact = oc._to_mpf(sq.gauss_2f1_special(n))
            assert abs(exact - oc.hyp2f1_at_minus1(n)) < mp.mpf(10) ** -30


def test_hyp2f1_at_zero_is_quarter_pi():
    with mp.workdps(50):
        assert abs(oc.hyp2f1_at_minus1(0) - mp.pi / 4) < mp.mpf(10) ** -45


def test_hyp2f1_rejects_negative_n():
    with pytest.raises(ValueError):
        oc.hyp2f1_at_minus1(-1)


# -- pi series representations ------------------------------------------------------

def test_pi_series_limit_t():
    with mp.workdps(80):
        err200 = abs(oc.pi_series("limit-T", 200, 80) - mp.pi)
        err400 = abs(oc.pi_series("limit-T", 400, 80) - mp.pi)
        assert err200 < mp.mpf(10) ** -30  # measured 1.6e-32
        assert err400 < err200


def test_pi_series_sqrt3_arctanh_form():
    with mp.workdps(50):
        err40 = abs(oc.pi_series("sqrt3-arctanh-form", 40) - mp.pi)
        err80 = abs(oc.pi_series("sqrt3-arctanh-form", 80) - mp.pi)
        assert err40 < mp.mpf(10) ** -4  # measured 2.7e-5
        assert err80 < err40


def test_pi_series_sqrt3_binom_form():
    with mp.workdps(50):
        err40 = abs(oc.pi_series("sqrt3-binom-form", 40) - mp.pi)
        err80 = abs(oc.pi_series("sqrt3-binom-form", 80) - mp.pi)
        assert err40 < mp.mpf(10) ** -6  # measured 8.5e-8
        assert err80 < err40


def test_pi_series_2f1_is_precision_bound():
    # this route is exact up to the numeric 2F1 factor, so the error tracks
    # the working precision rather than the term count
    with mp.workdps(50):
        err = abs(oc.pi_series("pi-2F1", 10) - mp.pi)
        assert err < mp.mpf(10) ** -45


def test_pi_series_input_validation():
    with pytest.raises(ValueError):
        oc.pi_series("no-such-series", 10)
    with pytest.raises(ValueError):
        oc.pi_series("limit-T", 0)


# -- infinite-series representations of b, d, e ---------------------------------------

def _rep_tail_bound(seq_name: str, n: int, terms: int):
    """Four times the first omitted term: the summands decay faster than a
    ratio-0.6 geometric for j >= terms >= 40, so this caps the whole tail."""
    j = terms
    dfr = mp.mpf(math.factorial(2 * j + 1)) / (
        mp.mpf(2) ** (2 * j) * math.factorial(j) ** 2)  # (2j+1)!!/(2j)!!
    jph = mp.mpf(2 * j + 1) / 2
    if seq_name == "b":
        term = jph ** (n - 1) * dfr / mp.mpf(2) ** (j + mp.mpf(7) / 2)
    elif seq_name == "d":
        term = (jph - 1) ** (n - 1) / jph * dfr / mp.mpf(2) ** (j + mp.mpf(3) / 2)
    else:
        term = (jph ** (n - 1) / (jph - 1)) * dfr / mp.mpf(2) ** (j + mp.mpf(3) / 2)
    return 4 * term / math.factorial(n)


def test_series_representations_of_b_d_e():
    with mp.workdps(60):
        for n in range(9):
            got = oc.series_representation_check("b", n, 60)
            assert abs(got - oc._to_mpf(sq.b_seq(n))) < _rep_tail_bound("b", n, 60)
        for n in range(1, 9):
            got = oc.series_representation_check("d", n, 60)
            assert abs(got - oc._to_mpf(sq.d_seq(n))) < _rep_tail_bound("d", n, 60)
            got = oc.series_representation_check("e", n, 60)
            assert abs(got - oc._to_mpf(sq.e_seq(n))) < _rep_tail_bound("e", n, 60)


def test_series_representation_spot_examples():
    with mp.workdps(50):
        assert abs(oc.series_representation_check("b", 0, 60) - mp.mpf(1) / 4) < mp.mpf(2) ** -50
        assert abs(oc.series_representation_check("d", 1, 60) - 1) < mp.mpf(2) ** -50
        assert abs(oc.series_representation_check("e", 2, 60) + mp.mpf(1) / 2) < mp.mpf(2) ** -50


def test_series_representation_input_validation():
    with pytest.raises(ValueError):
        oc.series_representation_check("a", 1, 10)
    with pytest.raises(ValueError):
        oc.series_representation_check("d", 0, 10)
    with pytest.raises(ValueError):
        oc.series_representation_check("e", 0, 10)


# -- asymptotics and the pi gap ---------------------------------------------------------

def test_asymptotic_trend_regression_values():
    # frozen from the exact computation; the asymptote has no error term,
    # so the windows are deliberately loose (1e-6 on a ~1.000x ratio)
    with mp.workdps(50):
        assert abs(oc.asymptotic_trend("b", 300) - mp.mpf("1.00015041607")) < 1e-6
        assert abs(oc.asymptotic_trend("c", 300) - mp.mpf("1.00181636897")) < 1e-6


def test_asymptotic_trend_tightens():
    with mp.workdps(50):
        for name in ("b", "c"):
            r150 = oc.asymptotic_trend(name, 150)
            r300 = oc.asymptotic_trend(name, 300)
            r600 = oc.asymptotic_trend(name, 600)
            assert mp.mpf("0.8") < r300 < mp.mpf("1.2")
            assert abs(r600 - 1) < abs(r300 - 1) < abs(r150 - 1)


def test_asymptotic_trend_input_validation():
    with pytest.raises(ValueError):
        oc.asymptotic_trend("b", 49)
    with pytest.raises(ValueError):
        oc.asymptotic_trend("T", 100)


def test_pi_gap_regression_values():
    with mp.workdps(50):
        assert abs(oc.pi_gap(1) - (mp.pi - 2)) < mp.mpf(10) ** -45
        g60 = oc.pi_gap(60)
        assert mp.mpf(-58) < mp.log10(g60) < mp.mpf(-56)  # measured 1.92e-57
        g120 = oc.pi_gap(120)
        assert mp.log10(g120) < mp.mpf(-113)  # measured 5.25e-115


def test_pi_gap_halving_trend():
    with mp.workdps(50):
        for n in (20, 40, 80):
            assert oc.pi_gap(2 * n) < oc.pi_gap(n)


def test_pi_gap_rejects_zero():
    with pytest.raises(ValueError):
        oc.pi_gap(0)
