"""The end-to-end verification suite behind ``wilfseries selftest``.

Each check_* function returns a :class:`CheckResult`; :func:`run_all` runs
the whole battery.  The checks are deliberately independent of each other
and compare different computation routes (closed form vs pipeline vs
determinant vs numeric), so a single wrong formula cannot pass silently.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import mpmath as mp

from . import combinat as cb
from . import oracle as oc
from . import sequences as sq
from . import series as fps
from .exact import PiLinear, falling_factorial, sigma

DEFAULT_DIGITS = 50


@dataclass
class CheckResult:
    cid: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.cid:2d} {self.name}: {self.detail} ({self.seconds:.2f}s)"


def load_reference(path: str | None = None) -> dict:
    """The vendored reference tables; ``path`` overrides the packaged file."""
    if path is None:
        text = resources.files("wilfseries").joinpath(
            "fixtures/reference_values.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return json.loads(text)


def _result(cid, name, start, failures, ok_detail) -> CheckResult:
    elapsed = time.time() - start
    if failures:
        return CheckResult(cid, name, False, "; ".join(failures[:3]), elapsed)
    return CheckResult(cid, name, True, ok_detail, elapsed)


def check_reference_tables(reference: dict) -> CheckResult:
    """Criterion 1: b_0..b_11 and c_0..c_11 from the closed forms match the
    frozen reference table exactly, in under a second."""
    start = time.time()
    failures = []
    for n, want in enumerate(reference["b"]):
        got = sq.b_seq(n)
        if got != Fraction(want):
            failures.append(f"b_{n}: computed {got}, table says {want}")
    for n, want in enumerate(reference["c"]):
        got = sq.c_seq(n)
        if got != Fraction(want):
            failures.append(f"c_{n}: computed {got}, table says {want}")
    elapsed = time.time() - start
    if elapsed >= 1.0:
        failures.append(f"took {elapsed:.2f}s, budget is 1s")
    return _result(1, "reference-tables-b-c", start, failures,
                   "24 rational equalities, b_0..b_11 and c_0..c_11")


def check_t_values(reference: dict) -> CheckResult:
    """Criterion 2: T(0)..T(10) match, and T(4n-1) = T(4n) for n <= 15."""
    start = time.time()
    failures = []
    for n, want in enumerate(reference["t"]):
        if sq.t_seq(n) != Fraction(want):
            failures.append(f"T({n}) = {sq.t_seq(n)} != {want}")
    for n in range(1, 16):
        if sq.t_seq(4 * n - 1) != sq.t_seq(4 * n):
            failures.append(f"T({4*n-1}) != T({4*n})")
    return _result(2, "tail-sums-T", start, failures,
                   "T(0)..T(10) plus the stalls T(4n-1)=T(4n), n<=15")


def check_integer_sequences(reference: dict) -> CheckResult:
    """Criterion 3: n! d_n and n! e_n for n = 0..21 match the frozen integers."""
    start = time.time()
    failures = []
    for n, want in enumerate(reference["n_factorial_d"]):
        got = math.factorial(n) * sq.d_seq(n)
        if got != want:
            failures.append(f"{n}! d_{n} = {got} != {want}")
    for n, want in enumerate(reference["n_factorial_e"]):
        got = math.factorial(n) * sq.e_seq(n)
        if got != want:
            failures.append(f"{n}! e_{n} = {got} != {want}")
    return _result(3, "integer-sequences-d-e", start, failures,
                   "n! d_n and n! e_n for n = 0..21")


def check_identity_suites() -> CheckResult:
    """Criterion 4: the exact identity sweeps, zero tolerance."""
    start = time.time()
    failures = []

    def sweep(label, pairs):
        for args, (lhs, rhs) in pairs:
            if lhs != rhs:
                failures.append(f"{label}{args}: {lhs} != {rhs}")
                return
    sweep("lemma1", (((l, n), cb.verify_lemma1(l, n))
                     for n in range(1, 61) for l in range(0, n + 1)))
    sweep("lemma2", (((k, l), cb.verify_lemma2(k, l))
                     for k in range(26) for l in range(26)))
    sweep("p-row-sum", (((n,), sq.p_kernel_row_sum(n)) for n in range(41)))
    sweep("stirling-product", (((n, k), cb.verify_stirling_product_identity(n, k))
                               for n in range(31) for k in range(n + 1)))
    sweep("curious-O", (((n,), sq.curious_binomial_sum(n)) for n in range(31)))
    sweep("curious-T", (((n,), sq.curious_binomial_t_sum(n)) for n in range(31)))
    sweep("p-t-sum", (((n,), sq.p_kernel_t_sum(n)) for n in range(31)))
    sweep("sine-sum-1", (((n,), cb.verify_sine_sum_one(n)) for n in range(1, 41)))
    sweep("sine-sum-2", (((n,), cb.verify_sine_sum_two(n)) for n in range(1, 41)))
    sweep("cos-sin-sigma", (((k,), cb.verify_cos_sin_identity(k)) for k in range(41)))
    return _result(4, "identity-suites", start, failures,
                   "lemma sweeps, kernel sums, sine/cos identities, all exact")


def check_bell_closed_forms() -> CheckResult:
    """Criterion 5: Bell-polynomial closed forms vs the partition brute force."""
    start = time.time()
    failures = []
    for n in range(11):
        for k in range(n + 1):
            ones = [Fraction(1)] * (n - k + 1)
            if cb.bell_partial_bruteforce(n, k, ones) != cb.stirling2(n, k):
                failures.append(f"B({n},{k})(1,..) != S({n},{k})")
    for n in range(13):
        for k in range(n + 1):
            if k == 0 and n > 0:
                continue
            for alpha in (Fraction(1), Fraction(2), Fraction(-1, 2), Fraction(3, 5)):
                xs = [alpha] + [Fraction(1)] + [Fraction(0)] * (n - k - 1)
                xs = xs[: n - k + 1]
                got = cb.bell_partial_bruteforce(n, k, xs)
                coef = cb.binomial(n, k) * cb.binomial(k, n - k)
                want = (Fraction(0) if coef == 0 else
                        Fraction(math.factorial(n - k), 2 ** (n - k))
                        * coef * alpha ** (2 * k - n))
                if got != want:
                    failures.append(f"B({n},{k})(a,1,0,..) a={alpha}: {got} != {want}")
    for n in range(13):
        for k in range(n + 1):
            halves = [falling_factorial(Fraction(1, 2), i) for i in range(1, n - k + 2)]
            if cb.bell_partial_bruteforce(n, k, halves) != cb.bell_half_closed(n, k):
                failures.append(f"B({n},{k})(<1/2>_i) != closed form")
    for n in range(11):
        for k in range(n + 1):
            xs = sq.sqrt_derivative_values(n - k + 1)
            if cb.bell_partial_bruteforce(n, k, xs) != sq.bell_sqrt_special(n, k):
                failures.append(f"B({n},{k})(1,0,1,3,16,..) != closed form")
    # scaling: B(a b x_1, a b^2 x_2, ...) = a^k b^n B(x_1, x_2, ...)
    base = [Fraction(p, q) for p, q in
            ((3, 2), (-1, 3), (5, 7), (2, 1), (-4, 5), (1, 6), (7, 4),
             (-2, 9), (3, 8), (5, 2), (-1, 1))]
    for n in range(11):
        for k in range(n + 1):
            xs = base[: n - k + 1]
            plain = cb.bell_partial_bruteforce(n, k, xs)
            for a, b in ((Fraction(2), Fraction(3)), (Fraction(-1, 2), Fraction(5, 3))):
                scaled = [a * b ** (i + 1) * x for i, x in enumerate(xs)]
                if cb.bell_partial_bruteforce(n, k, scaled) != a ** k * b ** n * plain:
                    failures.append(f"scaling fails at B({n},{k}), a={a}, b={b}")
    return _result(5, "bell-closed-forms", start, failures,
                   "Stirling, (a,1,0,..), <1/2>_i, sqrt-derivative and scaling laws")


def check_pipeline_equivalence() -> CheckResult:
    """Criterion 6: closed forms == series pipelines == determinant routes."""
    start = time.time()
    failures = []
    N = 20
    ws = sq.wilf_series(N)
    bg = sq.b_generating_series(N)
    ss = sq.sqrt_series(N)
    fe = sq.flat_sqrt_exp_series(15)
    for n in range(N + 1):
        a = sq.a_coeff(n)
        if ws.coeff(n) != a.value:
            failures.append(f"a_{n}: pipeline {ws.coeff(n)} != closed {a.value}")
        if bg.coeff(n) != a.b:
            failures.append(f"b_{n}: pipeline != closed form")
        if -ws.coeff(n).rat != a.c:
            failures.append(f"c_{n}: pipeline rational part mismatch")
        if ss.coeff(n) != sq.sqrt_series_coeff(n):
            failures.append(f"sqrt coeff {n}: pipeline != closed form")
    for n in range(16):
        if fe.coeff(n) != sq.e_seq(n):
            failures.append(f"e_{n}: pipeline != closed form")
    # Wronski determinant == recurrence reciprocal on three distinct series
    probes = [sq.sqrt_series(15), sq.flat_sqrt_exp_series(15), fps.exp_arg_series(1, 15)]
    for which, s in enumerate(probes):
        rec = fps.reciprocal(s)
        for n in range(1, 16):
            det = fps.wronski_reciprocal(list(s.coeffs), n)
            if det != rec.coeff(n):
                failures.append(f"wronski != reciprocal (series {which}, n={n})")
    for n in range(1, 13):
        if sq.b_via_determinant(n) != sq.b_seq(n):
            failures.append(f"b determinant relation fails at {n}")
        if sq.d_via_determinant(n) != sq.d_seq(n):
            failures.append(f"d determinant relation fails at {n}")
        dd, ee = sq.d_e_determinants(n)
        if dd != sq.d_seq(n + 1) or ee != sq.e_seq(n):
            failures.append(f"(d,e) determinant relations fail at {n}")
    return _result(6, "pipeline-equivalence", start, failures,
                   "a,b,c,sqrt,e pipelines (n<=20), Wronski==reciprocal, 4 determinant relations")


def check_hypergeometric(digits: int = DEFAULT_DIGITS) -> CheckResult:
    """Criterion 7: 2F1(n+1/2, n+1; n+3/2; -1) exact vs Pfaff-series numeric."""
    start = time.time()
    failures = []
    if sq.gauss_2f1_special(0) != PiLinear(0, Fraction(1, 4)):
        failures.append("2F1 special value at n=0 is not pi/4 exactly")
    with mp.workdps(digits):
        tol = mp.mpf(10) ** -30
        for n in range(11):
            exact = oc._to_mpf(sq.gauss_2f1_special(n))
            numeric = oc.hyp2f1_at_minus1(n, digits)
            if abs(exact - numeric) >= tol:
                failures.append(f"2F1 at n={n}: |exact-numeric| = {abs(exact - numeric)}")
    return _result(7, "hypergeometric-special-values", start, failures,
                   "n <= 10 within 1e-30 at 50 digits; n = 0 exact")


def check_function_vs_series(digits: int = DEFAULT_DIGITS) -> CheckResult:
    """Criterion 8: the 40-term Maclaurin sums against direct evaluation.

    For W the error must be < 1e-18 (the true tail is far smaller).  For the
    c generating function a flat 1e-18 is unreachable at |x| = 0.4 — its
    coefficients grow like (1/ln2)^n, leaving a ~3e-11 tail — so that check
    uses the explicit geometric tail bound from oracle.c_tail_bound.
    """
    start = time.time()
    failures = []
    order = 40
    with mp.workdps(digits):
        for xs in ("0.2", "-0.2", "0.4", "-0.4"):
            x = mp.mpf(xs)
            err_w = abs(oc.eval_wilf(x, digits) - oc.wilf_partial_sum(x, order, digits))
            if err_w >= mp.mpf(10) ** -18:
                failures.append(f"W at x={xs}: error {err_w} >= 1e-18")
            err_c = abs(oc.eval_c_generating(x, digits) - oc.c_partial_sum(x, order, digits))
            bound = oc.c_tail_bound(x, order, digits)
            if err_c >= bound:
                failures.append(f"c-series at x={xs}: error {err_c} >= tail bound {bound}")
    return _result(8, "function-vs-series", start, failures,
                   "x in {+-0.2, +-0.4}: W within 1e-18, c-series within its tail bound")


def check_prefix_properties() -> CheckResult:
    """Criterion 9: integrality, positivity, monotonicity, log-convexity."""
    start = time.time()
    failures = []
    u = [sq.b_scaled_int(n) for n in range(62)]
    for n in range(1, 61):
        if u[n] <= 0:
            failures.append(f"4 {n}! b_{n} not positive")
        if u[n + 1] < u[n]:
            failures.append(f"4 n! b_n not increasing at {n}")
        if u[n] * u[n] > u[n - 1] * u[n + 1]:
            failures.append(f"4 n! b_n not log-convex at {n}")
    v = [None] + [sq.stirling_even_double_factorial_sum(n) for n in range(1, 62)]
    for n in range(1, 61):
        if v[n].denominator != 1 or v[n] <= 0:
            failures.append(f"even-double-factorial sum not a positive integer at {n}")
        if v[n + 1] < v[n]:
            failures.append(f"even-double-factorial sum not increasing at {n}")
        if n >= 2 and v[n] * v[n] > v[n - 1] * v[n + 1]:
            failures.append(f"even-double-factorial sum not log-convex at {n}")
    for n in range(1, 61):
        if sq.d_seq(n) < 0:
            failures.append(f"d_{n} < 0")
        if sq.c_scaled_int(n) <= 0:
            failures.append(f"2 {n}! c_{n} not a positive integer")
    for n in range(31):
        lhs, rhs = sq.b_recursion_sides(n)
        if lhs != rhs:
            failures.append(f"b recursion fails at n={n}: {lhs} != {rhs}")
    return _result(9, "prefix-properties", start, failures,
                   "integrality + positivity + log-convexity (n<=60), b recursion (n<=30)")


def check_pi_convergence(digits: int = DEFAULT_DIGITS) -> CheckResult:
    """Criterion 10: |pi - c_60/b_60| < 0.06, shrinking by n = 120, and the
    log-space asymptotic ratios in [0.8, 1.2] at 300, tightening 150 -> 600."""
    start = time.time()
    failures = []
    gap60 = oc.pi_gap(60, digits)
    gap120 = oc.pi_gap(120, digits)
    if not gap60 < mp.mpf("0.06"):
        failures.append(f"|pi - c_60/b_60| = {gap60} >= 0.06")
    if not gap120 < gap60:
        failures.append(f"gap(120) = {gap120} not below gap(60) = {gap60}")
    ratios = {}
    for name in ("b", "c"):
        for n in (150, 300, 600):
            ratios[name, n] = oc.asymptotic_trend(name, n, digits)
        r300 = ratios[name, 300]
        if not mp.mpf("0.8") < r300 < mp.mpf("1.2"):
            failures.append(f"{name} asymptotic ratio at 300 is {r300}")
        if not abs(ratios[name, 600] - 1) < abs(ratios[name, 150] - 1):
            failures.append(f"{name} ratio not tightening from 150 to 600")
    return _result(10, "pi-convergence-asymptotics", start, failures,
                   "gap(60) < 0.06 > gap(120); asymptotic ratios in [0.8, 1.2] and tightening")


DIGIT_SENSITIVE = (7, 8, 10)


def run_all(digits: int = DEFAULT_DIGITS, fixtures_path: str | None = None,
            stability_rerun: bool = True) -> list[CheckResult]:
    """Run criteria 1-10, then the runtime/precision-stability criterion 11.

    Criterion 11 reruns the digit-sensitive checks (7, 8, 10) at doubled
    precision and demands identical verdicts; the other checks are exact
    integer/rational computations that cannot depend on the digit count.
    """
    reference = load_reference(fixtures_path)
    results = [
        check_reference_tables(reference),
        check_t_values(reference),
        check_integer_sequences(reference),
        check_identity_suites(),
        check_bell_closed_forms(),
        check_pipeline_equivalence(),
        check_hypergeometric(digits),
        check_function_vs_series(digits),
        check_prefix_properties(),
        check_pi_convergence(digits),
    ]
    start = time.time()
    failures = []
    total = sum(r.seconds for r in results)
    if total >= 300:
        failures.append(f"criteria 1-10 took {total:.1f}s, budget is 300s")
    detail = f"criteria 1-10 in {total:.1f}s"
    if stability_rerun:
        rerun = {7: check_hypergeometric(2 * digits),
                 8: check_function_vs_series(2 * digits),
                 10: check_pi_convergence(2 * digits)}
        for cid, again in rerun.items():
            before = results[cid - 1].passed
            if again.passed != before:
                failures.append(
                    f"criterion {cid} verdict changed at {2*digits} digits")
        detail += f"; verdicts stable at {2*digits} digits"
    results.append(_result(11, "runtime-and-precision-stability", start, failures, detail))
    return results
