"""Command-line front end: sequence export, identity sweeps, pi tables, selftest.

Exit codes: 0 success, 1 a verification failed, 2 usage error.  Output is
deterministic byte-for-byte for fixed flags; exact values print in canonical
``Fraction`` form and decimals are rendered at the requested digit count.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import mpmath as mp

from . import combinat as cb
from . import oracle as oc
from . import selftest as st
from . import sequences as sq
from .exact import PiLinear, binomial, double_factorial, falling_factorial
from .series import FormalSeries

SEQ_NAMES = ("a", "b", "c", "d", "e", "T", "pi-approx", "2f1")
SERIES_NAMES = ("wilf", "sqrt", "b-gf", "c-gf", "d-gf", "e-gf")
SUITE_NAMES = ("lemma1", "lemma2", "bell", "inversion", "determinants",
               "pipeline", "prefix-properties", "all")

_SEQ_FUNCS = {
    "a": lambda n: sq.a_coeff(n).value,
    "b": sq.b_seq,
    "c": sq.c_seq,
    "d": sq.d_seq,
    "e": sq.e_seq,
    "T": sq.t_seq,
    "pi-approx": sq.pi_approx,
    "2f1": sq.gauss_2f1_special,
}


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _format_rows(rows: list[tuple[int, object]], fmt: str) -> str:
    """Render (index, exact value) rows; values are Fraction or PiLinear."""
    pi_valued = any(isinstance(v, PiLinear) for _, v in rows)
    if fmt == "json":
        payload = [{"n": n, "value": v.to_json() if isinstance(v, PiLinear) else str(v)}
                   for n, v in rows]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if pi_valued:
            writer.writerow(["n", "rat_numerator", "rat_denominator",
                             "pi_numerator", "pi_denominator"])
            for n, v in rows:
                v = v if isinstance(v, PiLinear) else PiLinear(v, 0)
                writer.writerow([n, v.rat.numerator, v.rat.denominator,
                                 v.pi.numerator, v.pi.denominator])
        else:
            writer.writerow(["n", "numerator", "denominator"])
            for n, v in rows:
                writer.writerow([n, v.numerator, v.denominator])
        return buf.getvalue()
    lines = [f"{n}\t{v}" for n, v in rows]
    return "\n".join(lines) + "\n"


def run_seq(name: str, lo: int, hi: int, fmt: str, out_path: str | None) -> int:
    rows = [(n, _SEQ_FUNCS[name](n)) for n in range(lo, hi + 1)]
    _emit(_format_rows(rows, fmt), out_path)
    return 0


def run_series(name: str, order: int, fmt: str, out_path: str | None) -> int:
    if name == "wilf":
        series = sq.wilf_series(order)
    elif name == "sqrt":
        series = sq.sqrt_series(order)
    elif name == "b-gf":
        series = sq.b_generating_series(order)
    elif name == "c-gf":
        series = FormalSeries([sq.c_seq(n) for n in range(order + 1)])
    elif name == "d-gf":
        series = FormalSeries([sq.d_seq(n) for n in range(order + 1)])
    else:
        series = sq.flat_sqrt_exp_series(order)
    if fmt == "json":
        _emit(json.dumps(series.to_json(), indent=2) + "\n", out_path)
    else:
        rows = [(n, series.coeff(n)) for n in range(order + 1)]
        _emit(_format_rows(rows, fmt), out_path)
    return 0


# --- identity sweeps ---------------------------------------------------------
#
# Each suite is a generator of (label, lhs, rhs) triples; the runner reports
# one line per identity family and stops at the first exact mismatch.

def _suite_lemma1(bound: int):
    for n in range(1, bound + 1):
        for l in range(0, n + 1):
            yield f"lemma1(l={l}, n={n})", *cb.verify_lemma1(l, n)


def _suite_lemma2(bound: int):
    for k in range(bound + 1):
        for l in range(bound + 1):
            yield f"lemma2(k={k}, l={l})", *cb.verify_lemma2(k, l)


def _suite_bell(bound: int):
    for n in range(bound + 1):
        for k in range(n + 1):
            ones = [Fraction(1)] * (n - k + 1)
            yield (f"bell-stirling({n},{k})",
                   cb.bell_partial_bruteforce(n, k, ones), cb.stirling2(n, k))
            halves = [falling_factorial(Fraction(1, 2), i)
                      for i in range(1, n - k + 2)]
            yield (f"bell-half({n},{k})",
                   cb.bell_partial_bruteforce(n, k, halves), cb.bell_half_closed(n, k))
            xs = sq.sqrt_derivative_values(n - k + 1)
            yield (f"bell-sqrt({n},{k})",
                   cb.bell_partial_bruteforce(n, k, xs), sq.bell_sqrt_special(n, k))


def _suite_inversion(bound: int):
    # the pair S_k = (-1)^k C(2k-1, k), s_k = (-1)^k 2^(k-1) satisfies the
    # forward relation (the first sine sum in disguise), so the inverse
    # relation must hold as well
    big = [Fraction((-1) ** k * binomial(2 * k - 1, k)) for k in range(1, bound + 1)]
    small = [Fraction((-1) ** k * 2 ** (k - 1)) for k in range(1, bound + 1)]
    for n in range(1, bound + 1):
        yield (f"inversion-forward(n={n})",
               *cb.check_inversion_forward(small, big, n))
        yield (f"inversion-inverse(n={n})",
               *cb.verify_inversion_pair(small, big, n))


def _suite_determinants(bound: int):
    for n in range(1, bound + 1):
        yield f"b-determinant(n={n})", sq.b_via_determinant(n), sq.b_seq(n)
        yield f"d-determinant(n={n})", sq.d_via_determinant(n), sq.d_seq(n)
        dd, ee = sq.d_e_determinants(n)
        yield f"d-shift-determinant(n={n})", dd, sq.d_seq(n + 1)
        yield f"e-determinant(n={n})", ee, sq.e_seq(n)


def _suite_pipeline(bound: int):
    ws = sq.wilf_series(bound)
    bg = sq.b_generating_series(bound)
    ss = sq.sqrt_series(bound)
    fe = sq.flat_sqrt_exp_series(min(bound, 15))
    for n in range(bound + 1):
        yield f"wilf-pipeline(n={n})", ws.coeff(n), sq.a_coeff(n).value
        yield f"b-pipeline(n={n})", bg.coeff(n), sq.b_seq(n)
        yield f"sqrt-pipeline(n={n})", ss.coeff(n), sq.sqrt_series_coeff(n)
        yield f"2f1-route(n={n})", sq.a_coeff_via_2f1(n), sq.a_coeff(n).value
    for n in range(fe.order + 1):
        yield f"e-pipeline(n={n})", fe.coeff(n), sq.e_seq(n)


def _suite_prefix_properties(bound: int):
    u = [sq.b_scaled_int(n) for n in range(bound + 2)]
    for n in range(1, bound + 1):
        yield f"b-scaled-positive(n={n}, u_n={u[n]})", u[n] > 0, True
        yield f"b-scaled-increasing(n={n})", u[n + 1] >= u[n], True
        yield (f"b-scaled-log-convex(n={n})",
               u[n] * u[n] <= u[n - 1] * u[n + 1], True)
        yield f"c-scaled-integer(n={n})", sq.c_scaled_int(n) > 0, True
        yield f"d-nonnegative(n={n}, d_n={sq.d_seq(n)})", sq.d_seq(n) >= 0, True
    for n in range(1, min(bound, 30) + 1):
        yield f"b-recursion(n={n})", *sq.b_recursion_sides(n)


_SUITES = {
    "lemma1": (_suite_lemma1, 60),
    "lemma2": (_suite_lemma2, 25),
    "bell": (_suite_bell, 10),
    "inversion": (_suite_inversion, 30),
    "determinants": (_suite_determinants, 12),
    "pipeline": (_suite_pipeline, 20),
    "prefix-properties": (_suite_prefix_properties, 60),
}


def run_verify(suite: str, bound: int | None, out_path: str | None) -> int:
    names = list(_SUITES) if suite == "all" else [suite]
    lines = []
    failed = False
    for name in names:
        gen, default_bound = _SUITES[name]
        b = default_bound if bound is None else bound
        count = 0
        counterexample = None
        try:
            for label, lhs, rhs in gen(b):
                count += 1
                if lhs != rhs:
                    counterexample = (label, lhs, rhs)
                    break
        except ArithmeticError as exc:
            counterexample = (f"{name} sweep", "error", exc)
        if counterexample is None:
            lines.append(f"PASS {name} (bound {b}): {count} identities hold exactly")
        else:
            failed = True
            label, lhs, rhs = counterexample
            lines.append(f"FAIL {name} (bound {b}): {label}: {lhs} != {rhs}")
    _emit("\n".join(lines) + "\n", out_path)
    return 1 if failed else 0


def run_pi(n_max: int, digits: int, fmt: str, out_path: str | None) -> int:
    rows = []
    with mp.workdps(digits):
        for n in range(n_max + 1):
            ratio = sq.pi_approx(n)
            decimal = mp.nstr(mp.mpf(ratio.numerator) / ratio.denominator,
                              digits, strip_zeros=False)
            gap_value = +mp.pi if n == 0 else oc.pi_gap(n, digits)
            rows.append((n, ratio, decimal, mp.nstr(gap_value, 10)))
    if fmt == "json":
        payload = [{"n": n, "ratio": str(r), "decimal": d, "gap": g}
                   for n, r, d, g in rows]
        text = json.dumps(payload, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "ratio_numerator", "ratio_denominator",
                         "decimal", "gap"])
        for n, r, d, g in rows:
            writer.writerow([n, r.numerator, r.denominator, d, g])
        text = buf.getvalue()
    else:
        text = "\n".join(f"{n}\t{r}\t{d}\t{g}" for n, r, d, g in rows) + "\n"
    _emit(text, out_path)
    return 0


def run_selftest(digits: int, fixtures_path: str | None,
                 out_path: str | None) -> int:
    results = st.run_all(digits=digits, fixtures_path=fixtures_path)
    lines = [r.line() for r in results]
    bad = [r.name for r in results if not r.passed]
    if bad:
        lines.append("SELFTEST FAIL: " + ", ".join(bad))
    else:
        lines.append(f"SELFTEST PASS: {len(results)} criteria")
    _emit("\n".join(lines) + "\n", out_path)
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wilfseries",
        description="Exact Maclaurin data for arctan(sqrt(2e^-z - 1))/sqrt(2e^-z - 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", help="print a coefficient sequence over an index range")
    p_seq.add_argument("name", choices=SEQ_NAMES)
    p_seq.add_argument("lo", type=int)
    p_seq.add_argument("hi", type=int)
    p_seq.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p_seq.add_argument("--out", metavar="PATH")

    p_ser = sub.add_parser("series", help="print a truncated generating series")
    p_ser.add_argument("name", choices=SERIES_NAMES)
    p_ser.add_argument("order", type=int)
    p_ser.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p_ser.add_argument("--out", metavar="PATH")

    p_ver = sub.add_parser("verify", help="sweep an identity suite exactly")
    p_ver.add_argument("suite", choices=SUITE_NAMES)
    p_ver.add_argument("--bound", type=int, metavar="N")
    p_ver.add_argument("--out", metavar="PATH")

    p_pi = sub.add_parser("pi", help="table of rational approximations c_n/b_n to pi")
    p_pi.add_argument("n", type=int)
    p_pi.add_argument("--digits", type=int, default=oc.DEFAULT_DIGITS)
    p_pi.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p_pi.add_argument("--out", metavar="PATH")

    p_self = sub.add_parser("selftest", help="run the full verification battery")
    p_self.add_argument("--digits", type=int, default=oc.DEFAULT_DIGITS)
    p_self.add_argument("--fixtures", metavar="PATH",
                        help="override the packaged reference tables")
    p_self.add_argument("--out", metavar="PATH")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "seq":
        if args.lo < 0 or args.hi < args.lo:
            parser.error("need 0 <= lo <= hi")
        return run_seq(args.name, args.lo, args.hi, args.format, args.out)
    if args.command == "series":
        if args.order < 0:
            parser.error("order must be nonnegative")
        return run_series(args.name, args.order, args.format, args.out)
    if args.command == "verify":
        if args.bound is not None and args.bound < 1:
            parser.error("--bound must be positive")
        return run_verify(args.suite, args.bound, args.out)
    if args.command == "pi":
        if args.n < 0:
            parser.error("n must be nonnegative")
        return run_pi(args.n, args.digits, args.format, args.out)
    return run_selftest(args.digits, args.fixtures, args.out)


if __name__ == "__main__":
    sys.exit(main())
