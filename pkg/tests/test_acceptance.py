"""The acceptance gate: every top-level verification criterion, one test each.

The battery itself lives in wilfseries.selftest (the CLI ``selftest``
subcommand runs the same code).  Each test here prints its criterion's
PASS/FAIL line and asserts the verdict, so ``pytest -v`` shows one line per
criterion and a failure pinpoints exactly which guarantee broke.
"""

import pytest

from wilfseries import selftest as st


@pytest.fixture(scope="module")
def battery():
    results = st.run_all(digits=50)
    return {r.cid: r for r in results}


def _check(battery, cid):
    result = battery[cid]
    print(result.line())
    assert result.passed, result.line()


def test_criterion_01_reference_tables_b_c(battery):
    _check(battery, 1)


def test_criterion_02_tail_sums_t(battery):
    _check(battery, 2)


def test_criterion_03_integer_sequences_d_e(battery):
    _check(battery, 3)


def test_criterion_04_identity_suites(battery):
    _check(battery, 4)


def test_criterion_05_bell_closed_forms(battery):
    _check(battery, 5)


def test_criterion_06_pipeline_equivalence(battery):
    _check(battery, 6)


def test_criterion_07_hypergeometric_special_values(battery):
    _check(battery, 7)


def test_criterion_08_function_vs_series(battery):
    _check(battery, 8)


def test_criterion_09_prefix_properties(battery):
    _check(battery, 9)


def test_criterion_10_pi_convergence_asymptotics(battery):
    _check(battery, 10)


def test_criterion_11_runtime_and_precision_stability(battery):
    _check(battery, 11)
