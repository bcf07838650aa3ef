"""Tests for Stirling numbers, Bell polynomials, and the identity checkers.

Wherever a closed form is under test, the reference value comes from an
independent route: direct set-partition enumeration for Stirling numbers,
partition sums vs series extraction for Bell polynomials, and classical
closed forms (S(n,2), Lah numbers) that are easy to state separately.
"""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wilfseries import combinat as cb
from wilfseries.exact import binomial, double_factorial, falling_factorial

small_rationals = st.fractions(
    min_value=Fraction(-6), max_value=Fraction(6), max_denominator=8)


# -- an independent oracle: enumerate set partitions directly -------------------

def _set_partitions(elements):
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for partial in _set_partitions(rest):
        for i in range(len(partial)):
            yield partial[:i] + [partial[i] + [first]] + partial[i + 1:]
        yield partial + [[first]]


def _count_partitions_into(n: int, k: int) -> int:
    return sum(1 for p in _set_partitions(list(range(n))) if len(p) == k)


def test_stirling2_against_set_partition_enumeration():
    for n in range(8):
        for k in range(n + 2):
            assert cb.stirling2(n, k) == _count_partitions_into(n, k)


def test_stirling2_known_spot_values():
    assert cb.stirling2(4, 2) == 7
    assert cb.stirling2(5, 3) == 25
    assert cb.stirling2(0, 0) == 1
    assert cb.stirling2(6, 1) == 1


@given(st.integers(min_value=0, max_value=90), st.integers(min_value=-2, max_value=92))
def test_stirling2_explicit_agrees_with_recurrence(n, k):
    assert cb.stirling2_explicit(n, k) == cb.stirling2(n, k)


def test_stirling2_row_streaming_beyond_cache():
    # these rows exceed the internal cache limit, exercising the streamed path
    n = 300
    row = cb.stirling2_row(n)
    assert row[1] == 1
    assert row[2] == 2 ** (n - 1) - 1
    assert row[n - 1] == binomial(n, 2)
    assert row[n] == 1
    # and the streamed row must match the recurrence applied to a cached row
    assert cb.stirling2(n, 3) == (3 ** (n - 1) - 2 ** n + 1) // 2


@given(st.integers(min_value=0, max_value=25), st.integers(min_value=0, max_value=25))
def test_stirling_triangles_are_inverse(n, k):
    total = sum(cb.stirling1_signed(n, m) * cb.stirling2(m, k) for m in range(n + 1))
    assert total == (1 if n == k else 0)


@given(small_rationals, st.integers(min_value=0, max_value=12))
def test_stirling1_expands_falling_factorial(z, n):
    expansion = sum(cb.stirling1_signed(n, k) * z ** k for k in range(n + 1))
    assert expansion == falling_factorial(z, n)


# -- partition multisets ---------------------------------------------------------

def _partition_count(n: int, k: int) -> int:
    """Number of partitions of n into exactly k parts, by the standard
    recurrence p(n, k) = p(n-1, k-1) + p(n-k, k)."""
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0:
        return 0
    return _partition_count(n - 1, k - 1) + _partition_count(n - k, k)


@given(st.integers(min_value=0, max_value=14), st.integers(min_value=0, max_value=14))
def test_partition_multisets_counts_and_invariants(n, k):
    seen = set()
    for pms in cb.partition_multisets(n, k):
        assert pms.weight == n
        assert pms.block_count == k
        assert all(1 <= part <= n - k + 1 for part, _ in pms.multiplicities)
        assert pms not in seen
        seen.add(pms)
    assert len(seen) == _partition_count(n, k)


# -- Bell polynomials -------------------------------------------------------------

@given(st.data(), st.integers(min_value=0, max_value=9))
def test_bell_bruteforce_agrees_with_series_extraction(data, n):
    k = data.draw(st.integers(min_value=0, max_value=n))
    xs = data.draw(st.lists(small_rationals, min_size=n - k + 1, max_size=n - k + 1))
    if n == 0:
        xs = xs[:1]
    assert cb.bell_partial_bruteforce(n, k, xs) == cb.bell_partial_via_series(n, k, xs)


def test_bell_at_ones_is_stirling2():
    for n in range(9):
        for k in range(n + 1):
            ones = [Fraction(1)] * (n - k + 1)
            assert cb.bell_partial_bruteforce(n, k, ones) == cb.stirling2(n, k)


def test_bell_at_factorials_is_lah():
    # B_{n,k}(1!, 2!, 3!, ...) = C(n-1, k-1) n!/k!, the Lah numbers
    for n in range(1, 10):
        for k in range(1, n + 1):
            xs = [Fraction(math.factorial(i)) for i in range(1, n - k + 2)]
            want = Fraction(binomial(n - 1, k - 1) * math.factorial(n), math.factorial(k))
            assert cb.bell_partial_bruteforce(n, k, xs) == want


@given(st.integers(min_value=0, max_value=11))
def test_bell_half_closed_matches_bruteforce(n):
    for k in range(n + 1):
        halves = [falling_factorial(Fraction(1, 2), i) for i in range(1, n - k + 2)]
        assert cb.bell_partial_bruteforce(n, k, halves) == cb.bell_half_closed(n, k)


def test_bell_domain_errors():
    with pytest.raises(ValueError):
        cb.bell_partial_bruteforce(2, 3, [])
    with pytest.raises(ValueError):
        cb.bell_partial_bruteforce(4, 2, [1, 2])  # wrong argument count
    with pytest.raises(ValueError):
        cb.bell_partial_via_series(1, 2, [])


# -- the P kernel ------------------------------------------------------------------

def test_p_kernel_spot_values():
    assert cb.p_kernel(1, 1) == 1
    assert cb.p_kernel(2, 1) == 1
    assert cb.p_kernel(3, 1) == 3
    assert cb.p_kernel(4, 4) == 24


@given(st.integers(min_value=0, max_value=30))
def test_p_kernel_diagonal_and_integrality(n):
    assert cb.p_kernel(n, n) == math.factorial(n)
    for k in range(n + 1):
        assert cb.p_kernel(n, k).denominator == 1


def test_p_kernel_rejects_bad_indices():
    with pytest.raises(ValueError):
        cb.p_kernel(2, 3)
    with pytest.raises(ValueError):
        cb.p_kernel(2, -1)


# -- identity checkers ---------------------------------------------------------------

@given(st.integers(min_value=1, max_value=50), st.integers(min_value=-10, max_value=50))
def test_lemma1_two_binomial_sum(n, l):
    if l > n:
        return
    lhs, rhs = cb.verify_lemma1(l, n)
    assert lhs == rhs


def test_lemma1_negative_shift_is_exact():
    # negative l brings fractional powers of two into the sum; the identity
    # still holds exactly in Fraction arithmetic
    for l, n in ((-3, 4), (-1, 1), (-7, 5)):
        lhs, rhs = cb.verify_lemma1(l, n)
        assert lhs == rhs


@given(st.integers(min_value=0, max_value=20), st.integers(min_value=0, max_value=20))
def test_lemma2_half_binomial_sum(k, l):
    lhs, rhs = cb.verify_lemma2(k, l)
    assert lhs == rhs


def test_lemma2_vanishing_region():
    for k in range(3, 10):
        for l in range(k):
            lhs, rhs = cb.verify_lemma2(k, l)
            assert lhs == 0 and rhs == 0


@given(st.integers(min_value=0, max_value=60))
def test_cos_sin_combination_equals_sigma(k):
    lhs, rhs = cb.verify_cos_sin_identity(k)
    assert lhs == rhs


@given(st.integers(min_value=0, max_value=24))
def test_stirling_product_identity(n):
    for k in range(n + 1):
        lhs, rhs = cb.verify_stirling_product_identity(n, k)
        assert lhs == rhs


@given(st.integers(min_value=1, max_value=35))
def test_sine_sums(n):
    lhs, rhs = cb.verify_sine_sum_one(n)
    assert lhs == rhs
    lhs, rhs = cb.verify_sine_sum_two(n)
    assert lhs == rhs


@settings(max_examples=40)
@given(st.lists(small_rationals, min_size=1, max_size=12))
def test_inversion_pair_for_arbitrary_sequences(big):
    """The binomial inversion is a theorem about *any* pair of sequences
    linked by the forward relation, so test it on random ones."""
    m = len(big)
    small = [
        sum(binomial(k, n - k) * big[k - 1] for k in range(1, n + 1))
        for n in range(1, m + 1)
    ]
    for n in range(1, m + 1):
        lhs, rhs = cb.check_inversion_forward(small, big, n)
        assert lhs == rhs
        lhs, rhs = cb.verify_inversion_pair(small, big, n)
        assert lhs == rhs


# -- the append-only memo table --------------------------------------------------------

def test_sequence_table_rejects_conflicts():
    table = cb.SequenceTable("demo")
    table.put(3, Fraction(1, 2))
    assert table.put(3, Fraction(1, 2)) == Fraction(1, 2)
    assert 3 in table and len(table) == 1
    with pytest.raises(ValueError):
        table.put(3, Fraction(1, 3))
