"""Stirling numbers, partition-indexed Bell polynomials, and the binomial
identities connecting them.

The verify_* functions never assert anything themselves; each returns the two
sides of its identity exactly, so a caller (test suite or CLI) can compare
them and show a counterexample verbatim when one exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import series as fps
from .exact import (
    _as_fraction,
    binomial,
    double_factorial,
    rational_binomial,
    sigma,
)


class SequenceTable:
    """Append-only memo table: a key may be set once, re-reads are free.

    Rejecting conflicting overwrites turns any cache corruption into a loud
    failure instead of silently wrong mathematics.
    """

    def __init__(self, name: str):
        self.name = name
        self._values: dict = {}

    def __contains__(self, key):
        return key in self._values

    def get(self, key):
        return self._values[key]

    def put(self, key, value):
        old = self._values.setdefault(key, value)
        if old != value:
            raise ValueError(f"table {self.name!r}: conflicting values for {key!r}")
        return old

    def __len__(self):
        return len(self._values)


# -- Stirling numbers ---------------------------------------------------------

# Rows of the second-kind triangle S(n, k).  Rows up to _ROW_CACHE_LIMIT stay
# cached; beyond that they are streamed without being stored, so asking for a
# single huge row does not pin hundreds of megabytes.
_s2_rows: list[list[int]] = [[1]]
_ROW_CACHE_LIMIT = 260


def stirling2_row(n: int) -> list[int]:
    """Row n of the second-kind Stirling triangle, S(n, 0..n)."""
    if n < 0:
        raise ValueError("stirling2_row wants n >= 0")
    if n < len(_s2_rows):
        return _s2_rows[n]
    row = _s2_rows[-1]
    for m in range(len(_s2_rows), n + 1):
        nxt = [0] * (m + 1)
        for k in range(1, m):
            nxt[k] = k * row[k] + row[k - 1]
        nxt[m] = 1
        if m <= _ROW_CACHE_LIMIT:
            _s2_rows.append(nxt)
        row = nxt
    return row


def stirling2(n: int, k: int) -> int:
    """S(n, k), the number of partitions of an n-set into k blocks.

    Computed by the triangle recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1).
    """
    if n < 0:
        raise ValueError("stirling2 wants n >= 0")
    if k < 0 or k > n:
        return 0
    return stirling2_row(n)[k]


def stirling2_explicit(n: int, k: int) -> int:
    """S(n, k) by the alternating binomial sum (with 0^0 = 1).

    An independent route to the same numbers as :func:`stirling2`; the two
    must agree everywhere.
    """
    if n < 0:
        raise ValueError("stirling2_explicit wants n >= 0")
    if k < 0 or k > n:
        return 0
    total = 0
    for l in range(k + 1):
        total += (-1) ** (k - l) * math.comb(k, l) * l ** n
    q, r = divmod(total, math.factorial(k))
    if r:
        raise ArithmeticError("alternating Stirling sum not divisible by k!")
    return q


_s1_rows: list[list[int]] = [[1]]


def stirling1_signed(n: int, k: int) -> int:
    """Signed first-kind Stirling number s(n, k).

    Triangle recurrence s(n+1, k) = s(n, k-1) - n s(n, k); these are the
    coefficients of the falling factorial, <z>_n = sum_k s(n,k) z^k.
    """
    if n < 0:
        raise ValueError("stirling1_signed wants n >= 0")
    if k < 0 or k > n:
        return 0
    while len(_s1_rows) <= n:
        m = len(_s1_rows)  # building row m from row m-1
        prev = _s1_rows[m - 1]
        nxt = [0] * (m + 1)
        for j in range(m + 1):
            up = prev[j - 1] if 1 <= j <= m else 0
            same = prev[j] if j <= m - 1 else 0
            nxt[j] = up - (m - 1) * same
        _s1_rows.append(nxt)
    return _s1_rows[n][k]


# -- partition-indexed Bell polynomials ---------------------------------------

@dataclass(frozen=True)
class PartitionMultiSet:
    """A partition of n into k parts, stored as (part, multiplicity) pairs."""

    multiplicities: tuple[tuple[int, int], ...]

    @property
    def weight(self) -> int:
        return sum(part * count for part, count in self.multiplicities)

    @property
    def block_count(self) -> int:
        return sum(count for _, count in self.multiplicities)


def partition_multisets(n: int, k: int) -> Iterator[PartitionMultiSet]:
    """All partitions of weight n with exactly k parts, parts at most n-k+1."""
    if n < 0 or k < 0:
        raise ValueError("partition_multisets wants n, k >= 0")
    max_part = n - k + 1

    def rec(part: int, blocks: int, weight: int, acc: list):
        if part == 0:
            if blocks == 0 and weight == 0:
                yield PartitionMultiSet(tuple(acc))
            return
        top = min(blocks, weight // part)
        for count in range(top + 1):
            if count:
                acc.append((part, count))
            yield from rec(part - 1, blocks - count, weight - count * part, acc)
            if count:
                acc.pop()

    if max_part >= 1:
        yield from rec(max_part, k, n, [])
    elif n == 0 and k == 0:
        yield PartitionMultiSet(())


def bell_partial_bruteforce(n: int, k: int, xs: Sequence) -> Fraction:
    """Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}) by direct
    summation over partitions:

        sum over (l_1, ..., l_{n-k+1}) with sum l_i = k, sum i*l_i = n of
        n! / prod(l_i!) * prod((x_i / i!)^{l_i}).
    """
    if k > n:
        raise ValueError("bell polynomial wants n >= k")
    if len(xs) != n - k + 1 and not (n == k == 0 and len(xs) == 0):
        raise ValueError(f"expected {n - k + 1} arguments, got {len(xs)}")
    xs = [_as_fraction(x) for x in xs]
    n_fact = math.factorial(n)
    total = Fraction(0)
    for pms in partition_multisets(n, k):
        term = Fraction(n_fact)
        for part, count in pms.multiplicities:
            term /= math.factorial(count)
            term *= (xs[part - 1] / math.factorial(part)) ** count
        total += term
    return total


def bell_partial_via_series(n: int, k: int, xs: Sequence) -> Fraction:
    """The same B_{n,k} read off a power series: n! [t^n] (sum x_m t^m/m!)^k / k!.

    Completely independent of the partition enumeration above.
    """
    if k > n:
        raise ValueError("bell polynomial wants n >= k")
    if len(xs) != n - k + 1 and not (n == k == 0 and len(xs) == 0):
        raise ValueError(f"expected {n - k + 1} arguments, got {len(xs)}")
    if n == 0:
        return Fraction(1)
    inner = [Fraction(0)] + [
        _as_fraction(x) / math.factorial(m + 1) for m, x in enumerate(xs)
    ]
    f = fps.FormalSeries(inner, order=n)
    outer = [Fraction(0)] * (n + 1)
    outer[k] = Fraction(1, math.factorial(k))
    powered = fps.compose_vanishing(fps.FormalSeries(outer), f)
    return powered.coeff(n) * math.factorial(n)


def bell_half_closed(n: int, k: int) -> Fraction:
    """B_{n,k} at x_i = <1/2>_i in closed form:

        (-1)^(n+k) [2(n-k)-1]!! / 2^n * C(2n-k-1, 2(n-k)).
    """
    if k > n or k < 0:
        raise ValueError("bell_half_closed wants n >= k >= 0")
    if n == k:
        core = Fraction(1)
    else:
        core = Fraction(binomial(2 * n - k - 1, 2 * (n - k)))
    return (
        (-1) ** (n + k)
        * double_factorial(2 * (n - k) - 1)
        / Fraction(2 ** n)
        * core
    )


def p_kernel(n: int, k: int) -> Fraction:
    """P(n, k) = k! [2(n-k)-1]!! C(2n-k-1, 2(n-k)); integer for n >= k >= 0."""
    if k > n or k < 0:
        raise ValueError("p_kernel wants n >= k >= 0")
    if n == k:
        return Fraction(math.factorial(n))
    return (
        math.factorial(k)
        * double_factorial(2 * (n - k) - 1)
        * binomial(2 * n - k - 1, 2 * (n - k))
    )


# -- identity checkers ---------------------------------------------------------

def verify_lemma1(l: int, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of  sum_{k=l}^{n} C(2n-k-1, n-1) 2^k k = C(2n-l, n) 2^l n.

    l may be negative (the powers of two become fractions).  For l > n the
    sum is empty; both sides are reported as computed.
    """
    if n < 1:
        raise ValueError("verify_lemma1 wants n >= 1")
    two = Fraction(2)
    lhs = Fraction(0)
    for k in range(l, n + 1):
        lhs += binomial(2 * n - k - 1, n - 1) * two ** k * k
    upper = 2 * n - l
    rhs_binom = binomial(upper, n) if upper >= 0 else 0
    rhs = rhs_binom * two ** l * n
    return lhs, rhs


def verify_lemma2(k: int, l: int) -> tuple[Fraction, Fraction]:
    """Both sides of  sum_{m=0}^{k} (-1)^m C(k,m) C(m/2, l)
    = 0 for k > l, and (-1)^l P(l, k) / (2l)!! for l >= k."""
    if k < 0 or l < 0:
        raise ValueError("verify_lemma2 wants k, l >= 0")
    lhs = Fraction(0)
    for m in range(k + 1):
        lhs += (-1) ** m * binomial(k, m) * rational_binomial(Fraction(m, 2), l)
    if k > l:
        rhs = Fraction(0)
    else:
        rhs = (-1) ** l * p_kernel(l, k) / double_factorial(2 * l)
    return lhs, rhs


def verify_cos_sin_identity(k: int) -> tuple[Fraction, Fraction]:
    """Both sides of  sum_{l=0}^{k} (-2)^l C(l, k-l) = sigma(k+1)."""
    if k < 0:
        raise ValueError("verify_cos_sin_identity wants k >= 0")
    lhs = sum(Fraction((-2) ** l * binomial(l, k - l)) for l in range(k + 1))
    return lhs, Fraction(sigma(k + 1))


def verify_stirling_product_identity(n: int, k: int) -> tuple[Fraction, Fraction]:
    """Both sides of

        sum_{m=k}^{n} s(n,m) (1/2)^m S(m,k)
            = (-1)^(n+k) [2(n-k)-1]!! / 2^n * C(2n-k-1, 2(n-k)).
    """
    if n < k or k < 0:
        raise ValueError("wants n >= k >= 0")
    half = Fraction(1, 2)
    lhs = Fraction(0)
    for m in range(k, n + 1):
        lhs += stirling1_signed(n, m) * half ** m * stirling2(m, k)
    return lhs, bell_half_closed(n, k)


def verify_inversion_pair(
    s_seq: Sequence, S_seq: Sequence, n: int
) -> tuple[Fraction, Fraction]:
    """The inverse half of the binomial inversion pair.

    Given sequences with s_m = sum_k C(k, m-k) S_k for every m (the caller's
    responsibility — check_inversion_forward below reports that side), this
    returns both sides of the inverted relation at index n:

        (-1)^n n S_n  =  sum_{k=1}^{n} C(2n-k-1, n-1) (-1)^k k s_k.

    ``s_seq[i-1]``/``S_seq[i-1]`` hold the values at index i.
    """
    if n < 1:
        raise ValueError("verify_inversion_pair wants n >= 1")
    if len(s_seq) < n or len(S_seq) < n:
        raise ValueError("need sequence values up to index n")
    lhs = (-1) ** n * n * _as_fraction(S_seq[n - 1])
    rhs = Fraction(0)
    for k in range(1, n + 1):
        rhs += binomial(2 * n - k - 1, n - 1) * (-1) ** k * k * _as_fraction(s_seq[k - 1])
    return lhs, rhs


def verify_sine_sum_one(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of  sum_{k=1}^{n} (-1)^k C(k, n-k) C(2k-1, k) = (-1)^n 2^(n-1)."""
    if n < 1:
        raise ValueError("verify_sine_sum_one wants n >= 1")
    lhs = Fraction(0)
    for k in range(1, n + 1):
        lhs += (-1) ** k * binomial(k, n - k) * binomial(2 * k - 1, k)
    return lhs, Fraction((-1) ** n * 2 ** (n - 1))


def verify_sine_sum_two(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of  sum_{k=1}^{n} (-1)^k C(2n-k-1, n-1) k sigma(k+1) = 2^n n."""
    if n < 1:
        raise ValueError("verify_sine_sum_two wants n >= 1")
    lhs = Fraction(0)
    for k in range(1, n + 1):
        lhs += (-1) ** k * binomial(2 * n - k - 1, n - 1) * k * sigma(k + 1)
    return lhs, Fraction(2 ** n * n)


def check_inversion_forward(
    s_seq: Sequence, S_seq: Sequence, n: int
) -> tuple[Fraction, Fraction]:
    """Both sides of the forward relation s_n = sum_k C(k, n-k) S_k."""
    if n < 1:
        raise ValueError("check_inversion_forward wants n >= 1")
    lhs = _as_fraction(s_seq[n - 1])
    rhs = Fraction(0)
    for k in range(1, n + 1):
        rhs += binomial(k, n - k) * _as_fraction(S_seq[k - 1])
    return lhs, rhs
