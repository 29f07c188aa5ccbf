import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mpf

from poset_ramsey.errors import ParameterError
from poset_ramsey.estimate import (
    EXACT_FACTORIAL_LIMIT,
    CountingParameters,
    Verdict,
    counting_report,
    doubling_scan,
    log2_factorial_interval,
    verify_counting_estimate,
)

# The acceptance constant 4 + log2(6); log2(6) is added through log2_of.
DIAMOND_T1_C = 4


def bounds(iv):
    lo, hi = iv._mpi_
    return mpf(lo), mpf(hi)


def float_k(n, c):
    log_n = math.log2(n)
    eps = 3 * (math.log2(log_n) + math.log2(math.e) + c + 2) / log_n
    return math.floor((2 + eps) * n / log_n)


@pytest.mark.parametrize("k", [0, 1, 2, 10, 170, 1000, EXACT_FACTORIAL_LIMIT, EXACT_FACTORIAL_LIMIT + 1, 10**7])
def test_log2_factorial_brackets_lgamma(k):
    lo, hi = bounds(log2_factorial_interval(k))
    approx = math.lgamma(k + 1) / math.log(2)
    assert lo <= hi
    assert abs(float(lo) - approx) <= 1e-9 * max(1.0, approx)
    assert abs(float(hi) - approx) <= 1e-9 * max(1.0, approx)


@pytest.mark.parametrize("k", [2, 5, 20, 300])
def test_log2_factorial_contains_exact_value(k):
    f = math.factorial(k)
    lo, hi = bounds(log2_factorial_interval(k))
    # 2^lo <= k! <= 2^hi checked with integers: floor/ceil of the bracket.
    assert 2 ** int(math.floor(lo)) <= f
    assert f <= 2 ** int(math.ceil(hi))
    assert hi - lo < mpf(2) ** -60


def test_exact_and_stirling_branches_agree_across_threshold():
    lo_a, hi_a = bounds(log2_factorial_interval(EXACT_FACTORIAL_LIMIT))
    lo_b, hi_b = bounds(log2_factorial_interval(EXACT_FACTORIAL_LIMIT + 1))
    step = math.log2(EXACT_FACTORIAL_LIMIT + 1)
    assert abs(float((lo_b + hi_b) / 2 - (lo_a + hi_a) / 2) - step) < 1e-6


def test_diamond_constant():
    params = CountingParameters.for_diamond(2**20, 1)
    assert (params.c, params.log2_of) == (4, 4)
    assert verify_counting_estimate(params) is Verdict.FAILS


@pytest.mark.parametrize("c, log2_of, first", [(6, 0, 31), (4, 4, 31), (6, 6, 39), (DIAMOND_T1_C, 6, 33)])
def test_first_holding_power_of_two(c, log2_of, first):
    rows = doubling_scan(c, log2_of, 20, 50)
    assert next(e for e, v in rows if v is Verdict.HOLDS) == first


def test_fails_at_two_to_the_twenty():
    params = CountingParameters(2**20, DIAMOND_T1_C, log2_of=6)
    report = counting_report(params)
    assert report.verdict is Verdict.FAILS
    assert report.k_values == (float_k(2**20, 4 + math.log2(6)),)


def test_k_one_always_fails():
    for n in (2, 2**10, 2**40):
        assert verify_counting_estimate(CountingParameters(n, 1, k=1)) is Verdict.FAILS


def test_holds_far_out():
    assert verify_counting_estimate(CountingParameters(2**40, DIAMOND_T1_C, log2_of=6)) is Verdict.HOLDS


def test_doubling_scan_is_monotone_and_switches_once():
    rows = doubling_scan(DIAMOND_T1_C, 6, 20, 48)
    verdicts = [v for _, v in rows]
    assert Verdict.INDETERMINATE not in verdicts
    first = verdicts.index(Verdict.HOLDS)
    assert all(v is Verdict.HOLDS for v in verdicts[first:])
    # Frozen from this scan; the float recomputation below agrees.
    assert rows[first][0] == 33


@pytest.mark.parametrize("e", [20, 25, 30, 32, 33, 36, 45])
def test_verdicts_match_float_evaluation_away_from_boundary(e):
    n, c = 2**e, 4 + math.log2(6)
    k = float_k(n, c)
    margin = math.lgamma(k + 1) / math.log(2) - (c * k + 2 * (n + k))
    expected = Verdict.HOLDS if margin > 0 else Verdict.FAILS
    assert abs(margin) > 1e3
    assert verify_counting_estimate(CountingParameters(n, 4, log2_of=6)) is expected


def test_constant_forms_agree():
    a = counting_report(CountingParameters(2**30, Fraction(5, 2)))
    b = counting_report(CountingParameters(2**30, "2.5"))
    c = counting_report(CountingParameters(2**30, 2.5))
    assert a.k_values == b.k_values == c.k_values
    assert a.verdict == b.verdict == c.verdict


@pytest.mark.parametrize("kwargs", [dict(n=1, c=1), dict(n=4, c=0), dict(n=4, c=-1), dict(n=4, c=1, k=-2)])
def test_invalid_parameters(kwargs):
    with pytest.raises(ParameterError):
        counting_report(CountingParameters(**kwargs))


@given(st.integers(2, 2**50), st.integers(1, 10))
def test_k_candidates_bracket_float_value(n, c):
    ks = CountingParameters(n, c).k_candidates()
    assert len(ks) >= 1
    assert abs(ks[0] - float_k(n, c)) <= 1
