import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flseq.bounds import (
    OddM,
    ZeroDenominator,
    antipodal_code_bound,
    bound_report,
    kerdock_params,
    odd_factorial,
    sidelnikov_estimate,
    simplified_bound,
    welch_bound,
)


def test_welch_examples():
    assert welch_bound(4, 1) == 0
    assert welch_bound(4, 2) == pytest.approx(4 / math.sqrt(7), abs=1e-12)
    assert welch_bound(4, 2) == pytest.approx(1.511858, abs=1e-6)
    assert welch_bound(6, 120) == pytest.approx(2.441, abs=1e-3)


@given(st.integers(1, 200), st.integers(1, 500))
def test_welch_monotone_and_below_N(N, M):
    w = welch_bound(N, M)
    assert 0 <= w <= N
    assert welch_bound(N, M + 1) >= w


def test_odd_factorial():
    assert [odd_factorial(u) for u in range(5)] == [1, 1, 3, 15, 105]


def test_sidelnikov_examples():
    assert sidelnikov_estimate(7, 1, "binary") == 14
    assert sidelnikov_estimate(7, 1, "nonbinary") == 7
    assert sidelnikov_estimate(10, 2, "binary") == Fraction(140, 3)
    assert float(sidelnikov_estimate(10, 2, "binary")) == pytest.approx(46.667, abs=1e-3)
    assert sidelnikov_estimate(10, 2, "nonbinary") == Fraction(25)
    with pytest.raises(ValueError):
        sidelnikov_estimate(10, 0, "binary")
    with pytest.raises(ValueError):
        sidelnikov_estimate(10, 1, "quaternary")


def test_simplified_examples():
    assert simplified_bound(8, "binary") == 4
    assert simplified_bound(9, "nonbinary") == 3
    assert simplified_bound(4, "binary") == pytest.approx(2 * math.sqrt(2))


@pytest.mark.parametrize("N", range(1, 65))
def test_u1_consistency(N):
    assert sidelnikov_estimate(N, 1, "binary") == 2 * N
    assert sidelnikov_estimate(N, 1, "nonbinary") == N
    assert simplified_bound(N, "binary") ** 2 == pytest.approx(2 * N, rel=1e-12)
    assert simplified_bound(N, "nonbinary") ** 2 == pytest.approx(N, rel=1e-12)


def test_antipodal_examples():
    b = antipodal_code_bound(16, 6)
    assert b.fraction == Fraction(7680, 30) == 256
    assert antipodal_code_bound(64, 28).fraction == 4096
    assert antipodal_code_bound(4, 2).fraction == Fraction(64, 5)
    assert antipodal_code_bound(4, 2).value == 12.8


def test_antipodal_zero_denominator():
    # n = 1, d = 0: 3 - 1 - 2 = 0
    with pytest.raises(ZeroDenominator):
        antipodal_code_bound(1, 0)


def test_kerdock_examples():
    k = kerdock_params(4)
    assert (k.n, k.d, k.size) == (16, 6, 256)
    k = kerdock_params(6)
    assert (k.n, k.d, k.size) == (64, 28, 4096)
    k = kerdock_params(2)
    assert (k.n, k.d, k.size) == (4, 1, 16)
    with pytest.raises(OddM):
        kerdock_params(3)


@pytest.mark.parametrize("m", [2, 4, 6, 8, 10])
def test_kerdock_meets_antipodal_bound(m):
    k = kerdock_params(m)
    assert antipodal_code_bound(k.n, k.d).fraction == k.size


def test_bound_report():
    r = bound_report(6, 36)
    assert r.u == pytest.approx(2.0)
    assert r.u_int == 2
    assert r.welch == welch_bound(6, 36)
    assert r.sidelnikov_sq_binary == pytest.approx(6 * (5 - 1 / 3))
    assert r.simplified_nonbinary == pytest.approx(math.sqrt(6))
    doc = r.to_json()
    assert doc["N"] == 6 and "note" in doc
