import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hahn_oscillator.specfun import (
    DomainError,
    HahnSpec,
    SeriesError,
    dual_hahn_lambda,
    hahn_Q,
    hahn_norm,
    hahn_orthonormal,
    hahn_weight,
    hermite,
    hyp2f1_arg2_terminating,
    hyp3f2_terminating,
    hyp_terminating,
    laguerre,
    log_binomial_real,
    log_pochhammer,
    pochhammer,
)


def exact_hyp(upper, lower, z):
    """Terminating pFq summed in exact rationals."""
    upper = [Fraction(a) for a in upper]
    lower = [Fraction(b) for b in lower]
    total, term, k = Fraction(0), Fraction(1), 0
    while term != 0:
        total += term
        for a in upper:
            term *= a + k
        if term == 0:
            break
        for b in lower:
            term /= b + k
        term *= Fraction(z) / (k + 1)
        k += 1
    return total


def test_pochhammer_examples():
    assert pochhammer(2.7, 0) == 1.0
    assert pochhammer(3, 2) == 12.0
    assert pochhammer(-2, 3) == 0.0
    assert math.isclose(math.exp(log_pochhammer(3, 2)), 12.0, rel_tol=1e-14)


def test_log_binomial_examples():
    b = log_binomial_real(4, 2)
    assert b.sign == 1 and math.isclose(b.log_magnitude, math.log(6), rel_tol=1e-14)
    assert log_binomial_real(0.37, 0).log_magnitude == 0.0
    assert math.isclose(log_binomial_real(2.5, 2).value, 1.875, rel_tol=1e-14)


def test_log_binomial_pole():
    with pytest.raises(DomainError):
        log_binomial_real(-3, 1)


def test_hyp3f2_trivial():
    assert hyp3f2_terminating(0, 1.3, 2.1, 0.7, -4) == 1.0
    assert hahn_Q(HahnSpec(3, 0.4, 1.2, 6), 0) == 1.0


def test_hyp3f2_exact_oracle():
    # alpha = beta = 0, N = 4: (-2, 3, -1; 1, -4)
    expected = exact_hyp([-2, 3, -1], [1, -4], 1)
    assert expected == Fraction(-1, 2)
    assert hyp3f2_terminating(-2, 3, -1, 1, -4) == -0.5


def test_hyp2f1_arg2():
    assert hyp2f1_arg2_terminating(0, 1.7, -5) == 1.0
    j, q = 4.5, 1.5
    assert math.isclose(hyp2f1_arg2_terminating(-1, -j - q, -2 * j), 1 - (j + q) / j, rel_tol=1e-15)
    expected = exact_hyp([-2, -4], [-6], 2)
    assert expected == Fraction(-1, 15)
    assert hyp2f1_arg2_terminating(-2, -4, -6) == float(expected)


def test_hyp_nonterminating_raises():
    with pytest.raises(SeriesError):
        hyp_terminating([0.5, 1.5], [2.0], 1.0)
    with pytest.raises(ValueError):
        hyp2f1_arg2_terminating(-0.5, 1.0, 2.0)


def test_hyp_matches_exact_at_large_degree():
    # Large cancelling terms: float Horner would lose all digits here.
    upper, lower = [-40, 40 + 0.5 + 1.5 + 1, -25], [1.5, -60]
    expected = exact_hyp(upper, lower, 1)
    assert math.isclose(hyp_terminating(upper, lower, 1.0), float(expected), rel_tol=1e-15)


def test_hahn_Q_examples():
    assert hahn_Q(HahnSpec(0, 0.3, 1.1, 5), 3) == 1.0
    # 1 + (-1)(2)(-1) / ((1)(-3)) = 1/3
    assert hahn_Q(HahnSpec(1, 0, 0, 3), 1) == float(exact_hyp([-1, 2, -1], [1, -3], 1)) == 1 / 3


def test_hahn_weight_examples():
    assert math.isclose(hahn_weight(0, 0, 1, 2).value, 3.0, rel_tol=1e-14)
    for x in range(6):
        assert math.isclose(hahn_weight(x, 0, 0, 5).value, 1.0, rel_tol=1e-14)
    assert math.isclose(hahn_weight(7, 1.5, 0.2, 7).value, math.exp(log_binomial_real(8.5, 7).log_magnitude), rel_tol=1e-13)


def test_hahn_norm_small_exact():
    # alpha = beta = 0, N = 1: h(0) = 2
    assert math.isclose(hahn_norm(0, 0, 0, 1).value, 2.0, rel_tol=1e-14)
    # h(n) equals sum_x w(x) Q_n(x)^2 in exact arithmetic
    for alpha, beta, N in [(0.5, 1.5, 4), (-0.5, 0.5, 6), (2.0, 0.0, 5)]:
        for n in range(N + 1):
            direct = math.fsum(
                hahn_weight(x, alpha, beta, N).value * hahn_Q(HahnSpec(n, alpha, beta, N), x) ** 2
                for x in range(N + 1)
            )
            assert math.isclose(hahn_norm(n, alpha, beta, N).value, direct, rel_tol=1e-12)


def test_hahn_norm_at_sum_minus_one():
    # alpha + beta + 1 = 0 at n = 0 must not hit log(0)
    assert math.isfinite(hahn_norm(0, -0.5, -0.5, 10).log_magnitude)


@pytest.mark.parametrize("alpha,beta,N", [(0.0, 0.0, 20), (2.5, -0.5, 60), (-0.5, 2.5, 60), (-0.3, 1.0, 5)])
def test_orthonormal_gram(alpha, beta, N):
    T = np.array([[hahn_orthonormal(HahnSpec(n, alpha, beta, N), x) for x in range(N + 1)] for n in range(N + 1)])
    assert np.max(np.abs(T @ T.T - np.eye(N + 1))) <= 1e-12


def test_hahn_spec_validation():
    with pytest.raises(ValueError):
        HahnSpec(3, -1.0, 0.0, 5)
    with pytest.raises(ValueError):
        HahnSpec(6, 0.0, 0.0, 5)


def test_dual_hahn_lambda():
    assert dual_hahn_lambda(0, 1.2, 3.4) == 0
    assert dual_hahn_lambda(1, 0, 0) == 2
    assert dual_hahn_lambda(3, 0.5, 1.5) == 18


def test_laguerre_examples():
    assert laguerre(2, 0, 1.0) == pytest.approx(-0.5, abs=1e-15)
    # L_1^(a)(t) = 1 + a - t
    assert laguerre(1, 0.7, 0.3) == pytest.approx(1.4, abs=1e-15)
    t = 1.9
    assert laguerre(3, 0, t) == pytest.approx((-t**3 + 9 * t**2 - 18 * t + 6) / 6, abs=1e-14)


def test_hermite_expansion():
    x = 0.7
    expected = 32 * x**5 - 160 * x**3 + 120 * x
    assert hermite(5, x) == pytest.approx(expected, rel=1e-14)
    assert hermite(0, x) == 1.0
    np.testing.assert_allclose(hermite(2, np.array([0.0, 1.0])), [-2.0, 2.0])


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(0, 12),
    x=st.integers(0, 12),
    alpha=st.sampled_from([-0.5, -0.25, 0.0, 0.5, 1.0, 2.5]),
    beta=st.sampled_from([-0.5, 0.0, 0.75, 1.5]),
)
def test_hahn_Q_matches_exact_sum(n, x, alpha, beta):
    N = 12
    expected = exact_hyp([-n, n + Fraction(alpha) + Fraction(beta) + 1, -x], [Fraction(alpha) + 1, -N], 1)
    got = hahn_Q(HahnSpec(n, alpha, beta, N), x)
    assert got == float(expected)


@settings(max_examples=40, deadline=None)
@given(
    n=st.integers(0, 15),
    alpha=st.floats(-0.9, 4.0),
    beta=st.floats(-0.9, 4.0),
)
def test_orthonormal_rows_unit_norm(n, alpha, beta):
    N = 15
    row = [hahn_orthonormal(HahnSpec(n, alpha, beta, N), x) for x in range(N + 1)]
    assert abs(math.fsum(v * v for v in row) - 1.0) <= 1e-12
