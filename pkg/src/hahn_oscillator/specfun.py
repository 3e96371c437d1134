"""Scalar special-function kernels.

Pochhammer symbols, generalized binomials in log space, terminating
hypergeometric series, Hahn polynomials with their weight and squared norm,
and the Laguerre and Hermite polynomials used by the continuous
wavefunctions.

Terminating series are summed exactly. Every floating-point parameter is
a dyadic rational, so the series is evaluated in nested (Horner) form over
Python integers and divided once at the end; the returned float is the
correctly rounded value of the series at the given parameters. Alternating
Hahn sums cancel by hundreds of orders of magnitude for N near 60, which
rules out any floating-point accumulation scheme at the 1e-12 level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.special import gammaln, gammasgn

__all__ = [
    "DomainError",
    "SeriesError",
    "LogWeight",
    "HahnSpec",
    "pochhammer",
    "log_pochhammer",
    "log_binomial_real",
    "terminating_length",
    "hyp_terminating",
    "hyp3f2_terminating",
    "hyp2f1_arg2_terminating",
    "hyp1f1_terminating",
    "hahn_Q",
    "hahn_weight",
    "hahn_norm",
    "log_hahn_norm",
    "hahn_orthonormal",
    "laguerre",
    "hermite",
    "dual_hahn_lambda",
]


class DomainError(ValueError):
    """Raised when an argument falls outside a function's domain."""


class SeriesError(ValueError):
    """Raised for hypergeometric series that do not terminate or hit a pole."""


@dataclass(frozen=True)
class LogWeight:
    """A real number stored as ``sign * exp(log_magnitude)``."""

    log_magnitude: float
    sign: int = 1

    @property
    def value(self) -> float:
        return self.sign * math.exp(self.log_magnitude)

    def __mul__(self, other: "LogWeight") -> "LogWeight":
        return LogWeight(self.log_magnitude + other.log_magnitude, self.sign * other.sign)

    def __truediv__(self, other: "LogWeight") -> "LogWeight":
        return LogWeight(self.log_magnitude - other.log_magnitude, self.sign * other.sign)


@dataclass(frozen=True)
class HahnSpec:
    """Degree and parameters of a Hahn polynomial Q_n(x; alpha, beta, N)."""

    n: int
    alpha: float
    beta: float
    N: int

    def __post_init__(self):
        if self.N < 0 or not 0 <= self.n <= self.N:
            raise DomainError(f"need 0 <= n <= N, got n={self.n}, N={self.N}")
        if not (self.alpha > -1 and self.beta > -1):
            raise DomainError(
                f"need alpha > -1 and beta > -1, got alpha={self.alpha}, beta={self.beta}"
            )


def _is_nonpositive_integer(a: float) -> bool:
    return a <= 0 and float(a).is_integer()


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise DomainError(f"Pochhammer index must be nonnegative, got {k}")
    result = 1.0
    for i in range(k):
        result *= a + i
    return result


def log_pochhammer(a: float, k: float) -> float:
    """log (a)_k = log Gamma(a+k) - log Gamma(a) for a > 0 and a + k > 0.

    ``k`` may be real; the limit relations evaluate Hahn norms at
    non-integer degree.
    """
    if not (a > 0 and a + k > 0):
        raise DomainError(f"log_pochhammer needs a > 0 and a + k > 0, got a={a}, k={k}")
    return float(gammaln(a + k) - gammaln(a))


def log_binomial_real(top: float, k: int) -> LogWeight:
    """Generalized binomial Gamma(top+1) / (Gamma(k+1) Gamma(top-k+1)) in log space.

    Valid whenever none of the three Gamma arguments is a nonpositive
    integer, except that a nonnegative integer ``top`` with ``top < k``
    gives zero and is rejected as well (zero has no log). For the Hahn
    weights every argument is positive, so the sign is +1.
    """
    if k < 0:
        raise DomainError(f"binomial index must be nonnegative, got {k}")
    args = (top + 1.0, k + 1.0, top - k + 1.0)
    for g in args:
        if _is_nonpositive_integer(g):
            raise DomainError(f"binomial({top}, {k}) has a Gamma pole at argument {g}")
    log_mag = gammaln(args[0]) - gammaln(args[1]) - gammaln(args[2])
    sign = gammasgn(args[0]) * gammasgn(args[1]) * gammasgn(args[2])
    return LogWeight(float(log_mag), int(sign))


def terminating_length(upper: Sequence[float]) -> int:
    """Index of the last nonzero term: the smallest -a over nonpositive-integer uppers."""
    stops = [int(-a) for a in upper if _is_nonpositive_integer(a)]
    if not stops:
        raise SeriesError(f"series with upper parameters {tuple(upper)} does not terminate")
    return min(stops)


def hyp_terminating(upper: Sequence[float], lower: Sequence[float], z: float) -> float:
    """Terminating pFq(upper; lower; z), summed exactly.

    Sums exactly ``terminating_length(upper) + 1`` terms. Each term is
    obtained from the previous one through the term ratio
    prod(a+k) z / (prod(b+k) (k+1)); the chain is evaluated innermost-first
    in integer arithmetic over a common power-of-two denominator.
    """
    last = terminating_length(upper)
    for b in lower:
        if _is_nonpositive_integer(b) and int(-b) < last:
            raise SeriesError(
                f"lower parameter {b} produces a pole before the series terminates at k={last}"
            )
    if last == 0:
        return 1.0

    ratios = [float(v).as_integer_ratio() for v in (*upper, *lower, z)]
    denom = max(d for _, d in ratios)  # all powers of two
    ints = [n * (denom // d) for n, d in ratios]
    p, q = len(upper), len(lower)
    ups, lows, zi = ints[:p], ints[p : p + q], ints[-1]
    # (k + a) = (k*D + A) / D; the leftover powers of D collect into one factor.
    excess = q - p - 1
    num_scale = denom**excess if excess > 0 else 1
    den_scale = denom ** (-excess) if excess < 0 else 1

    num, den = 1, 1
    for k in range(last, 0, -1):
        shift = (k - 1) * denom
        r_num = zi * num_scale
        for a in ups:
            r_num *= shift + a
        r_den = k * den_scale
        for b in lows:
            r_den *= shift + b
        num, den = r_den * den + r_num * num, r_den * den
    return num / den


def hyp3f2_terminating(a1: float, a2: float, a3: float, b1: float, b2: float) -> float:
    """Terminating 3F2(a1, a2, a3; b1, b2; 1)."""
    return hyp_terminating((a1, a2, a3), (b1, b2), 1.0)


def hyp2f1_arg2_terminating(a1: float, a2: float, b: float) -> float:
    """Terminating 2F1(a1, a2; b; 2), the symmetric Krawtchouk building block."""
    if not _is_nonpositive_integer(a1):
        raise SeriesError(f"first upper parameter must be a nonpositive integer, got {a1}")
    return hyp_terminating((a1, a2), (b,), 2.0)


def hyp1f1_terminating(n: int, b: float, z: float) -> float:
    """Terminating 1F1(-n; b; z)."""
    return hyp_terminating((-float(n),), (b,), z)


def hahn_Q(spec: HahnSpec, x: int) -> float:
    """Hahn polynomial Q_n(x; alpha, beta, N) = 3F2(-n, n+alpha+beta+1, -x; alpha+1, -N; 1)."""
    if not 0 <= x <= spec.N:
        raise DomainError(f"x must lie in 0..{spec.N}, got {x}")
    n, a, b = spec.n, spec.alpha, spec.beta
    return hyp3f2_terminating(-n, n + a + b + 1, -x, a + 1, -spec.N)


def _log_weight(x: int, alpha: float, beta: float, N: int) -> float:
    return log_binomial_real(alpha + x, x).log_magnitude + log_binomial_real(
        N + beta - x, N - x
    ).log_magnitude


def hahn_weight(x: int, alpha: float, beta: float, N: int) -> LogWeight:
    """Weight w(x) = binom(alpha+x, x) binom(N+beta-x, N-x) in log space."""
    if not 0 <= x <= N:
        raise DomainError(f"x must lie in 0..{N}, got {x}")
    if not (alpha > -1 and beta > -1):
        raise DomainError(f"need alpha, beta > -1, got {alpha}, {beta}")
    return LogWeight(_log_weight(x, alpha, beta, N))


def log_hahn_norm(n: float, alpha: float, beta: float, N: int) -> float:
    """log h(n; alpha, beta, N) with the Gamma-ratio continuation to real n.

    Requires every Gamma argument to be positive; integer n in 0..N always
    qualifies.
    """
    # (n+a+b+1)_{N+1} / (2n+a+b+1) equals (a+b+2)_N at n = 0; this form
    # stays finite when a + b + 1 <= 0.
    s = alpha + beta + 1
    if n == 0:
        lead = log_pochhammer(s + 1, N)
    else:
        lead = log_pochhammer(n + s, N + 1) - math.log(2 * n + s)
    return (
        lead
        + log_pochhammer(beta + 1, n)
        + float(gammaln(n + 1))
        - log_pochhammer(alpha + 1, n)
        - log_pochhammer(N - n + 1, n)
        - float(gammaln(N + 1))
    )


def hahn_norm(n: int, alpha: float, beta: float, N: int) -> LogWeight:
    """Squared norm h(n; alpha, beta, N) in log space.

    Pochhammer symbols are rewritten as Gamma ratios; h overflows a double
    near N = 65 when evaluated as a plain product.
    """
    if not 0 <= n <= N:
        raise DomainError(f"n must lie in 0..{N}, got {n}")
    if not (alpha > -1 and beta > -1):
        raise DomainError(f"need alpha, beta > -1, got {alpha}, {beta}")
    return LogWeight(log_hahn_norm(n, alpha, beta, N))


def hahn_orthonormal(spec: HahnSpec, x: int) -> float:
    """Orthonormal Hahn function sqrt(w(x)) Q_n(x) / sqrt(h(n))."""
    log_scale = 0.5 * (
        _log_weight(x, spec.alpha, spec.beta, spec.N)
        - log_hahn_norm(spec.n, spec.alpha, spec.beta, spec.N)
    )
    return math.exp(log_scale) * hahn_Q(spec, x)


def laguerre(n: int, a: float, t: float) -> float:
    """Generalized Laguerre polynomial L_n^(a)(t) = (a+1)_n / n! * 1F1(-n; a+1; t)."""
    if not a > -1:
        raise DomainError(f"Laguerre parameter must exceed -1, got {a}")
    coeff = 1.0
    for i in range(1, n + 1):
        coeff *= (a + i) / i
    return coeff * hyp1f1_terminating(n, a + 1, t)


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n(x) by the three-term recurrence.

    Accepts scalars or numpy arrays.
    """
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev if prev.ndim else float(prev)
    cur = 2.0 * x
    for k in range(1, n):
        prev, cur = cur, 2.0 * x * cur - 2.0 * k * prev
    return cur if cur.ndim else float(cur)


def dual_hahn_lambda(n: float, alpha: float, beta: float) -> float:
    """Dual Hahn lattice variable lambda(n) = n (n + alpha + beta + 1)."""
    return n * (n + alpha + beta + 1)
