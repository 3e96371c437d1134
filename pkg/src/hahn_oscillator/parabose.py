"""Parabose (Wigner) oscillator: truncated ladder operators and wavefunctions.

The osp(1|2) representation with label ``a > 0`` lives on l^2(Z+). Here it
is truncated to the first ``trunc`` basis vectors. Truncation breaks the
ladder identities on the last rows, so every operator identity is checked
on the interior block of indices ``< trunc - 2`` only.

At ``x = 0`` the factor ``|x|^(a-1/2)`` makes even-level wavefunctions
vanish for ``a > 1/2``, stay finite for ``a = 1/2`` and diverge for
``a < 1/2``; the last case returns a signed infinity. Odd levels carry
``x |x|^(a-1/2) = sign(x) |x|^(a+1/2)`` and are 0 at the origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate
from scipy.special import gammaln

from .specfun import hermite, laguerre

__all__ = [
    "ParaboseParams",
    "build_bplus",
    "build_bminus",
    "anticommutator",
    "verify_osp12",
    "interior_energies",
    "build_position_explicit",
    "jacobi_action_check",
    "recurrence_coefficients",
    "psi",
    "psi_array",
    "hermite_function",
    "psi_gram_matrix",
]


@dataclass(frozen=True)
class ParaboseParams:
    a: float
    trunc: int = 200

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"a must be positive, got {self.a}")
        if self.trunc < 2:
            raise ValueError(f"trunc must be at least 2, got {self.trunc}")

    @property
    def interior(self) -> int:
        """Size of the block on which identities are exact."""
        return self.trunc - 2


def _creation_entries(p: ParaboseParams) -> np.ndarray:
    # b+ |2n> = sqrt(2(n+a)) |2n+1>,  b+ |2n+1> = sqrt(2(n+1)) |2n+2>
    i = np.arange(p.trunc - 1)
    return np.where(i % 2 == 0, np.sqrt(i + 2 * p.a), np.sqrt(i + 1.0))


def build_bplus(p: ParaboseParams) -> np.ndarray:
    return np.diag(_creation_entries(p), -1).astype(complex)


def build_bminus(p: ParaboseParams) -> np.ndarray:
    # b- |2n> = sqrt(2n) |2n-1>,  b- |2n+1> = sqrt(2(n+a)) |2n>
    col = np.arange(1, p.trunc)
    vals = np.where(col % 2 == 0, np.sqrt(col.astype(float)), np.sqrt(col - 1 + 2 * p.a))
    return np.diag(vals, 1).astype(complex)


def anticommutator(p: ParaboseParams) -> np.ndarray:
    bp, bm = build_bplus(p), build_bminus(p)
    return bm @ bp + bp @ bm


def verify_osp12(p: ParaboseParams, interior_only: bool = True) -> dict[str, float]:
    """Residuals of [{b-,b+}, b+] - 2b+ and [{b-,b+}, b-] + 2b-.

    Each residual is the Frobenius norm divided by the size of the checked
    block, the same scaling as the u(2)_alpha relation checks: entries grow
    like the truncation size and so does their roundoff. With
    ``interior_only`` (the default) the residual matrices are cut to the
    leading ``trunc - 2`` block.
    """
    bp, bm = build_bplus(p), build_bminus(p)
    K = bm @ bp + bp @ bm
    res_p = K @ bp - bp @ K - 2 * bp
    res_m = K @ bm - bm @ K + 2 * bm
    k = p.interior if interior_only else p.trunc
    return {
        "bplus": float(np.linalg.norm(res_p[:k, :k])) / k,
        "bminus": float(np.linalg.norm(res_m[:k, :k])) / k,
    }


def interior_energies(p: ParaboseParams) -> np.ndarray:
    """Diagonal of H = {b-, b+}/2 on the interior block; equals n + a."""
    return 0.5 * np.diag(anticommutator(p)).real[: p.interior]


def build_position_explicit(p: ParaboseParams) -> np.ndarray:
    """Position operator written directly from its action on |2n> and |2n+1>."""
    q = np.zeros((p.trunc, p.trunc))
    for col in range(p.trunc):
        n, odd = divmod(col, 2)
        if odd:
            down, up = math.sqrt(2 * (n + p.a)), math.sqrt(2 * (n + 1))
        else:
            down, up = math.sqrt(2 * n), math.sqrt(2 * (n + p.a))
        if col > 0:
            q[col - 1, col] = down / math.sqrt(2)
        if col + 1 < p.trunc:
            q[col + 1, col] = up / math.sqrt(2)
    return q


def jacobi_action_check(p: ParaboseParams) -> float:
    """Max entrywise gap between (b+ + b-)/sqrt(2) and the explicit Jacobi matrix."""
    from_ladders = (build_bplus(p) + build_bminus(p)).real / math.sqrt(2)
    return float(np.max(np.abs(from_ladders - build_position_explicit(p))))


def recurrence_coefficients(a: float, count: int) -> np.ndarray:
    """c_n with x Psi_n = c_{n-1} Psi_{n-1} + c_n Psi_{n+1}, n = 0..count-1."""
    n = np.arange(count)
    return np.where(n % 2 == 0, np.sqrt((n + 2 * a) / 2), np.sqrt((n + 1) / 2))


def _log_prefactor(n: int, a: float, odd: int) -> float:
    return 0.5 * (float(gammaln(n + 1)) - float(gammaln(n + a + odd)))


def psi(level: int, a: float, x: float) -> float:
    """Parabose wavefunction Psi_level^(a)(x) in terms of Laguerre polynomials."""
    if not a > 0:
        raise ValueError(f"a must be positive, got {a}")
    n, odd = divmod(level, 2)
    sign = -1.0 if n % 2 else 1.0
    pref = sign * math.exp(_log_prefactor(n, a, odd) - 0.5 * x * x)
    t = x * x
    if odd:
        return pref * math.copysign(abs(x) ** (a + 0.5), x) * laguerre(n, a, t)
    lag = laguerre(n, a - 1, t)
    if x == 0 and a < 0.5:
        return math.copysign(math.inf, pref * lag)
    return pref * abs(x) ** (a - 0.5) * lag


def psi_array(level: int, a: float, xs) -> np.ndarray:
    return np.array([psi(level, a, float(x)) for x in np.asarray(xs, dtype=float)])


def hermite_function(n: int, x):
    """Canonical oscillator eigenfunction H_n(x) e^{-x^2/2} / (2^{n/2} sqrt(n!) pi^{1/4})."""
    x = np.asarray(x, dtype=float)
    log_norm = 0.5 * n * math.log(2.0) + 0.5 * float(gammaln(n + 1)) + 0.25 * math.log(math.pi)
    return hermite(n, x) * np.exp(-0.5 * x * x - log_norm)


def psi_gram_matrix(a: float, max_level: int, cutoff: float = 12.0) -> np.ndarray:
    """Quadrature Gram matrix of Psi_0..Psi_max_level over [-cutoff, cutoff].

    Each integral is split at 0, where the integrand may carry the
    integrable singularity |x|^(2a-1); the adaptive rule never samples the
    endpoints.
    """
    size = max_level + 1
    G = np.empty((size, size))
    for m in range(size):
        for n in range(m, size):
            f = lambda x, m=m, n=n: psi(m, a, x) * psi(n, a, x)
            total = 0.0
            for lo, hi in ((-cutoff, 0.0), (0.0, cutoff)):
                val, _ = integrate.quad(f, lo, hi, epsabs=1e-13, epsrel=1e-12, limit=400)
                total += val
            G[m, n] = G[n, m] = total
    return G
