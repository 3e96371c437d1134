"""Position, momentum and Hamiltonian of the finite u(2)_alpha oscillator.

The position operator is tridiagonal in the basis of ``algebra``. Its
spectrum and orthonormal eigenvectors are known in closed form; the
eigenvector matrix ``U`` is assembled from orthonormal Hahn functions and
its entries are the discrete wavefunctions Phi_n(q_k) = U[n, j+k].

Wavefunctions are also evaluated directly as dual Hahn polynomials in the
position variable (the ``phi_direct`` path). The two routes share kernels
but not bookkeeping, and ``wavefunction_table`` cross-checks them on every
call.

Columns of ``U`` and of every table are ordered by ascending ``q_k``,
i.e. ``k = -j, ..., j``. Inside the closed forms the position label is the
integer ``s = |k| - 1/2``; ``q_k`` is only derived output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import RepParams, build_C, build_J0, build_Jminus, build_Jplus
from .specfun import HahnSpec, hahn_norm, hahn_Q, hahn_weight, hyp3f2_terminating

__all__ = [
    "PATH_RTOL",
    "PATH_ATOL",
    "PositionSpectrum",
    "EigenvectorMatrix",
    "WavefunctionTable",
    "build_position",
    "build_momentum",
    "build_hamiltonian",
    "offdiagonal_M",
    "position_spectrum_closed_form",
    "position_spectrum_numeric",
    "momentum_spectrum_numeric",
    "eigenvector_matrix",
    "eigen_residuals",
    "heisenberg_residuals",
    "phi_direct",
    "wavefunction_table",
]

# agreement required between the U path and the direct dual Hahn path
PATH_RTOL = 1e-10
PATH_ATOL = 1e-12


def build_position(params: RepParams) -> np.ndarray:
    """q = (J+ + J-)/2, real symmetric tridiagonal."""
    return 0.5 * (build_Jplus(params) + build_Jminus(params))


def build_momentum(params: RepParams) -> np.ndarray:
    """p = i (J+ - J-)/2, Hermitian with purely imaginary entries."""
    return 0.5j * (build_Jplus(params) - build_Jminus(params))


def build_hamiltonian(params: RepParams) -> np.ndarray:
    """H = J0 + C/2, diagonal with entries m + j + 1/2."""
    return build_J0(params) + 0.5 * build_C(params)


def offdiagonal_M(params: RepParams) -> np.ndarray:
    """Off-diagonal entries M_0 .. M_{2j-1} of the matrix 2q."""
    two_j, a = params.two_j, params.alpha
    k = np.arange(two_j)
    odd = np.sqrt((k + 1) * (two_j - k))
    even = np.sqrt((k + 2 * a + 2) * (two_j - k + 2 * a + 1))
    return np.where(k % 2 == 1, odd, even)


@dataclass(frozen=True)
class PositionSpectrum:
    """Eigenvalues q_k of the position operator, ascending in k = -j .. j."""

    params: RepParams
    k_twice: np.ndarray
    eigenvalues: np.ndarray

    @property
    def middle_gap(self) -> float:
        mid = self.params.dim // 2
        return float(self.eigenvalues[mid] - self.eigenvalues[mid - 1])


def _k_twice(params: RepParams) -> np.ndarray:
    return np.arange(-params.two_j, params.two_j + 1, 2)


def _q_from_k_twice(k_twice: np.ndarray, alpha: float) -> np.ndarray:
    # |k| - 1/2 = s is an integer; q = sign(k) (alpha + s + 1)
    s = (np.abs(k_twice) - 1) // 2
    return np.sign(k_twice) * (alpha + s + 1.0)


def position_spectrum_closed_form(params: RepParams) -> PositionSpectrum:
    kt = _k_twice(params)
    return PositionSpectrum(params, kt, _q_from_k_twice(kt, params.alpha))


def position_spectrum_numeric(params: RepParams) -> np.ndarray:
    """Ascending eigenvalues of q from a dense symmetric eigensolver."""
    return np.linalg.eigvalsh(build_position(params).real)


def momentum_spectrum_numeric(params: RepParams) -> np.ndarray:
    """Ascending eigenvalues of the Hermitian momentum matrix.

    No closed form is used; ``numpy.linalg.LinAlgError`` propagates if the
    eigensolver fails to converge.
    """
    return np.linalg.eigvalsh(build_momentum(params))


@dataclass(frozen=True)
class EigenvectorMatrix:
    """Orthogonal matrix U; column j+k is the q-eigenvector for q_k."""

    params: RepParams
    U: np.ndarray


def _orthonormal_hahn_table(alpha: float, beta: float, N: int) -> np.ndarray:
    """T[s, r] = Qtilde_s(r; alpha, beta, N) for s, r in 0..N."""
    log_w = [hahn_weight(r, alpha, beta, N).log_magnitude for r in range(N + 1)]
    log_h = [hahn_norm(s, alpha, beta, N).log_magnitude for s in range(N + 1)]
    out = np.empty((N + 1, N + 1))
    for s in range(N + 1):
        for r in range(N + 1):
            q = hahn_Q(HahnSpec(s, alpha, beta, N), r)
            out[s, r] = math.exp(0.5 * (log_w[r] - log_h[s])) * q
    return out


def eigenvector_matrix(params: RepParams) -> EigenvectorMatrix:
    """Closed-form orthonormal eigenvectors of the position operator."""
    a, N = params.alpha, params.hahn_N
    even = _orthonormal_hahn_table(a, a + 1, N)
    odd = _orthonormal_hahn_table(a + 1, a, N)
    U = np.empty((params.dim, params.dim))
    sqrt2 = math.sqrt(2.0)
    for r in range(N + 1):
        sign = 1.0 if r % 2 == 0 else -1.0
        for s in range(N + 1):
            neg, pos = N - s, N + 1 + s  # columns j - s - 1/2 and j + s + 1/2
            e = sign * even[s, r] / sqrt2
            U[2 * r, neg] = e
            U[2 * r, pos] = e
            o = sign * odd[s, r] / sqrt2
            U[2 * r + 1, neg] = -o
            U[2 * r + 1, pos] = o
    return EigenvectorMatrix(params, U)


def eigen_residuals(params: RepParams, U: np.ndarray | None = None) -> np.ndarray:
    """Per-column norms ||2q u_k - 2 q_k u_k||."""
    if U is None:
        U = eigenvector_matrix(params).U
    two_q = 2.0 * build_position(params).real
    q = position_spectrum_closed_form(params).eigenvalues
    return np.linalg.norm(two_q @ U - U * (2.0 * q), axis=0)


def heisenberg_residuals(params: RepParams) -> dict[str, float]:
    """Frobenius norms of [H, q] + i p and [H, p] - i q."""
    H, q, p = build_hamiltonian(params), build_position(params), build_momentum(params)
    return {
        "H_q": float(np.linalg.norm(H @ q - q @ H + 1j * p)),
        "H_p": float(np.linalg.norm(H @ p - p @ H - 1j * q)),
    }


def phi_direct(params: RepParams, level: int, k_twice: int) -> float:
    """Phi_level(q_k) as a dual Hahn polynomial of degree level // 2 in the position variable.

    Parameters (alpha, alpha+1) serve even levels and (alpha+1, alpha) odd
    levels; negative positions follow by even or odd extension.
    """
    if not 0 <= level <= params.two_j:
        raise ValueError(f"level must lie in 0..{params.two_j}, got {level}")
    if k_twice % 2 == 0 or abs(k_twice) > params.two_j:
        raise ValueError(f"k_twice must be odd with |k_twice| <= {params.two_j}, got {k_twice}")
    a, N = params.alpha, params.hahn_N
    n, odd = divmod(level, 2)
    s = (abs(k_twice) - 1) // 2
    wa, wb = (a + 1, a) if odd else (a, a + 1)
    log_ratio = (hahn_weight(n, wa, wb, N) / hahn_norm(s, wa, wb, N)).log_magnitude
    series = hyp3f2_terminating(-s, s + 2 * a + 2, -n, a + 1 + odd, -N)
    value = (-1) ** n / math.sqrt(2.0) * math.exp(0.5 * log_ratio) * series
    if odd and k_twice < 0:
        value = -value
    return value


@dataclass(frozen=True)
class WavefunctionTable:
    """Phi_n(q_k) for n = 0..2j (rows) and ascending q_k (columns)."""

    params: RepParams
    k_twice: np.ndarray
    q: np.ndarray
    values: np.ndarray
    direct: np.ndarray = field(repr=False)

    @property
    def max_path_discrepancy(self) -> float:
        """Largest |U-path - direct| scaled by the combined tolerance (<= 1 passes)."""
        scale = PATH_ATOL + PATH_RTOL * np.abs(self.direct)
        return float(np.max(np.abs(self.values - self.direct) / scale))

    def rows(self, n: int) -> list[tuple[float, float]]:
        return list(zip(self.q.tolist(), self.values[n].tolist()))


def wavefunction_table(params: RepParams, check: bool = True) -> WavefunctionTable:
    """Tabulate Phi from U and from the direct formulas; they must agree."""
    U = eigenvector_matrix(params).U
    kt = _k_twice(params)
    direct = np.array(
        [[phi_direct(params, n, int(k)) for k in kt] for n in range(params.dim)]
    )
    table = WavefunctionTable(params, kt, _q_from_k_twice(kt, params.alpha), U, direct)
    if check and table.max_path_discrepancy > 1.0:
        raise ArithmeticError(
            f"wavefunction paths disagree for 2j={params.two_j}, alpha={params.alpha}"
        )
    return table
