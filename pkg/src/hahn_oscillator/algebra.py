"""Representations V_j of the deformed algebra u(2)_alpha.

Matrices act on the ordered basis ``|j,-j>, |j,-j+1>, ..., |j,j>``: row and
column index ``r`` corresponds to ``m = -j + r``. Only half-integer ``j``
(``2j`` odd) admits these representations for generic ``alpha``, and
``alpha > -1`` keeps every square-root argument positive.

All generators are real, but matrices are stored with complex dtype so
that the momentum operator and commutator checks need no dtype juggling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

import numpy as np

__all__ = [
    "HalfInt",
    "RepParams",
    "build_C",
    "build_P",
    "build_J0",
    "build_Jplus",
    "build_Jminus",
    "generators",
    "verify_defining_relations",
    "ladder_coefficients",
    "verify_irreducibility",
]


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """An integer or half-integer, stored exactly as twice its value."""

    twice: int

    @classmethod
    def parse(cls, value) -> "HalfInt":
        """Build from an int, a float such as 32.5, or a string such as ``"65/2"``."""
        doubled = 2 * Fraction(value)
        if doubled.denominator != 1:
            raise ValueError(f"{value!r} is not an integer or half-integer")
        return cls(int(doubled))

    @property
    def is_half_odd(self) -> bool:
        """True when the value is a half-odd-integer (twice is odd)."""
        return self.twice % 2 == 1

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + other.twice)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - other.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __lt__(self, other: "HalfInt") -> bool:
        return self.twice < other.twice

    def __float__(self) -> float:
        return self.twice / 2

    def __str__(self) -> str:
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"


@dataclass(frozen=True)
class RepParams:
    """Label (j, alpha) of the representation V_j of u(2)_alpha."""

    j: HalfInt
    alpha: float

    def __post_init__(self):
        if self.j.twice <= 0 or not self.j.is_half_odd:
            raise ValueError(f"two_j must be odd and positive, got {self.j.twice}")
        if not self.alpha > -1:
            raise ValueError(f"alpha must exceed -1, got {self.alpha}")

    @classmethod
    def from_two_j(cls, two_j: int, alpha: float) -> "RepParams":
        return cls(HalfInt(two_j), float(alpha))

    @property
    def two_j(self) -> int:
        return self.j.twice

    @property
    def dim(self) -> int:
        return self.j.twice + 1

    @property
    def hahn_N(self) -> int:
        """N = j - 1/2, the top of the Hahn support in the eigenvectors."""
        return (self.j.twice - 1) // 2


def build_C(params: RepParams) -> np.ndarray:
    """Central element: (2j+1) times the identity."""
    return (params.two_j + 1) * np.eye(params.dim, dtype=complex)


def build_P(params: RepParams) -> np.ndarray:
    """Parity (-1)^(j+m); j+m equals the basis index r."""
    r = np.arange(params.dim)
    return np.diag(np.where(r % 2 == 0, 1.0, -1.0)).astype(complex)


def build_J0(params: RepParams) -> np.ndarray:
    """diag(-j, ..., j)."""
    m = (2 * np.arange(params.dim) - params.two_j) / 2
    return np.diag(m).astype(complex)


def _raising_entries(params: RepParams) -> np.ndarray:
    # entry r maps |j,m> -> |j,m+1> with r = j+m; parity keyed off the integer r.
    two_j, a = params.two_j, params.alpha
    out = np.empty(two_j)
    for r in range(two_j):
        j_minus_m = two_j - r
        j_plus_m = r
        if r % 2:
            out[r] = np.sqrt(j_minus_m * (j_plus_m + 1))
        else:
            out[r] = np.sqrt((j_minus_m + 2 * a + 1) * (j_plus_m + 2 * a + 2))
    return out


def build_Jplus(params: RepParams) -> np.ndarray:
    """Raising operator; nonzero entries on the first subdiagonal."""
    return np.diag(_raising_entries(params), -1).astype(complex)


def build_Jminus(params: RepParams) -> np.ndarray:
    """Lowering operator, built from its own action and equal to J+^T."""
    two_j, a = params.two_j, params.alpha
    vals = np.empty(two_j)
    # column r >= 1 maps |j,m> -> |j,m-1>
    for r in range(1, two_j + 1):
        j_plus_m, j_minus_m = r, two_j - r
        if r % 2 == 0:
            vals[r - 1] = np.sqrt(j_plus_m * (j_minus_m + 1))
        else:
            vals[r - 1] = np.sqrt((j_plus_m + 2 * a + 1) * (j_minus_m + 2 * a + 2))
    return np.diag(vals, 1).astype(complex)


def generators(params: RepParams) -> dict[str, np.ndarray]:
    return {
        "C": build_C(params),
        "P": build_P(params),
        "J0": build_J0(params),
        "Jplus": build_Jplus(params),
        "Jminus": build_Jminus(params),
    }


def verify_defining_relations(params: RepParams) -> dict[str, float]:
    """Frobenius norms of the six defining-relation residuals.

    ``J0_ladder`` is the larger of the two residuals [J0, J+] - J+ and
    [J0, J-] + J-.
    """
    g = generators(params)
    C, P, J0, Jp, Jm = g["C"], g["P"], g["J0"], g["Jplus"], g["Jminus"]
    eye = np.eye(params.dim)
    c = 2 * params.alpha + 1
    norm = np.linalg.norm
    return {
        "P_J0_commutator": norm(P @ J0 - J0 @ P),
        "P_Jplus_anticommutator": norm(P @ Jp + Jp @ P),
        "P_Jminus_anticommutator": norm(P @ Jm + Jm @ P),
        "P_squared": norm(P @ P - eye),
        "J0_ladder": max(norm(J0 @ Jp - Jp @ J0 - Jp), norm(J0 @ Jm - Jm @ J0 + Jm)),
        "Jplus_Jminus_bracket": norm(
            Jp @ Jm - Jm @ Jp - (2 * J0 - c**2 * P - c * C @ P)
        ),
    }


def ladder_coefficients(params: RepParams) -> tuple[np.ndarray, np.ndarray]:
    """Coefficients of (J+)^k |j,-j> on |j,-j+k> and of (J-)^k |j,j> on |j,j-k>.

    Both arrays have length 2j and are indexed by k - 1.
    """
    Jp, Jm = build_Jplus(params).real, build_Jminus(params).real
    dim = params.dim
    up, down = np.empty(dim - 1), np.empty(dim - 1)
    v = np.zeros(dim)
    v[0] = 1.0
    w = np.zeros(dim)
    w[-1] = 1.0
    for k in range(1, dim):
        v = Jp @ v
        w = Jm @ w
        up[k - 1] = v[k]
        down[k - 1] = w[dim - 1 - k]
    return up, down


def verify_irreducibility(params: RepParams) -> bool:
    """True iff every ladder power from the extremal vectors is nonzero."""
    up, down = ladder_coefficients(params)
    return bool(np.all(up != 0) and np.all(down != 0))
