"""Special cases and large-j limits of the discrete wavefunctions.

At alpha = -1/2 the dual Hahn 3F2 series collapse to 2F1 series at
argument 2 (symmetric Krawtchouk polynomials). As j grows,
``j^(1/4) Phi_n(j^(1/2) x)`` tends to the parabose wavefunction
``Psi_n^(alpha+1)(x)``; the scans here measure the deviation on a fixed x
grid, comparing at the exact discrete abscissa ``q_k / sqrt(j)`` nearest to
each grid point so that no interpolation error enters.

No convergence rate is known in closed form. Acceptance of a scan is
regression style: errors must not grow across consecutive j (up to a small
slack for abscissa snapping) and the last error must stay under a
threshold frozen in a fixture file.

Fixture format (plain text, one record per line, ``#`` starts a comment)::

    # format-version: 1
    # n alpha two_j_max threshold
    0 -0.7 401 5.9e-04
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .algebra import HalfInt, RepParams
from .oscillator import phi_direct
from .parabose import psi
from .specfun import (
    hahn_norm,
    hahn_weight,
    hyp2f1_arg2_terminating,
    hyp3f2_terminating,
    laguerre,
    log_hahn_norm,
    log_pochhammer,
    pochhammer,
)

log = logging.getLogger(__name__)

__all__ = [
    "DEFAULT_X_GRID",
    "DEFAULT_TWO_J_SEQUENCE",
    "MONOTONE_SLACK",
    "FIXTURE_VERSION",
    "LimitScan",
    "parabose_limit_scan",
    "krawtchouk_reduction_check",
    "krawtchouk_wavefunction_table",
    "laguerre_limit_check",
    "weight_norm_limit_check",
    "load_thresholds",
    "write_thresholds",
    "default_thresholds_path",
]

# x = 0 is left out: Psi^(a) is singular there for a < 1/2 and the limit is
# only pointwise.
DEFAULT_X_GRID = tuple(sorted(s * 0.25 * i for i in range(1, 9) for s in (-1, 1)))
DEFAULT_TWO_J_SEQUENCE = (21, 61, 201, 401)
MONOTONE_SLACK = 0.05
FIXTURE_VERSION = 1


def _as_halfint(value) -> HalfInt:
    return value if isinstance(value, HalfInt) else HalfInt.parse(value)


@dataclass
class LimitScan:
    """Deviation of the rescaled discrete wavefunction from Psi^(alpha+1)_n, per j."""

    n: int
    alpha: float
    x_grid: tuple[float, ...]
    two_j: list[int] = field(default_factory=list)
    errors: list[float] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)

    def is_monotone(self, slack: float = MONOTONE_SLACK) -> bool:
        """Errors never grow by more than ``slack`` (relative) between consecutive j."""
        return all(b <= (1 + slack) * a for a, b in zip(self.errors, self.errors[1:]))

    @property
    def final_error(self) -> float:
        return self.errors[-1]


def _nearest_k_twice(x: float, j: float, alpha: float, N: int) -> int:
    # positive eigenvalues are alpha + s + 1, s = 0..N
    s = round(abs(x) * math.sqrt(j) - alpha - 1)
    s = min(max(s, 0), N)
    k = 2 * s + 1
    return -k if x < 0 else k


def parabose_limit_scan(
    n: int,
    alpha: float,
    x_grid: Sequence[float] = DEFAULT_X_GRID,
    j_sequence: Iterable = DEFAULT_TWO_J_SEQUENCE,
) -> LimitScan:
    """Max over ``x_grid`` of |j^(1/4) Phi_n(q_k) - Psi_n^(alpha+1)(q_k / sqrt(j))|.

    Entries of ``j_sequence`` are either ``HalfInt`` values of j or plain
    integers giving 2j. Values of j whose representation has no level ``n``
    are skipped with a log notice.
    """
    scan = LimitScan(n, float(alpha), tuple(float(x) for x in x_grid))
    for entry in j_sequence:
        tj = entry.twice if isinstance(entry, HalfInt) else int(entry)
        params = RepParams.from_two_j(tj, alpha)
        if n > tj:
            log.info("level %d absent for 2j=%d; skipped", n, tj)
            scan.skipped.append(tj)
            continue
        j = tj / 2
        worst = 0.0
        for x in scan.x_grid:
            kt = _nearest_k_twice(x, j, alpha, params.hahn_N)
            q = math.copysign(alpha + (abs(kt) - 1) // 2 + 1, kt)
            x_exact = q / math.sqrt(j)
            discrete = j**0.25 * phi_direct(params, n, kt)
            worst = max(worst, abs(discrete - psi(n, alpha + 1, x_exact)))
        scan.two_j.append(tj)
        scan.errors.append(worst)
    return scan


def _binomial_ratio(top1: int, k1: int, top2: int, k2: int) -> float:
    return float(Fraction(math.comb(top1, k1), math.comb(top2, k2)))


def krawtchouk_reduction_check(n: int, q, j) -> tuple[float, float]:
    """Differences between both sides of the even and odd 3F2 -> 2F1 reductions.

    ``q`` and ``j`` are half-odd-integers with 1/2 <= q <= j and n <= j - 1/2.
    Each difference is divided by ``max(1, |3F2|)``: the series reach 1e9
    by 2j = 65, where an absolute measure only sees roundoff.
    """
    qh, jh = _as_halfint(q), _as_halfint(j)
    if not (jh.is_half_odd and qh.is_half_odd and 1 <= qh.twice <= jh.twice):
        raise ValueError(f"need half-odd-integers 1/2 <= q <= j, got q={qh}, j={jh}")
    N = (jh.twice - 1) // 2
    if not 0 <= n <= N:
        raise ValueError(f"n must lie in 0..{N}, got {n}")
    qf, jf, tj = float(qh), float(jh), jh.twice
    sign = -1.0 if n % 2 else 1.0

    lhs_even = hyp3f2_terminating(-qf + 0.5, qf + 0.5, -n, 0.5, -jf + 0.5)
    rhs_even = sign * _binomial_ratio(tj, 2 * n, N, n) * hyp2f1_arg2_terminating(
        -2 * n, -jf - qf, -tj
    )
    lhs_odd = hyp3f2_terminating(-qf + 0.5, qf + 0.5, -n, 1.5, -jf + 0.5)
    rhs_odd = (
        -sign
        / (2 * qf)
        * _binomial_ratio(tj, 2 * n + 1, N, n)
        * hyp2f1_arg2_terminating(-2 * n - 1, -jf - qf, -tj)
    )
    return (
        abs(lhs_even - rhs_even) / max(1.0, abs(lhs_even)),
        abs(lhs_odd - rhs_odd) / max(1.0, abs(lhs_odd)),
    )


def krawtchouk_wavefunction_table(two_j: int) -> np.ndarray:
    """Phi^(-1/2)_n(q_k) with the 3F2 replaced by its Krawtchouk 2F1 form.

    Rows are levels 0..2j, columns ascending q_k, as in ``wavefunction_table``.
    """
    params = RepParams.from_two_j(two_j, -0.5)
    N, dim = params.hahn_N, params.dim
    out = np.empty((dim, dim))
    for level in range(dim):
        n, odd = divmod(level, 2)
        sign = -1.0 if n % 2 else 1.0
        wa, wb = (0.5, -0.5) if odd else (-0.5, 0.5)
        for s in range(N + 1):
            q = s + 0.5
            kraw = hyp2f1_arg2_terminating(-2 * n - odd, -two_j / 2 - q, -two_j)
            if odd:
                series = -sign / (2 * q) * _binomial_ratio(two_j, 2 * n + 1, N, n) * kraw
            else:
                series = sign * _binomial_ratio(two_j, 2 * n, N, n) * kraw
            scale = math.exp(0.5 * (hahn_weight(n, wa, wb, N) / hahn_norm(s, wa, wb, N)).log_magnitude)
            value = sign / math.sqrt(2.0) * scale * series
            out[level, N + 1 + s] = value
            out[level, N - s] = -value if odd else value
    return out


def laguerre_limit_check(
    n: int, alpha: float, x: float, j_sequence: Iterable[int], *, odd: bool = False
) -> list[float]:
    """|3F2(-sqrt(j) x + alpha+1, sqrt(j) x + alpha+1, -n; b, -j+1/2; 1) - n!/(b)_n L_n^(b-1)(x^2)|.

    ``b = alpha + 1`` for the even wavefunctions and ``alpha + 2`` with
    ``odd=True``. ``j_sequence`` holds 2j values.
    """
    b = alpha + 1 + int(odd)
    target = math.factorial(n) / pochhammer(b, n) * laguerre(n, b - 1, x * x)
    errors = []
    for tj in j_sequence:
        j = tj / 2
        rj = math.sqrt(j) * x
        value = hyp3f2_terminating(-rj + alpha + 1, rj + alpha + 1, -n, b, -j + 0.5)
        errors.append(abs(value - target))
    return errors


def weight_norm_limit_check(
    n: int, alpha: float, x: float, j_sequence: Iterable[int]
) -> list[float]:
    """Deviation of sqrt(j) w(n) / (2 h(sqrt(j) x - alpha - 1)) from its Gaussian-type limit.

    Weight and norm use parameters (alpha, alpha+1, j - 1/2); the norm is
    evaluated at real degree through its Gamma-function form.
    """
    log_target = (
        log_pochhammer(alpha + 1, n)
        - math.lgamma(n + 1)
        - math.lgamma(alpha + 1)
        + (2 * alpha + 1) * math.log(x)
        - x * x
    )
    target = math.exp(log_target)
    errors = []
    for tj in j_sequence:
        j = tj / 2
        N = (tj - 1) // 2
        log_ratio = (
            0.5 * math.log(j)
            + hahn_weight(n, alpha, alpha + 1, N).log_magnitude
            - math.log(2.0)
            - log_hahn_norm(math.sqrt(j) * x - alpha - 1, alpha, alpha + 1, N)
        )
        errors.append(abs(math.exp(log_ratio) - target))
    return errors


def default_thresholds_path() -> Path:
    return Path(str(resources.files("hahn_oscillator") / "data" / "limit_thresholds.txt"))


def load_thresholds(path: str | Path | None = None) -> dict[tuple[int, float, int], float]:
    """Read a threshold fixture into ``{(n, alpha, two_j_max): threshold}``."""
    path = Path(path) if path is not None else default_thresholds_path()
    table = {}
    version = None
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            key, _, val = line[1:].partition(":")
            if key.strip() == "format-version":
                version = int(val)
            continue
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"{path}:{lineno}: expected 4 fields, got {len(parts)}")
        n, alpha, tj, thr = int(parts[0]), float(parts[1]), int(parts[2]), float(parts[3])
        table[(n, alpha, tj)] = thr
    if version != FIXTURE_VERSION:
        raise ValueError(f"{path}: unsupported fixture format-version {version}")
    return table


def write_thresholds(path: str | Path, table: dict[tuple[int, float, int], float]) -> None:
    lines = [
        "# Frozen limit-scan thresholds for the parabose limit.",
        f"# format-version: {FIXTURE_VERSION}",
        "# n alpha two_j_max threshold",
    ]
    for (n, alpha, tj), thr in sorted(table.items()):
        lines.append(f"{n} {alpha!r} {tj} {thr:.3e}")
    Path(path).write_text("\n".join(lines) + "\n")
