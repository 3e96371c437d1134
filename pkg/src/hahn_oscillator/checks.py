"""Verification suites driven by ``hahn-osc verify``.

Each suite returns a list of ``Check`` records (name, residual, tolerance).
A check passes when ``residual <= tolerance``; boolean properties use a
residual of 0 or 1 against tolerance 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import algebra, limits, oscillator, parabose
from .algebra import RepParams
from .specfun import HahnSpec, hahn_orthonormal

GRID_TWO_J = (1, 3, 9, 65)
GRID_ALPHA = (-0.9, -0.7, -0.5, 0.0, 1.0, 5.0)
HAHN_PARAMS = (-0.5, -0.3, 0.0, 1.0, 2.5)
HAHN_N = (1, 5, 20, 60)
PARABOSE_A = (0.3, 0.5, 1.0, 2.0)
GRAM_A = (0.3, 0.5, 2.0)
LIMIT_ALPHAS = (-0.7, -0.5, 1.0)
LIMIT_LEVELS = (0, 1, 2, 3)


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)


def _flag(ok: bool) -> float:
    return 0.0 if ok else 1.0


def algebra_suite(reps: Iterable[RepParams]) -> list[Check]:
    out = []
    for p in reps:
        tag = f"2j={p.two_j},alpha={p.alpha}"
        for name, res in algebra.verify_defining_relations(p).items():
            out.append(Check(f"algebra.{name}[{tag}]", float(res), 1e-12 * p.dim))
        out.append(Check(f"algebra.irreducible[{tag}]", _flag(algebra.verify_irreducibility(p)), 0.0))
    return out


def spectrum_suite(reps: Iterable[RepParams]) -> list[Check]:
    out = []
    for p in reps:
        tag = f"2j={p.two_j},alpha={p.alpha}"
        closed = oscillator.position_spectrum_closed_form(p)
        numeric2 = np.linalg.eigvalsh(2.0 * oscillator.build_position(p).real)
        out.append(
            Check(f"spectrum.position[{tag}]", float(np.max(np.abs(numeric2 - 2 * closed.eigenvalues))), 1e-10)
        )
        out.append(Check(f"spectrum.gap[{tag}]", abs(closed.middle_gap - (2 * p.alpha + 2)), 1e-12))
        mom = oscillator.momentum_spectrum_numeric(p)
        out.append(
            Check(f"spectrum.momentum[{tag}]", float(np.max(np.abs(mom - closed.eigenvalues))), 1e-10)
        )
        energies = np.diag(oscillator.build_hamiltonian(p)).real
        out.append(
            Check(
                f"spectrum.hamiltonian[{tag}]",
                float(np.max(np.abs(energies - (np.arange(p.dim) + 0.5)))),
                1e-12,
            )
        )
        for name, res in oscillator.heisenberg_residuals(p).items():
            out.append(Check(f"spectrum.heisenberg_{name}[{tag}]", res, 1e-12 * p.dim))
    return out


def eigenvector_suite(reps: Iterable[RepParams]) -> list[Check]:
    out = []
    for p in reps:
        tag = f"2j={p.two_j},alpha={p.alpha}"
        U = oscillator.eigenvector_matrix(p).U
        eye = np.eye(p.dim)
        out.append(Check(f"eigvec.UUt[{tag}]", float(np.max(np.abs(U @ U.T - eye))), 1e-12))
        out.append(Check(f"eigvec.UtU[{tag}]", float(np.max(np.abs(U.T @ U - eye))), 1e-12))
        out.append(Check(f"eigvec.residual[{tag}]", float(np.max(oscillator.eigen_residuals(p, U))), 1e-10))
        table = oscillator.wavefunction_table(p, check=False)
        out.append(Check(f"eigvec.dual_path[{tag}]", table.max_path_discrepancy, 1.0))
    return out


def hahn_gram_error(alpha: float, beta: float, N: int) -> float:
    """Max |sum_x Qt_l Qt_n - delta_ln| over the orthonormal Hahn functions."""
    T = np.array(
        [[hahn_orthonormal(HahnSpec(n, alpha, beta, N), x) for x in range(N + 1)] for n in range(N + 1)]
    )
    return float(np.max(np.abs(T @ T.T - np.eye(N + 1))))


def hahn_suite(triples: Iterable[tuple[float, float, int]]) -> list[Check]:
    return [
        Check(f"hahn.orthogonality[alpha={a},beta={b},N={N}]", hahn_gram_error(a, b, N), 1e-12)
        for a, b, N in triples
    ]


def krawtchouk_suite(two_j: int) -> list[Check]:
    N = (two_j - 1) // 2
    worst = 0.0
    for n in range(N + 1):
        for tq in range(1, two_j + 1, 2):
            worst = max(worst, *limits.krawtchouk_reduction_check(n, tq / 2, two_j / 2))
    p = RepParams.from_two_j(two_j, -0.5)
    table = oscillator.wavefunction_table(p, check=False).values
    kraw = limits.krawtchouk_wavefunction_table(two_j)
    return [
        Check(f"krawtchouk.identities[2j={two_j}]", worst, 1e-10),
        Check(f"krawtchouk.table[2j={two_j}]", float(np.max(np.abs(table - kraw))), 1e-10),
    ]


def parabose_suite(a_values: Iterable[float], gram_a: Iterable[float], trunc: int = 200) -> list[Check]:
    out = []
    for a in a_values:
        p = parabose.ParaboseParams(a, trunc)
        tag = f"a={a},trunc={trunc}"
        for name, res in parabose.verify_osp12(p).items():
            out.append(Check(f"parabose.osp12_{name}[{tag}]", res, 1e-12))
        energies = parabose.interior_energies(p)
        out.append(
            Check(f"parabose.energies[{tag}]", float(np.max(np.abs(energies - (np.arange(p.interior) + a)))), 1e-12)
        )
        adj = np.max(np.abs(parabose.build_bplus(p) - parabose.build_bminus(p).T))
        out.append(Check(f"parabose.adjoint[{tag}]", float(adj), 0.0))
        out.append(Check(f"parabose.jacobi[{tag}]", parabose.jacobi_action_check(p), 1e-15))
    xs = np.linspace(-5.0, 5.0, 501)
    for a in gram_a:
        G = parabose.psi_gram_matrix(a, 6)
        out.append(Check(f"parabose.gram[a={a}]", float(np.max(np.abs(G - np.eye(7)))), 1e-8))
        if a == 0.5:
            worst = max(
                float(np.max(np.abs(parabose.psi_array(n, 0.5, xs) - parabose.hermite_function(n, xs))))
                for n in range(7)
            )
            out.append(Check("parabose.hermite[a=0.5]", worst, 1e-12))
    return out


def limit_suite(
    alphas: Sequence[float] = LIMIT_ALPHAS,
    levels: Sequence[int] = LIMIT_LEVELS,
    two_j_sequence: Sequence[int] = limits.DEFAULT_TWO_J_SEQUENCE,
    thresholds: dict | None = None,
) -> list[Check]:
    """Monotonicity of every scan, plus its fixture threshold when one is recorded."""
    if thresholds is None:
        thresholds = limits.load_thresholds()
    out = []
    for alpha in alphas:
        for n in levels:
            scan = limits.parabose_limit_scan(n, alpha, limits.DEFAULT_X_GRID, two_j_sequence)
            tag = f"n={n},alpha={alpha}"
            out.append(Check(f"limit.monotone[{tag}]", _flag(scan.is_monotone()), 0.0))
            key = (n, float(alpha), scan.two_j[-1])
            if key in thresholds:
                out.append(Check(f"limit.final[{tag},2j={key[2]}]", scan.final_error, thresholds[key]))
    return out


def full_suite(
    two_js: Sequence[int] = GRID_TWO_J,
    alphas: Sequence[float] = GRID_ALPHA,
    thresholds: dict | None = None,
    suites: Sequence[str] | None = None,
) -> list[Check]:
    """Run the named suites (all by default) over the (2j, alpha) grid."""
    reps = [RepParams.from_two_j(tj, a) for tj in two_js for a in alphas]
    default_grid = tuple(two_js) == GRID_TWO_J and tuple(alphas) == GRID_ALPHA
    if default_grid:
        hahn_triples = [(a, b, N) for a in HAHN_PARAMS for b in HAHN_PARAMS for N in HAHN_N]
        big = [r for r in reps if r.two_j == max(two_js) and r.alpha in LIMIT_ALPHAS]
        a_values, gram_a, kraw_two_j = PARABOSE_A, GRAM_A, 13
        limit_alphas = LIMIT_ALPHAS
    else:
        hahn_triples = sorted(
            {(r.alpha, r.alpha + 1, r.hahn_N) for r in reps} | {(r.alpha + 1, r.alpha, r.hahn_N) for r in reps}
        )
        big = reps
        a_values = gram_a = tuple(sorted({r.alpha + 1 for r in reps}))
        kraw_two_j = max(two_js)
        limit_alphas = tuple(sorted(set(alphas)))
    runners = {
        "algebra": lambda: algebra_suite(reps),
        "spectrum": lambda: spectrum_suite(reps),
        "eigenvectors": lambda: eigenvector_suite(big),
        "hahn": lambda: hahn_suite(hahn_triples),
        "krawtchouk": lambda: krawtchouk_suite(kraw_two_j),
        "parabose": lambda: parabose_suite(a_values, gram_a),
        "limits": lambda: limit_suite(limit_alphas, thresholds=thresholds),
    }
    selected = suites or list(runners)
    out = []
    for name in selected:
        out.extend(runners[name]())
    return out


SUITES = ("algebra", "spectrum", "eigenvectors", "hahn", "krawtchouk", "parabose", "limits")
