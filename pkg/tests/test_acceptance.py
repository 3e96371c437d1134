"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines, or
directly as ``python3 tests/test_acceptance.py``.
"""

import contextlib
import io
import sys
import tempfile
import time
from pathlib import Path

import numpy as np

from hahn_oscillator import checks, cli, limits, oscillator, parabose, tables
from hahn_oscillator.algebra import RepParams

GRID = [RepParams.from_two_j(tj, a) for tj in checks.GRID_TWO_J for a in checks.GRID_ALPHA]


# collected for the terminal summary hook in conftest.py
LINES = []


def report(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title}: {detail}"
    LINES.append(line)
    print(line)
    return ok


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_01_algebra_relations():
    res, dt = timed(lambda: checks.algebra_suite(GRID))
    worst = max(c.residual / c.tolerance for c in res if c.tolerance > 0)
    ok = all(c.passed for c in res) and dt < 1.0
    assert report(1, "algebra relations", ok, f"worst residual/(1e-12*dim) = {worst:.2e}, {dt:.2f} s")


def test_02_spectrum():
    def run():
        worst_q = worst_gap = 0.0
        for p in GRID:
            closed = oscillator.position_spectrum_closed_form(p)
            numeric = np.linalg.eigvalsh(2 * oscillator.build_position(p).real)
            worst_q = max(worst_q, float(np.max(np.abs(numeric - 2 * closed.eigenvalues))))
            worst_gap = max(worst_gap, abs(closed.middle_gap - (2 * p.alpha + 2)))
        return worst_q, worst_gap

    (wq, wg), dt = timed(run)
    ok = wq <= 1e-10 and wg <= 1e-12 and dt < 1.0
    assert report(2, "position spectrum", ok, f"eig err {wq:.2e}, gap err {wg:.2e}, {dt:.2f} s")


def test_03_eigenvectors():
    def run():
        worst_o = worst_r = 0.0
        for alpha in (1.0, -0.7):
            p = RepParams.from_two_j(65, alpha)
            U = oscillator.eigenvector_matrix(p).U
            worst_o = max(worst_o, float(np.max(np.abs(U @ U.T - np.eye(p.dim)))))
            worst_r = max(worst_r, float(np.max(oscillator.eigen_residuals(p, U))))
        return worst_o, worst_r

    (wo, wr), dt = timed(run)
    ok = wo <= 1e-12 and wr <= 1e-10 and dt < 1.0
    assert report(3, "eigenvector matrix", ok, f"UU^T err {wo:.2e}, residual {wr:.2e}, {dt:.2f} s")


def test_04_dual_path():
    worst = 0.0
    worst_rel = 0.0
    for alpha in (-0.7, -0.5, 1.0):
        t = oscillator.wavefunction_table(RepParams.from_two_j(65, alpha), check=False)
        worst = max(worst, t.max_path_discrepancy)
        big = np.abs(t.direct) > 1e-2
        worst_rel = max(worst_rel, float(np.max(np.abs(t.values - t.direct)[big] / np.abs(t.direct[big]))))
    ok = worst <= 1.0
    assert report(4, "dual-path wavefunctions", ok,
                  f"max err/(1e-10 rel + 1e-12 abs) = {worst:.2e}, rel err on |phi|>1e-2 {worst_rel:.2e}")


def test_05_krawtchouk():
    res = checks.krawtchouk_suite(13)
    ok = all(c.passed for c in res)
    detail = ", ".join(f"{c.name} {c.residual:.2e}" for c in res)
    assert report(5, "Krawtchouk reductions", ok, detail)


def test_06_hahn_orthogonality():
    triples = [(a, b, N) for a in checks.HAHN_PARAMS for b in checks.HAHN_PARAMS for N in checks.HAHN_N]
    res = checks.hahn_suite(triples)
    worst = max(c.residual for c in res)
    ok = all(c.passed for c in res)
    assert report(6, "Hahn orthogonality", ok, f"max Gram error {worst:.2e} over {len(res)} (alpha, beta, N)")


def test_07_parabose_interior():
    worst_rel = worst_e = 0.0
    for a in (0.3, 0.5, 1.0, 2.0):
        p = parabose.ParaboseParams(a, 200)
        worst_rel = max(worst_rel, *parabose.verify_osp12(p).values())
        worst_e = max(worst_e, float(np.max(np.abs(parabose.interior_energies(p) - (np.arange(p.interior) + a)))))
    ok = worst_rel <= 1e-12 and worst_e <= 1e-12
    assert report(7, "parabose interior relations", ok, f"osp(1|2) residual {worst_rel:.2e}, energy err {worst_e:.2e}")


def test_08_psi_orthonormality():
    worst_g = max(float(np.max(np.abs(parabose.psi_gram_matrix(a, 6) - np.eye(7)))) for a in (0.3, 0.5, 2.0))
    xs = np.linspace(-5, 5, 501)
    worst_h = max(float(np.max(np.abs(parabose.psi_array(n, 0.5, xs) - parabose.hermite_function(n, xs))))
                  for n in range(7))
    ok = worst_g <= 1e-8 and worst_h <= 1e-12
    assert report(8, "Psi orthonormality", ok, f"Gram err {worst_g:.2e}, Hermite err {worst_h:.2e}")


def test_09_parabose_limit():
    def run():
        thresholds = limits.load_thresholds()
        bad = []
        for alpha in (-0.7, -0.5, 1.0):
            for n in range(4):
                s = limits.parabose_limit_scan(n, alpha, limits.DEFAULT_X_GRID, (21, 61, 201, 401))
                if not s.is_monotone(0.05) or s.final_error > thresholds[(n, alpha, 401)]:
                    bad.append((n, alpha, s.errors))
        return bad

    bad, dt = timed(run)
    ok = not bad and dt < 30.0
    assert report(9, "parabose limit", ok, f"{12 - len(bad)}/12 scans monotone and under threshold, {dt:.2f} s")


def test_10_figures():
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        for run in ("a", "b"):
            with contextlib.redirect_stdout(io.StringIO()):
                assert cli.main(["figure1", "--outdir", str(tmp / run)]) == 0
                assert cli.main(["figure2", "--outdir", str(tmp / run)]) == 0
        f1 = sorted((tmp / "a").glob("phi_*.csv"))
        f2 = sorted((tmp / "a").glob("psi_*.csv"))
        problems = []
        for f in f1:
            _, rows = tables.read_csv(f)
            phi = np.array([float(r[2]) for r in rows])
            n = int(f.stem.rsplit("_n", 1)[1])
            if len(rows) != 66 or abs(np.sum(phi**2) - 1) > 1e-12:
                problems.append(f.name)
            if not np.array_equal(phi, (-1) ** n * phi[::-1]):
                problems.append(f"{f.name} parity")
        for n in range(3):
            _, rows = tables.read_csv(tmp / "a" / f"psi_a0.5_n{n}.csv")
            x = np.array([float(r[0]) for r in rows])
            psi = np.array([float(r[1]) for r in rows])
            if np.max(np.abs(psi - parabose.hermite_function(n, x))) > 1e-12:
                problems.append(f"hermite n={n}")
        identical = all((tmp / "a" / p.name).read_bytes() == (tmp / "b" / p.name).read_bytes()
                        for p in (tmp / "a").iterdir())
    ok = len(f1) == 12 and len(f2) == 9 and not problems and identical
    assert report(10, "figure data", ok, f"{len(f1)} + {len(f2)} files, issues {problems}, byte-identical {identical}")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
