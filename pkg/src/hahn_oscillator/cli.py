"""Command-line interface: ``hahn-osc <command> [options]``.

Commands
--------
verify        run the verification suites; exit 1 on the first failing check
spectrum      position spectrum (closed form and eigensolver) of one representation
wavefunction  discrete wavefunctions Phi_n(q_k), one file per level
figure1       data behind the discrete-wavefunction figure (2j = 65)
figure2       data behind the parabose-wavefunction figure
limit-scan    parabose limit error scans, checked against (or frozen into) a fixture

Exit codes: 0 success, 1 verification failure, 2 usage error. Multi-file
commands write into ``--outdir``, which defaults to ``$HAHN_OSC_OUTPUT_DIR``
or the current directory.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import checks, limits, oscillator, parabose, tables
from .algebra import RepParams

OUTPUT_ENV = "HAHN_OSC_OUTPUT_DIR"

FIG1_TWO_J = 65
FIG1_ALPHAS = (-0.5, -0.7, 1.0)
FIG1_LEVELS = (0, 1, 2, 65)
FIG2_A = (0.5, 0.3, 2.0)
FIG2_LEVELS = (0, 1, 2)

# Phi columns must have unit discrete norm when written
NORM_TOL = 1e-12


def _two_j(text: str) -> int:
    value = int(text)
    if value <= 0 or value % 2 == 0:
        raise argparse.ArgumentTypeError("two_j must be odd")
    return value


def _alpha(text: str) -> float:
    value = float(text)
    if not value > -1:
        raise argparse.ArgumentTypeError("alpha must exceed -1")
    return value


def _a(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("a must be positive")
    return value


def _level(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("levels must be nonnegative")
    return value


def _outdir(args) -> Path:
    if args.outdir is not None:
        return Path(args.outdir)
    return Path(os.environ.get(OUTPUT_ENV, "."))


def _emit(args, columns, rows, metadata) -> None:
    text = tables.render(columns, rows, metadata, args.format)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).parent.mkdir(parents=True, exist_ok=True)
        Path(args.output).write_text(text)


def _write_phi(outdir: Path, table: oscillator.WavefunctionTable, level: int, fmt: str) -> Path:
    p = table.params
    if level > p.two_j:
        raise ValueError(f"level {level} exceeds 2j={p.two_j}")
    values = table.values[level]
    norm_err = abs(math.fsum(v * v for v in values) - 1.0)
    if norm_err > NORM_TOL:
        raise ArithmeticError(f"Phi_{level} norm off by {norm_err:.3e}")
    rows = [(int(k), float(q), float(v)) for k, q, v in zip(table.k_twice, table.q, values)]
    meta = {"two_j": p.two_j, "alpha": p.alpha, "n": level}
    name = f"phi_2j{p.two_j}_alpha{tables.tag(p.alpha)}_n{level}.{fmt}"
    return tables.write(outdir / name, ("k_twice", "q", "phi"), rows, meta, fmt)


def _write_psi(outdir: Path, a: float, level: int, xs: np.ndarray, fmt: str) -> Path:
    rows = [(float(x), parabose.psi(level, a, float(x))) for x in xs]
    meta = {"a": a, "n": level}
    name = f"psi_a{tables.tag(a)}_n{level}.{fmt}"
    return tables.write(outdir / name, ("x", "psi"), rows, meta, fmt)


def cmd_verify(args) -> int:
    two_js = args.two_j or checks.GRID_TWO_J
    alphas = args.alpha or checks.GRID_ALPHA
    thresholds = limits.load_thresholds(args.thresholds)
    results = checks.full_suite(two_js, alphas, thresholds, args.suite)
    rows = [(c.name, c.residual, c.tolerance, "PASS" if c.passed else "FAIL") for c in results]
    meta = {"two_j": list(two_js), "alpha": list(alphas), "checks": len(results)}
    _emit(args, ("check", "residual", "tolerance", "status"), rows, meta)
    failed = [c for c in results if not c.passed]
    if failed:
        print(f"verification failed: {failed[0].name} (residual {failed[0].residual:.3e} "
              f"> {failed[0].tolerance:.3e}); {len(failed)} failing", file=sys.stderr)
        return 1
    print(f"all {len(results)} checks passed", file=sys.stderr)
    return 0


def cmd_spectrum(args) -> int:
    p = RepParams.from_two_j(args.two_j, args.alpha)
    closed = oscillator.position_spectrum_closed_form(p)
    numeric = oscillator.position_spectrum_numeric(p)
    rows = [(int(k), float(q), float(n)) for k, q, n in zip(closed.k_twice, closed.eigenvalues, numeric)]
    meta = {"two_j": p.two_j, "alpha": p.alpha}
    _emit(args, ("k_twice", "q", "q_eigensolver"), rows, meta)
    return 0


def cmd_wavefunction(args) -> int:
    p = RepParams.from_two_j(args.two_j, args.alpha)
    levels = args.levels if args.levels is not None else list(range(p.dim))
    bad = [n for n in levels if n > p.two_j]
    if bad:
        print(f"error: levels {bad} exceed 2j={p.two_j}", file=sys.stderr)
        return 2
    table = oscillator.wavefunction_table(p)
    outdir = _outdir(args)
    for n in levels:
        print(_write_phi(outdir, table, n, args.format))
    return 0


def cmd_figure1(args) -> int:
    outdir = _outdir(args)
    bad = [n for n in args.levels if n > args.two_j]
    if bad:
        print(f"error: levels {bad} exceed 2j={args.two_j}", file=sys.stderr)
        return 2
    for alpha in args.alphas:
        table = oscillator.wavefunction_table(RepParams.from_two_j(args.two_j, alpha))
        for n in args.levels:
            print(_write_phi(outdir, table, n, args.format))
    return 0


def cmd_figure2(args) -> int:
    outdir = _outdir(args)
    xs = np.linspace(args.x_min, args.x_max, args.points)
    for a in args.a:
        for n in args.levels:
            print(_write_psi(outdir, a, n, xs, args.format))
    return 0


def cmd_limit_scan(args) -> int:
    scans = [
        limits.parabose_limit_scan(n, alpha, limits.DEFAULT_X_GRID, args.two_j_seq)
        for alpha in args.alphas
        for n in args.levels
    ]
    rows = [(s.n, s.alpha, tj, err) for s in scans for tj, err in zip(s.two_j, s.errors)]
    meta = {"x_grid": list(limits.DEFAULT_X_GRID), "slack": limits.MONOTONE_SLACK}
    _emit(args, ("n", "alpha", "two_j", "error"), rows, meta)

    if args.freeze:
        table = {
            (s.n, s.alpha, s.two_j[-1]): _round_up(s.final_error * args.margin) for s in scans
        }
        path = args.thresholds or limits.default_thresholds_path()
        limits.write_thresholds(path, table)
        print(f"froze {len(table)} thresholds into {path}", file=sys.stderr)
        return 0

    thresholds = limits.load_thresholds(args.thresholds)
    status = 0
    for s in scans:
        if not s.is_monotone():
            print(f"FAIL monotone n={s.n} alpha={s.alpha}: {s.errors}", file=sys.stderr)
            status = 1
        key = (s.n, s.alpha, s.two_j[-1])
        if key not in thresholds:
            print(f"no threshold recorded for {key}", file=sys.stderr)
            status = 1
        elif s.final_error > thresholds[key]:
            print(f"FAIL threshold {key}: {s.final_error:.3e} > {thresholds[key]:.3e}", file=sys.stderr)
            status = 1
    return status


def _round_up(value: float) -> float:
    """Round up to 3 significant digits."""
    if value <= 0:
        return value
    exp = math.floor(math.log10(value)) - 2
    return math.ceil(value / 10**exp) * 10**exp


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hahn-osc", description="Finite u(2)_alpha (Hahn) oscillator toolkit."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, multi_file=False):
        p.add_argument("--format", choices=tables.FORMATS, default="csv")
        if multi_file:
            p.add_argument("--outdir", help=f"output directory (default ${OUTPUT_ENV} or .)")
        else:
            p.add_argument("--output", help="output file (default stdout)")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--two-j", type=_two_j, nargs="+", help="2j values (default grid 1 3 9 65)")
    p.add_argument("--alpha", type=_alpha, nargs="+", help="alpha values (default grid)")
    p.add_argument("--suite", choices=checks.SUITES, nargs="+", help="subset of suites")
    p.add_argument("--thresholds", help="limit-scan threshold fixture")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectrum", help="position spectrum of one representation")
    p.add_argument("--two-j", type=_two_j, required=True)
    p.add_argument("--alpha", type=_alpha, required=True)
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("wavefunction", help="discrete wavefunction tables")
    p.add_argument("--two-j", type=_two_j, required=True)
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--levels", type=_level, nargs="+", help="levels n (default all)")
    common(p, multi_file=True)
    p.set_defaults(func=cmd_wavefunction)

    p = sub.add_parser("figure1", help="discrete wavefunctions for the first figure")
    p.add_argument("--two-j", type=_two_j, default=FIG1_TWO_J)
    p.add_argument("--alphas", type=_alpha, nargs="+", default=list(FIG1_ALPHAS))
    p.add_argument("--levels", type=_level, nargs="+", default=list(FIG1_LEVELS))
    common(p, multi_file=True)
    p.set_defaults(func=cmd_figure1)

    p = sub.add_parser("figure2", help="parabose wavefunctions for the second figure")
    p.add_argument("--a", type=_a, nargs="+", default=list(FIG2_A))
    p.add_argument("--levels", type=_level, nargs="+", default=list(FIG2_LEVELS))
    p.add_argument("--x-min", type=float, default=-5.0)
    p.add_argument("--x-max", type=float, default=5.0)
    p.add_argument("--points", type=int, default=501)
    common(p, multi_file=True)
    p.set_defaults(func=cmd_figure2)

    p = sub.add_parser("limit-scan", help="parabose limit scans against frozen thresholds")
    p.add_argument("--alphas", type=_alpha, nargs="+", default=list(checks.LIMIT_ALPHAS))
    p.add_argument("--levels", type=_level, nargs="+", default=list(checks.LIMIT_LEVELS))
    p.add_argument("--two-j-seq", type=_two_j, nargs="+", default=list(limits.DEFAULT_TWO_J_SEQUENCE))
    p.add_argument("--thresholds", help="threshold fixture path (default: bundled file)")
    p.add_argument("--freeze", action="store_true", help="write measured thresholds instead of checking")
    p.add_argument("--margin", type=float, default=1.1, help="calibration factor used with --freeze")
    common(p)
    p.set_defaults(func=cmd_limit_scan)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
