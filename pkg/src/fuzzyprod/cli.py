"""Command-line interface: ``fuzzyprod {solve,sweep,verify,tables,report}``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from importlib import resources
from pathlib import Path

import numpy as np

from . import export
from .analytic import profit_corrected, profit_printed, solve, trajectory_table
from .config import ConfigError, Format, RunConfig, load_config
from .fuzzy import DomainError, Side, resolve_cut
from .oracle import convergence_study, perturbation_check, simpson_profit
from .sweep import alpha_sweep, discrepancy_report, reproduce_tables

VERIFY_ALPHAS = tuple(round(0.1 * k, 1) for k in range(1, 11))
ORDER_TARGET, ORDER_TOL = 2.0, 0.1
QUADRATURE_RTOL = 1e-9
BOUNDARY_ATOL = 1e-9
NODAL_ATOL = 1e-6


def default_config_path() -> Path:
    return Path(str(resources.files("fuzzyprod").joinpath("data/default.cfg")))


def _grid_sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(n < 2 for n in sizes) or len(sizes) < 2:
        raise argparse.ArgumentTypeError("need at least two grid sizes, each >= 2")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzyprod",
        description="Optimal production over a fuzzy planning horizon.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=None,
                        help="parameter file (default: the bundled default parameter set)")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")
    output.add_argument("--format", choices=[f.value for f in Format], default="csv")

    p = sub.add_parser("solve", parents=[common, output],
                       help="trajectory and profit for one cut")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--side", choices=[s.value for s in Side], required=True)
    p.add_argument("--step", type=float, default=None)

    p = sub.add_parser("sweep", parents=[common, output], help="profit over a range of alpha")
    p.add_argument("--alpha-start", type=float, default=0.1)
    p.add_argument("--alpha-end", type=float, default=0.9)
    p.add_argument("--alpha-step", type=float, default=0.1)
    p.add_argument("--side", choices=[Side.LEFT.value, Side.RIGHT.value], required=True)

    p = sub.add_parser("verify", parents=[common], help="run every numerical cross-check")
    p.add_argument("--grid-sizes", type=_grid_sizes, default=None)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("tables", parents=[common], help="write the full table bundle")
    p.add_argument("--out-dir", type=Path, default=Path("tables"))
    p.add_argument("--format", choices=[f.value for f in Format], default="csv")

    sub.add_parser("report", parents=[common, output],
                   help="published versus computed profits")
    return parser


def _load(args) -> RunConfig:
    return load_config(args.config or default_config_path())


def _emit(result, fmt: str, out: Path | None, stdout) -> None:
    text = export.format_json(result) if fmt == "json" else export.format_csv(result)
    if out is None:
        stdout.write(text)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8", newline="")


def cmd_solve(args, cfg: RunConfig, stdout) -> int:
    prm = cfg.params
    cut = resolve_cut(prm.T, prm.sigma, args.alpha, args.side)
    traj = trajectory_table(prm, cut, args.step or cfg.step)
    profits = (profit_printed(prm, cut), profit_corrected(prm, cut))
    totals = (f"profit_printed={profits[0].total:.10g} "
              f"profit_corrected={profits[1].total:.10g}\n")
    if args.format == "json":
        doc = {"alpha": cut.alpha, "t_end": cut.t_end,
               "trajectory": export.records(traj), "profits": export.records(profits)}
        text = json.dumps(doc, indent=2) + "\n"
        if args.out is None:
            stdout.write(text)
        else:
            args.out.parent.mkdir(parents=True, exist_ok=True)
            args.out.write_text(text, encoding="utf-8", newline="")
            stdout.write(totals)
        return 0
    if args.out is None:
        stdout.write(export.format_csv(traj))
        stdout.write("\n")
        stdout.write(export.format_csv(profits))
    else:
        _emit(traj, "csv", args.out, stdout)
        _emit(profits, "csv", args.out.with_name(args.out.stem + "_profit.csv"), stdout)
        stdout.write(totals)
    return 0


def _alpha_range(start: float, end: float, step: float) -> list[float]:
    if not step > 0:
        raise DomainError(f"alpha step must be positive, got {step}")
    count = int(np.floor((end - start) / step + 1e-9)) + 1
    return [round(start + k * step, 12) for k in range(max(count, 0))]


def cmd_sweep(args, cfg: RunConfig, stdout) -> int:
    alphas = _alpha_range(args.alpha_start, args.alpha_end, args.alpha_step)
    result = alpha_sweep(cfg.params, alphas, args.side, cfg.quadrature_n)
    for alpha, message in result.failures:
        logging.getLogger("fuzzyprod").warning("alpha=%g skipped: %s", alpha, message)
    _emit(result, args.format, args.out, stdout)
    return 0 if not result.failures else 1


def run_checks(cfg: RunConfig, grid_sizes=None, trials: int = 10, seed=None):
    """All numerical cross-checks; yields ``(name, passed, detail)``."""
    prm = cfg.params
    grid_sizes = grid_sizes or cfg.grid_sizes
    seed = cfg.seed if seed is None else seed
    cuts = []
    for alpha in VERIFY_ALPHAS:
        for side in (Side.LEFT, Side.RIGHT):
            try:
                cuts.append(resolve_cut(prm.T, prm.sigma, alpha, side))
            except DomainError:
                pass

    worst = 0.0
    for cut in cuts:
        sol = solve(prm, cut)
        worst = max(worst, abs(sol.stock(0.0)), abs(sol.stock(cut.t_end)))
    yield "boundary conditions", worst <= BOUNDARY_ATOL, f"max |x| at ends = {worst:.3g}"

    worst = 0.0
    for cut in cuts:
        exact = profit_corrected(prm, cut).total
        quad = simpson_profit(prm, solve(prm, cut), cfg.quadrature_n)
        worst = max(worst, abs(quad - exact) / abs(exact))
    yield ("quadrature vs exact profit", worst <= QUADRATURE_RTOL,
           f"max relative difference = {worst:.3g} (n={cfg.quadrature_n})")

    for side in (Side.LEFT, Side.RIGHT):
        cut = resolve_cut(prm.T, prm.sigma, 0.4, side)
        study = convergence_study(prm, solve(prm, cut), grid_sizes)
        ok = abs(study.order - ORDER_TARGET) <= ORDER_TOL
        yield (f"finite-difference order ({cut.label})", ok,
               f"observed order = {study.order:.4f} over n={list(study.ns)}")
        nodal = max(study.nodal_errors)
        yield (f"finite-difference nodal error ({cut.label})", nodal <= NODAL_ATOL,
               f"max nodal error = {nodal:.3g}")

    failed, worst = [], -np.inf
    for cut in cuts:
        rep = perturbation_check(prm, solve(prm, cut), trials=trials, seed=seed,
                                 n=cfg.quadrature_n)
        worst = max(worst, rep.worst_delta)
        if not rep.all_passed:
            failed.append(cut.label)
    yield ("perturbation optimality", not failed,
           f"{len(cuts)} cuts x {trials} trials, seed={seed}, worst dJ = {worst:.4g}"
           + (f"; failed: {', '.join(failed)}" if failed else ""))


def cmd_verify(args, cfg: RunConfig, stdout) -> int:
    all_ok = True
    for name, ok, detail in run_checks(cfg, args.grid_sizes, args.trials, args.seed):
        all_ok &= bool(ok)
        stdout.write(f"{'PASS' if ok else 'FAIL'} {name}: {detail}\n")
    return 0 if all_ok else 1


def cmd_tables(args, cfg: RunConfig, stdout) -> int:
    bundle = reproduce_tables(cfg.params, cfg.step, cfg.quadrature_n)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    items = list(bundle.files()) + [("discrepancy", discrepancy_report(cfg.params))]
    for stem, result in items:
        path = args.out_dir / f"{stem}.{args.format}"
        _emit(result, args.format, path, stdout)
        stdout.write(f"wrote {path}\n")
    return 0


def cmd_report(args, cfg: RunConfig, stdout) -> int:
    _emit(discrepancy_report(cfg.params), args.format, args.out, stdout)
    return 0


COMMANDS = {"solve": cmd_solve, "sweep": cmd_sweep, "verify": cmd_verify,
            "tables": cmd_tables, "report": cmd_report}


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _load(args)
        return COMMANDS[args.command](args, cfg, stdout)
    except (ConfigError, DomainError) as exc:
        print(f"fuzzyprod: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"fuzzyprod: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")
    sys.exit(run())
