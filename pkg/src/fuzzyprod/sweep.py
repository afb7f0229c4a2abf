"""Alpha sweeps, reference-table reproduction and discrepancy reporting."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import NamedTuple

from .analytic import Trajectory, profit_corrected, profit_printed, solve, trajectory_table
from .fuzzy import DomainError, Side, resolve_cut
from .model import ModelParams
from .oracle import DEFAULT_QUADRATURE_N, simpson_profit

TRAJECTORY_ALPHAS = (0.4, 0.6, 0.8)
SWEEP_ALPHAS = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)


@lru_cache(maxsize=None)
def reference_values() -> dict:
    """Published reference values shipped with the package (parsed JSON)."""
    text = resources.files("fuzzyprod").joinpath("data/reference_values.json").read_text()
    return json.loads(text)


class SweepRow(NamedTuple):
    alpha: float
    t_end: float
    profit_printed: float
    profit_corrected: float
    profit_quadrature: float


@dataclass(frozen=True)
class SweepResult:
    side: Side
    rows: tuple[SweepRow, ...]
    failures: tuple[tuple[float, str], ...] = ()

    csv_header = SweepRow._fields

    def csv_rows(self):
        return iter(self.rows)

    def row(self, alpha: float) -> SweepRow:
        for r in self.rows:
            if abs(r.alpha - alpha) < 1e-12:
                return r
        raise KeyError(alpha)


def alpha_sweep(params: ModelParams, alphas, side: Side | str,
                quadrature_n: int = DEFAULT_QUADRATURE_N) -> SweepResult:
    """Profit by all three evaluation routes for each ``alpha``.

    An alpha that yields no valid horizon is recorded in ``failures`` and the
    sweep moves on.
    """
    side = Side(side)
    if side is Side.CRISP:
        raise DomainError("sweeps run over the left or right cut")
    rows, failures = [], []
    for alpha in sorted(float(a) for a in alphas):
        try:
            if not 0.0 < alpha <= 1.0:
                raise DomainError(f"sweep alpha must lie in (0, 1], got {alpha}")
            cut = resolve_cut(params.T, params.sigma, alpha, side)
        except DomainError as exc:
            failures.append((alpha, str(exc)))
            continue
        rows.append(SweepRow(
            alpha, cut.t_end,
            profit_printed(params, cut).total,
            profit_corrected(params, cut).total,
            simpson_profit(params, solve(params, cut), quadrature_n),
        ))
    return SweepResult(side, tuple(rows), tuple(failures))


@dataclass(frozen=True)
class TablesBundle:
    """Everything needed to rebuild the published tables and figure data."""

    trajectories: dict = field(repr=False)  # (side, alpha) -> Trajectory
    sweeps: dict = field(repr=False)  # side -> SweepResult
    crisp: Trajectory = field(repr=False)

    def trajectory(self, side: Side | str, alpha: float) -> Trajectory:
        return self.trajectories[(Side(side), round(alpha, 12))]

    def files(self):
        """``(stem, result)`` pairs in a stable order for writing to disk."""
        for (side, alpha), traj in sorted(self.trajectories.items(),
                                          key=lambda kv: (kv[0][0].value, kv[0][1])):
            yield f"trajectory_{side.value}_{alpha:g}", traj
        yield "trajectory_crisp_1", self.crisp
        for side in (Side.RIGHT, Side.LEFT):
            yield f"sweep_{side.value}", self.sweeps[side]


def reproduce_tables(params: ModelParams, step: float = 1.0,
                     quadrature_n: int = DEFAULT_QUADRATURE_N) -> TablesBundle:
    trajectories = {}
    for alpha in TRAJECTORY_ALPHAS + (1.0,):
        for side in (Side.LEFT, Side.RIGHT):
            cut = resolve_cut(params.T, params.sigma, alpha, side)
            trajectories[(side, alpha)] = trajectory_table(params, cut, step)
    crisp = trajectory_table(params, resolve_cut(params.T, params.sigma, 1.0, Side.CRISP), step)
    sweeps = {side: alpha_sweep(params, SWEEP_ALPHAS, side, quadrature_n)
              for side in (Side.LEFT, Side.RIGHT)}
    return TablesBundle(trajectories, sweeps, crisp)


class DiscrepancyEntry(NamedTuple):
    label: str
    paper: float
    printed: float
    corrected: float
    printed_rel_delta: float
    corrected_rel_delta: float


@dataclass(frozen=True)
class DiscrepancyReport:
    entries: tuple[DiscrepancyEntry, ...]

    csv_header = DiscrepancyEntry._fields

    def csv_rows(self):
        return iter(self.entries)

    def entry(self, label: str) -> DiscrepancyEntry:
        for e in self.entries:
            if e.label == label:
                return e
        raise KeyError(label)

    @property
    def worst_printed_delta(self) -> float:
        return max(e.printed_rel_delta for e in self.entries)


def _entry(params, label, side, alpha, published) -> DiscrepancyEntry:
    cut = resolve_cut(params.T, params.sigma, alpha, side)
    printed = profit_printed(params, cut).total
    corrected = profit_corrected(params, cut).total
    scale = abs(published)
    return DiscrepancyEntry(label, published, printed, corrected,
                            abs(printed - published) / scale,
                            abs(corrected - published) / scale)


def discrepancy_report(params: ModelParams) -> DiscrepancyReport:
    """Compare published profits with the printed-formula and exact evaluations."""
    ref = reference_values()
    entries = [_entry(params, h["label"], h["side"], h["alpha"], h["value"])
               for h in ref["headline_profits"]]
    for side in ("right", "left"):
        for alpha, value in ref["sweep_profits"][side].items():
            entries.append(_entry(params, f"{side} alpha={alpha}", side, float(alpha), value))
    return DiscrepancyReport(tuple(entries))
