"""Closed-form Euler-Lagrange solution of the production-inventory problem.

With the integrand ``p d - h x - (c10 + s2/t_end) u - beta10 u^2 - const`` and
``u = x' + d``, the Euler-Lagrange equation reduces to

    x''(t) = (a + b t) / (2 beta10) - d'(t)

whose solution with ``x(0) = x(t_end) = 0`` is a cubic in ``t``. The linear
coefficient of that cubic is the boundary coefficient returned by
:func:`boundary_coefficient`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numpy.polynomial import Polynomial

from .fuzzy import DomainError, HorizonCut
from .model import Method, ModelParams, ProfitBreakdown, demand


class OutOfHorizonError(DomainError):
    """Evaluation requested outside ``[0, t_end]``."""


def _cubic_coefficient(params: ModelParams) -> float:
    return 2.0 * params.d3 - params.b / (2.0 * params.beta10)


def _quadratic_coefficient(params: ModelParams) -> float:
    return params.a / (2.0 * params.beta10) - params.d2


def boundary_coefficient(params: ModelParams, t_end: float) -> float:
    """Slope ``x'(0)`` that makes the cubic stock vanish again at ``t_end``."""
    if not t_end > 0:
        raise DomainError(f"t_end must be positive, got {t_end}")
    return (_cubic_coefficient(params) * t_end ** 2 / 6.0
            - _quadratic_coefficient(params) * t_end / 2.0)


@dataclass(frozen=True)
class ClosedFormSolution:
    cut: HorizonCut
    B: float
    params: ModelParams

    @property
    def t_end(self) -> float:
        return self.cut.t_end

    @property
    def stock_poly(self) -> Polynomial:
        k3 = _cubic_coefficient(self.params)
        k2 = _quadratic_coefficient(self.params)
        return Polynomial([0.0, self.B, k2 / 2.0, -k3 / 6.0])

    @property
    def production_poly(self) -> Polynomial:
        prm = self.params
        return Polynomial([self.B + prm.d1,
                           prm.a / (2.0 * prm.beta10),
                           prm.b / (4.0 * prm.beta10)])

    def _check(self, t):
        ta = np.asarray(t, dtype=float)
        slack = 1e-12 * self.t_end
        if np.any(ta < -slack) or np.any(ta > self.t_end + slack):
            raise OutOfHorizonError(
                f"t outside [0, {self.t_end}] for the {self.cut.label} cut")
        return ta

    def stock_unchecked(self, t):
        t = np.asarray(t, dtype=float)
        k3 = _cubic_coefficient(self.params)
        k2 = _quadratic_coefficient(self.params)
        x = self.B * t - k3 * t ** 3 / 6.0 + k2 * t ** 2 / 2.0
        return float(x) if x.ndim == 0 else x

    def stock_rate_unchecked(self, t):
        t = np.asarray(t, dtype=float)
        k3 = _cubic_coefficient(self.params)
        k2 = _quadratic_coefficient(self.params)
        v = self.B - k3 * t ** 2 / 2.0 + k2 * t
        return float(v) if v.ndim == 0 else v

    def production_unchecked(self, t):
        t = np.asarray(t, dtype=float)
        prm = self.params
        u = (self.B + prm.d1 + prm.a / (2.0 * prm.beta10) * t
             + prm.b / (2.0 * prm.beta10) * t ** 2 / 2.0)
        return float(u) if u.ndim == 0 else u

    def stock(self, t):
        return self.stock_unchecked(self._check(t))

    def stock_rate(self, t):
        return self.stock_rate_unchecked(self._check(t))

    def production(self, t):
        return self.production_unchecked(self._check(t))


def solve(params: ModelParams, cut: HorizonCut) -> ClosedFormSolution:
    return ClosedFormSolution(cut, boundary_coefficient(params, cut.t_end), params)


def stock(sol: ClosedFormSolution, t):
    return sol.stock(t)


def production(sol: ClosedFormSolution, t):
    return sol.production(t)


class Status(str, enum.Enum):
    FEASIBLE = "feasible"
    NEGATIVE_STOCK = "negative_stock"
    NEGATIVE_PRODUCTION = "negative_production"
    OUT_OF_HORIZON = "out_of_horizon"


class TrajectoryRow(NamedTuple):
    t: float
    u: float | None
    x: float | None
    d: float
    status: Status


@dataclass(frozen=True)
class Trajectory:
    cut: HorizonCut
    rows: tuple[TrajectoryRow, ...]

    csv_header = ("t", "u", "x", "d", "status")

    def csv_rows(self):
        for r in self.rows:
            yield (r.t, r.u, r.x, r.d, r.status.value)

    def row_at(self, t: float) -> TrajectoryRow:
        for r in self.rows:
            if math.isclose(r.t, t, rel_tol=0, abs_tol=1e-9):
                return r
        raise KeyError(t)

    def feasible_rows(self) -> list[TrajectoryRow]:
        return [r for r in self.rows if r.status is not Status.OUT_OF_HORIZON]


def trajectory_table(params: ModelParams, cut: HorizonCut, step: float = 1.0,
                     t_max: float | None = None) -> Trajectory:
    """Sample production, stock and demand on ``t = 0, step, 2 step, ...``.

    The grid reaches the first multiple of ``step`` at or beyond ``t_max``
    (default ``max(t_end, T + sigma)``, the widest horizon any cut can have),
    so every cut of one parameter set shares a grid. Nodes past ``t_end``
    carry no production or stock values.
    """
    if not step > 0:
        raise DomainError(f"step must be positive, got {step}")
    if t_max is None:
        t_max = max(cut.t_end, params.T + params.sigma)
    n_steps = math.ceil(t_max / step - 1e-9)
    sol = solve(params, cut)
    # Sign tolerance for roundoff in x(t_end) = 0.
    tol = 1e-9 * max(1.0, abs(sol.B) * cut.t_end)
    rows = []
    for k in range(n_steps + 1):
        t = k * step
        d = float(demand(params, t))
        if t > cut.t_end * (1 + 1e-12):
            rows.append(TrajectoryRow(t, None, None, d, Status.OUT_OF_HORIZON))
            continue
        u = sol.production_unchecked(t)
        x = sol.stock_unchecked(t)
        if x < -tol:
            status = Status.NEGATIVE_STOCK
        elif u < -tol:
            status = Status.NEGATIVE_PRODUCTION
        else:
            status = Status.FEASIBLE
        rows.append(TrajectoryRow(t, u, x, d, status))
    return Trajectory(cut, tuple(rows))


def profit_printed(params: ModelParams, cut: HorizonCut) -> ProfitBreakdown:
    """Closed-form profit per the published term-by-term expression.

    Kept verbatim, including the constant-production-squared term that lacks
    a horizon factor and the halved ``a b`` cross term, so the published
    profit values can be reproduced. Use :func:`profit_corrected` for the
    exact integral.
    """
    prm = params
    T = cut.t_end
    B = boundary_coefficient(prm, T)
    A = 0.0
    k3 = _cubic_coefficient(prm)
    k2 = _quadratic_coefficient(prm)
    ra = prm.a / (2.0 * prm.beta10)
    rb = prm.b / (2.0 * prm.beta10)
    c0 = B + prm.d1

    revenue = prm.p * (prm.d1 * T + prm.d2 * T ** 2 / 2 + prm.d3 * T ** 3 / 3)
    development_setup = (prm.development_cost + prm.s1 / T) * T
    holding = (prm.a * (A * T + B * T ** 2 / 2 - k3 * T ** 4 / 24 + k2 * T ** 3 / 6)
               + prm.b * (A * T / 2 + B * T ** 3 / 3 - k3 * T ** 5 / 30
                          + k2 * T ** 4 / 8))
    linear = (prm.c10 + prm.s2 / T) * (B * T + prm.d1 * T + rb * T ** 3 / 6
                                       + ra * T ** 2 / 2)
    quadratic = prm.beta10 * (
        c0 ** 2
        + rb ** 2 * T ** 5 / 20
        + ra ** 2 * T ** 3 / 3
        + prm.b * c0 / prm.beta10 * T ** 3 / 6
        + prm.a * c0 / (2 * prm.beta10) * T ** 2
        + prm.a * prm.b / (4 * prm.beta10 ** 2) * T ** 4 / 8
    )
    return ProfitBreakdown.from_components(
        Method.PRINTED, revenue, holding, linear, quadratic, development_setup)


def profit_corrected(params: ModelParams, cut: HorizonCut) -> ProfitBreakdown:
    """Exact integral of the profit integrand along the closed-form solution."""
    sol = solve(params, cut)
    T = cut.t_end
    u = sol.production_poly

    def integral(poly: Polynomial) -> float:
        anti = poly.integ()
        return float(anti(T) - anti(0.0))

    revenue = params.p * integral(params.demand_poly)
    holding = integral(params.holding_poly * sol.stock_poly)
    linear = (params.c10 + params.s2 / T) * integral(u)
    quadratic = params.beta10 * integral(u * u)
    development_setup = params.development_cost * T + params.s1
    return ProfitBreakdown.from_components(
        Method.CORRECTED, revenue, holding, linear, quadratic, development_setup)
