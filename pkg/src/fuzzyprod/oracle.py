"""Independent numerical checks of the closed-form solution.

Three routes that share nothing with the symbolic integration in
:mod:`fuzzyprod.analytic`: composite Simpson quadrature of the pointwise
integrand, a finite-difference solve of the Euler-Lagrange boundary-value
problem, and random admissible perturbations of the optimal stock path.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import Polynomial
from scipy.integrate import simpson as _scipy_simpson

from .analytic import ClosedFormSolution
from .fuzzy import DomainError, HorizonCut
from .model import Method, ModelParams, ProfitBreakdown, integrand_components

DEFAULT_QUADRATURE_N = 1024


def _check_panels(n: int) -> None:
    if n < 2 or n % 2:
        raise DomainError(f"Simpson's rule needs an even number of intervals >= 2, got {n}")


def simpson(f, lo: float, hi: float, n: int) -> float:
    """Composite Simpson's rule for a vectorized ``f`` on ``n`` even intervals."""
    _check_panels(n)
    t = np.linspace(lo, hi, n + 1)
    return float(_scipy_simpson(np.broadcast_to(f(t), t.shape), x=t))


def _profit_parts(params, t_end, x_fn, xdot_fn, n):
    _check_panels(n)
    if n < 4:
        raise DomainError(f"profit quadrature needs n >= 4, got {n}")
    t = np.linspace(0.0, t_end, n + 1)
    parts = integrand_components(params, t_end, t, x_fn(t), xdot_fn(t))
    return [float(_scipy_simpson(np.broadcast_to(v, t.shape), x=t)) for v in parts]


def simpson_breakdown(params: ModelParams, sol: ClosedFormSolution,
                      n: int = DEFAULT_QUADRATURE_N) -> ProfitBreakdown:
    parts = _profit_parts(params, sol.t_end, sol.stock_unchecked,
                          sol.stock_rate_unchecked, n)
    return ProfitBreakdown.from_components(Method.QUADRATURE, *parts)


def simpson_profit(params: ModelParams, sol: ClosedFormSolution,
                   n: int = DEFAULT_QUADRATURE_N) -> float:
    """Profit along the closed-form path by composite Simpson quadrature."""
    return simpson_breakdown(params, sol, n).total


def path_profit(params: ModelParams, t_end: float, x_fn, xdot_fn,
                n: int = DEFAULT_QUADRATURE_N) -> float:
    """Profit along an arbitrary stock path given as callables ``x`` and ``x'``."""
    revenue, *costs = _profit_parts(params, t_end, x_fn, xdot_fn, n)
    return revenue - sum(costs)


def thomas_solve(lower, diag, upper, rhs):
    """Solve a tridiagonal system by forward elimination and back substitution.

    ``lower[i]`` multiplies ``x[i-1]`` and ``upper[i]`` multiplies ``x[i+1]`` in
    row ``i``; ``lower[0]`` and ``upper[-1]`` are ignored. No pivoting, so the
    system should be diagonally dominant or otherwise stable.
    """
    lower = np.asarray(lower, dtype=float)
    diag = np.asarray(diag, dtype=float)
    upper = np.asarray(upper, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    n = diag.size
    if not (lower.size == upper.size == rhs.size == n):
        raise ValueError("tridiagonal bands and right-hand side must have equal length")
    c = np.empty(n)
    g = np.empty(n)
    c[0] = upper[0] / diag[0]
    g[0] = rhs[0] / diag[0]
    for i in range(1, n):
        m = diag[i] - lower[i] * c[i - 1]
        c[i] = upper[i] / m if i < n - 1 else 0.0
        g[i] = (rhs[i] - lower[i] * g[i - 1]) / m
    x = np.empty(n)
    x[-1] = g[-1]
    for i in range(n - 2, -1, -1):
        x[i] = g[i] - c[i] * x[i + 1]
    return x


def forcing(params: ModelParams, t):
    """Right-hand side of ``x'' = f(t)`` from the Euler-Lagrange equation."""
    r = 2.0 * params.beta10
    return -2.0 * params.d3 * t + params.b * t / r + params.a / r - params.d2


@dataclass(frozen=True)
class GridSolution:
    cut: HorizonCut
    n: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.n < 2 or self.values.shape != (self.n + 1,):
            raise ValueError("grid solution needs n >= 2 and n + 1 values")

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(0.0, self.cut.t_end, self.n + 1)

    def __call__(self, t):
        """Piecewise-linear reconstruction between grid nodes."""
        return np.interp(t, self.nodes, self.values)


def fd_euler_lagrange(params: ModelParams, cut: HorizonCut, n: int) -> GridSolution:
    """Second-difference solve of ``x'' = f`` with ``x(0) = x(t_end) = 0``."""
    if n < 2:
        raise DomainError(f"grid needs at least 2 intervals, got {n}")
    h = cut.t_end / n
    t = np.linspace(0.0, cut.t_end, n + 1)
    m = n - 1
    values = np.zeros(n + 1)
    if m:
        values[1:-1] = thomas_solve(np.ones(m), np.full(m, -2.0), np.ones(m),
                                    h * h * forcing(params, t[1:-1]))
    return GridSolution(cut, n, values)


def fd_errors(grid: GridSolution, sol: ClosedFormSolution,
              samples_per_cell: int = 16) -> tuple[float, float]:
    """Max-abs error of a grid solution against the closed form.

    Returns ``(nodal, uniform)``: the error at grid nodes and the error of
    the piecewise-linear reconstruction over the whole horizon. The three-point
    scheme is exact at nodes for cubic solutions, so ``nodal`` is roundoff and
    ``uniform`` carries the O(h^2) discretisation error.
    """
    nodal = float(np.max(np.abs(grid.values - sol.stock_unchecked(grid.nodes))))
    t = np.linspace(0.0, grid.cut.t_end, grid.n * samples_per_cell + 1)
    uniform = float(np.max(np.abs(grid(t) - sol.stock_unchecked(t))))
    return nodal, uniform


@dataclass(frozen=True)
class ConvergenceStudy:
    ns: tuple[int, ...]
    nodal_errors: tuple[float, ...]
    errors: tuple[float, ...]
    order: float


def convergence_study(params: ModelParams, sol: ClosedFormSolution, ns) -> ConvergenceStudy:
    """Observed order of the finite-difference solution as ``n`` grows.

    The order is the negative slope of a least-squares line through
    ``(log n, log error)`` using the uniform (reconstruction) error.
    """
    ns = tuple(int(n) for n in ns)
    if len(ns) < 2:
        raise DomainError("convergence study needs at least two grid sizes")
    nodal, uniform = zip(*(fd_errors(fd_euler_lagrange(params, sol.cut, n), sol) for n in ns))
    slope = np.polyfit(np.log(ns), np.log(uniform), 1)[0]
    return ConvergenceStudy(ns, tuple(nodal), tuple(uniform), float(-slope))


@dataclass(frozen=True)
class PerturbationReport:
    all_passed: bool
    worst_delta: float
    deltas: tuple[float, ...]
    seed: int
    epsilon: float
    base_profit: float


def random_bump(rng: np.random.Generator, t_end: float) -> Polynomial:
    """Random polynomial of degree <= 5 vanishing at 0 and ``t_end``, max |.| ~ 1."""
    q = Polynomial(rng.standard_normal(4))(Polynomial([0.0, 1.0 / t_end]))
    eta = Polynomial([0.0, t_end, -1.0]) * q
    scale = np.max(np.abs(eta(np.linspace(0.0, t_end, 257))))
    return eta / scale if scale > 0 else eta


def perturbation_check(params: ModelParams, sol: ClosedFormSolution, trials: int = 10,
                       epsilon: float = 0.1, seed: int = 42,
                       n: int = DEFAULT_QUADRATURE_N) -> PerturbationReport:
    """Compare the profit of ``x* + epsilon eta`` to that of ``x*``.

    Each trial passes when the perturbed profit does not exceed the optimal
    profit by more than ``1e-9 |J|``.
    """
    if not epsilon > 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    rng = np.random.default_rng(seed)
    t_end = sol.t_end
    base = path_profit(params, t_end, sol.stock_unchecked, sol.stock_rate_unchecked, n)
    deltas = []
    for _ in range(trials):
        eta = random_bump(rng, t_end)
        deta = eta.deriv()
        perturbed = path_profit(
            params, t_end,
            lambda t: sol.stock_unchecked(t) + epsilon * eta(t),
            lambda t: sol.stock_rate_unchecked(t) + epsilon * deta(t),
            n,
        )
        deltas.append(perturbed - base)
    limit = 1e-9 * abs(base)
    return PerturbationReport(all(d <= limit for d in deltas), max(deltas),
                              tuple(deltas), seed, epsilon, base)
