"""Optimal production-inventory control over a fuzzy planning horizon.

The stock path solving the Euler-Lagrange equation is a cubic polynomial, so
trajectories and profits are available in closed form. Quadrature, a
finite-difference boundary-value solve and random perturbations provide
independent checks.
"""
from .analytic import (
    ClosedFormSolution,
    OutOfHorizonError,
    Status,
    Trajectory,
    boundary_coefficient,
    production,
    profit_corrected,
    profit_printed,
    solve,
    stock,
    trajectory_table,
)
from .config import ConfigError, RunConfig, load_config, parse_config
from .export import emit_csv, emit_json, read_csv
from .fuzzy import (
    DomainError,
    HorizonCut,
    Side,
    TriangularFuzzyNumber,
    alpha_cut,
    horizon_cuts,
    membership,
    resolve_cut,
)
from .model import (
    DEFAULT_PARAMS,
    Method,
    ModelParams,
    ProfitBreakdown,
    demand,
    holding_rate,
    profit_integrand,
    setup_rate,
)
from .oracle import (
    GridSolution,
    convergence_study,
    fd_euler_lagrange,
    perturbation_check,
    simpson,
    simpson_profit,
    thomas_solve,
)
from .sweep import alpha_sweep, discrepancy_report, reproduce_tables

__version__ = "0.1.0"
