"""Model parameters, cost rates and the profit integrand.

Stock obeys ``x' = u - d`` so production never appears as a free variable in
the integrand: it is recovered as ``u = x' + d(t)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, fields

import numpy as np
from numpy.polynomial import Polynomial

from .fuzzy import DomainError


@dataclass(frozen=True)
class ModelParams:
    """Constants of the production-inventory model.

    ``h(t) = a + b t`` is the holding cost rate, ``d(t) = d1 + d2 t + d3 t^2``
    the demand, ``c10 u + beta10 u^2`` the production cost rate,
    ``(s1 + s2 u) / t_end`` the set-up cost rate and ``N + L`` the development
    cost rate. ``T`` and ``sigma`` are the center and spread of the fuzzy
    final time.
    """

    p: float
    c10: float
    beta10: float
    L: float
    N: float
    a: float
    b: float
    s1: float
    s2: float
    d1: float
    d2: float
    d3: float
    T: float
    sigma: float = 2.0

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not math.isfinite(value):
                raise DomainError(f"parameter {f.name} must be finite, got {value}")
        if not self.beta10 > 0:
            raise DomainError(
                f"beta10 must be positive (the profit is concave in the production "
                f"rate only for beta10 > 0), got {self.beta10}"
            )
        if not self.T > 0:
            raise DomainError(f"T must be positive, got {self.T}")
        if self.sigma < 0:
            raise DomainError(f"sigma must be non-negative, got {self.sigma}")
        if self.p < 0:
            raise DomainError(f"p must be non-negative, got {self.p}")
        if self.d1 < 0:
            raise DomainError(f"d1 must be non-negative, got {self.d1}")

    @property
    def development_cost(self) -> float:
        return self.N + self.L

    @property
    def demand_poly(self) -> Polynomial:
        return Polynomial([self.d1, self.d2, self.d3])

    @property
    def holding_poly(self) -> Polynomial:
        return Polynomial([self.a, self.b])

    def replace(self, **changes) -> "ModelParams":
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        values.update(changes)
        return ModelParams(**values)


MODEL_KEYS = tuple(f.name for f in fields(ModelParams))

DEFAULT_PARAMS = ModelParams(
    p=200.0, c10=0.7, beta10=0.5, L=40.0, N=60.0, a=3.0, b=0.2,
    s1=10.0, s2=3.0, d1=7.0, d2=4.0, d3=2.0, T=12.0, sigma=2.0,
)


def demand(params: ModelParams, t):
    return params.d1 + params.d2 * t + params.d3 * t * t


def holding_rate(params: ModelParams, t):
    return params.a + params.b * t


def setup_rate(params: ModelParams, t_end: float, u):
    if not t_end > 0:
        raise DomainError(f"t_end must be positive, got {t_end}")
    return (params.s1 + params.s2 * u) / t_end


class Method(str, enum.Enum):
    PRINTED = "printed"
    CORRECTED = "corrected"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class ProfitBreakdown:
    revenue: float
    holding: float
    production_linear: float
    production_quadratic: float
    development_setup: float
    total: float
    method: Method

    @classmethod
    def from_components(cls, method, revenue, holding, production_linear,
                        production_quadratic, development_setup) -> "ProfitBreakdown":
        total = (revenue - holding - production_linear - production_quadratic
                 - development_setup)
        return cls(float(revenue), float(holding), float(production_linear),
                   float(production_quadratic), float(development_setup),
                   float(total), Method(method))

    def as_dict(self) -> dict:
        return {
            "method": self.method.value,
            "revenue": self.revenue,
            "holding": self.holding,
            "production_linear": self.production_linear,
            "production_quadratic": self.production_quadratic,
            "development_setup": self.development_setup,
            "total": self.total,
        }


def integrand_components(params: ModelParams, t_end: float, t, x, xdot):
    """The five cost/revenue rates making up the profit integrand.

    Returns ``(revenue, holding, production_linear, production_quadratic,
    development_setup)``, each a rate per unit time; profit is the first minus
    the rest.
    """
    if not t_end > 0:
        raise DomainError(f"t_end must be positive, got {t_end}")
    t = np.asarray(t, dtype=float)
    d = demand(params, t)
    u = np.asarray(xdot, dtype=float) + d
    revenue = params.p * d
    holding = holding_rate(params, t) * np.asarray(x, dtype=float)
    linear = (params.c10 + params.s2 / t_end) * u
    quadratic = params.beta10 * u * u
    fixed = np.broadcast_to(params.development_cost + params.s1 / t_end, np.shape(u))
    return revenue, holding, linear, quadratic, fixed


def profit_integrand(params: ModelParams, t_end: float, t, x, xdot):
    revenue, holding, linear, quadratic, fixed = integrand_components(
        params, t_end, t, x, xdot)
    value = revenue - holding - linear - quadratic - fixed
    return float(value) if np.ndim(value) == 0 else value
