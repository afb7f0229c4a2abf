"""Triangular fuzzy numbers and crisp horizons resolved from a fuzzy final time."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    CRISP = "crisp"


@dataclass(frozen=True)
class TriangularFuzzyNumber:
    """Fuzzy number with support ``[a1, a3]`` and peak at ``a2``."""

    a1: float
    a2: float
    a3: float

    def __post_init__(self):
        if not (self.a1 <= self.a2 <= self.a3):
            raise DomainError(
                f"triangular fuzzy number needs a1 <= a2 <= a3, got "
                f"({self.a1}, {self.a2}, {self.a3})"
            )

    @classmethod
    def symmetric(cls, center: float, spread: float) -> "TriangularFuzzyNumber":
        if spread < 0:
            raise DomainError(f"spread must be non-negative, got {spread}")
        return cls(center - spread, center, center + spread)

    def membership(self, x):
        """Membership degree of ``x``; works elementwise on arrays."""
        a1, a2, a3 = self.a1, self.a2, self.a3
        xa = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            rising = np.where(a2 > a1, (xa - a1) / (a2 - a1), 1.0)
            falling = np.where(a3 > a2, (a3 - xa) / (a3 - a2), 1.0)
        mu = np.where(xa <= a2, rising, falling)
        mu = np.where((xa < a1) | (xa > a3), 0.0, mu)
        mu = np.clip(mu, 0.0, 1.0)
        return float(mu) if mu.ndim == 0 else mu

    def alpha_cut(self, alpha: float) -> tuple[float, float]:
        """Closed interval of points whose membership is at least ``alpha``."""
        _check_alpha(alpha)
        # Anchored at the peak so that alpha=1 returns a2 bit-exactly.
        lo = self.a2 - (self.a2 - self.a1) * (1.0 - alpha)
        hi = self.a2 + (self.a3 - self.a2) * (1.0 - alpha)
        return lo, hi


def membership(tfn: TriangularFuzzyNumber, x):
    return tfn.membership(x)


def alpha_cut(tfn: TriangularFuzzyNumber, alpha: float) -> tuple[float, float]:
    return tfn.alpha_cut(alpha)


def _check_alpha(alpha: float) -> None:
    if not (0.0 <= alpha <= 1.0):
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")


@dataclass(frozen=True)
class HorizonCut:
    """A crisp planning horizon ``[0, t_end]`` obtained at level ``alpha``."""

    alpha: float
    side: Side
    t_end: float

    def __post_init__(self):
        _check_alpha(self.alpha)
        object.__setattr__(self, "side", Side(self.side))
        if not self.t_end > 0:
            raise DomainError(
                f"{self.side.value} horizon at alpha={self.alpha} is degenerate "
                f"(t_end={self.t_end})"
            )

    @property
    def label(self) -> str:
        return f"{self.side.value} alpha={self.alpha:g}"


def horizon_cuts(T: float, sigma: float, alpha: float) -> tuple[HorizonCut, HorizonCut]:
    """Left and right crisp horizons of the fuzzy final time ``(T-sigma, T, T+sigma)``.

    Raises DomainError when the left horizon is not strictly positive.
    """
    if not T > 0:
        raise DomainError(f"horizon center T must be positive, got {T}")
    lo, hi = TriangularFuzzyNumber.symmetric(T, sigma).alpha_cut(alpha)
    return HorizonCut(alpha, Side.LEFT, lo), HorizonCut(alpha, Side.RIGHT, hi)


def resolve_cut(T: float, sigma: float, alpha: float, side: Side | str) -> HorizonCut:
    """Pick one cut; ``crisp`` ignores ``alpha`` and returns the horizon ``T``."""
    side = Side(side)
    if side is Side.CRISP:
        return HorizonCut(1.0, Side.CRISP, float(T))
    left, right = horizon_cuts(T, sigma, alpha)
    return left if side is Side.LEFT else right
