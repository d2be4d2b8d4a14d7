"""
dampsearch core types shared by every search model

SearchInstance is the (N, M, theta) parameterization; ProbabilityCurve is
the common output of the Grover, damped and classical models.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .constants import (
    DEFAULT_J_MAX_FLOOR,
    DEFAULT_J_MAX_SCALE,
    DEFAULT_MAX_SPINS,
    MODELS,
    SIGNIFICANT_DIGITS,
)
from .exceptions import InvalidArgumentError

# Tolerance for roundoff outside [0, 1] before a curve is rejected
PROBABILITY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SimulationConfig:
    """Explicit configuration; there are no environment variables"""

    max_spins: int = DEFAULT_MAX_SPINS
    j_max_floor: int = DEFAULT_J_MAX_FLOOR
    j_max_scale: float = DEFAULT_J_MAX_SCALE
    significant_digits: int = SIGNIFICANT_DIGITS
    workers: int = 1

    def __post_init__(self):
        if self.max_spins < 2:
            raise InvalidArgumentError("max_spins must be at least 2")
        if self.j_max_floor < 1:
            raise InvalidArgumentError("j_max_floor must be at least 1")
        if self.j_max_scale <= 0:
            raise InvalidArgumentError("j_max_scale must be positive")
        if self.significant_digits < 1:
            raise InvalidArgumentError("significant_digits must be at least 1")
        if self.workers < 1:
            raise InvalidArgumentError("workers must be at least 1")


DEFAULT_CONFIG = SimulationConfig()


@dataclass(frozen=True)
class SearchInstance:
    """
    Database of N items holding M targets, with sin^2(theta) = M/N.

    theta is derived from (N, M) on construction and is not an init argument.
    M = 0 is accepted as the empty-target limit (theta = 0); operations that
    need at least one target reject it.
    """

    n_items: int
    n_targets: int
    theta: float = field(init=False, repr=False)

    def __post_init__(self):
        if isinstance(self.n_items, bool) or not isinstance(self.n_items, int):
            raise InvalidArgumentError("N must be an integer", n_items=self.n_items)
        if isinstance(self.n_targets, bool) or not isinstance(self.n_targets, int):
            raise InvalidArgumentError(
                "M must be an integer", n_targets=self.n_targets
            )
        if self.n_items < 1:
            raise InvalidArgumentError(
                f"N must be positive, got {self.n_items}", n_items=self.n_items
            )
        if not 0 <= self.n_targets <= self.n_items:
            raise InvalidArgumentError(
                f"M must satisfy 0 <= M <= N, got M={self.n_targets}, N={self.n_items}",
                n_items=self.n_items,
                n_targets=self.n_targets,
            )
        # asin of a square root, matching sin^2(theta) = M/N
        theta = math.asin(math.sqrt(self.n_targets / self.n_items))
        object.__setattr__(self, "theta", theta)

    @property
    def target_fraction(self) -> float:
        """M/N"""
        return self.n_targets / self.n_items

    @property
    def sin_theta(self) -> float:
        return math.sin(self.theta)

    @property
    def cos_theta(self) -> float:
        return math.cos(self.theta)

    @property
    def is_empty(self) -> bool:
        return self.n_targets == 0

    @property
    def is_full(self) -> bool:
        return self.n_targets == self.n_items

    def to_dict(self) -> dict[str, Any]:
        return {"N": self.n_items, "M": self.n_targets}


@dataclass(frozen=True)
class CurveModel:
    """Provenance of a probability curve: model tag plus its parameters"""

    kind: str
    instance: SearchInstance
    cos_phi: float | None = None

    def __post_init__(self):
        if self.kind not in MODELS:
            raise InvalidArgumentError(
                f"Unknown model {self.kind!r}; expected one of {', '.join(MODELS)}"
            )

    def to_dict(self) -> dict[str, Any]:
        return {"model": self.kind, "cos_phi": self.cos_phi, **self.instance.to_dict()}


@dataclass(frozen=True)
class ProbabilityCurve:
    """
    Success probabilities P(1..j_max) of one model on one instance.

    ``p[0]`` holds P(1). The array is copied, clipped against float
    roundoff and made read-only.
    """

    model: CurveModel
    p: np.ndarray

    def __post_init__(self):
        values = np.array(self.p, dtype=np.float64).reshape(-1)
        if values.size < 1:
            raise InvalidArgumentError("Probability curve needs at least one point")
        if not np.all(np.isfinite(values)):
            raise InvalidArgumentError("Probability curve contains non-finite values")
        low, high = float(values.min()), float(values.max())
        if low < -PROBABILITY_TOLERANCE or high > 1 + PROBABILITY_TOLERANCE:
            raise InvalidArgumentError(
                f"Probabilities must lie in [0, 1], got range [{low}, {high}]"
            )
        values = np.clip(values, 0.0, 1.0)
        values.flags.writeable = False
        object.__setattr__(self, "p", values)

    @property
    def j_max(self) -> int:
        return int(self.p.size)

    @property
    def iterations(self) -> np.ndarray:
        """Iteration counts 1..j_max aligned with ``p``"""
        return np.arange(1, self.j_max + 1)

    def at(self, j: int) -> float:
        """P(j) for 1 <= j <= j_max; P(0) is 0 by convention"""
        if j == 0:
            return 0.0
        if not 1 <= j <= self.j_max:
            raise InvalidArgumentError(f"j must lie in [0, {self.j_max}], got {j}")
        return float(self.p[j - 1])


def require_j_max(j_max: int) -> int:
    """Validate an iteration bound shared by every curve builder"""
    if isinstance(j_max, bool) or not isinstance(j_max, int | np.integer):
        raise InvalidArgumentError(f"j_max must be an integer, got {j_max!r}")
    if j_max < 1:
        raise InvalidArgumentError(f"j_max must be at least 1, got {j_max}")
    return int(j_max)
