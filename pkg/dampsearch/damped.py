"""
Damped quantum search

The search system is coupled to an external spin that is flipped once a
target is found. Only the traces (Tr rho X, Tr rho Z, Tr rho) of the
surviving search state are tracked, and each step of the recurrence maps them
through a fixed 3x3 transfer matrix. One query advances the recurrence by
DAMPED_STEPS_PER_QUERY steps (two by default), so the success probability
after j queries is 1 - Tr rho at step 2j.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass

import numpy as np

from .constants import (
    DAMPED_STEPS_PER_QUERY,
    MODEL_CLASSICAL_FULLY_DAMPED,
    MODEL_DAMPED,
)
from .core import CurveModel, ProbabilityCurve, SearchInstance, require_j_max
from .exceptions import DampingDomainError, InvalidArgumentError

logger = logging.getLogger(__name__)


class DampingMode(enum.Enum):
    CRITICAL = "critical"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class DampingConfig:
    """
    Damping strength cos(phi).

    Critical mode derives cos(phi) = (1 - sin theta)/(1 + sin theta) from the
    instance at use time; explicit mode carries a fixed value in [0, 1].
    steps_per_query sets how many recurrence steps one query counts for.
    """

    mode: DampingMode = DampingMode.CRITICAL
    cos_phi: float | None = None
    steps_per_query: int = DAMPED_STEPS_PER_QUERY

    def __post_init__(self):
        if self.mode is DampingMode.EXPLICIT:
            _require_cos_phi(self.cos_phi)
        elif self.cos_phi is not None:
            raise DampingDomainError("Critical damping does not take a cos_phi value")
        steps = self.steps_per_query
        if not isinstance(steps, int) or isinstance(steps, bool) or steps < 1:
            raise InvalidArgumentError(
                f"steps_per_query must be a positive integer, got {steps!r}",
                steps_per_query=steps,
            )

    @classmethod
    def critical(cls, steps_per_query: int = DAMPED_STEPS_PER_QUERY) -> DampingConfig:
        return cls(mode=DampingMode.CRITICAL, steps_per_query=steps_per_query)

    @classmethod
    def explicit(
        cls, cos_phi: float, steps_per_query: int = DAMPED_STEPS_PER_QUERY
    ) -> DampingConfig:
        return cls(
            mode=DampingMode.EXPLICIT, cos_phi=cos_phi, steps_per_query=steps_per_query
        )

    def resolve(self, instance: SearchInstance) -> float:
        """cos(phi) to use on this instance"""
        if self.mode is DampingMode.CRITICAL:
            return critical_damping(instance)
        return float(self.cos_phi)


@dataclass(frozen=True)
class DampedState:
    """Trace triple (x, z, t) = (Tr rho X, Tr rho Z, Tr rho)"""

    x: float
    z: float
    t: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.z, self.t], dtype=np.float64)

    @classmethod
    def from_array(cls, values: np.ndarray) -> DampedState:
        x, z, t = (float(v) for v in values)
        return cls(x=x, z=z, t=t)

    @property
    def success_probability(self) -> float:
        return 1.0 - self.t


@dataclass(frozen=True)
class TransferMatrix:
    """One damped query acting on (x, z, t)"""

    theta: float
    cos_phi: float
    entries: np.ndarray

    def apply(self, state: DampedState) -> DampedState:
        return DampedState.from_array(self.entries @ state.as_array())


def _require_cos_phi(cos_phi: float | None) -> float:
    if cos_phi is None or not math.isfinite(cos_phi) or not 0.0 <= cos_phi <= 1.0:
        raise DampingDomainError(
            f"cos_phi must lie in [0, 1], got {cos_phi!r}", cos_phi=cos_phi
        )
    return float(cos_phi)


def critical_damping(instance: SearchInstance) -> float:
    """(1 - sin theta) / (1 + sin theta)"""
    s = instance.sin_theta
    return (1.0 - s) / (1.0 + s)


def transfer_matrix(theta: float, cos_phi: float) -> TransferMatrix:
    """
    Rows (x', z', t'):

        ( cos2t cp,  sin2t (1+cp^2)/2,  sin2t (1-cp^2)/2 )
        (-sin2t cp,  cos2t (1+cp^2)/2,  cos2t (1-cp^2)/2 )
        ( 0,         (1-cp^2)/2,        (1+cp^2)/2       )
    """
    if not math.isfinite(theta) or not 0.0 <= theta <= math.pi / 2:
        raise DampingDomainError(
            f"theta must lie in [0, pi/2], got {theta!r}", theta=theta
        )
    cos_phi = _require_cos_phi(cos_phi)
    c2, s2 = math.cos(2 * theta), math.sin(2 * theta)
    keep = (1.0 + cos_phi**2) / 2
    leak = (1.0 - cos_phi**2) / 2
    entries = np.array(
        [
            [c2 * cos_phi, s2 * keep, s2 * leak],
            [-s2 * cos_phi, c2 * keep, c2 * leak],
            [0.0, leak, keep],
        ]
    )
    entries.flags.writeable = False
    return TransferMatrix(theta=theta, cos_phi=cos_phi, entries=entries)


def initial_state(instance: SearchInstance) -> DampedState:
    """(sin theta, cos theta, 1)"""
    return DampedState(x=instance.sin_theta, z=instance.cos_theta, t=1.0)


def damped_trajectory(
    instance: SearchInstance, damping: DampingConfig, j_max: int
) -> np.ndarray:
    """
    Trace vectors for steps 0..j_max as an array of shape (j_max + 1, 3).

    Row 0 is the initial vector; row k is the state after k recurrence steps.
    """
    j_max = require_j_max(j_max)
    matrix = transfer_matrix(instance.theta, damping.resolve(instance)).entries
    states = np.empty((j_max + 1, 3), dtype=np.float64)
    states[0] = initial_state(instance).as_array()
    for j in range(1, j_max + 1):
        states[j] = matrix @ states[j - 1]
    return states


def damped_probability_curve(
    instance: SearchInstance, damping: DampingConfig, j_max: int
) -> ProbabilityCurve:
    """P(j) = 1 - t at step j * steps_per_query, for j = 1..j_max queries"""
    j_max = require_j_max(j_max)
    cos_phi = damping.resolve(instance)
    steps = damping.steps_per_query
    states = damped_trajectory(
        instance, DampingConfig.explicit(cos_phi), j_max * steps
    )
    logger.debug(
        "damped curve N=%d M=%d cos_phi=%.10g j_max=%d steps_per_query=%d",
        instance.n_items,
        instance.n_targets,
        cos_phi,
        j_max,
        steps,
    )
    return ProbabilityCurve(
        model=CurveModel(MODEL_DAMPED, instance, cos_phi=cos_phi),
        p=1.0 - states[steps::steps, 2],
    )


def fully_damped_curve(instance: SearchInstance, j_max: int) -> ProbabilityCurve:
    """The cos(phi) = 0 recurrence, one step per draw, tagged as a classical baseline"""
    states = damped_trajectory(instance, DampingConfig.explicit(0.0), j_max)
    return ProbabilityCurve(
        model=CurveModel(MODEL_CLASSICAL_FULLY_DAMPED, instance, cos_phi=0.0),
        p=1.0 - states[1:, 2],
    )


def fully_damped_survival(instance: SearchInstance, j: int) -> float:
    """t_j = cos^2(theta/2) cos^{2(j-1)}(theta) for j >= 1"""
    if j < 1:
        return 1.0
    return math.cos(instance.theta / 2) ** 2 * instance.cos_theta ** (2 * (j - 1))


def undamped_limit_check(instance: SearchInstance, j_max: int) -> float:
    """
    Largest deviation of the cos(phi) = 1 recurrence from the Grover rotation.

    Compares x_j with sin((2j+1) theta) and z_j with cos((2j+1) theta).
    """
    states = damped_trajectory(instance, DampingConfig.explicit(1.0), j_max)
    j = np.arange(j_max + 1, dtype=np.float64)
    angle = (2 * j + 1) * instance.theta
    deviation = max(
        float(np.max(np.abs(states[:, 0] - np.sin(angle)))),
        float(np.max(np.abs(states[:, 1] - np.cos(angle)))),
    )
    logger.debug("undamped limit deviation %.3e over %d steps", deviation, j_max)
    return deviation
