"""
Undamped Grover search

Closed-form amplitudes k_j = sin((2j+1)theta)/sqrt(M) and
l_j = cos((2j+1)theta)/sqrt(N-M), the 2x2 rotation acting on the
(target, nontarget) amplitude pair, and a full state-vector simulation
with a phase oracle and diffusion. The dynamics is real throughout.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from .constants import MODEL_GROVER
from .core import CurveModel, ProbabilityCurve, SearchInstance, require_j_max
from .exceptions import DegenerateInstanceError, InvalidArgumentError
from .spectrum import OracleMask

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroverAmplitudes:
    """Amplitude of each target (k) and each nontarget (l) after j iterations"""

    j: int
    k: float
    l: float  # noqa: E741

    def norm_squared(self, instance: SearchInstance) -> float:
        """M k^2 + (N - M) l^2"""
        m = instance.n_targets
        return m * self.k**2 + (instance.n_items - m) * self.l**2


@dataclass(frozen=True)
class GroverRotation:
    """
    Rotation by 2 theta on (sqrt(M) k, sqrt(N-M) l).

    cos 2theta = (N - 2M)/N and sin 2theta = 2 sqrt(NM - M^2)/N.
    """

    cos_2theta: float
    sin_2theta: float

    @property
    def matrix(self) -> np.ndarray:
        c, s = self.cos_2theta, self.sin_2theta
        return np.array([[c, s], [-s, c]])

    def apply(self, pair: np.ndarray, times: int = 1) -> np.ndarray:
        """Rotate a (target, nontarget) pair ``times`` times"""
        vector = np.asarray(pair, dtype=np.float64)
        matrix = self.matrix
        for _ in range(times):
            vector = matrix @ vector
        return vector


@dataclass(frozen=True)
class StateVector:
    """Real amplitudes over the 2^n basis states"""

    amplitudes: np.ndarray

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probability(self, indices: np.ndarray) -> float:
        """Total probability carried by the given basis states"""
        return float(np.sum(self.amplitudes[indices] ** 2))


def _require_iterations(j: int) -> int:
    if isinstance(j, bool) or not isinstance(j, int | np.integer) or j < 0:
        raise InvalidArgumentError(
            f"Iteration count must be a non-negative integer, got {j!r}"
        )
    return int(j)


def closed_form_amplitudes(instance: SearchInstance, j: int) -> GroverAmplitudes:
    """k_j and l_j from the closed form; needs 0 < M < N"""
    j = _require_iterations(j)
    if instance.is_full:
        raise DegenerateInstanceError(
            instance.n_items, instance.n_targets, "nontarget amplitude undefined"
        )
    if instance.is_empty:
        raise DegenerateInstanceError(
            instance.n_items, instance.n_targets, "target amplitude undefined"
        )
    angle = (2 * j + 1) * instance.theta
    return GroverAmplitudes(
        j=j,
        k=math.sin(angle) / math.sqrt(instance.n_targets),
        l=math.cos(angle) / math.sqrt(instance.n_items - instance.n_targets),
    )


def success_probability_grover(instance: SearchInstance, j: int) -> float:
    """sin^2((2j+1) theta)"""
    j = _require_iterations(j)
    if instance.is_full:
        return 1.0
    return math.sin((2 * j + 1) * instance.theta) ** 2


def grover_probability_curve(instance: SearchInstance, j_max: int) -> ProbabilityCurve:
    """P(j) = sin^2((2j+1) theta) for j = 1..j_max"""
    j_max = require_j_max(j_max)
    if instance.is_full:
        p = np.ones(j_max)
    else:
        j = np.arange(1, j_max + 1, dtype=np.float64)
        p = np.sin((2 * j + 1) * instance.theta) ** 2
    return ProbabilityCurve(model=CurveModel(MODEL_GROVER, instance), p=p)


def grover_rotation(instance: SearchInstance) -> GroverRotation:
    """The 2 theta rotation built from N and M directly"""
    n, m = instance.n_items, instance.n_targets
    return GroverRotation(
        cos_2theta=(n - 2 * m) / n,
        sin_2theta=2 * math.sqrt(n * m - m * m) / n,
    )


def optimal_grover_iterations(instance: SearchInstance) -> int:
    """floor(pi / (4 theta)), the stopping point when M is known"""
    if instance.is_empty:
        raise DegenerateInstanceError(
            instance.n_items, instance.n_targets, "no target to rotate towards"
        )
    return math.floor(math.pi / (4 * instance.theta))


def grover_failure_bound(instance: SearchInstance) -> float:
    """Upper bound M/N on the failure probability at the optimal stopping point"""
    return instance.target_fraction


def _require_searchable(mask: OracleMask) -> None:
    if not mask.is_searchable():
        raise DegenerateInstanceError(
            mask.dimension, mask.count, "mask must mark between 1 and N-1 states"
        )


def iterate_statevector(mask: OracleMask, j_max: int) -> Iterator[StateVector]:
    """
    Yield the state after 0, 1, ..., j_max Grover iterations.

    Each iteration negates the marked amplitudes and then reflects every
    amplitude about the mean. Each yielded vector is an independent copy.
    """
    _require_searchable(mask)
    j_max = _require_iterations(j_max)
    amplitudes = np.full(mask.dimension, 1.0 / math.sqrt(mask.dimension))
    yield StateVector(amplitudes.copy())
    for _ in range(j_max):
        amplitudes[mask.marked] = -amplitudes[mask.marked]
        amplitudes = 2.0 * amplitudes.mean() - amplitudes
        yield StateVector(amplitudes.copy())


def statevector_run(mask: OracleMask, j: int) -> StateVector:
    """State after j Grover iterations starting from the uniform vector"""
    state = None
    for state in iterate_statevector(mask, j):
        pass
    logger.debug(
        "statevector n=%d lambda=%d j=%d norm=%.15f",
        mask.n,
        mask.lambda_units,
        j,
        state.norm(),
    )
    return state
