"""
Classical search baselines

Sampling with replacement, sampling without replacement and the fully
damped (cos phi = 0) limit of the damped recurrence.
"""

from __future__ import annotations

import enum
import logging

import numpy as np

from .constants import (
    MODEL_CLASSICAL_FULLY_DAMPED,
    MODEL_CLASSICAL_NOREPLACE,
    MODEL_CLASSICAL_REPLACE,
)
from .core import CurveModel, ProbabilityCurve, SearchInstance, require_j_max
from .damped import fully_damped_curve
from .exceptions import DegenerateInstanceError, InvalidArgumentError

logger = logging.getLogger(__name__)


class ClassicalModel(enum.Enum):
    WITH_REPLACEMENT = "with_replacement"
    WITHOUT_REPLACEMENT = "without_replacement"
    FULLY_DAMPED = "fully_damped"

    @property
    def model_tag(self) -> str:
        """Tag used on the command line and in report metadata"""
        return _MODEL_TAGS[self]

    @classmethod
    def from_tag(cls, tag: str) -> ClassicalModel:
        for model, model_tag in _MODEL_TAGS.items():
            if model_tag == tag or model.value == tag:
                return model
        raise InvalidArgumentError(f"Unknown classical model {tag!r}")


_MODEL_TAGS = {
    ClassicalModel.WITH_REPLACEMENT: MODEL_CLASSICAL_REPLACE,
    ClassicalModel.WITHOUT_REPLACEMENT: MODEL_CLASSICAL_NOREPLACE,
    ClassicalModel.FULLY_DAMPED: MODEL_CLASSICAL_FULLY_DAMPED,
}


def _with_replacement(instance: SearchInstance, j_max: int) -> np.ndarray:
    j = np.arange(1, j_max + 1, dtype=np.float64)
    return 1.0 - (1.0 - instance.target_fraction) ** j


def _without_replacement(instance: SearchInstance, j_max: int) -> np.ndarray:
    """
    1 - C(N-M, j)/C(N, j) as a running product of (N-M-i)/(N-i).

    Once j exceeds N-M every draw sequence contains a target.
    """
    n, m = instance.n_items, instance.n_targets
    if m == 0:
        return np.zeros(j_max)
    misses = n - m
    p = np.ones(j_max)
    steps = min(j_max, misses)
    if steps > 0:
        i = np.arange(steps, dtype=np.float64)
        survival = np.cumprod((misses - i) / (n - i))
        p[:steps] = 1.0 - survival
    return p


def classical_curve(
    instance: SearchInstance, model: ClassicalModel, j_max: int
) -> ProbabilityCurve:
    """Success probability of a classical search after j draws"""
    j_max = require_j_max(j_max)
    if instance.is_full:
        # every draw is a target, whatever the model
        return ProbabilityCurve(
            model=CurveModel(model.model_tag, instance), p=np.ones(j_max)
        )
    if model is ClassicalModel.FULLY_DAMPED:
        return fully_damped_curve(instance, j_max)
    if model is ClassicalModel.WITH_REPLACEMENT:
        p = _with_replacement(instance, j_max)
    else:
        p = _without_replacement(instance, j_max)
    logger.debug(
        "classical %s curve N=%d M=%d j_max=%d",
        model.value,
        instance.n_items,
        instance.n_targets,
        j_max,
    )
    return ProbabilityCurve(model=CurveModel(model.model_tag, instance), p=p)


def classical_expected_min(instance: SearchInstance) -> tuple[int, float]:
    """
    Minimum of j/P(j) for sampling with replacement: (1, N/M).

    With P(j) = 1 - q^j, Bernoulli's inequality gives j/P(j) >= 1/(1-q).
    """
    if instance.is_empty:
        raise DegenerateInstanceError(
            instance.n_items, instance.n_targets, "no target can be drawn"
        )
    return 1, instance.n_items / instance.n_targets
