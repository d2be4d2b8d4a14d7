"""
Expected iterations before success

Run j iterations, measure, restart on failure: the expected total cost is
E(j) = j / P(j). Minima are found by exhaustive scan over integer j.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from .core import (
    DEFAULT_CONFIG,
    CurveModel,
    ProbabilityCurve,
    SearchInstance,
    SimulationConfig,
)
from .exceptions import (
    InvalidArgumentError,
    NoSuccessError,
    ThresholdUnreachedError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExpectedIterationsResult:
    """
    Minimum of E(j) over the scanned range.

    ``e_curve[j-1]`` is E(j), NaN where P(j) = 0. ``saturated`` is set when
    the minimum sits at the last scanned j and may lie beyond the range.
    """

    model: CurveModel
    j_star: int
    e_min: float
    e_curve: np.ndarray
    saturated: bool

    @property
    def j_max(self) -> int:
        return int(self.e_curve.size)

    def to_dict(self) -> dict[str, Any]:
        """Summary: model, j_star, e_min, saturated plus provenance"""
        return {
            **self.model.to_dict(),
            "j_star": self.j_star,
            "e_min": self.e_min,
            "saturated": self.saturated,
            "j_max": self.j_max,
        }


def default_j_max(
    instance: SearchInstance, config: SimulationConfig = DEFAULT_CONFIG
) -> int:
    """max(1000, ceil(50 sqrt(N/M)))"""
    if instance.is_empty:
        return config.j_max_floor
    scaled = math.ceil(config.j_max_scale * math.sqrt(1.0 / instance.target_fraction))
    return max(config.j_max_floor, scaled)


def expected_curve(curve: ProbabilityCurve) -> np.ndarray:
    """E(j) = j / P(j); NaN marks j with P(j) = 0"""
    p = curve.p
    defined = p > 0
    if not np.any(defined):
        raise NoSuccessError(curve.j_max)
    e = np.full(p.size, np.nan)
    j = curve.iterations.astype(np.float64)
    e[defined] = j[defined] / p[defined]
    e.flags.writeable = False
    return e


def minimize_expected(curve: ProbabilityCurve) -> ExpectedIterationsResult:
    """Smallest j attaining min E(j); NaN points are skipped"""
    e = expected_curve(curve)
    # nanargmin returns the first occurrence, so ties go to the smaller j
    index = int(np.nanargmin(e))
    j_star = index + 1
    result = ExpectedIterationsResult(
        model=curve.model,
        j_star=j_star,
        e_min=float(e[index]),
        e_curve=e,
        saturated=j_star == curve.j_max,
    )
    if result.saturated:
        logger.warning(
            "minimum of E(j) for %s sits at the scan edge j=%d",
            curve.model.kind,
            j_star,
        )
    logger.debug(
        "%s N=%d M=%d: j*=%d E_min=%.10g",
        curve.model.kind,
        curve.model.instance.n_items,
        curve.model.instance.n_targets,
        j_star,
        result.e_min,
    )
    return result


def queries_to_reach(curve: ProbabilityCurve, p_target: float) -> int:
    """Smallest j with P(j) >= p_target"""
    if not 0.0 < p_target < 1.0:
        raise InvalidArgumentError(
            f"Target probability must lie in (0, 1), got {p_target}"
        )
    hits = np.flatnonzero(curve.p >= p_target)
    if hits.size == 0:
        raise ThresholdUnreachedError(p_target, float(curve.p.max()), curve.j_max)
    return int(hits[0]) + 1


def overhead_ratio(
    e_cs: ExpectedIterationsResult, e_dqs: ExpectedIterationsResult
) -> float:
    """E_csmin / E_dqsmin; above 1 the damped search wins"""
    return e_cs.e_min / e_dqs.e_min


def ratio_trend(ratios: Sequence[tuple[float, float]]) -> bool:
    """
    Whether overhead ratios strictly decrease as the target fraction grows.

    ``ratios`` holds (M/N, ratio) pairs in any order.
    """
    ordered = [ratio for _, ratio in sorted(ratios)]
    return all(a > b for a, b in zip(ordered, ordered[1:], strict=False))
