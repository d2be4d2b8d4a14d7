"""
dampsearch Exception Classes
"""

from __future__ import annotations

from typing import Any

from .constants import ERROR_TYPES, EXIT_CODES


class SearchError(Exception):
    """Base error with a stable code and the CLI exit status it maps to"""

    code = ERROR_TYPES["SEARCH_ERROR"]
    exit_code = EXIT_CODES["COMPUTATION_ERROR"]

    def __init__(self, message: str, **details: Any):
        self.message = message
        self.details = details
        super().__init__(message)

    def to_dict(self) -> dict[str, Any]:
        """Machine-readable form of the error"""
        return {"code": self.code, "message": self.message, **self.details}


class InvalidArgumentError(SearchError):
    """Parameter outside its documented domain"""

    code = ERROR_TYPES["INVALID_ARGUMENT"]
    exit_code = EXIT_CODES["INVALID_ARGUMENT"]


class ChainSizeError(InvalidArgumentError):
    """Spin count outside [2, cap]"""

    code = ERROR_TYPES["SIZE_ERROR"]

    def __init__(self, n: int, max_spins: int):
        super().__init__(
            f"Chain needs between 2 and {max_spins} spins, got {n}",
            n=n,
            max_spins=max_spins,
        )
        self.n = n
        self.max_spins = max_spins


class DampingDomainError(InvalidArgumentError):
    """Angle or damping parameter out of range"""

    code = ERROR_TYPES["DOMAIN_ERROR"]


class NotAnEigenvalueError(SearchError):
    """Requested energy is absent from the chain spectrum"""

    code = ERROR_TYPES["NOT_AN_EIGENVALUE"]
    exit_code = EXIT_CODES["NOT_AN_EIGENVALUE"]

    def __init__(self, lambda_units: int, available: list[int] | None = None):
        available = available or []
        message = f"{lambda_units} is not an eigenvalue"
        if available:
            message += f"; spectrum is {', '.join(str(v) for v in available)}"
        super().__init__(message, lambda_units=lambda_units, available=available)
        self.lambda_units = lambda_units
        self.available = available


class DegenerateInstanceError(SearchError):
    """Instance with no targets or only targets where the operation is undefined"""

    code = ERROR_TYPES["DEGENERATE_INSTANCE"]

    def __init__(self, n_items: int, n_targets: int, reason: str = ""):
        message = f"Degenerate search instance (N={n_items}, M={n_targets})"
        if reason:
            message = f"{message}: {reason}"
        super().__init__(message, n_items=n_items, n_targets=n_targets)
        self.n_items = n_items
        self.n_targets = n_targets


class NoSuccessError(SearchError):
    """Every point of a probability curve is zero"""

    code = ERROR_TYPES["NO_SUCCESS"]

    def __init__(self, j_max: int):
        super().__init__(
            f"Success probability is zero for every j <= {j_max}", j_max=j_max
        )
        self.j_max = j_max


class ThresholdUnreachedError(SearchError):
    """Target probability not attained within the scanned range"""

    code = ERROR_TYPES["THRESHOLD_UNREACHED"]

    def __init__(self, p_target: float, max_probability: float, j_max: int):
        super().__init__(
            f"Probability {p_target} not reached within {j_max} iterations "
            f"(max attained {max_probability:.10g})",
            p_target=p_target,
            max_probability=max_probability,
            j_max=j_max,
        )
        self.p_target = p_target
        self.max_probability = max_probability
        self.j_max = j_max
