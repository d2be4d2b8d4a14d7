"""
dampsearch - Grover, damped quantum and classical search over Ising-chain eigenstates
"""

# Core types
from .analysis import (
    ExpectedIterationsResult,
    default_j_max,
    expected_curve,
    minimize_expected,
    overhead_ratio,
    queries_to_reach,
    ratio_trend,
)
from .classical import ClassicalModel, classical_curve, classical_expected_min
from .core import (
    DEFAULT_CONFIG,
    CurveModel,
    ProbabilityCurve,
    SearchInstance,
    SimulationConfig,
)

# Damped search
from .damped import (
    DampedState,
    DampingConfig,
    DampingMode,
    TransferMatrix,
    critical_damping,
    damped_probability_curve,
    damped_trajectory,
    fully_damped_curve,
    fully_damped_survival,
    initial_state,
    transfer_matrix,
    undamped_limit_check,
)

# Exceptions
from .exceptions import (
    ChainSizeError,
    DampingDomainError,
    DegenerateInstanceError,
    InvalidArgumentError,
    NoSuccessError,
    NotAnEigenvalueError,
    SearchError,
    ThresholdUnreachedError,
)

# Grover search
from .grover import (
    GroverAmplitudes,
    GroverRotation,
    StateVector,
    closed_form_amplitudes,
    grover_failure_bound,
    grover_probability_curve,
    grover_rotation,
    iterate_statevector,
    optimal_grover_iterations,
    statevector_run,
    success_probability_grover,
)

# Reports
from .reports import ReportSpec, figure_files, tables_document

# Spectrum
from .spectrum import (
    EnergyDiagonal,
    EnergySpectrum,
    IsingChain,
    OracleMask,
    SpectrumEntry,
    binomial_degeneracy,
    build_diagonal,
    build_diagonal_tensor,
    oracle_mask,
    search_instance,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    # Core
    "SearchInstance",
    "ProbabilityCurve",
    "CurveModel",
    "SimulationConfig",
    "DEFAULT_CONFIG",
    # Spectrum
    "IsingChain",
    "EnergyDiagonal",
    "EnergySpectrum",
    "SpectrumEntry",
    "OracleMask",
    "build_diagonal",
    "build_diagonal_tensor",
    "spectrum",
    "oracle_mask",
    "binomial_degeneracy",
    "search_instance",
    # Grover
    "GroverAmplitudes",
    "GroverRotation",
    "StateVector",
    "closed_form_amplitudes",
    "success_probability_grover",
    "grover_probability_curve",
    "grover_rotation",
    "optimal_grover_iterations",
    "grover_failure_bound",
    "iterate_statevector",
    "statevector_run",
    # Damped
    "DampingMode",
    "DampingConfig",
    "DampedState",
    "TransferMatrix",
    "critical_damping",
    "transfer_matrix",
    "initial_state",
    "damped_trajectory",
    "damped_probability_curve",
    "fully_damped_curve",
    "fully_damped_survival",
    "undamped_limit_check",
    # Classical
    "ClassicalModel",
    "classical_curve",
    "classical_expected_min",
    # Analysis
    "ExpectedIterationsResult",
    "default_j_max",
    "expected_curve",
    "minimize_expected",
    "queries_to_reach",
    "overhead_ratio",
    "ratio_trend",
    # Reports
    "ReportSpec",
    "tables_document",
    "figure_files",
    # Exceptions
    "SearchError",
    "InvalidArgumentError",
    "ChainSizeError",
    "DampingDomainError",
    "NotAnEigenvalueError",
    "DegenerateInstanceError",
    "NoSuccessError",
    "ThresholdUnreachedError",
]
