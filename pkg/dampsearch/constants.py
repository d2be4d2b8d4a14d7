"""
Constants for dampsearch: defaults, output headers, model tags, exit codes
and the printed reference tables used by the comparison reports.
"""

# Chain size limits
MIN_SPINS = 2
DEFAULT_MAX_SPINS = 24

# Scan defaults for expected-iteration minimization
DEFAULT_J_MAX_FLOOR = 1000
DEFAULT_J_MAX_SCALE = 50.0

# Trace-recurrence steps taken per damped query
DAMPED_STEPS_PER_QUERY = 2

# Output formatting
SIGNIFICANT_DIGITS = 10
OUTPUT_FORMATS = ("csv", "json")

# CSV headers
SPECTRUM_CSV_HEADER = "lambda,degeneracy"
CURVE_CSV_HEADER = "j,p_success"
EXPECTED_CSV_HEADER = "j,p_success,expected_iterations"

# Report file names
TABLES_FILE = "tables.json"
FIGURES_MANIFEST_FILE = "manifest.json"
SUMMARY_FILE = "summary.json"
DEFAULT_FIGURES_DIR = "report-figures"

# CLI help messages
SPINS_HELP = "Number of spins in the open Ising chain"
LAMBDA_HELP = "Searched eigenvalue in integer units of epsilon"
MODEL_HELP = "Search model (repeatable)"

# Model tags as they appear on the command line and in report metadata
MODEL_GROVER = "grover"
MODEL_DAMPED = "damped"
MODEL_CLASSICAL_REPLACE = "classical-replace"
MODEL_CLASSICAL_NOREPLACE = "classical-noreplace"
MODEL_CLASSICAL_FULLY_DAMPED = "classical-fully-damped"

MODELS = (
    MODEL_GROVER,
    MODEL_DAMPED,
    MODEL_CLASSICAL_REPLACE,
    MODEL_CLASSICAL_NOREPLACE,
    MODEL_CLASSICAL_FULLY_DAMPED,
)

CLASSICAL_MODELS = (
    MODEL_CLASSICAL_REPLACE,
    MODEL_CLASSICAL_NOREPLACE,
    MODEL_CLASSICAL_FULLY_DAMPED,
)

# Error codes and types
ERROR_TYPES = {
    "SEARCH_ERROR": "search_error",
    "INVALID_ARGUMENT": "invalid_argument",
    "SIZE_ERROR": "size_error",
    "DOMAIN_ERROR": "domain_error",
    "NOT_AN_EIGENVALUE": "not_an_eigenvalue",
    "DEGENERATE_INSTANCE": "degenerate_instance",
    "NO_SUCCESS": "no_success",
    "THRESHOLD_UNREACHED": "threshold_unreached",
}

# Process exit codes
EXIT_CODES = {
    "OK": 0,
    "COMPUTATION_ERROR": 1,
    "INVALID_ARGUMENT": 2,
    "NOT_AN_EIGENVALUE": 3,
}

# Spin counts covered by the reference tables
TABLE_SPINS = (8, 12)

# Reference values as printed, kept verbatim as strings.
# Row: (|lambda| in units of epsilon, M, E_csmin, E_dqsmin, E_csmin/E_dqsmin)
REFERENCE_TABLES = {
    8: (
        (7, 2, "39.1796", "19.1233", "2.04879"),
        (5, 14, "7.4034", "6.5365", "1.13260"),
        (3, 42, "3.2121", "3.2833", "0.97831"),
        (1, 70, "2.3507", "2.3986", "0.98003"),
    ),
    12: (
        (11, 2, "539.9602", "79.2205", "6.8159"),
        (9, 22, "55.1413", "23.2660", "2.3700"),
        (7, 110, "13.2779", "9.8111", "1.3533"),
        (5, 330, "5.5076", "5.1825", "1.0627"),
        (3, 660, "3.2537", "3.3259", "0.9784"),
        (1, 924, "2.6085", "2.6638", "0.9792"),
    ),
}

# Figure panels: (figure id, panel id, spins, |lambda|, models)
PROBABILITY_FIGURE_J_MAX = 100
EXPECTED_FIGURE_J_MAX = 60

PROBABILITY_FIGURES = (
    ("figure1", "a", 12, 9, (MODEL_GROVER,)),
    ("figure1", "b", 12, 9, (MODEL_DAMPED, MODEL_CLASSICAL_REPLACE)),
    ("figure1", "c", 12, 7, (MODEL_GROVER,)),
    ("figure1", "d", 12, 7, (MODEL_DAMPED, MODEL_CLASSICAL_REPLACE)),
)

EXPECTED_FIGURES = (
    ("figure2", "a", 8, 5, (MODEL_DAMPED, MODEL_CLASSICAL_REPLACE)),
    ("figure2", "b", 8, 3, (MODEL_DAMPED, MODEL_CLASSICAL_REPLACE)),
    ("figure3", "a", 12, 7, (MODEL_DAMPED, MODEL_CLASSICAL_REPLACE)),
    ("figure3", "b", 12, 3, (MODEL_DAMPED, MODEL_CLASSICAL_REPLACE)),
)
