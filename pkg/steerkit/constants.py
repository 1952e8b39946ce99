"""Constant definitions used throughout the application."""

# Standard Library
import math
from datetime import datetime

__name__ = "steerkit"
__version__ = "1.0.0"
__author__ = "steerkit contributors"
__copyright__ = f"Copyright {datetime.now().year} steerkit contributors"
__license__ = "BSD 3-Clause Clear License"

METADATA = (__name__, __version__, __author__, __copyright__, __license__)

# Matrix validation.
HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10
PROJECTOR_TOL = 1e-10
RAW_MATRIX_TOL = 1e-8
EIG_HERMITIAN_TOL = 1e-8
NORM_TOL = 1e-12
MIX_TOL = 1e-10

# Steering.
DIRECTION_SEPARATION = 1e-6
ZERO_PROBABILITY = 1e-12
ENTANGLED_EPS = 1e-6
PURITY_TOL = 1e-10
FIDELITY_TOL = 1e-8

# GLSI.
MAX_ENUMERATION_K = 16
STRATEGY_TIE_TOL = 1e-9
THETA_MARGIN = 0.001
THETA_STEPS = 200
THETA_TOL = 1e-8
PHI_STEPS = 16
VIOLATION_TIE_TOL = 1e-12
USUAL_LSI_BOUND = math.sqrt(3)

# Scans.
BISECTION_TOL = 1e-6
ALPHA_BOUNDARY = math.asin((math.sqrt(3) - 1) / 2) / 2
ASYMMETRIC_V_CEILING = 0.5
CROSSOVER_TOL = 1e-4
# Largest GLSI/usual threshold gap still counted as the same threshold.
MERGE_TOL = 1e-4
SCAN_ALPHA_START = 0.01

# Shot simulation.
GENERATOR_NAME = "Philox4x64-10"
DEFAULT_SEED = 20210419
MAX_SEED = 2 ** 64 - 1

# Output.
SUPPORTED_FAMILIES = ("pure", "werner", "asymmetric", "raw")
SCAN_FAMILIES = ("werner", "asymmetric")

REGION_CSV_FIELDS = (
    "family",
    "alpha",
    "visibility",
    "usual_value",
    "usual_bound",
    "usual_detected",
    "glsi_theta_star",
    "glsi_violation",
    "glsi_detected",
)

CURVES_CSV_FIELDS = (
    "alpha",
    "usual_value",
    "usual_bound",
    "glsi_violation",
    "glsi_theta_star",
)

THRESHOLD_CSV_FIELDS = (
    "family",
    "alpha",
    "usual_threshold",
    "glsi_threshold",
    "glsi_theta_star",
)

EXIT_CODE_MAP = {"usage": 2, "precondition": 3, "config": 1}

NAMED_DIRECTIONS = {
    "x": (1.0, 0.0, 0.0),
    "y": (0.0, 1.0, 0.0),
    "z": (0.0, 0.0, 1.0),
}
