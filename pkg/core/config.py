"""Environment-driven defaults and hard limits for trimin."""

import os
import logging
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

# Load environment variables
load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}, using {default}")
        return default


# Hard caps
MAX_ORDER = 16
MAX_ENUM_ORDER = 10
MAX_FLAG_LEVEL = 8
MAX_JOIN_ORDER = 8
MAX_EXACT_EDIT_ORDER = 12
MAX_EXACT_U_ORDER = 8
MAX_LOCAL_ORDER = 512

# Environment defaults
DEFAULT_THREADS = max(1, _int_env("TRIMIN_THREADS", 1))
BRUTE_MAX_N = _int_env("TRIMIN_BRUTE_MAX_N", 8)
DEFAULT_SEED = _int_env("TRIMIN_SEED", 0)
LOG_LEVEL = os.getenv("TRIMIN_LOG_LEVEL", "INFO").upper()

# Floating-point tolerances used by checks
CURVE_TOLERANCE = 1e-12
NUMERIC_TOLERANCE = 1e-9
DERIVATIVE_TOLERANCE = 1e-5
RATIO_TOLERANCE = 1e-8
