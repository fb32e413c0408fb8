# src/config.py
"""Central configuration settings for vacc-tree."""

import os
import logging
from pathlib import Path
from dotenv import load_dotenv

# --- Environment Variables ---
# Load .env file if it exists in the project root (for local overrides)
env_path = Path(__file__).resolve().parent.parent / '.env'  # Assumes src is one level down from root
load_dotenv(dotenv_path=env_path)

_logger = logging.getLogger(__name__)


def _env_int(name: str, default: int) -> int:
    """Read an integer setting from the environment, falling back to the default."""
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError:
        _logger.warning(f"Ignoring non-integer value {raw!r} for {name}; using {default}.")
        return default


# --- Exhaustive Search Guards ---
# Oracles are exponential; these caps keep them at desk scale.
DYN_SIZE_LIMIT = _env_int('VACC_DYN_SIZE_LIMIT', 20)
ORACLE_SIZE_LIMIT = _env_int('VACC_ORACLE_SIZE_LIMIT', 10)
MATCHING_SIZE_LIMIT = _env_int('VACC_MATCHING_SIZE_LIMIT', 12)

# --- Tree DP ---
DEFAULT_ROOT = _env_int('VACC_DEFAULT_ROOT', 0)

# --- File System ---
# Base data directory default, can be overridden by CLI argument
DEFAULT_BASE_DATA_DIR = Path(os.environ.get('VACC_DATA_DIR', 'data'))

# --- Logging ---
LOG_LEVEL = os.environ.get('VACC_LOG_LEVEL', 'INFO').upper()
# Log file names (placed in the logs subdirectory within the base data dir)
MAIN_LOG_FILE = 'vacc_tree.log'
CHECK_LOG_FILE = 'vacc_tree_checks.log'

# --- CLI Exit Codes ---
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_VALIDATION_ERROR = 3
EXIT_BUDGET_INFEASIBLE = 4
EXIT_INSTANCE_TOO_LARGE = 5
EXIT_OUTPUT_ERROR = 6
EXIT_UNEXPECTED_ERROR = 7

# --- Output Encoding ---
NEG_INF_JSON = '-inf'  # JSON has no -infinity; encoded as this string
