# src/utils.py
"""Common utilities used across the vacc-tree project."""

import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd

from .ext_int import NEG_INF, to_json_value
from .graph_core import VertexFn


# --- Logging Setup ---
def setup_logging(
    log_file_name: str,
    log_dir: Optional[Path] = None,
    level: Union[int, str] = logging.INFO,
    mode: str = 'w',
    logger_name: str = 'src',
) -> logging.Logger:
    """Configure the package logger, writing to stderr and optionally to log_dir/log_file_name.

    The logger is named after the package by default so that every
    `logging.getLogger(__name__)` in src/ inherits its handlers.
    """
    logger = logging.getLogger(logger_name)
    logger.setLevel(level)

    # Avoid duplicate output when main() runs several times in one process (tests)
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    # stdout carries command results only
    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(formatter)
    logger.addHandler(stream_handler)

    log_file_path = None
    if log_dir is not None:
        log_file_path = Path(log_dir) / log_file_name
        log_file_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file_path, mode=mode, encoding='utf-8')
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    logger.propagate = False

    logger.debug(
        f"Logging initialized for '{logger.name}'. Level: {logging.getLevelName(logger.level)}. "
        f"Log file: {log_file_path or 'none'}"
    )
    return logger


# --- JSON ---
class _ResultEncoder(json.JSONEncoder):
    """NEG_INF -> "-inf", Fraction -> "p/q", VertexFn -> list, sets -> sorted lists."""

    def default(self, o):
        if o is NEG_INF:
            return to_json_value(o)
        if isinstance(o, Fraction):
            return f"{o.numerator}/{o.denominator}"
        if isinstance(o, VertexFn):
            return list(o.values)
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        if isinstance(o, Path):
            return str(o)
        return super().default(o)


def dumps_json(data: Any, indent: Optional[int] = 2) -> str:
    """Key-sorted JSON text; identical input gives identical bytes."""
    return json.dumps(data, indent=indent, sort_keys=True, ensure_ascii=False, cls=_ResultEncoder)


def save_json(data: Any, path: Path, indent: int = 4) -> bool:
    """Save data as JSON file, creating parent directories if needed."""
    logger = logging.getLogger(__name__)
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open('w', encoding='utf-8') as f:
            f.write(dumps_json(data, indent=indent))
            f.write('\n')
        logger.debug(f"Saved JSON to {path}")
        return True
    except TypeError as e:
        logger.error(f"TypeError saving JSON to {path}: {str(e)}. Data type: {type(data)}")
        return False
    except OSError as e:
        logger.error(f"Error saving JSON to {path}: {str(e)}", exc_info=True)
        return False


# --- CSV ---
def convert_to_csv(data: List[Dict[str, Any]], csv_path: Path, columns: Optional[List[str]] = None) -> int:
    """Write a list of dicts to CSV with the given column order; returns rows written (0 on failure)."""
    logger = logging.getLogger(__name__)
    csv_path = Path(csv_path)
    try:
        csv_path.parent.mkdir(parents=True, exist_ok=True)
        if not isinstance(data, list):
            logger.error(f"Invalid data type for CSV conversion: expected list, got {type(data)}. Path: {csv_path}")
            df = pd.DataFrame(columns=columns or [])
        elif not data:
            logger.info(f"No rows to save at {csv_path}. Creating empty file with headers.")
            df = pd.DataFrame(columns=columns or [])
        else:
            df = pd.DataFrame(data)
            if columns:
                for col in columns:
                    if col not in df.columns:
                        df[col] = pd.NA
                df = df[columns]
        df.to_csv(csv_path, index=False, encoding='utf-8')
        logger.info(f"Saved {len(df)} rows to CSV: {csv_path}")
        return len(df)
    except (OSError, ValueError) as e:
        logger.error(f"Error creating or saving CSV {csv_path}: {str(e)}", exc_info=True)
        return 0


# --- Path Management ---
def setup_project_paths(base_dir_override: Optional[Union[str, Path]] = None) -> Dict[str, Path]:
    """Create and return the data directory layout: base, log and reports."""
    from .config import DEFAULT_BASE_DATA_DIR

    base_dir = Path(base_dir_override).resolve() if base_dir_override else DEFAULT_BASE_DATA_DIR.resolve()
    paths = {
        'base': base_dir,
        'log': base_dir / 'logs',
        'reports': base_dir / 'reports',
    }
    for path in paths.values():
        path.mkdir(parents=True, exist_ok=True)
    return paths
