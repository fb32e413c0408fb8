# src/errors.py
"""Exception hierarchy shared by the library and the CLI.

Every exception carries the process exit code the CLI returns for it.
"""

from .config import (
    EXIT_PARSE_ERROR,
    EXIT_VALIDATION_ERROR,
    EXIT_BUDGET_INFEASIBLE,
    EXIT_INSTANCE_TOO_LARGE,
    EXIT_OUTPUT_ERROR,
    EXIT_UNEXPECTED_ERROR,
)


class VaccTreeError(Exception):
    """Base class for all errors raised by vacc-tree."""
    exit_code = EXIT_UNEXPECTED_ERROR


# --- Input parsing ---
class InputParseError(VaccTreeError):
    """Custom exception for malformed graph or vertex-function text."""
    exit_code = EXIT_PARSE_ERROR


# --- Validation ---
class ValidationError(VaccTreeError):
    """Custom exception for inputs that parse but violate a precondition."""
    exit_code = EXIT_VALIDATION_ERROR


class SelfLoop(ValidationError):
    """Edge joins a vertex to itself."""
    pass


class DuplicateEdge(ValidationError):
    """Same undirected edge listed twice."""
    pass


class VertexOutOfRange(ValidationError):
    """Vertex index outside 0..n-1."""
    pass


class LengthMismatch(ValidationError):
    """Vertex function length differs from the vertex count of its graph."""
    pass


class NotATree(ValidationError):
    """Graph is disconnected or has m != n - 1."""
    pass


class NegativeCapacity(ValidationError):
    """Increment upper bound below zero."""
    pass


class ThresholdOutOfRange(ValidationError):
    """Threshold outside 0..d(u) where that range is required."""
    pass


class TotalOutOfRange(ValidationError):
    """Threshold total outside 0..2m+n."""
    pass


class InvalidMatching(ValidationError):
    """Edge set is not a matching of the host graph."""
    pass


class NotRegular(ValidationError):
    """Graph degrees are not all equal."""
    pass


class BudgetOutOfRange(ValidationError):
    """Budget outside the range a checker is stated for."""
    pass


# --- Solver limits ---
class BudgetInfeasible(VaccTreeError):
    """Custom exception for a budget above the total increment capacity."""
    exit_code = EXIT_BUDGET_INFEASIBLE


class InstanceTooLarge(VaccTreeError):
    """Custom exception for exhaustive searches asked to run past their size guard."""
    exit_code = EXIT_INSTANCE_TOO_LARGE


# --- Output ---
class OutputWriteError(VaccTreeError):
    """Custom exception for result files (reports, CSV, increments) that cannot be written."""
    exit_code = EXIT_OUTPUT_ERROR
