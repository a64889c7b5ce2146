"""
Thermotopo - Custom Exceptions

Every exception carries a stable ``code`` and the process exit status the
command-line front end reports for it.
"""

from typing import Any, Dict, Optional, Sequence


class ThermoTopoError(Exception):
    """Base exception for Thermotopo."""

    exit_code = 1

    def __init__(
        self,
        message: str,
        code: str = "INTERNAL_ERROR",
        details: Optional[Dict[str, Any]] = None,
    ):
        self.message = message
        self.code = code
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {"code": self.code, "message": self.message, "details": self.details}


class ConfigurationError(ThermoTopoError):
    """Raised when a model, sweep or system configuration is invalid."""

    exit_code = 2

    def __init__(
        self,
        message: str,
        errors: Optional[Sequence[Dict[str, Any]]] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        merged = dict(details or {})
        if errors:
            merged["errors"] = list(errors)
        super().__init__(message, code="CONFIG_ERROR", details=merged)


class InvalidInputError(ThermoTopoError):
    """Raised when an operation receives arguments outside its domain."""

    exit_code = 2

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, code="INVALID_INPUT", details=details)


class NumericalError(ThermoTopoError):
    """Raised when a numerical procedure cannot produce a trustworthy result."""

    exit_code = 3

    def __init__(
        self,
        message: str,
        code: str = "NUMERICAL_ERROR",
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, code=code, details=details)


class SolverError(NumericalError):
    """Raised when a dense eigensolver fails to converge."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, code="SOLVER_ERROR", details=details)


class GapClosedError(NumericalError):
    """Raised when a manifold's bounding gap closes somewhere on a twist grid."""

    def __init__(self, message: str, theta: Sequence[float], gap: float):
        super().__init__(
            message,
            code="GAP_CLOSED",
            details={"theta": [float(x) for x in theta], "gap": float(gap)},
        )


class GridTooCoarseError(NumericalError):
    """Raised when neighbouring frames on a grid are nearly orthogonal."""

    def __init__(self, message: str, min_singular_value: float, link: Sequence[int]):
        super().__init__(
            message,
            code="GRID_TOO_COARSE",
            details={"min_singular_value": float(min_singular_value), "link": list(link)},
        )


class RefinementError(NumericalError):
    """Raised when a winding is not stable under grid refinement."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, code="REFINEMENT_ERROR", details=details)


class NonUniqueSteadyStateError(NumericalError):
    """Raised when a Liouvillian has more than one (or no) steady state."""

    def __init__(self, message: str, multiplicity: int):
        super().__init__(
            message,
            code="NON_UNIQUE_STEADY_STATE",
            details={"multiplicity": int(multiplicity)},
        )


class ResourceLimitError(ThermoTopoError):
    """Raised when a dense representation would exceed a configured cap."""

    exit_code = 4

    def __init__(self, message: str, requested: int, limit: int):
        super().__init__(
            message,
            code="RESOURCE_LIMIT",
            details={"requested": int(requested), "limit": int(limit)},
        )
