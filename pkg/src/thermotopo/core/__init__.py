"""Core module - Configuration, logging, exceptions, and schemas."""

from thermotopo.core.config import settings
from thermotopo.core.exceptions import (
    ConfigurationError,
    GapClosedError,
    GridTooCoarseError,
    InvalidInputError,
    NonUniqueSteadyStateError,
    NumericalError,
    RefinementError,
    ResourceLimitError,
    SolverError,
    ThermoTopoError,
)
from thermotopo.core.loader import load_config, validate_config

__all__ = [
    # Config
    "settings",
    "load_config",
    "validate_config",
    # Exceptions
    "ThermoTopoError",
    "ConfigurationError",
    "InvalidInputError",
    "NumericalError",
    "SolverError",
    "GapClosedError",
    "GridTooCoarseError",
    "RefinementError",
    "NonUniqueSteadyStateError",
    "ResourceLimitError",
]
