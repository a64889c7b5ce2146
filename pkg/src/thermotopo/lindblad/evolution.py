"""
Thermotopo - Finite-Time Evolution

Local completely positive maps rho -> exp(t L) rho.
"""

import numpy as np
import scipy.linalg
import structlog

from thermotopo.core.exceptions import InvalidInputError
from thermotopo.lindblad.liouvillian import unvec, vec
from thermotopo.lindblad.models import LindbladSystem

logger = structlog.get_logger()

STATE_TOLERANCE = 1e-8
TRACE_DRIFT_WARNING = 1e-9


def validate_density_matrix(rho: np.ndarray, dim: int) -> np.ndarray:
    """Check shape, Hermiticity, unit trace and positivity."""
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (dim, dim):
        raise InvalidInputError(f"Density matrix must be {dim}x{dim}, got {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > STATE_TOLERANCE:
        raise InvalidInputError("Density matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > STATE_TOLERANCE:
        raise InvalidInputError(f"Density matrix trace is {np.real(np.trace(rho)):.6f}, expected 1")
    if np.min(np.linalg.eigvalsh((rho + rho.conj().T) / 2.0)) < -STATE_TOLERANCE:
        raise InvalidInputError("Density matrix is not positive semidefinite")
    return rho


def propagator(system: LindbladSystem, t: float) -> np.ndarray:
    """exp(t L) by scaling and squaring."""
    if t < 0:
        raise InvalidInputError(f"Evolution time must be non-negative, got {t}")
    return scipy.linalg.expm(t * system.liouvillian)


def lcp_evolve(system: LindbladSystem, rho0: np.ndarray, t: float) -> np.ndarray:
    """
    Evolve a density matrix for time t under the Liouvillian.

    Returns:
        exp(t L) rho0, re-Hermitized
    """
    rho0 = validate_density_matrix(rho0, system.dim)
    rho = unvec(propagator(system, t) @ vec(rho0), system.dim)
    rho = (rho + rho.conj().T) / 2.0

    drift = abs(np.trace(rho) - 1.0)
    if drift > TRACE_DRIFT_WARNING:
        logger.warning("Trace drift during evolution", t=t, drift=float(drift))
    return rho


def trace_norm(a: np.ndarray) -> float:
    """||A||_1, the sum of singular values."""
    return float(np.sum(np.linalg.svd(a, compute_uv=False)))


def trace_distance(a: np.ndarray, b: np.ndarray) -> float:
    return 0.5 * trace_norm(np.asarray(a) - np.asarray(b))
