"""
Thermotopo - Liouvillian Superoperators

drho/dt = -i[H, rho] + sum_n (L_n rho L_n+ - 1/2 {L_n+ L_n, rho}) in the
column-major vectorization vec(A rho B) = (B^T (x) A) vec(rho).
"""

from typing import Optional, Sequence

import numpy as np
import scipy.linalg
import structlog

from thermotopo.core.config import settings
from thermotopo.core.exceptions import InvalidInputError, NonUniqueSteadyStateError, ResourceLimitError
from thermotopo.lindblad.models import LindbladSpectrum, LindbladSystem
from thermotopo.observability.metrics import LIOUVILLIAN_BUILDS_TOTAL

logger = structlog.get_logger()


def vec(rho: np.ndarray) -> np.ndarray:
    return np.asarray(rho).reshape(-1, order="F")


def unvec(vector: np.ndarray, dim: int) -> np.ndarray:
    return np.asarray(vector).reshape((dim, dim), order="F")


def spre(a: np.ndarray) -> np.ndarray:
    """Superoperator of rho -> A rho."""
    return np.kron(np.eye(a.shape[0]), a)


def spost(b: np.ndarray) -> np.ndarray:
    """Superoperator of rho -> rho B."""
    return np.kron(b.T, np.eye(b.shape[0]))


def sprepost(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Superoperator of rho -> A rho B."""
    return np.kron(b.T, a)


def build_liouvillian(
    hamiltonian: np.ndarray,
    jumps: Sequence[np.ndarray] = (),
    max_dim: Optional[int] = None,
) -> LindbladSystem:
    """
    Vectorized Lindblad generator.

    Args:
        hamiltonian: d x d Hermitian matrix (Hermitized on input)
        jumps: d x d jump operators with their rates absorbed
        max_dim: Hilbert-dimension cap (defaults to MAX_LIOUVILLE_DIM)

    Raises:
        ResourceLimitError: If d exceeds the cap
    """
    h = np.asarray(hamiltonian, dtype=np.complex128)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise InvalidInputError(f"Hamiltonian must be square, got shape {h.shape}")
    dim = h.shape[0]
    limit = max_dim if max_dim is not None else settings.MAX_LIOUVILLE_DIM
    if dim > limit:
        raise ResourceLimitError(
            f"Hilbert dimension {dim} exceeds the superoperator cap {limit}",
            requested=dim,
            limit=limit,
        )
    h = (h + h.conj().T) / 2.0

    operators = [np.asarray(jump, dtype=np.complex128) for jump in jumps]
    for jump in operators:
        if jump.shape != (dim, dim):
            raise InvalidInputError(f"Jump operator shape {jump.shape} does not match ({dim}, {dim})")

    liouvillian = -1j * (spre(h) - spost(h))
    for jump in operators:
        decay = jump.conj().T @ jump
        liouvillian += sprepost(jump, jump.conj().T) - 0.5 * spre(decay) - 0.5 * spost(decay)

    LIOUVILLIAN_BUILDS_TOTAL.inc()
    logger.debug("Built Liouvillian", dim=dim, n_jumps=len(operators))
    return LindbladSystem(hamiltonian=h, jumps=operators, liouvillian=liouvillian)


def trace_residual(system: LindbladSystem) -> float:
    """max |vec(1)+ L|: zero when the generator preserves the trace."""
    identity = vec(np.eye(system.dim))
    return float(np.max(np.abs(identity.conj() @ system.liouvillian)))


def zero_tolerance(system: LindbladSystem) -> float:
    """Eigenvalues within this modulus count as zero."""
    return settings.LIOUVILLE_ZERO_TOLERANCE * float(np.linalg.norm(system.liouvillian, np.inf))


def damping_gap_and_ness(system: LindbladSystem) -> LindbladSpectrum:
    """
    Damping gap and unique steady state.

    Raises:
        NonUniqueSteadyStateError: Unless exactly one eigenvalue is zero within tolerance
    """
    values, vectors = scipy.linalg.eig(system.liouvillian)
    tol = zero_tolerance(system)

    zero = np.abs(values) <= tol
    multiplicity = int(np.count_nonzero(zero))
    if multiplicity != 1:
        raise NonUniqueSteadyStateError(
            f"Liouvillian has {multiplicity} zero eigenvalues; the steady state is not unique",
            multiplicity=multiplicity,
        )
    if (values.real > tol).any():
        logger.warning("Liouvillian has eigenvalues with positive real part", max_real=float(values.real.max()))

    rest = values[~zero]
    damping_gap = float(-np.max(rest.real)) if rest.size else float("inf")
    oscillating = int(np.count_nonzero(np.abs(rest.real) <= tol))
    if damping_gap <= tol:
        logger.warning("Liouvillian is gapless", damping_gap=damping_gap, oscillating_modes=oscillating)

    rho = unvec(vectors[:, int(np.argmax(zero))], system.dim)
    rho = rho / np.trace(rho)
    rho = (rho + rho.conj().T) / 2.0
    rho = rho / np.real(np.trace(rho))

    order = np.lexsort((values.imag, -values.real))
    return LindbladSpectrum(
        eigenvalues=values[order],
        damping_gap=damping_gap,
        ness=rho,
        tolerance=tol,
        oscillating_modes=oscillating,
    )


def perturbation_ratio(strength: float, spectrum: LindbladSpectrum) -> float:
    """Perturbation strength relative to the damping gap, g / Delta_L."""
    if spectrum.damping_gap <= 0 or np.isinf(spectrum.damping_gap):
        return float("inf") if strength > 0 else 0.0
    return float(strength / spectrum.damping_gap)
