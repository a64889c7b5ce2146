"""
Thermotopo - Dense Hermitian Eigensolver
"""

import time
from typing import Optional, Tuple

import numpy as np
import scipy.linalg
import structlog

from thermotopo.core.config import settings
from thermotopo.core.exceptions import NumericalError, SolverError
from thermotopo.observability.metrics import EIGENSOLVE_DURATION, EIGENSOLVES_TOTAL
from thermotopo.spectral.models import EigenSystem

logger = structlog.get_logger()

RESIDUAL_TOLERANCE = 1e-8


def fix_phases(vectors: np.ndarray) -> np.ndarray:
    """Rotate every column so its largest-magnitude component is real and positive."""
    if vectors.size == 0:
        return vectors
    pivots = np.argmax(np.abs(vectors), axis=0)
    anchors = vectors[pivots, np.arange(vectors.shape[1])]
    return vectors * (np.abs(anchors) / anchors)[None, :]


def eigendecompose(
    h: np.ndarray,
    subset: Optional[Tuple[int, int]] = None,
    kind: str = "dense",
    check_residuals: Optional[bool] = None,
) -> EigenSystem:
    """
    Eigendecomposition of a Hermitian matrix.

    Args:
        h: Square matrix, symmetrized on input
        subset: Optional inclusive index range (lo, hi) of eigenpairs to keep
        kind: Metrics label for the caller
        check_residuals: Verify residual and orthonormality bounds (defaults to
            CHECK_EIGEN_RESIDUALS)

    Returns:
        EigenSystem with ascending eigenvalues and phase-fixed eigenvectors
    """
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise SolverError(f"Expected a square matrix, got shape {h.shape}")
    h = (h + h.conj().T) / 2.0

    start = time.perf_counter()
    try:
        values, vectors = scipy.linalg.eigh(h, subset_by_index=subset, driver="evr" if subset else None)
    except (np.linalg.LinAlgError, ValueError) as e:
        logger.warning("Eigensolver fallback", dim=h.shape[0], error=str(e))
        try:
            values, vectors = scipy.linalg.eigh(h, driver="ev")
        except (np.linalg.LinAlgError, ValueError) as retry:
            EIGENSOLVES_TOTAL.labels(kind=kind, status="failed").inc()
            raise SolverError(
                f"Eigendecomposition did not converge: {retry}",
                details={"dim": int(h.shape[0]), "drivers": ["evr", "ev"], "error": str(retry)},
            )
        if subset is not None:
            values, vectors = values[subset[0] : subset[1] + 1], vectors[:, subset[0] : subset[1] + 1]

    elapsed = time.perf_counter() - start
    EIGENSOLVES_TOTAL.labels(kind=kind, status="ok").inc()
    EIGENSOLVE_DURATION.labels(kind=kind).observe(elapsed)

    es = EigenSystem(eigenvalues=np.asarray(values, dtype=float), eigenvectors=fix_phases(vectors))

    if check_residuals if check_residuals is not None else settings.CHECK_EIGEN_RESIDUALS:
        residual = es.residual(h)
        ortho = es.orthonormality_error()
        if residual > RESIDUAL_TOLERANCE or ortho > RESIDUAL_TOLERANCE:
            raise NumericalError(
                "Eigensystem violates residual bounds",
                code="EIGEN_RESIDUAL",
                details={"residual": residual, "orthonormality": ortho},
            )

    return es
