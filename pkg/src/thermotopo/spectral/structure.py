"""
Thermotopo - Spectral Structure

Partition of the spectrum of -log(rho) into manifolds separated by gaps.
"""

from typing import Any, Dict, Optional, Sequence

import numpy as np
import structlog

from thermotopo.core.config import settings
from thermotopo.core.exceptions import InvalidInputError
from thermotopo.spectral.models import EigenSystem, SpectralStructure, ThermalEnsemble

logger = structlog.get_logger()


def detect_manifolds(
    levels: Sequence[float],
    gap_threshold: float,
    beta: float = 1.0,
) -> SpectralStructure:
    """
    Split ascending levels wherever consecutive spacing reaches the threshold.

    Args:
        levels: Ascending values of -log(rho) (up to a constant)
        gap_threshold: Smallest spacing that separates two manifolds
        beta: Inverse temperature recorded on the result

    Returns:
        SpectralStructure with manifolds [start, end) and the gaps between them
    """
    values = np.asarray(levels, dtype=float)
    if values.size == 0:
        raise InvalidInputError("Cannot detect manifolds of an empty spectrum")
    if gap_threshold <= 0:
        raise InvalidInputError(f"gap_threshold must be positive, got {gap_threshold}")
    spacings = np.diff(values)
    if (spacings < -1e-12 * max(1.0, float(np.max(np.abs(values))))).any():
        raise InvalidInputError("Levels must be sorted in ascending order")

    cuts = np.nonzero(spacings >= gap_threshold)[0] + 1
    bounds = [0, *cuts.tolist(), len(values)]
    manifolds = [(bounds[i], bounds[i + 1]) for i in range(len(bounds) - 1)]
    gaps = [float(spacings[cut - 1]) for cut in cuts]

    return SpectralStructure(
        levels=values,
        manifolds=manifolds,
        gaps=gaps,
        threshold=float(gap_threshold),
        beta=float(beta),
    )


def thermal_spectral_structure(
    es: EigenSystem,
    beta: float,
    gap_threshold_energy: Optional[float] = None,
    max_levels: Optional[int] = None,
    level_threshold: Optional[float] = None,
) -> SpectralStructure:
    """
    Spectral structure of the Gibbs state at inverse temperature beta.

    Levels are beta*(E_n - E_0); the threshold is beta*gap_threshold_energy, or
    level_threshold when given (a threshold on the -log(rho) scale itself).
    """
    if beta <= 0:
        raise InvalidInputError(f"beta must be positive, got {beta}")
    threshold = gap_threshold_energy if gap_threshold_energy is not None else settings.GAP_THRESHOLD

    energies = es.eigenvalues if max_levels is None else es.eigenvalues[:max_levels]
    levels = beta * (energies - energies[0]) if energies.size else energies
    cut = level_threshold if level_threshold is not None else beta * threshold
    return detect_manifolds(levels, cut, beta=beta)


def thermal_ensemble(es: EigenSystem, beta: float) -> ThermalEnsemble:
    """Gibbs ensemble over the eigenvalues of an eigensystem."""
    if beta < 0:
        raise InvalidInputError(f"beta must be non-negative, got {beta}")
    return ThermalEnsemble(beta=beta, energies=es.eigenvalues)


def manifold_report(
    structure: SpectralStructure,
    ensemble: Optional[ThermalEnsemble] = None,
    max_manifolds: Optional[int] = None,
) -> Dict[str, Any]:
    """
    JSON report of a spectral structure.

    Format: {"manifolds": [{"start", "size", "width"}], "gaps": [...]}, plus the
    degeneracy pattern of each manifold and, with an ensemble, its entropy, purity
    and purity gaps.
    """
    report = structure.to_dict()
    degeneracies = structure.degeneracies()
    if max_manifolds is not None:
        report["manifolds"] = report["manifolds"][:max_manifolds]
        report["gaps"] = report["gaps"][: max(max_manifolds - 1, 0)]
        degeneracies = degeneracies[:max_manifolds]

    for entry, pattern in zip(report["manifolds"], degeneracies):
        entry["degeneracies"] = pattern

    if ensemble is not None:
        report["thermal"] = ensemble.to_dict()
        gaps = ensemble.purity_gaps(structure)
        report["purity_gaps"] = gaps if max_manifolds is None else gaps[: max(max_manifolds - 1, 0)]

    return report
