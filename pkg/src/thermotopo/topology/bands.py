"""
Thermotopo - Band Chern Numbers

Plaquette (link-variable) Chern numbers of groups of Bloch bands: the field
strength of each k-plaquette is the phase of the product of its four link
determinants, and the Chern number is their sum over 2*pi.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np
import structlog

from thermotopo.core.config import settings
from thermotopo.core.exceptions import GapClosedError, InvalidInputError, RefinementError
from thermotopo.models.bloch import BlochModel, bloch_hamiltonian, k_grid
from thermotopo.topology.models import BandChernResult

logger = structlog.get_logger()

GROUP_MERGE_GAP = 1e-3


def band_eigensystem(model: BlochModel) -> Tuple[np.ndarray, np.ndarray]:
    """Energies (nk1, nk2, n) and eigenvectors (nk1, nk2, n, n) on the model's k-grid."""
    ks = k_grid(model)
    hamiltonians = np.empty((model.nk1, model.nk2, model.n_bands, model.n_bands), dtype=np.complex128)
    for i in range(model.nk1):
        for j in range(model.nk2):
            hamiltonians[i, j] = bloch_hamiltonian(model, ks[i, j])
    energies, vectors = np.linalg.eigh(hamiltonians)
    return energies, vectors


def _link(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """det(<u(k)|u(k+mu)>) for stacks of frames (..., n, m)."""
    overlaps = np.einsum("...am,...an->...mn", a.conj(), b)
    return np.linalg.det(overlaps)


def plaquette_band_chern(
    model: BlochModel,
    bands: Sequence[int],
    grid: Optional[Tuple[int, int]] = None,
) -> BandChernResult:
    """
    Chern number of a group of bands.

    Args:
        model: Band model
        bands: Consecutive band indices (0 = lowest)
        grid: Optional (nk1, nk2) overriding the model's k-grid

    Raises:
        GapClosedError: If the group touches a neighbouring band on the grid
        RefinementError: If the plaquette sum is not integer within tolerance
    """
    if grid is not None:
        model = model.with_grid(*grid)
    selected = sorted(int(b) for b in bands)
    if not selected or selected != list(range(selected[0], selected[-1] + 1)):
        raise InvalidInputError(f"Band group must be consecutive indices, got {list(bands)}")
    if selected[0] < 0 or selected[-1] >= model.n_bands:
        raise InvalidInputError(f"Band indices must lie in [0, {model.n_bands})")

    energies, vectors = band_eigensystem(model)
    low, high = selected[0], selected[-1]

    gap_map = np.full(energies.shape[:2], np.inf)
    if low > 0:
        gap_map = np.minimum(gap_map, energies[..., low] - energies[..., low - 1])
    if high < model.n_bands - 1:
        gap_map = np.minimum(gap_map, energies[..., high + 1] - energies[..., high])
    min_gap = float(np.min(gap_map))
    if min_gap < settings.BAND_GAP_TOLERANCE:
        i, j = np.unravel_index(int(np.argmin(gap_map)), gap_map.shape)
        raise GapClosedError(
            f"Bands {selected} touch a neighbouring band (gap {min_gap:.2e})",
            theta=k_grid(model)[i, j],
            gap=min_gap,
        )

    frames = vectors[..., low : high + 1]
    u1 = _link(frames, np.roll(frames, -1, axis=0))
    u2 = _link(frames, np.roll(frames, -1, axis=1))
    field = np.angle(u1 * np.roll(u2, -1, axis=0) * np.conj(np.roll(u1, -1, axis=1)) * np.conj(u2))
    raw = float(np.sum(field) / (2.0 * np.pi))
    chern = int(np.rint(raw))

    if abs(raw - chern) > settings.WINDING_TOLERANCE:
        raise RefinementError(
            f"Plaquette sum {raw:.6f} for bands {selected} is not integer",
            details={"raw": raw, "grid": [model.nk1, model.nk2]},
        )

    logger.debug("Band Chern number", bands=selected, chern=chern, grid=[model.nk1, model.nk2])
    return BandChernResult(
        bands=selected,
        chern=chern,
        raw=raw,
        grid=(model.nk1, model.nk2),
        min_gap=min_gap,
    )


def band_groups(model: BlochModel, merge_gap: float = GROUP_MERGE_GAP) -> List[List[int]]:
    """Consecutive bands grouped wherever their separation on the k-grid drops below merge_gap."""
    energies, _ = band_eigensystem(model)
    groups: List[List[int]] = [[0]]
    for band in range(1, model.n_bands):
        separation = float(np.min(energies[..., band] - energies[..., band - 1]))
        if separation < merge_gap:
            groups[-1].append(band)
        else:
            groups.append([band])
    return groups


def all_band_cherns(
    model: BlochModel,
    groups: Optional[Sequence[Sequence[int]]] = None,
) -> List[BandChernResult]:
    """Chern numbers of every band group (detected automatically when not given)."""
    selected = [list(g) for g in groups] if groups is not None else band_groups(model)
    return [plaquette_band_chern(model, group) for group in selected]
