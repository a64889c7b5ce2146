"""
Thermotopo - Manifold Bundles

Eigenvector frames of one gapped manifold of the Hofstadter-Hubbard model over a
grid of twisted boundary conditions.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import structlog

from thermotopo.core.config import settings
from thermotopo.core.exceptions import GapClosedError, InvalidInputError
from thermotopo.models.fock import FockBasis, build_many_body_hamiltonian
from thermotopo.models.lattice import LatticeModelSpec, twist_gauge_phases
from thermotopo.orchestration.pool import run_jobs
from thermotopo.spectral.solver import eigendecompose
from thermotopo.spectral.structure import detect_manifolds
from thermotopo.topology.models import ManifoldBundle, TwistGrid

logger = structlog.get_logger()


@dataclass(frozen=True)
class ManifoldWindow:
    """Energy-sorted index range [start, end) of manifold mu at theta = (0, 0)."""

    manifold: int
    start: int
    end: int
    hilbert_dim: int

    @property
    def dimension(self) -> int:
        return self.end - self.start


def closure_phases(spec: LatticeModelSpec, basis: FockBasis) -> np.ndarray:
    """Many-body large-gauge phases exp(i*2*pi*sum_occupied jx / Lx) for theta_x -> theta_x + 2*pi."""
    return basis.particle_number_phases(twist_gauge_phases(spec, "x"))


def manifold_window(
    spec: LatticeModelSpec,
    manifold: int,
    gap_threshold: Optional[float] = None,
    levels: Optional[int] = None,
) -> ManifoldWindow:
    """
    Locate manifold mu (1-based) in the spectrum at the spec's twist.

    Only the lowest `levels` eigenvalues are computed unless the manifold reaches
    their upper edge, in which case the full spectrum is used.
    """
    if manifold < 1:
        raise InvalidInputError(f"Manifold index is 1-based, got {manifold}")
    threshold = gap_threshold if gap_threshold is not None else settings.GAP_THRESHOLD
    basis = FockBasis.for_spec(spec)
    h = build_many_body_hamiltonian(spec, basis)

    count = min(levels if levels is not None else settings.SPECTRUM_LEVELS, basis.size)
    while True:
        es = eigendecompose(h, subset=(0, count - 1), kind="window")
        structure = detect_manifolds(es.eigenvalues, threshold)
        found = manifold <= structure.n_manifolds
        if found and (structure.manifold(manifold)[1] < count or count == basis.size):
            break
        if count == basis.size:
            raise InvalidInputError(
                f"Spectrum has only {structure.n_manifolds} manifolds, requested {manifold}",
                details={"sizes": structure.sizes},
            )
        count = basis.size

    start, end = structure.manifold(manifold)
    logger.debug("Located manifold", manifold=manifold, start=start, end=end, dim=basis.size)
    return ManifoldWindow(manifold=manifold, start=start, end=end, hilbert_dim=basis.size)


def manifold_frame(
    h: np.ndarray,
    window: ManifoldWindow,
    theta: Tuple[float, float],
    gap_threshold: float,
) -> Tuple[np.ndarray, float]:
    """
    Frame of the manifold at one twist, checking both bounding gaps.

    Returns:
        (dim, N_mu) orthonormal frame and the smaller bounding gap
    """
    top = min(window.end, window.hilbert_dim - 1)
    es = eigendecompose(h, subset=(0, top), kind="bundle")
    energies = es.eigenvalues

    gaps = []
    if window.start > 0:
        gaps.append(energies[window.start] - energies[window.start - 1])
    if window.end < window.hilbert_dim:
        gaps.append(energies[window.end] - energies[window.end - 1])
    gap = float(min(gaps)) if gaps else float("inf")

    if gap < gap_threshold:
        raise GapClosedError(
            f"Manifold {window.manifold} gap {gap:.3e} below {gap_threshold} at "
            f"theta = ({theta[0]:.4f}, {theta[1]:.4f}); topology undefined",
            theta=theta,
            gap=gap,
        )

    return es.eigenvectors[:, window.start : window.end], gap


def bundle_row(job: Tuple[LatticeModelSpec, ManifoldWindow, TwistGrid, int, float]) -> Tuple[np.ndarray, float]:
    """Frames along the theta_x line at theta_y index iy (job = (spec, window, grid, iy, threshold))."""
    spec, window, grid, iy, threshold = job
    basis = FockBasis.for_spec(spec)
    frames = []
    smallest = float("inf")
    for ix in range(grid.nx):
        theta = grid.point(ix, iy)
        h = build_many_body_hamiltonian(spec.with_twist(*theta), basis)
        frame, gap = manifold_frame(h, window, theta, threshold)
        frames.append(frame)
        smallest = min(smallest, gap)
    return np.stack(frames), smallest


def build_manifold_bundle(
    spec: LatticeModelSpec,
    manifold: int,
    grid: TwistGrid,
    rows: Optional[Sequence[int]] = None,
    gap_threshold: Optional[float] = None,
    window: Optional[ManifoldWindow] = None,
    workers: Optional[int] = None,
) -> ManifoldBundle:
    """
    Eigenvector frames of manifold mu at every point of a twist grid.

    Args:
        spec: Lattice model (its own twist is ignored)
        manifold: 1-based manifold index at theta = (0, 0)
        grid: Twist grid
        rows: theta_y indices to build (all rows when None)
        gap_threshold: Smallest admissible bounding gap (defaults to GAP_THRESHOLD)
        window: Precomputed manifold window
        workers: Worker processes (one job per row)

    Raises:
        GapClosedError: If a bounding gap falls below the threshold anywhere
    """
    threshold = gap_threshold if gap_threshold is not None else settings.GAP_THRESHOLD
    base = spec.with_twist(0.0, 0.0)
    win = window if window is not None else manifold_window(base, manifold, threshold)
    selected: List[int] = list(rows) if rows is not None else list(range(grid.ny))

    results = run_jobs(
        bundle_row,
        [(base, win, grid, iy, threshold) for iy in selected],
        workers=workers,
        label="bundle",
    )
    frames = np.stack([frames for frames, _ in results])
    basis = FockBasis.for_spec(base)

    return ManifoldBundle(
        manifold=manifold,
        start=win.start,
        end=win.end,
        grid=grid,
        frames=frames,
        rows=selected,
        closure=closure_phases(base, basis),
        min_gap=min(gap for _, gap in results),
    )
