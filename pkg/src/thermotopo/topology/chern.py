"""
Thermotopo - Many-Body Chern Driver

Computes the Chern number of a gapped manifold on a twist grid with memory
bounded by one theta_x line per job, refines theta_y when the unwrapping guard
trips, verifies the result on a second grid and optionally checks invariance
under random per-point frame rotations.
"""

import time
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import structlog
from scipy.stats import unitary_group

from thermotopo.core.config import settings
from thermotopo.core.exceptions import NumericalError, RefinementError
from thermotopo.models.fock import FockBasis
from thermotopo.models.lattice import LatticeModelSpec
from thermotopo.observability.metrics import REFINEMENTS_TOTAL
from thermotopo.orchestration.pool import run_jobs
from thermotopo.topology.bundle import ManifoldWindow, bundle_row, closure_phases, manifold_window
from thermotopo.topology.models import ChernResult, TwistGrid, WilsonLoopData
from thermotopo.topology.wilson import loop_from_frames, winding_from_loops

logger = structlog.get_logger()


@dataclass(frozen=True)
class RowJob:
    """One theta_x line of a Chern computation."""

    spec: LatticeModelSpec
    window: ManifoldWindow
    grid: TwistGrid
    iy: int
    threshold: float
    gauge_checks: int = 0
    seed: int = 0


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random U(dim) matrix."""
    if dim == 1:
        return np.exp(2j * np.pi * rng.random()).reshape(1, 1)
    return unitary_group.rvs(dim, random_state=rng)


def default_grid(dimension: int) -> TwistGrid:
    """Twist grid sized for a manifold of the given dimension."""
    if dimension <= settings.LARGE_MANIFOLD_DIM:
        return TwistGrid(settings.GRID_NX, settings.GRID_NY)
    return TwistGrid(settings.LARGE_GRID_NX, settings.LARGE_GRID_NY)


def row_loops(job: RowJob) -> Dict[str, Any]:
    """Wilson loop of one row, plus the loops of randomly re-gauged copies of its frames."""
    frames, gap = bundle_row((job.spec, job.window, job.grid, job.iy, job.threshold))
    closure = closure_phases(job.spec, FockBasis.for_spec(job.spec))
    loop, sigma = loop_from_frames(frames, closure, row=job.iy)

    gauged = []
    for check in range(job.gauge_checks):
        rng = np.random.default_rng([job.seed, check, job.iy])
        rotations = [random_unitary(job.window.dimension, rng) for _ in range(job.grid.nx)]
        rotated = np.stack([frame @ rot for frame, rot in zip(frames, rotations)])
        gauged.append(loop_from_frames(rotated, closure, row=job.iy)[0])

    return {"loop": loop, "sigma": sigma, "gap": gap, "gauged": gauged}


def _evaluate(
    spec: LatticeModelSpec,
    window: ManifoldWindow,
    grid: TwistGrid,
    threshold: float,
    workers: Optional[int],
    gauge_checks: int = 0,
    seed: int = 0,
) -> Tuple[WilsonLoopData, float, List[int]]:
    jobs = [
        RowJob(spec, window, grid, iy, threshold, gauge_checks=gauge_checks, seed=seed)
        for iy in range(grid.ny)
    ]
    results = run_jobs(row_loops, jobs, workers=workers, label="chern")

    data = winding_from_loops(
        [r["loop"] for r in results],
        grid,
        window.manifold,
        min_singular_value=min(r["sigma"] for r in results),
    )
    gauge_windings = [
        winding_from_loops([r["gauged"][check] for r in results], grid, window.manifold).winding
        for check in range(gauge_checks)
    ]
    return data, min(r["gap"] for r in results), gauge_windings


def compute_chern(
    spec: LatticeModelSpec,
    manifold: int,
    grid: Optional[TwistGrid] = None,
    gap_threshold: Optional[float] = None,
    verify: bool = True,
    verify_grid: Optional[TwistGrid] = None,
    gauge_checks: int = 0,
    seed: Optional[int] = None,
    max_refinements: Optional[int] = None,
    workers: Optional[int] = None,
) -> ChernResult:
    """
    Many-body Chern number of manifold mu of the Hofstadter-Hubbard model.

    Args:
        spec: Lattice model (its twist is ignored)
        manifold: 1-based manifold index at theta = (0, 0)
        grid: Twist grid (sized from the manifold dimension when None)
        gap_threshold: Smallest admissible bounding gap (defaults to GAP_THRESHOLD)
        verify: Recompute on a second grid and require the same winding
        verify_grid: Verification grid (defaults to 4 more points per direction)
        gauge_checks: Number of random U(N_mu) re-gaugings to check
        seed: Seed of the re-gauging rotations (defaults to DEFAULT_SEED)
        max_refinements: theta_y doublings allowed when the guard trips
        workers: Worker processes (one job per theta_y row)

    Raises:
        GapClosedError: If the manifold gap closes on the grid
        GridTooCoarseError: If an overlap link is nearly singular
        RefinementError: If the winding is not stable
    """
    threshold = gap_threshold if gap_threshold is not None else settings.GAP_THRESHOLD
    limit = max_refinements if max_refinements is not None else settings.MAX_REFINEMENTS
    rng_seed = seed if seed is not None else settings.DEFAULT_SEED
    base = spec.with_twist(0.0, 0.0)
    started = time.perf_counter()

    window = manifold_window(base, manifold, threshold)
    current = grid if grid is not None else default_grid(window.dimension)
    logger.info(
        "Computing many-body Chern number",
        manifold=manifold,
        dimension=window.dimension,
        hilbert_dim=window.hilbert_dim,
        grid=str(current),
        g=spec.g,
    )

    refinements = 0
    data, min_gap, gauge_windings = _evaluate(
        base, window, current, threshold, workers, gauge_checks, rng_seed
    )
    while data.needs_refinement and refinements < limit:
        refinements += 1
        REFINEMENTS_TOTAL.inc()
        current = current.refined()
        logger.info("Refining twist grid", manifold=manifold, grid=str(current))
        data, min_gap, gauge_windings = _evaluate(
            base, window, current, threshold, workers, gauge_checks, rng_seed
        )

    if data.needs_refinement:
        raise RefinementError(
            f"Winding of manifold {manifold} is not resolved after {refinements} refinements "
            f"(largest phase step {data.max_increment:.3f} on {current})",
            details={
                "grid": current.to_list(),
                "refinements": refinements,
                "max_increment": data.max_increment,
            },
        )

    if data.discrepancy > settings.WINDING_TOLERANCE:
        raise RefinementError(
            f"Winding of manifold {manifold} is not integer within tolerance",
            details={"raw_phase": data.raw_phase, "grid": current.to_list()},
        )

    mismatched = [w for w in gauge_windings if w != data.winding]
    if mismatched:
        raise NumericalError(
            f"Winding changed under random frame rotations: {data.winding} vs {mismatched}",
            code="GAUGE_DEPENDENT",
            details={"winding": data.winding, "gauge_windings": gauge_windings},
        )

    verification = None
    if verify:
        check_grid = verify_grid if verify_grid is not None else TwistGrid(current.nx + 4, current.ny + 4)
        check, check_gap, _ = _evaluate(base, window, check_grid, threshold, workers)
        min_gap = min(min_gap, check_gap)
        verification = {"grid": check_grid.to_list(), "winding": check.winding, "raw_phase": check.raw_phase}
        if check.winding != data.winding or check.discrepancy > settings.WINDING_TOLERANCE:
            raise RefinementError(
                f"Winding of manifold {manifold} differs between grids: "
                f"{data.winding} on {current} vs {check.winding} on {check_grid}",
                details={"grid": current.to_list(), "verification": verification},
            )

    elapsed = round(time.perf_counter() - started, 3)
    logger.info(
        "Chern number computed",
        manifold=manifold,
        dimension=window.dimension,
        winding=data.winding,
        raw_phase=data.raw_phase,
        grid=str(current),
        elapsed_s=elapsed,
    )

    return ChernResult(
        data=data,
        refinements=refinements,
        verification=verification,
        gauge_windings=gauge_windings,
        min_gap=min_gap,
        elapsed_s=elapsed,
    )
