"""
Thermotopo - Wilson Loops

Discrete path-ordered products of polar-unitarized overlap links along closed
theta_x lines, and the winding of arg det W(theta_y).
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
import structlog

from thermotopo.core.config import settings
from thermotopo.core.exceptions import GridTooCoarseError, InvalidInputError
from thermotopo.observability.metrics import WINDINGS_TOTAL
from thermotopo.topology.models import ManifoldBundle, TwistGrid, WilsonLoopData

logger = structlog.get_logger()


def unitarize(m: np.ndarray) -> Tuple[np.ndarray, float]:
    """Polar factor of a square matrix (singular values set to 1) and its smallest singular value."""
    u, s, vh = np.linalg.svd(m)
    return u @ vh, float(np.min(s))


def wrap_phase(phase: np.ndarray) -> np.ndarray:
    """Map angles to (-pi, pi]."""
    wrapped = np.angle(np.exp(1j * np.asarray(phase)))
    return np.where(wrapped <= -np.pi, wrapped + 2.0 * np.pi, wrapped)


def loop_from_frames(
    frames: np.ndarray,
    closure: Optional[np.ndarray] = None,
    row: int = 0,
    min_singular_value: Optional[float] = None,
) -> Tuple[np.ndarray, float]:
    """
    Wilson loop W = U_{n-1} ... U_0 of one closed theta_x line.

    Args:
        frames: (nx, dim, N) frames along the line
        closure: Large-gauge phases G mapping theta_x = 0 onto theta_x = 2*pi
        row: theta_y index (for diagnostics)
        min_singular_value: Guard below which links are rejected

    Returns:
        The N x N unitary loop and the smallest link singular value
    """
    guard = min_singular_value if min_singular_value is not None else settings.MIN_SINGULAR_VALUE
    nx, _, n = frames.shape
    loop = np.eye(n, dtype=np.complex128)
    smallest = np.inf

    for ix in range(nx):
        if ix < nx - 1:
            ahead = frames[ix + 1]
        else:
            ahead = frames[0] if closure is None else closure[:, None] * frames[0]
        link, sigma = unitarize(ahead.conj().T @ frames[ix])
        smallest = min(smallest, sigma)
        if sigma < guard:
            raise GridTooCoarseError(
                f"Overlap link at theta index ({ix}, {row}) is nearly singular "
                f"(smallest singular value {sigma:.2e}); refine the twist grid",
                min_singular_value=sigma,
                link=(ix, row),
            )
        loop = link @ loop

    return loop, float(smallest)


def wilson_loop(bundle: ManifoldBundle, iy: int) -> np.ndarray:
    """Wilson loop of a bundle along the theta_x line at theta_y index iy."""
    if iy not in bundle.rows:
        raise InvalidInputError(f"Row {iy} is not part of the bundle (rows {bundle.rows})")
    loop, _ = loop_from_frames(bundle.frames[bundle.rows.index(iy)], bundle.closure, row=iy)
    return loop


def wilson_eigenphases(loop: np.ndarray) -> np.ndarray:
    """Sorted eigenphases of a Wilson loop (the Wilson-loop spectrum)."""
    return np.sort(np.angle(np.linalg.eigvals(loop)))


def winding_from_loops(
    loops: Sequence[np.ndarray],
    grid: TwistGrid,
    manifold: int,
    min_singular_value: float = 1.0,
) -> WilsonLoopData:
    """
    Winding of arg det W over one period of theta_y.

    Increments between consecutive rows (and from the last row back to the first)
    are wrapped to (-pi, pi] and summed.
    """
    stack = np.asarray(loops)
    if stack.shape[0] != grid.ny:
        raise InvalidInputError(f"Expected {grid.ny} loops, got {stack.shape[0]}")

    phases = np.angle(np.linalg.det(stack))
    increments = wrap_phase(np.roll(phases, -1) - phases)
    raw = float(np.sum(increments))
    winding = int(np.rint(raw / (2.0 * np.pi)))

    data = WilsonLoopData(
        manifold=manifold,
        dimension=int(stack.shape[1]),
        grid=grid,
        loops=stack,
        det_phases=phases,
        increments=increments,
        winding=winding,
        raw_phase=raw,
        min_singular_value=min_singular_value,
    )

    if data.needs_refinement:
        WINDINGS_TOTAL.labels(status="needs_refinement").inc()
        logger.warning(
            "Wilson-loop phase step exceeds pi/2, refinement needed",
            manifold=manifold,
            grid=str(grid),
            max_increment=data.max_increment,
        )
    else:
        WINDINGS_TOTAL.labels(status="ok").inc()

    return data


def chern_winding(bundle: ManifoldBundle) -> WilsonLoopData:
    """
    Many-body Chern number of a complete bundle: (1/2pi) * sum of det-phase increments.

    Raises:
        InvalidInputError: If the bundle does not cover every theta_y row
        GridTooCoarseError: If an overlap link is nearly singular
    """
    if not bundle.is_complete:
        raise InvalidInputError("Chern winding needs frames on every theta_y row")

    loops: List[np.ndarray] = []
    smallest = np.inf
    for r, iy in enumerate(bundle.rows):
        loop, sigma = loop_from_frames(bundle.frames[r], bundle.closure, row=iy)
        loops.append(loop)
        smallest = min(smallest, sigma)

    return winding_from_loops(loops, bundle.grid, bundle.manifold, min_singular_value=smallest)


def wilson_loop_track(data: WilsonLoopData) -> pd.DataFrame:
    """theta_y, arg det W and unwrapped phase (ends at 2*pi*C)."""
    return data.to_frame()
