"""
Thermotopo - Topology Models

Twist grids, manifold bundles and Wilson-loop / Chern-number results.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from thermotopo.core.exceptions import InvalidInputError

MIN_GRID_POINTS = 4


@dataclass(frozen=True)
class TwistGrid:
    """Closed grid of twist angles theta = (2*pi*i/nx, 2*pi*j/ny)."""

    nx: int
    ny: int

    def __post_init__(self) -> None:
        if self.nx < MIN_GRID_POINTS or self.ny < MIN_GRID_POINTS:
            raise InvalidInputError(
                f"Twist grid needs at least {MIN_GRID_POINTS} points per direction, "
                f"got {self.nx}x{self.ny}"
            )

    @classmethod
    def parse(cls, text: str) -> "TwistGrid":
        """Parse '<nx>x<ny>'."""
        try:
            nx, ny = (int(part) for part in text.lower().split("x"))
        except ValueError:
            raise InvalidInputError(f"Grid must look like 12x12, got '{text}'")
        return cls(nx, ny)

    @property
    def thetas_x(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.nx) / self.nx

    @property
    def thetas_y(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.ny) / self.ny

    def point(self, ix: int, iy: int) -> Tuple[float, float]:
        return (2.0 * np.pi * ix / self.nx, 2.0 * np.pi * iy / self.ny)

    def refined(self) -> "TwistGrid":
        """Grid with twice as many theta_y points."""
        return TwistGrid(self.nx, 2 * self.ny)

    def to_list(self) -> List[int]:
        return [self.nx, self.ny]

    def __str__(self) -> str:
        return f"{self.nx}x{self.ny}"


@dataclass
class ManifoldBundle:
    """
    Orthonormal frames of one manifold over (a subset of rows of) a twist grid.

    frames[r, ix] is the (dim, N_mu) frame at theta = (theta_x[ix], theta_y[rows[r]]).
    closure holds the diagonal large-gauge phases G with psi(theta_x + 2*pi) = G psi(theta_x);
    None means the frames are periodic as stored.
    """

    manifold: int
    start: int
    end: int
    grid: TwistGrid
    frames: np.ndarray
    rows: List[int] = field(default_factory=list)
    closure: Optional[np.ndarray] = None
    min_gap: float = float("inf")

    def __post_init__(self) -> None:
        if self.frames.ndim != 4:
            raise InvalidInputError(f"Frames must be 4-dimensional, got shape {self.frames.shape}")
        if not self.rows:
            self.rows = list(range(self.frames.shape[0]))
        if self.frames.shape[0] != len(self.rows) or self.frames.shape[1] != self.grid.nx:
            raise InvalidInputError(
                "Frame array does not match grid rows",
                details={"shape": list(self.frames.shape), "rows": len(self.rows), "nx": self.grid.nx},
            )

    @property
    def dimension(self) -> int:
        return int(self.frames.shape[3])

    @property
    def is_complete(self) -> bool:
        return self.rows == list(range(self.grid.ny))

    def orthonormality_error(self) -> float:
        """Largest |V+V - 1| entry over all stored frames."""
        v = self.frames
        gram = np.einsum("rxam,rxan->rxmn", v.conj(), v)
        return float(np.max(np.abs(gram - np.eye(self.dimension))))


@dataclass
class WilsonLoopData:
    """Wilson loops W(theta_y) along closed theta_x lines and the winding of det W."""

    manifold: int
    dimension: int
    grid: TwistGrid
    loops: np.ndarray  # (ny, N, N)
    det_phases: np.ndarray  # arg det W(theta_y_j)
    increments: np.ndarray  # branch-unwrapped steps, including the wrap back to theta_y = 0
    winding: int
    raw_phase: float
    min_singular_value: float = 1.0

    @property
    def max_increment(self) -> float:
        return float(np.max(np.abs(self.increments))) if self.increments.size else 0.0

    @property
    def needs_refinement(self) -> bool:
        return self.max_increment > np.pi / 2

    @property
    def discrepancy(self) -> float:
        return abs(self.raw_phase / (2.0 * np.pi) - self.winding)

    @property
    def unwrapped(self) -> np.ndarray:
        """Accumulated phase relative to theta_y = 0 at the ny + 1 track points."""
        return np.concatenate([[0.0], np.cumsum(self.increments)])

    def unitarity_error(self) -> float:
        eye = np.eye(self.dimension)
        return float(
            max(np.max(np.abs(w.conj().T @ w - eye)) for w in self.loops) if len(self.loops) else 0.0
        )

    def to_frame(self) -> pd.DataFrame:
        """Track table: theta_y, arg_det_W, unwrapped_phase (closing row at theta_y = 2*pi)."""
        thetas = np.append(self.grid.thetas_y, 2.0 * np.pi)
        phases = np.append(self.det_phases, self.det_phases[0])
        return pd.DataFrame({
            "theta_y": thetas,
            "arg_det_W": phases,
            "unwrapped_phase": self.unwrapped,
        })

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "manifold": self.manifold,
            "dimension": self.dimension,
            "winding": self.winding,
            "raw_phase": float(self.raw_phase),
            "grid": self.grid.to_list(),
            "max_increment": self.max_increment,
            "min_singular_value": float(self.min_singular_value),
        }


@dataclass
class ChernResult:
    """Many-body Chern number of a manifold with its verification record."""

    data: WilsonLoopData
    refinements: int = 0
    verification: Optional[Dict[str, Any]] = None
    gauge_windings: List[int] = field(default_factory=list)
    min_gap: float = float("inf")
    elapsed_s: float = 0.0

    @property
    def winding(self) -> int:
        return self.data.winding

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary (chern report format)."""
        return {
            "manifold": self.data.manifold,
            "dimension": self.data.dimension,
            "winding": self.data.winding,
            "raw_phase": float(self.data.raw_phase),
            "grid": self.data.grid.to_list(),
            "refinements": self.refinements,
            "verification": self.verification,
            "gauge_windings": self.gauge_windings,
            "min_gap": float(self.min_gap),
        }


@dataclass
class BandChernResult:
    """Plaquette Chern number of a group of Bloch bands."""

    bands: List[int]
    chern: int
    raw: float
    grid: Tuple[int, int]
    min_gap: float

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "bands": self.bands,
            "chern": self.chern,
            "raw": float(self.raw),
            "grid": list(self.grid),
            "min_gap": float(self.min_gap),
        }
