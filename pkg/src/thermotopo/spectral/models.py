"""
Thermotopo - Spectral Models

Result types for eigendecompositions, spectral structures of -log(rho) and
thermal ensembles.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from scipy.special import entr, logsumexp

from thermotopo.core.config import settings


@dataclass
class EigenSystem:
    """Ascending eigenvalues with orthonormal eigenvectors as columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def size(self) -> int:
        return len(self.eigenvalues)

    def orthonormality_error(self) -> float:
        """max |V+V - 1| over all entries."""
        v = self.eigenvectors
        return float(np.max(np.abs(v.conj().T @ v - np.eye(v.shape[1]))))

    def residual(self, h: np.ndarray) -> float:
        """max_i ||H v_i - E_i v_i||_2 relative to ||H||_2."""
        v = self.eigenvectors
        r = h @ v - v * self.eigenvalues[None, :]
        scale = max(float(np.linalg.norm(h, 2)), 1e-300)
        return float(np.max(np.linalg.norm(r, axis=0)) / scale)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {"size": self.size, "eigenvalues": self.eigenvalues.tolist()}


@dataclass
class SpectralStructure:
    """Levels of -log(rho) partitioned into manifolds separated by gaps."""

    levels: np.ndarray
    manifolds: List[Tuple[int, int]]  # [start, end)
    gaps: List[float]
    threshold: float
    beta: float = 1.0

    @property
    def n_manifolds(self) -> int:
        return len(self.manifolds)

    @property
    def sizes(self) -> List[int]:
        return [end - start for start, end in self.manifolds]

    @property
    def widths(self) -> List[float]:
        return [float(self.levels[end - 1] - self.levels[start]) for start, end in self.manifolds]

    def manifold(self, mu: int) -> Tuple[int, int]:
        """Index window of manifold mu (1-based, mu = 1 is the ground manifold)."""
        if not 1 <= mu <= self.n_manifolds:
            raise IndexError(f"Manifold {mu} outside 1..{self.n_manifolds}")
        return self.manifolds[mu - 1]

    def signature(self, n: Optional[int] = None) -> Tuple[int, ...]:
        """Sizes of the lowest n manifolds (all when n is None)."""
        return tuple(self.sizes[:n] if n is not None else self.sizes)

    def degeneracies(self, tolerance: Optional[float] = None) -> List[List[int]]:
        """Multiplicities of exactly degenerate levels inside each manifold (reporting only)."""
        tol = tolerance if tolerance is not None else settings.DEGENERACY_TOLERANCE
        result = []
        for start, end in self.manifolds:
            counts = [1]
            for i in range(start + 1, end):
                if self.levels[i] - self.levels[i - 1] < tol:
                    counts[-1] += 1
                else:
                    counts.append(1)
            result.append(counts)
        return result

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary (manifold report format)."""
        return {
            "beta": self.beta,
            "threshold": self.threshold,
            "manifolds": [
                {"start": start, "size": end - start, "width": width}
                for (start, end), width in zip(self.manifolds, self.widths)
            ],
            "gaps": [float(gap) for gap in self.gaps],
        }


@dataclass
class ThermalEnsemble:
    """Gibbs state exp(-beta H)/Z in the eigenbasis of H."""

    beta: float
    energies: np.ndarray
    log_z: float = field(init=False)

    def __post_init__(self) -> None:
        self.energies = np.asarray(self.energies, dtype=float)
        self.log_z = float(logsumexp(-self.beta * self.energies))

    @property
    def partition_function(self) -> float:
        return float(np.exp(self.log_z))

    @property
    def probabilities(self) -> np.ndarray:
        return np.exp(-self.beta * self.energies - self.log_z)

    @property
    def entropy(self) -> float:
        """Von Neumann entropy in nats."""
        return float(np.sum(entr(self.probabilities)))

    @property
    def purity(self) -> float:
        return float(np.sum(self.probabilities**2))

    def purity_gaps(self, structure: SpectralStructure) -> List[float]:
        """Gaps in the spectrum of rho itself between consecutive manifolds."""
        p = self.probabilities
        return [
            float(p[structure.manifolds[mu][1] - 1] - p[structure.manifolds[mu + 1][0]])
            for mu in range(structure.n_manifolds - 1)
        ]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "beta": self.beta,
            "log_z": self.log_z,
            "entropy": self.entropy,
            "purity": self.purity,
        }
