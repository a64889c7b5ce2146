"""
Thermotopo - Lindblad Models

Open-system types: Lindblad generators in vectorized (column-major) form,
their spectra and the demonstration reports.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np


@dataclass
class LindbladSystem:
    """Hamiltonian, jump operators (rates absorbed) and the d^2 x d^2 Liouvillian."""

    hamiltonian: np.ndarray
    jumps: List[np.ndarray]
    liouvillian: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.hamiltonian.shape[0])

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {"dim": self.dim, "n_jumps": len(self.jumps)}


@dataclass
class LindbladSpectrum:
    """Liouvillian eigenvalues, damping gap and the unique steady state."""

    eigenvalues: np.ndarray
    damping_gap: float
    ness: np.ndarray
    tolerance: float
    oscillating_modes: int = 0

    @property
    def converges(self) -> bool:
        """Every state relaxes to the steady state (no undamped nonzero modes)."""
        return self.oscillating_modes == 0

    @property
    def ness_diag(self) -> List[float]:
        return [float(x) for x in np.real(np.diag(self.ness))]

    @property
    def purity(self) -> float:
        return float(np.real(np.trace(self.ness @ self.ness)))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary (ness report format)."""
        return {
            "damping_gap": float(self.damping_gap),
            "ness_diag": self.ness_diag,
            "purity": self.purity,
            "oscillating_modes": self.oscillating_modes,
            "ness_unique": self.converges,
        }


@dataclass
class MixtureReport:
    """Eigen-decomposition of a two-qubit state with the entanglement of each eigenstate."""

    weights: List[float]
    entropies: List[float]
    purity: float
    eigenstates: List[List[complex]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "weights": self.weights,
            "entropies": self.entropies,
            "purity": self.purity,
            "eigenstates": [[[z.real, z.imag] for z in state] for state in self.eigenstates],
        }


@dataclass
class BellReport:
    """Bell-state dephasing demonstration."""

    kappa: float
    dephasing_time: float
    max_coherence: float
    before: MixtureReport
    after: MixtureReport

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "kappa": self.kappa,
            "dephasing_time": self.dephasing_time,
            "max_coherence": self.max_coherence,
            "before": self.before.to_dict(),
            "after": self.after.to_dict(),
        }


@dataclass
class LcpEquivalenceReport:
    """Mutual conversion of two gapped steady states by finite-time evolution."""

    damping_gaps: List[float]
    times: List[float]
    distances: List[float]  # ||exp(t1 L1) rho2 - rho1||_1, ||exp(t2 L2) rho1 - rho2||_1
    perturbation_ratio: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "damping_gaps": self.damping_gaps,
            "times": self.times,
            "distances": self.distances,
            "perturbation_ratio": self.perturbation_ratio,
        }
