"""
Thermotopo - Toy Model Types

Two-band model with dispersion eps_(+/-)(k) = +/-(Delta/2 + J*w(k)), w in [0, 1],
filled with N particles (one per k-state of the lower band).
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from thermotopo.core.exceptions import InvalidInputError


@dataclass(frozen=True)
class ToyBandModel:
    """Band gap Delta, band width parameter J, particle number N, inverse temperature beta."""

    delta: float
    j: float
    n_particles: int
    beta: float = 1.0

    def __post_init__(self) -> None:
        if not self.delta > 0:
            raise InvalidInputError(f"Band gap must be positive, got {self.delta}")
        if self.j < 0:
            raise InvalidInputError(f"Band width must be non-negative, got {self.j}")
        if self.n_particles < 1:
            raise InvalidInputError(f"Particle number must be at least 1, got {self.n_particles}")
        if math.isnan(self.beta) or self.beta < 0:
            raise InvalidInputError(f"beta must be in [0, inf], got {self.beta}")

    @classmethod
    def at_temperature(cls, delta: float, j: float, n_particles: int, temperature: float) -> "ToyBandModel":
        """Model at temperature T (T = 0 is beta = inf, T = inf is beta = 0)."""
        if temperature < 0:
            raise InvalidInputError(f"Temperature must be non-negative, got {temperature}")
        if temperature == 0:
            beta = math.inf
        elif math.isinf(temperature):
            beta = 0.0
        else:
            beta = 1.0 / temperature
        return cls(delta=delta, j=j, n_particles=n_particles, beta=beta)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {"delta": self.delta, "j": self.j, "n_particles": self.n_particles, "beta": self.beta}


@dataclass
class ToyClassification:
    """Merged manifolds (inclusive ranges of excitation number mu) and their Chern numbers."""

    model: ToyBandModel
    open_gaps: List[int]
    blocks: List[Tuple[int, int]]
    chern_per_block: List[int]
    counts: List[int] = field(default_factory=list)

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "model": self.model.to_dict(),
            "open_gaps": self.open_gaps,
            "blocks": [
                {"mu_start": start, "mu_end": end, "chern": chern, "count": count}
                for (start, end), chern, count in zip(self.blocks, self.chern_per_block, self.counts)
            ],
            "n_blocks": self.n_blocks,
        }
