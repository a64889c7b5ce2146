"""
Thermotopo - Bloch Models

Single-particle Bloch Hamiltonians: the two-band Haldane model and the q-band
Hofstadter model in its magnetic unit cell. Momenta are reduced coordinates
(k1, k2) in [0, 2*pi) on which H(k) is periodic.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Sequence, Union

import numpy as np

from thermotopo.core.exceptions import ConfigurationError


class BlochKind(str, Enum):
    """Supported band models."""
    HALDANE = "haldane"
    HOFSTADTER = "hofstadter"


@dataclass(frozen=True)
class HaldaneParams:
    """Nearest-neighbour hopping t1, complex next-nearest hopping t2*exp(i*phi), sublattice offset M."""

    t1: float = 1.0
    t2: float = 0.1
    phi: float = math.pi / 2
    m: float = 0.0


@dataclass(frozen=True)
class HofstadterParams:
    """Flux per plaquette alpha = p/q and hopping t."""

    alpha: Fraction = Fraction(1, 8)
    t: float = 1.0


@dataclass(frozen=True)
class BlochModel:
    """A band model together with the k-grid it is sampled on."""

    kind: BlochKind
    params: Union[HaldaneParams, HofstadterParams] = field(default_factory=HaldaneParams)
    nk1: int = 64
    nk2: int = 64

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", BlochKind(self.kind))
        expected = HaldaneParams if self.kind == BlochKind.HALDANE else HofstadterParams
        if not isinstance(self.params, expected):
            raise ConfigurationError(
                f"{self.kind.value} model needs {expected.__name__}, got {type(self.params).__name__}"
            )
        if self.nk1 < 4 or self.nk2 < 4:
            raise ConfigurationError(f"k-grid must be at least 4x4, got {self.nk1}x{self.nk2}")

    @property
    def n_bands(self) -> int:
        if isinstance(self.params, HofstadterParams):
            return Fraction(self.params.alpha).denominator
        return 2

    def with_grid(self, nk1: int, nk2: int) -> "BlochModel":
        return BlochModel(kind=self.kind, params=self.params, nk1=nk1, nk2=nk2)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        params: Dict[str, Any]
        if isinstance(self.params, HofstadterParams):
            alpha = Fraction(self.params.alpha)
            params = {"alpha": f"{alpha.numerator}/{alpha.denominator}", "t": self.params.t}
        else:
            params = {
                "t1": self.params.t1,
                "t2": self.params.t2,
                "phi": self.params.phi,
                "m": self.params.m,
            }
        return {"kind": self.kind.value, "params": params, "grid": [self.nk1, self.nk2]}


def haldane_model(
    t1: float = 1.0,
    t2: float = 0.1,
    phi: float = math.pi / 2,
    m: float = 0.0,
    nk: int = 64,
) -> BlochModel:
    return BlochModel(BlochKind.HALDANE, HaldaneParams(t1=t1, t2=t2, phi=phi, m=m), nk, nk)


def hofstadter_model(alpha: Fraction = Fraction(1, 8), t: float = 1.0, nk: int = 64) -> BlochModel:
    return BlochModel(BlochKind.HOFSTADTER, HofstadterParams(alpha=Fraction(alpha), t=t), nk, nk)


def _haldane(params: HaldaneParams, k1: float, k2: float) -> np.ndarray:
    f = 1.0 + np.exp(-1j * k1) + np.exp(-1j * k2)
    d0 = 2.0 * params.t2 * math.cos(params.phi) * (
        math.cos(k1) + math.cos(k2) + math.cos(k1 - k2)
    )
    dz = params.m - 2.0 * params.t2 * math.sin(params.phi) * (
        math.sin(k1) - math.sin(k2) + math.sin(k2 - k1)
    )
    off = -params.t1 * f
    return np.array([[d0 + dz, off], [np.conj(off), d0 - dz]], dtype=np.complex128)


def _hofstadter(params: HofstadterParams, k1: float, k2: float) -> np.ndarray:
    alpha = Fraction(params.alpha)
    q = alpha.denominator
    h = np.zeros((q, q), dtype=np.complex128)
    for m in range(q):
        h[m, m] += -2.0 * params.t * math.cos(k2 - 2.0 * math.pi * float(alpha) * m)
        a = (m + 1) % q
        phase = np.exp(-1j * k1) if m == q - 1 else 1.0
        h[a, m] += -params.t * phase
        h[m, a] += -params.t * np.conj(phase)
    return h


def bloch_hamiltonian(model: BlochModel, k: Sequence[float]) -> np.ndarray:
    """
    Bloch Hamiltonian H(k) of a band model.

    Args:
        model: Band model
        k: Reduced momentum (k1, k2)

    Returns:
        Hermitian (n_bands, n_bands) matrix
    """
    k1, k2 = float(k[0]), float(k[1])
    if isinstance(model.params, HofstadterParams):
        h = _hofstadter(model.params, k1, k2)
    else:
        h = _haldane(model.params, k1, k2)
    return (h + h.conj().T) / 2.0


def k_grid(model: BlochModel) -> np.ndarray:
    """(nk1, nk2, 2) array of reduced momenta 2*pi*(i/nk1, j/nk2)."""
    k1 = 2.0 * np.pi * np.arange(model.nk1) / model.nk1
    k2 = 2.0 * np.pi * np.arange(model.nk2) / model.nk2
    return np.stack(np.meshgrid(k1, k2, indexing="ij"), axis=-1)
