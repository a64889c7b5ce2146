"""
Thermotopo - Hofstadter Lattice

Geometry, Peierls phases and single-particle hopping matrix of the square-lattice
Hofstadter model on an Lx x Ly torus with twisted boundary conditions.

Sites are ordered j = jx + Lx * jy. The Landau gauge puts the phase 2*pi*alpha*jx
on every +y bond; the +x bonds that wrap from jx = Lx-1 to jx = 0 carry the seam
phase -2*pi*alpha*Lx*jy, so every plaquette (wrap-around ones included) encloses
the flux 2*pi*alpha.
"""

import dataclasses
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Tuple

import numpy as np
import structlog

from thermotopo.core.exceptions import ConfigurationError

logger = structlog.get_logger()

WELL_PERIOD_X = 4
WELL_PERIOD_Y = 2


@dataclass(frozen=True)
class LatticeModelSpec:
    """Parameters of the interacting Hofstadter-Hubbard model on a torus."""

    lx: int
    ly: int
    alpha: Fraction = Fraction(0)
    t: float = 1.0
    u: float = 0.0
    g: float = 0.0
    n_particles: int = 1
    theta_x: float = 0.0
    theta_y: float = 0.0

    def __post_init__(self) -> None:
        if self.lx <= 0 or self.ly <= 0:
            raise ConfigurationError(
                f"Lattice sides must be positive, got {self.lx}x{self.ly}",
                details={"lx": self.lx, "ly": self.ly},
            )
        object.__setattr__(self, "alpha", Fraction(self.alpha))

        flux = self.alpha * self.lx * self.ly
        if flux.denominator != 1:
            raise ConfigurationError(
                f"Total flux alpha*Lx*Ly = {flux} is not an integer",
                details={"alpha": str(self.alpha), "lx": self.lx, "ly": self.ly},
            )
        if self.g != 0 and (self.lx % WELL_PERIOD_X or self.ly % WELL_PERIOD_Y):
            raise ConfigurationError(
                f"Superlattice needs Lx divisible by {WELL_PERIOD_X} and Ly by {WELL_PERIOD_Y}",
                details={"lx": self.lx, "ly": self.ly, "g": self.g},
            )
        if not 0 <= self.n_particles <= self.lx * self.ly:
            raise ConfigurationError(
                f"Particle number {self.n_particles} outside [0, {self.lx * self.ly}]",
                details={"n_particles": self.n_particles},
            )

    @classmethod
    def from_config(cls, config: Any) -> "LatticeModelSpec":
        """Build from a LatticeConfig (or any object with the JSON keys as attributes)."""
        if config.alpha_den <= 0:
            raise ConfigurationError("alpha_den must be positive")
        return cls(
            lx=config.lx,
            ly=config.ly,
            alpha=Fraction(config.alpha_num, config.alpha_den),
            t=config.t,
            u=config.u,
            g=config.g,
            n_particles=config.n_particles,
            theta_x=config.theta_x,
            theta_y=config.theta_y,
        )

    @property
    def n_sites(self) -> int:
        return self.lx * self.ly

    @property
    def flux_quanta(self) -> int:
        return int(self.alpha * self.lx * self.ly)

    @property
    def twist(self) -> Tuple[float, float]:
        return (self.theta_x, self.theta_y)

    def site(self, jx: int, jy: int) -> int:
        return (jx % self.lx) + self.lx * (jy % self.ly)

    def coords(self, j: int) -> Tuple[int, int]:
        return (j % self.lx, j // self.lx)

    def with_twist(self, theta_x: float, theta_y: float) -> "LatticeModelSpec":
        return dataclasses.replace(self, theta_x=theta_x, theta_y=theta_y)

    def with_params(self, **changes: Any) -> "LatticeModelSpec":
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary (JSON configuration keys)."""
        return {
            "lx": self.lx,
            "ly": self.ly,
            "alpha_num": self.alpha.numerator,
            "alpha_den": self.alpha.denominator,
            "t": self.t,
            "u": self.u,
            "g": self.g,
            "n_particles": self.n_particles,
            "theta_x": self.theta_x,
            "theta_y": self.theta_y,
        }


@dataclass(frozen=True)
class HoppingBond:
    """Directed nearest-neighbour bond: the term -t * exp(i*phase) c+_target c_source."""

    source: int
    target: int
    direction: str  # x, y
    phase: float


def hopping_bonds(spec: LatticeModelSpec) -> List[HoppingBond]:
    """
    Forward (+x and +y) bonds of the torus with their Peierls and twist phases.

    Directions of length 1 have no bonds. Every site emits one bond per direction,
    so a direction of length 2 carries two bonds between the same pair of sites
    (the interior link and the wrap-around link, each with its own phase).
    """
    two_pi_alpha = 2.0 * math.pi * float(spec.alpha)
    twist_x = spec.theta_x / spec.lx
    twist_y = spec.theta_y / spec.ly
    bonds: List[HoppingBond] = []

    for jy in range(spec.ly):
        for jx in range(spec.lx):
            source = spec.site(jx, jy)
            if spec.lx > 1:
                seam = -two_pi_alpha * spec.lx * jy if jx == spec.lx - 1 else 0.0
                bonds.append(HoppingBond(source, spec.site(jx + 1, jy), "x", seam + twist_x))
            if spec.ly > 1:
                bonds.append(
                    HoppingBond(source, spec.site(jx, jy + 1), "y", two_pi_alpha * jx + twist_y)
                )

    return bonds


def superlattice_sites(spec: LatticeModelSpec) -> List[int]:
    """Well sites of the superlattice potential: jx = 0 mod 4 and jy = 0 mod 2."""
    return [
        spec.site(jx, jy)
        for jy in range(0, spec.ly, WELL_PERIOD_Y)
        for jx in range(0, spec.lx, WELL_PERIOD_X)
    ]


def build_single_particle_hamiltonian(spec: LatticeModelSpec) -> np.ndarray:
    """
    Hopping matrix of one particle on the torus (superlattice and interaction excluded).

    Returns:
        Hermitian (Lx*Ly, Lx*Ly) complex matrix
    """
    h = np.zeros((spec.n_sites, spec.n_sites), dtype=np.complex128)
    for bond in hopping_bonds(spec):
        amplitude = -spec.t * np.exp(1j * bond.phase)
        h[bond.target, bond.source] += amplitude
        h[bond.source, bond.target] += np.conj(amplitude)

    return (h + h.conj().T) / 2.0


def plaquette_phase(h: np.ndarray, spec: LatticeModelSpec, jx: int, jy: int) -> complex:
    """Directed hopping-phase product around the counter-clockwise plaquette at (jx, jy)."""
    corners = [
        spec.site(jx, jy),
        spec.site(jx + 1, jy),
        spec.site(jx + 1, jy + 1),
        spec.site(jx, jy + 1),
    ]
    product = 1.0 + 0.0j
    for a, b in zip(corners, corners[1:] + corners[:1]):
        link = h[b, a]
        product *= link / abs(link)
    return complex(product)


def twist_gauge_phases(spec: LatticeModelSpec, axis: str = "x") -> np.ndarray:
    """
    Per-site phases of the large gauge transformation G with H(theta + 2*pi) = G H(theta) G+.

    Args:
        spec: Lattice model
        axis: Twist direction ("x" or "y")

    Returns:
        Length Lx*Ly vector of unit phases exp(i*2*pi*j_axis/L_axis)
    """
    if axis not in ("x", "y"):
        raise ConfigurationError(f"Unknown twist axis '{axis}'")
    sites = np.arange(spec.n_sites)
    if axis == "x":
        return np.exp(2j * np.pi * (sites % spec.lx) / spec.lx)
    return np.exp(2j * np.pi * (sites // spec.lx) / spec.ly)
