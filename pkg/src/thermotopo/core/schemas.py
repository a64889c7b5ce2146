"""
Thermotopo - Configuration Schemas

Pydantic models for the JSON documents accepted by the command-line front end.
"""

import math
from enum import Enum
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from thermotopo.core.config import settings


class CommandName(str, Enum):
    """Commands that accept a configuration document."""
    TOY_CLASSIFY = "toy classify"
    TOY_PHASE_DIAGRAM = "toy phase-diagram"
    HH_SPECTRUM = "hh spectrum"
    HH_MANIFOLDS = "hh manifolds"
    HH_CHERN = "hh chern"
    HH_WILSON = "hh wilson"
    BANDS_CHERN = "bands chern"
    LINDBLAD_NESS = "lindblad ness"


class LatticeConfig(BaseModel):
    """Hofstadter-Hubbard model parameters (keys as in the JSON config)."""

    model_config = ConfigDict(extra="forbid")

    lx: int = Field(..., gt=0, description="Sites along x")
    ly: int = Field(..., gt=0, description="Sites along y")
    alpha_num: int = Field(default=1, description="Flux per plaquette, numerator")
    alpha_den: int = Field(default=8, gt=0, description="Flux per plaquette, denominator")
    t: float = Field(default=1.0, description="Hopping energy")
    u: float = Field(default=1.0, description="Nearest-neighbour interaction")
    g: float = Field(default=0.0, description="Superlattice depth")
    n_particles: int = Field(..., ge=0, description="Fermion number")
    theta_x: float = Field(default=0.0, description="Twist angle along x")
    theta_y: float = Field(default=0.0, description="Twist angle along y")


class SweepAxis(BaseModel):
    """A uniformly stepped parameter axis [start, stop]."""

    model_config = ConfigDict(extra="forbid")

    name: str = Field(default="g")
    start: float = Field(default=0.0)
    stop: float
    step: float = Field(..., gt=0)

    @model_validator(mode="after")
    def _check_range(self) -> "SweepAxis":
        if self.stop <= self.start:
            raise ValueError("sweep stop must be greater than start")
        return self

    def values(self) -> List[float]:
        """Axis points, endpoint included when it lies on the step lattice."""
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9))
        return [round(self.start + i * self.step, 12) for i in range(count + 1)]


class HofstadterHubbardConfig(BaseModel):
    """Configuration of the `hh ...` commands."""

    model_config = ConfigDict(extra="forbid")

    command: Optional[str] = None
    model: LatticeConfig
    sweep: Optional[SweepAxis] = None
    grid: Optional[Tuple[int, int]] = None
    verify_grid: Optional[Tuple[int, int]] = None
    manifold: int = Field(default=1, ge=1)
    levels: int = Field(default_factory=lambda: settings.SPECTRUM_LEVELS, gt=0)
    gap_threshold: float = Field(default_factory=lambda: settings.GAP_THRESHOLD, gt=0)
    beta: float = Field(default=1.0, gt=0)
    signature_manifolds: int = Field(default=2, ge=1)
    verify: bool = True
    gauge_checks: int = Field(default=0, ge=0)
    output: Optional[str] = None
    workers: Optional[int] = Field(default=None, ge=1)

    @field_validator("grid", "verify_grid")
    @classmethod
    def _check_grid(cls, value: Optional[Tuple[int, int]]) -> Optional[Tuple[int, int]]:
        if value is not None and min(value) < 4:
            raise ValueError("twist grids need at least 4 points per direction")
        return value

    @model_validator(mode="after")
    def _check_references(self) -> "HofstadterHubbardConfig":
        if self.sweep is not None and self.sweep.name not in LatticeConfig.model_fields:
            raise ValueError(f"sweep parameter '{self.sweep.name}' is not a model parameter")
        if self.command == CommandName.HH_SPECTRUM.value and self.sweep is None:
            raise ValueError("'hh spectrum' needs a 'sweep' block")
        return self


class ToyConfig(BaseModel):
    """Configuration of the `toy ...` commands."""

    model_config = ConfigDict(extra="forbid")

    command: Optional[str] = None
    delta: float = Field(default=1.0, gt=0)
    j: float = Field(default=0.0, ge=0)
    n_particles: int = Field(default=4, ge=1)
    beta: float = Field(default=1.0, ge=0)
    j_over_delta: Optional[SweepAxis] = None
    temperatures: List[float] = Field(default_factory=lambda: [0.0, 0.5, 1.0, 2.0, math.inf])
    output: Optional[str] = None

    @field_validator("temperatures")
    @classmethod
    def _check_temperatures(cls, value: List[float]) -> List[float]:
        if any(temp < 0 for temp in value):
            raise ValueError("temperatures must be non-negative")
        return value

    @model_validator(mode="after")
    def _check_references(self) -> "ToyConfig":
        if self.command == CommandName.TOY_PHASE_DIAGRAM.value and self.j_over_delta is None:
            raise ValueError("'toy phase-diagram' needs a 'j_over_delta' axis")
        return self


class BandsConfig(BaseModel):
    """Configuration of the `bands chern` command."""

    model_config = ConfigDict(extra="forbid")

    command: Optional[str] = None
    kind: Literal["haldane", "hofstadter"]
    t1: float = 1.0
    t2: float = 0.1
    phi: float = math.pi / 2
    m: float = 0.0
    t: float = 1.0
    alpha_num: int = 1
    alpha_den: int = Field(default=8, gt=0)
    bands: Optional[List[List[int]]] = None
    n_k: int = Field(default=64, ge=4)
    output: Optional[str] = None


OperatorName = Literal["sigma_x", "sigma_y", "sigma_z", "sigma_plus", "sigma_minus", "number"]


class OperatorTerm(BaseModel):
    """A Hamiltonian term: coefficient times a single-site or bond operator product."""

    model_config = ConfigDict(extra="forbid")

    operator: OperatorName
    sites: List[int] = Field(..., min_length=1, max_length=2)
    coefficient: float = 1.0


class JumpTerm(BaseModel):
    """A local jump operator sqrt(rate) * O acting on one site or one bond."""

    model_config = ConfigDict(extra="forbid")

    operator: OperatorName
    site: Optional[int] = None
    sites: Optional[List[int]] = Field(default=None, min_length=1, max_length=2)
    rate: float = Field(..., ge=0)

    @model_validator(mode="after")
    def _check_sites(self) -> "JumpTerm":
        if (self.site is None) == (self.sites is None):
            raise ValueError("give exactly one of 'site' or 'sites'")
        return self

    @property
    def support(self) -> List[int]:
        return [self.site] if self.site is not None else list(self.sites or [])


class LindbladConfig(BaseModel):
    """Configuration of the `lindblad ness` command (qubit register of dimension dim)."""

    model_config = ConfigDict(extra="forbid")

    command: Optional[str] = None
    dim: int = Field(..., ge=2)
    hamiltonian: List[OperatorTerm] = Field(default_factory=list)
    jumps: List[JumpTerm] = Field(default_factory=list)
    perturbation_strength: Optional[float] = Field(default=None, ge=0)
    output: Optional[str] = None

    @model_validator(mode="after")
    def _check_register(self) -> "LindbladConfig":
        n_qubits = self.dim.bit_length() - 1
        if 1 << n_qubits != self.dim:
            raise ValueError("dim must be a power of two (a register of qubits)")
        used = [s for term in self.hamiltonian for s in term.sites]
        used += [s for jump in self.jumps for s in jump.support]
        if any(s < 0 or s >= n_qubits for s in used):
            raise ValueError(f"site index out of range for {n_qubits} qubits")
        return self

    @property
    def n_qubits(self) -> int:
        return self.dim.bit_length() - 1


class ConfigValidation(BaseModel):
    """Result of validating a configuration document."""

    valid: bool = Field(..., description="Whether the document is valid")
    errors: List[Dict[str, Any]] = Field(default_factory=list)
    warnings: List[Dict[str, Any]] = Field(default_factory=list)
