"""
Thermotopo - Spectrum Scans

Lowest many-body levels along a parameter sweep and the point where the
manifold partition of the thermal state first changes.
"""

import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
import structlog

from thermotopo.core.config import settings
from thermotopo.models.fock import FockBasis, build_many_body_hamiltonian
from thermotopo.models.lattice import LatticeModelSpec
from thermotopo.observability.metrics import SWEEP_POINTS_TOTAL
from thermotopo.orchestration.pool import run_jobs
from thermotopo.spectral.models import EigenSystem, SpectralStructure
from thermotopo.spectral.solver import eigendecompose
from thermotopo.spectral.structure import thermal_spectral_structure

logger = structlog.get_logger()


@dataclass
class SpectrumScan:
    """Lowest levels and manifold structure at every sweep value."""

    parameter: str
    values: List[float]
    energies: np.ndarray  # (n_values, K)
    structures: List[SpectralStructure]
    n_signature: int = 2
    transition: Optional[float] = None
    signatures: List[Tuple[int, ...]] = field(default_factory=list)

    def to_frame(self) -> pd.DataFrame:
        """One row per sweep value: parameter, E_1..E_K."""
        columns = [f"E_{i + 1}" for i in range(self.energies.shape[1])]
        frame = pd.DataFrame(self.energies, columns=columns)
        frame.insert(0, self.parameter, self.values)
        return frame

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "parameter": self.parameter,
            "n_signature": self.n_signature,
            "transition": self.transition,
            "reference_signature": list(self.signatures[0]) if self.signatures else [],
            "points": [
                {"value": value, "signature": list(sig), "gaps": structure.gaps[: self.n_signature]}
                for value, sig, structure in zip(self.values, self.signatures, self.structures)
            ],
        }


def lowest_levels(job: Tuple[LatticeModelSpec, int]) -> np.ndarray:
    """Lowest K many-body energies of one model (job = (spec, K))."""
    spec, levels = job
    basis = FockBasis.for_spec(spec)
    h = build_many_body_hamiltonian(spec, basis)
    count = min(levels, basis.size)
    es: EigenSystem = eigendecompose(h, subset=(0, count - 1), kind="spectrum")
    return es.eigenvalues


def scan_spectrum(
    spec: LatticeModelSpec,
    parameter: str,
    values: Sequence[float],
    levels: Optional[int] = None,
    gap_threshold: Optional[float] = None,
    beta: float = 1.0,
    n_signature: int = 2,
    workers: Optional[int] = None,
) -> SpectrumScan:
    """
    Sweep one model parameter and track the spectral structure.

    Args:
        spec: Base model; `parameter` is replaced by each sweep value
        parameter: LatticeModelSpec field to sweep (e.g. "g")
        values: Sweep values in order
        levels: Number of retained levels K (defaults to SPECTRUM_LEVELS)
        gap_threshold: Energy threshold separating manifolds (defaults to GAP_THRESHOLD)
        beta: Inverse temperature of the analysed Gibbs state
        n_signature: Number of lowest manifolds whose sizes define the partition
        workers: Worker processes

    Returns:
        SpectrumScan; `transition` is the first value whose signature differs from
        the first point's, or None
    """
    k = levels if levels is not None else settings.SPECTRUM_LEVELS
    threshold = gap_threshold if gap_threshold is not None else settings.GAP_THRESHOLD
    start = time.perf_counter()

    specs = [spec.with_params(**{parameter: float(value)}) for value in values]
    results = run_jobs(lowest_levels, [(s, k) for s in specs], workers=workers, label="spectrum")
    SWEEP_POINTS_TOTAL.labels(command="hh spectrum").inc(len(specs))

    width = min(len(r) for r in results)
    energies = np.vstack([r[:width] for r in results])

    structures = [
        thermal_spectral_structure(EigenSystem(row, np.empty((0, 0))), beta, threshold)
        for row in energies
    ]
    signatures = [s.signature(n_signature) for s in structures]

    transition = None
    for value, signature in zip(values, signatures):
        if signature != signatures[0]:
            transition = float(value)
            break

    logger.info(
        "Spectrum scan finished",
        parameter=parameter,
        points=len(values),
        levels=width,
        transition=transition,
        elapsed_s=round(time.perf_counter() - start, 3),
    )

    return SpectrumScan(
        parameter=parameter,
        values=[float(v) for v in values],
        energies=energies,
        structures=structures,
        n_signature=n_signature,
        transition=transition,
        signatures=signatures,
    )
