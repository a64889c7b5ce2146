"""Spectral module - Eigensystems, spectral structure of -log(rho), entanglement."""

from thermotopo.spectral.entanglement import (
    entanglement_entropy,
    tensor_entanglement_entropy,
)
from thermotopo.spectral.models import EigenSystem, SpectralStructure, ThermalEnsemble
from thermotopo.spectral.scan import SpectrumScan, lowest_levels, scan_spectrum
from thermotopo.spectral.solver import eigendecompose
from thermotopo.spectral.structure import (
    detect_manifolds,
    manifold_report,
    thermal_ensemble,
    thermal_spectral_structure,
)

__all__ = [
    "EigenSystem",
    "SpectralStructure",
    "ThermalEnsemble",
    "eigendecompose",
    "detect_manifolds",
    "thermal_spectral_structure",
    "thermal_ensemble",
    "manifold_report",
    "SpectrumScan",
    "scan_spectrum",
    "lowest_levels",
    "entanglement_entropy",
    "tensor_entanglement_entropy",
]
