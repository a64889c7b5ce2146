"""Toy model module - Analytic two-band model and its synthetic spectrum."""

from thermotopo.toymodel.analytic import (
    classify_toy_phase,
    phase_diagram,
    sampled_gap,
    toy_gap,
    toy_manifold_chern,
)
from thermotopo.toymodel.models import ToyBandModel, ToyClassification
from thermotopo.toymodel.synthetic import (
    single_particle_levels,
    toy_spectral_structure,
    toy_synthetic_spectrum,
)

__all__ = [
    "ToyBandModel",
    "ToyClassification",
    "toy_gap",
    "sampled_gap",
    "toy_manifold_chern",
    "classify_toy_phase",
    "phase_diagram",
    "single_particle_levels",
    "toy_synthetic_spectrum",
    "toy_spectral_structure",
]
