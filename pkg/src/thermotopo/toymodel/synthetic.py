"""
Thermotopo - Toy Model Synthetic Spectrum

Brute-force many-body spectrum of the toy model at fixed filling, for
cross-checking the analytic gaps with the generic manifold detection.
"""

from itertools import combinations
from math import comb
from typing import Literal, Optional

import numpy as np

from thermotopo.core.config import settings
from thermotopo.core.exceptions import InvalidInputError, ResourceLimitError
from thermotopo.spectral.models import SpectralStructure
from thermotopo.spectral.structure import detect_manifolds
from thermotopo.toymodel.models import ToyBandModel

Dispersion = Literal["uniform", "edges"]


def dispersion_samples(n_particles: int, dispersion: Dispersion = "uniform") -> np.ndarray:
    """
    Band-width coordinates w_i in [0, 1] of the N momenta.

    "uniform" spaces them evenly; "edges" puts ceil(N/2) at the band bottom and
    the rest at the top, where the closed-form gaps of toy_gap are exact.
    """
    if dispersion == "uniform":
        return np.linspace(0.0, 1.0, n_particles)
    if dispersion == "edges":
        bottom = (n_particles + 1) // 2
        return np.concatenate([np.zeros(bottom), np.ones(n_particles - bottom)])
    raise InvalidInputError(f"Unknown dispersion sampling '{dispersion}'")


def single_particle_levels(model: ToyBandModel, dispersion: Dispersion = "uniform") -> np.ndarray:
    """Lower then upper band energies -/+(Delta/2 + J*w_i)."""
    w = dispersion_samples(model.n_particles, dispersion)
    upper = model.delta / 2.0 + model.j * w
    return np.concatenate([-upper, upper])


def toy_synthetic_spectrum(
    model: ToyBandModel,
    n_k: Optional[int] = None,
    dispersion: Dispersion = "uniform",
) -> np.ndarray:
    """
    All C(2N, N) many-body energies at filling N, ascending.

    Raises:
        ResourceLimitError: If N exceeds MAX_TOY_PARTICLES
    """
    n = model.n_particles
    if n_k is not None and n_k != n:
        raise InvalidInputError(f"n_k must equal the particle number {n}, got {n_k}")
    if n > settings.MAX_TOY_PARTICLES:
        raise ResourceLimitError(
            f"Enumerating C({2 * n},{n}) states exceeds the toy cap N <= {settings.MAX_TOY_PARTICLES}",
            requested=comb(2 * n, n),
            limit=comb(2 * settings.MAX_TOY_PARTICLES, settings.MAX_TOY_PARTICLES),
        )

    levels = single_particle_levels(model, dispersion)
    occupations = np.array(list(combinations(range(2 * n), n)), dtype=np.int64)
    return np.sort(levels[occupations].sum(axis=1))


def toy_spectral_structure(
    model: ToyBandModel,
    gap_threshold: float,
    dispersion: Dispersion = "uniform",
) -> SpectralStructure:
    """Manifolds of beta*(E - E_0) for the enumerated spectrum (threshold in energy units)."""
    if not model.beta > 0 or np.isinf(model.beta):
        raise InvalidInputError("Synthetic spectral structure needs 0 < beta < inf")
    energies = toy_synthetic_spectrum(model, dispersion=dispersion)
    return detect_manifolds(
        model.beta * (energies - energies[0]),
        model.beta * gap_threshold,
        beta=model.beta,
    )
