"""
Thermotopo - Toy Model Analytics

Closed-form gaps of -log(rho), manifold Chern numbers and the finite-temperature
classification of the two-band toy model.
"""

import math
from math import comb
from typing import List, Sequence, Tuple

import pandas as pd
import structlog

from thermotopo.core.exceptions import InvalidInputError
from thermotopo.toymodel.models import ToyBandModel, ToyClassification

logger = structlog.get_logger()


def _check_mu(model: ToyBandModel, mu: int) -> None:
    if not 1 <= mu <= model.n_particles:
        raise InvalidInputError(f"Gap index mu must lie in [1, {model.n_particles}], got {mu}")


def _scaled(beta: float, gap: float) -> float:
    if gap <= 0:
        return 0.0
    return beta * gap if beta > 0 else 0.0


def toy_gap(model: ToyBandModel, mu: int) -> float:
    """
    Gap between manifolds mu-1 and mu: beta*(Delta - (mu-1)*2J), clamped at 0.

    Gaps near mu = N use the particle-hole mirror mu -> N + 1 - mu.
    """
    _check_mu(model, mu)
    effective = min(mu, model.n_particles + 1 - mu)
    return _scaled(model.beta, model.delta - (effective - 1) * 2.0 * model.j)


def sampled_gap(model: ToyBandModel, mu: int) -> float:
    """
    Gap realized by an evenly sampled dispersion w_i = i/(N-1):
    beta*(Delta - 2J(mu-1)(N-mu)/(N-1)), clamped at 0.
    """
    _check_mu(model, mu)
    n = model.n_particles
    spread = 0.0 if n == 1 else 2.0 * model.j * (mu - 1) * (n - mu) / (n - 1)
    return _scaled(model.beta, model.delta - spread)


def toy_manifold_chern(n_particles: int, mu: int) -> Tuple[int, int]:
    """
    Total Chern number and size of manifold mu (mu particle-hole excitations).

    count = C(N, mu)^2 and chern = (-1 + 2*mu/N) * count.
    """
    if not 0 <= mu <= n_particles:
        raise InvalidInputError(f"mu must lie in [0, {n_particles}], got {mu}")
    count = comb(n_particles, mu) ** 2
    excited = comb(n_particles - 1, mu - 1) if mu > 0 else 0
    chern = comb(n_particles, mu) * (2 * excited - comb(n_particles, mu))
    assert chern * n_particles == (2 * mu - n_particles) * count
    return chern, count


def _blocks_from_gaps(n_particles: int, open_gaps: Sequence[int]) -> List[Tuple[int, int]]:
    blocks = []
    start = 0
    for mu in sorted(open_gaps):
        blocks.append((start, mu - 1))
        start = mu
    blocks.append((start, n_particles))
    return blocks


def classify_toy_phase(model: ToyBandModel) -> ToyClassification:
    """
    Merge manifolds across closed gaps and sum their Chern numbers.

    beta = 0 gives one trivial block; beta = inf keeps the ground manifold only.
    """
    n = model.n_particles
    manifold_cherns = [toy_manifold_chern(n, mu) for mu in range(n + 1)]

    if model.beta == 0:
        open_gaps: List[int] = []
        blocks = [(0, n)]
    elif math.isinf(model.beta):
        open_gaps = [mu for mu in range(1, n + 1) if toy_gap(model, mu) > 0]
        blocks = [(0, 0)]
    else:
        open_gaps = [mu for mu in range(1, n + 1) if toy_gap(model, mu) > 0]
        blocks = _blocks_from_gaps(n, open_gaps)

    cherns = [sum(manifold_cherns[mu][0] for mu in range(a, b + 1)) for a, b in blocks]
    counts = [sum(manifold_cherns[mu][1] for mu in range(a, b + 1)) for a, b in blocks]

    return ToyClassification(
        model=model,
        open_gaps=open_gaps,
        blocks=blocks,
        chern_per_block=cherns,
        counts=counts,
    )


def phase_diagram(
    delta: float,
    n_particles: int,
    j_over_delta: Sequence[float],
    temperatures: Sequence[float],
) -> pd.DataFrame:
    """
    Classification over a (J/Delta, T) grid, J/Delta outer and T inner.

    Columns: j_over_delta, temperature, n_blocks, chern_list (';'-joined).
    """
    rows = []
    for ratio in j_over_delta:
        for temperature in temperatures:
            model = ToyBandModel.at_temperature(delta, ratio * delta, n_particles, temperature)
            result = classify_toy_phase(model)
            rows.append({
                "j_over_delta": float(ratio),
                "temperature": float(temperature),
                "n_blocks": result.n_blocks,
                "chern_list": ";".join(str(c) for c in result.chern_per_block),
            })

    logger.debug("Toy phase diagram", points=len(rows), n_particles=n_particles)
    return pd.DataFrame(rows, columns=["j_over_delta", "temperature", "n_blocks", "chern_list"])
