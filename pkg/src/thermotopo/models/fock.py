"""
Thermotopo - Fock Space

Fixed-particle-number basis of spinless fermions and the second-quantized
Hofstadter-Hubbard Hamiltonian H = H_t + H_int + H_pot in that basis.
"""

import time
from itertools import combinations
from math import comb
from typing import Iterable, Optional

import numpy as np
import structlog

from thermotopo.core.config import settings
from thermotopo.core.exceptions import InvalidInputError, ResourceLimitError
from thermotopo.models.lattice import (
    LatticeModelSpec,
    build_single_particle_hamiltonian,
    hopping_bonds,
    superlattice_sites,
)

logger = structlog.get_logger()

MAX_SITES = 62


def popcount(values: np.ndarray) -> np.ndarray:
    """Number of set bits of each non-negative integer."""
    return np.bitwise_count(np.asarray(values).astype(np.uint64)).astype(np.int64)


class FockBasis:
    """
    Occupation-number basis of N spinless fermions on L sites.

    States are bitmasks (bit j set = site j occupied) in ascending order.
    """

    def __init__(self, n_sites: int, n_particles: int, max_dim: Optional[int] = None):
        if not 0 < n_sites <= MAX_SITES:
            raise InvalidInputError(f"Site count must lie in [1, {MAX_SITES}], got {n_sites}")
        if not 0 <= n_particles <= n_sites:
            raise InvalidInputError(
                f"Particle count {n_particles} outside [0, {n_sites}]",
                details={"n_sites": n_sites, "n_particles": n_particles},
            )

        limit = max_dim if max_dim is not None else settings.MAX_DENSE_DIM
        size = comb(n_sites, n_particles)
        if size > limit:
            raise ResourceLimitError(
                f"Fock space C({n_sites},{n_particles}) = {size} exceeds the dense cap {limit}",
                requested=size,
                limit=limit,
            )

        self.n_sites = n_sites
        self.n_particles = n_particles
        masks = [sum(1 << j for j in occupied) for occupied in combinations(range(n_sites), n_particles)]
        self.states = np.array(sorted(masks), dtype=np.int64)

    @classmethod
    def for_spec(cls, spec: LatticeModelSpec, max_dim: Optional[int] = None) -> "FockBasis":
        return cls(spec.n_sites, spec.n_particles, max_dim=max_dim)

    @property
    def size(self) -> int:
        return len(self.states)

    def __len__(self) -> int:
        return self.size

    def lookup(self, masks: Iterable[int]) -> np.ndarray:
        """Ordinals of the given bitmasks; every mask must belong to the basis."""
        masks = np.asarray(masks, dtype=np.int64)
        positions = np.searchsorted(self.states, masks)
        if masks.size == 0:
            return positions
        clipped = np.minimum(positions, self.size - 1)
        if (positions >= self.size).any() or not np.array_equal(self.states[clipped], masks):
            raise InvalidInputError("Bitmask outside the fixed-N basis")
        return positions

    def index(self, mask: int) -> int:
        return int(self.lookup([mask])[0])

    def occupations(self) -> np.ndarray:
        """(dim, L) 0/1 occupation table."""
        shifts = np.arange(self.n_sites, dtype=np.int64)
        return ((self.states[:, None] >> shifts[None, :]) & 1).astype(np.int8)

    def particle_number_phases(self, site_phases: np.ndarray) -> np.ndarray:
        """Product of per-site phases over the occupied sites of every basis state."""
        occ = self.occupations().astype(bool)
        return np.prod(np.where(occ, site_phases[None, :], 1.0 + 0.0j), axis=1)


def _between_mask(i: int, j: int) -> int:
    low, high = min(i, j), max(i, j)
    return ((1 << high) - 1) ^ ((1 << (low + 1)) - 1)


def build_many_body_hamiltonian(
    spec: LatticeModelSpec,
    basis: FockBasis,
    max_dim: Optional[int] = None,
) -> np.ndarray:
    """
    Dense Hofstadter-Hubbard Hamiltonian in a fixed-N Fock basis.

    Hopping signs follow the site order j = jx + Lx*jy: moving a fermion from i to j
    picks up (-1) to the number of occupied sites strictly between them.

    Args:
        spec: Lattice model
        basis: Fock basis with L = Lx*Ly and N = spec.n_particles
        max_dim: Dense-dimension cap (defaults to MAX_DENSE_DIM)

    Returns:
        Hermitian (dim, dim) complex matrix
    """
    if basis.n_sites != spec.n_sites or basis.n_particles != spec.n_particles:
        raise InvalidInputError(
            "Fock basis does not match the lattice model",
            details={
                "basis": [basis.n_sites, basis.n_particles],
                "model": [spec.n_sites, spec.n_particles],
            },
        )

    limit = max_dim if max_dim is not None else settings.MAX_DENSE_DIM
    dim = basis.size
    if dim > limit:
        raise ResourceLimitError(
            f"Many-body dimension {dim} exceeds the dense cap {limit}",
            requested=dim,
            limit=limit,
        )

    start = time.perf_counter()
    states = basis.states
    occ = basis.occupations()
    h = np.zeros((dim, dim), dtype=np.complex128)

    # H_int and H_pot are diagonal
    diagonal = np.zeros(dim)
    if spec.u != 0:
        for bond in hopping_bonds(spec):
            diagonal += spec.u * occ[:, bond.source] * occ[:, bond.target]
    if spec.g != 0:
        wells = superlattice_sites(spec)
        diagonal -= spec.g * occ[:, wells].sum(axis=1)
    h[np.arange(dim), np.arange(dim)] = diagonal

    single = build_single_particle_hamiltonian(spec)
    targets, sources = np.nonzero(single)
    for j, i in zip(targets.tolist(), sources.tolist()):
        if i == j:
            continue
        movable = (occ[:, i] == 1) & (occ[:, j] == 0)
        if not movable.any():
            continue
        old = states[movable]
        new = old ^ (1 << i) ^ (1 << j)
        signs = 1 - 2 * (popcount(old & _between_mask(i, j)) & 1)
        h[basis.lookup(new), np.nonzero(movable)[0]] += single[j, i] * signs

    h = (h + h.conj().T) / 2.0

    logger.debug(
        "Built many-body Hamiltonian",
        dim=dim,
        lattice=f"{spec.lx}x{spec.ly}",
        n_particles=spec.n_particles,
        g=spec.g,
        elapsed_s=round(time.perf_counter() - start, 4),
    )
    return h
