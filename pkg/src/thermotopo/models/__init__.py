"""Models module - Lattice, Fock-space and Bloch Hamiltonians."""

from thermotopo.models.bloch import (
    BlochKind,
    BlochModel,
    HaldaneParams,
    HofstadterParams,
    bloch_hamiltonian,
    haldane_model,
    hofstadter_model,
    k_grid,
)
from thermotopo.models.factory import get_bloch_model, get_lattice_spec
from thermotopo.models.fock import FockBasis, build_many_body_hamiltonian, popcount
from thermotopo.models.lattice import (
    HoppingBond,
    LatticeModelSpec,
    build_single_particle_hamiltonian,
    hopping_bonds,
    plaquette_phase,
    superlattice_sites,
    twist_gauge_phases,
)

__all__ = [
    "LatticeModelSpec",
    "HoppingBond",
    "hopping_bonds",
    "superlattice_sites",
    "plaquette_phase",
    "twist_gauge_phases",
    "build_single_particle_hamiltonian",
    "FockBasis",
    "popcount",
    "build_many_body_hamiltonian",
    "BlochKind",
    "BlochModel",
    "HaldaneParams",
    "HofstadterParams",
    "bloch_hamiltonian",
    "haldane_model",
    "hofstadter_model",
    "k_grid",
    "get_lattice_spec",
    "get_bloch_model",
]
