"""
Thermotopo - Entanglement Entropy

Bipartite von Neumann entropy of pure states via Schmidt decomposition, for
fermionic Fock states and for plain tensor-product (qubit) registers.
"""

from typing import Sequence, Tuple

import numpy as np
from scipy.special import entr

from thermotopo.core.exceptions import InvalidInputError
from thermotopo.models.fock import FockBasis, popcount

NORM_TOLERANCE = 1e-8


def _check_normalized(state: np.ndarray) -> None:
    norm = float(np.linalg.norm(state))
    if abs(norm - 1.0) > NORM_TOLERANCE:
        raise InvalidInputError(f"State is not normalized (norm {norm:.3e})")


def schmidt_entropy(matrix: np.ndarray) -> float:
    """Entropy -sum p log p of the squared singular values of a coefficient matrix."""
    singular = np.linalg.svd(matrix, compute_uv=False)
    weights = singular**2
    return float(np.sum(entr(weights[weights > 0])))


def entanglement_entropy(
    state: np.ndarray,
    partition: Sequence[int],
    basis: FockBasis,
) -> float:
    """
    Entanglement entropy S_A (nats) of a fixed-N fermionic state.

    Args:
        state: Normalized amplitudes over the basis
        partition: Sites of subsystem A (B is the complement)
        basis: Fock basis of the state

    Returns:
        S_A = -tr rho_A log rho_A
    """
    state = np.asarray(state, dtype=np.complex128)
    if state.shape != (basis.size,):
        raise InvalidInputError(f"State length {state.shape} does not match basis size {basis.size}")
    _check_normalized(state)

    sites_a = sorted(set(int(s) for s in partition))
    if len(sites_a) != len(partition):
        raise InvalidInputError("Partition lists a site more than once")
    if not sites_a or len(sites_a) >= basis.n_sites:
        raise InvalidInputError("Both subsystems of a bipartition must be non-empty")
    if sites_a[0] < 0 or sites_a[-1] >= basis.n_sites:
        raise InvalidInputError(f"Partition sites must lie in [0, {basis.n_sites})")

    mask_a = sum(1 << s for s in sites_a)
    mask_b = ((1 << basis.n_sites) - 1) ^ mask_a
    states = basis.states

    # moving every A operator left of every B operator in the descending product
    swaps = np.zeros(basis.size, dtype=np.int64)
    for a in sites_a:
        occupied = (states >> a) & 1
        above = mask_b & ~((1 << (a + 1)) - 1)
        swaps += occupied * popcount(states & above)
    amplitudes = state * (1 - 2 * (swaps & 1))

    rows, row_index = np.unique(states & mask_a, return_inverse=True)
    cols, col_index = np.unique(states & mask_b, return_inverse=True)
    matrix = np.zeros((len(rows), len(cols)), dtype=np.complex128)
    matrix[row_index, col_index] = amplitudes

    return schmidt_entropy(matrix)


def tensor_entanglement_entropy(state: np.ndarray, dims: Tuple[int, int]) -> float:
    """
    Entanglement entropy of a pure state on H_A (x) H_B.

    The state is indexed row-major with A as the leading factor.
    """
    state = np.asarray(state, dtype=np.complex128)
    dim_a, dim_b = dims
    if state.size != dim_a * dim_b:
        raise InvalidInputError(f"State length {state.size} does not match dims {dims}")
    _check_normalized(state)
    return schmidt_entropy(state.reshape(dim_a, dim_b))
