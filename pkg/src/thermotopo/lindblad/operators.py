"""
Thermotopo - Qubit-Chain Operators

Local operators on a register of qubits (site 0 is the leading tensor factor,
basis state 0 is spin up) and builders for Hamiltonians and jump lists from
configuration terms.
"""

from functools import reduce
from typing import Dict, List, Sequence

import numpy as np

from thermotopo.core.exceptions import InvalidInputError
from thermotopo.core.schemas import JumpTerm, OperatorTerm

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=np.complex128)
SIGMA_PLUS = SIGMA_MINUS.T.copy()

OPERATORS: Dict[str, np.ndarray] = {
    "sigma_x": SIGMA_X,
    "sigma_y": SIGMA_Y,
    "sigma_z": SIGMA_Z,
    "sigma_minus": SIGMA_MINUS,
    "sigma_plus": SIGMA_PLUS,
    "number": SIGMA_PLUS @ SIGMA_MINUS,
}


def site_operator(name: str) -> np.ndarray:
    try:
        return OPERATORS[name]
    except KeyError:
        raise InvalidInputError(f"Unknown operator '{name}' (known: {sorted(OPERATORS)})")


def local_operator(op: np.ndarray, sites: Sequence[int], n_qubits: int) -> np.ndarray:
    """Product of op acting on each of the given sites, identity elsewhere."""
    if any(s < 0 or s >= n_qubits for s in sites):
        raise InvalidInputError(f"Sites {list(sites)} outside a register of {n_qubits} qubits")
    if len(set(sites)) != len(sites):
        raise InvalidInputError(f"Sites {list(sites)} repeat")
    factors = [op if site in sites else np.eye(2) for site in range(n_qubits)]
    return reduce(np.kron, factors)


def hamiltonian_from_terms(terms: Sequence[OperatorTerm], n_qubits: int) -> np.ndarray:
    """Sum of coefficient * product-of-local-operators terms, Hermitized."""
    dim = 2**n_qubits
    h = np.zeros((dim, dim), dtype=np.complex128)
    for term in terms:
        h += term.coefficient * local_operator(site_operator(term.operator), term.sites, n_qubits)
    return (h + h.conj().T) / 2.0


def jumps_from_terms(jumps: Sequence[JumpTerm], n_qubits: int) -> List[np.ndarray]:
    """Jump operators sqrt(rate) * O on their support."""
    return [
        np.sqrt(jump.rate) * local_operator(site_operator(jump.operator), jump.support, n_qubits)
        for jump in jumps
    ]
