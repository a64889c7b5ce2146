"""
Thermotopo - Open-System Demonstrations

Bell-state dephasing (a local measurement turns an entangled pure state into a
mixture of product states) and the mutual conversion of two gapped steady states
by finite-time evolution.
"""

from typing import List, Optional, Tuple

import numpy as np
import structlog

from thermotopo.core.exceptions import InvalidInputError
from thermotopo.lindblad.evolution import lcp_evolve, trace_norm
from thermotopo.lindblad.liouvillian import build_liouvillian, damping_gap_and_ness, perturbation_ratio
from thermotopo.lindblad.models import BellReport, LcpEquivalenceReport, LindbladSystem, MixtureReport
from thermotopo.lindblad.operators import SIGMA_MINUS, SIGMA_PLUS, SIGMA_X, SIGMA_Z, local_operator
from thermotopo.spectral.entanglement import tensor_entanglement_entropy

logger = structlog.get_logger()

WEIGHT_CUTOFF = 1e-12
DEGENERACY_TOLERANCE = 1e-6
COHERENCE_TARGET = 1e-8


def bell_state() -> np.ndarray:
    """|Psi+> = (|01> + |10>)/sqrt(2)."""
    psi = np.zeros(4, dtype=np.complex128)
    psi[1] = psi[2] = 1.0 / np.sqrt(2.0)
    return psi


def _resolve_degenerate(weights: np.ndarray, vectors: np.ndarray, observable: np.ndarray) -> np.ndarray:
    """Within each degenerate eigenspace, rotate to the eigenbasis of a local observable."""
    resolved = vectors.copy()
    start = 0
    while start < len(weights):
        end = start + 1
        while end < len(weights) and abs(weights[end] - weights[start]) < DEGENERACY_TOLERANCE:
            end += 1
        if end - start > 1:
            block = vectors[:, start:end]
            _, rotation = np.linalg.eigh(block.conj().T @ observable @ block)
            resolved[:, start:end] = block @ rotation
        start = end
    return resolved


def mixture_report(rho: np.ndarray, observable: Optional[np.ndarray] = None) -> MixtureReport:
    """Eigenstates of a two-qubit state (weight above cutoff) and their entanglement entropies."""
    weights, vectors = np.linalg.eigh((rho + rho.conj().T) / 2.0)
    order = np.argsort(-weights)
    weights, vectors = weights[order], vectors[:, order]
    if observable is not None:
        vectors = _resolve_degenerate(weights, vectors, observable)

    keep = weights > WEIGHT_CUTOFF
    states = [vectors[:, i] for i in np.nonzero(keep)[0]]
    return MixtureReport(
        weights=[float(w) for w in weights[keep]],
        entropies=[tensor_entanglement_entropy(s, (2, 2)) for s in states],
        purity=float(np.real(np.trace(rho @ rho))),
        eigenstates=[[complex(z) for z in s] for s in states],
    )


def bell_measurement_demo(kappa: float = 1.0, step: float = 1.0, max_time: float = 100.0) -> BellReport:
    """
    Dephase qubit A of |Psi+> with the jump sqrt(kappa) sigma_z^A until every
    off-diagonal element is below 1e-8, and compare the eigenstates before and after.
    """
    if kappa <= 0:
        raise InvalidInputError(f"Dephasing rate must be positive, got {kappa}")
    psi = bell_state()
    rho0 = np.outer(psi, psi.conj())
    z_a = local_operator(SIGMA_Z, [0], 2)
    system = build_liouvillian(np.zeros((4, 4)), [np.sqrt(kappa) * z_a])

    t = 0.0
    rho = rho0
    coherence = float(np.max(np.abs(rho - np.diag(np.diag(rho)))))
    while coherence >= COHERENCE_TARGET and t < max_time:
        t += step
        rho = lcp_evolve(system, rho0, t)
        coherence = float(np.max(np.abs(rho - np.diag(np.diag(rho)))))

    report = BellReport(
        kappa=kappa,
        dephasing_time=t,
        max_coherence=coherence,
        before=mixture_report(rho0),
        after=mixture_report(rho, observable=z_a),
    )
    logger.info(
        "Bell dephasing demo",
        dephasing_time=t,
        entropies_before=report.before.entropies,
        entropies_after=report.after.entropies,
        purity_after=report.after.purity,
    )
    return report


def reference_systems(drive: float = 0.5, rate: float = 1.0) -> Tuple[LindbladSystem, LindbladSystem]:
    """Two gapped single-qubit systems: driven decay, and incoherent pumping."""
    decay = build_liouvillian(drive * SIGMA_X, [np.sqrt(rate) * SIGMA_MINUS])
    pump = build_liouvillian(np.zeros((2, 2)), [np.sqrt(rate) * SIGMA_PLUS])
    return decay, pump


def lcp_equivalence_demo(
    first: Optional[LindbladSystem] = None,
    second: Optional[LindbladSystem] = None,
    time_factor: float = 40.0,
    perturbation_strength: Optional[float] = None,
) -> LcpEquivalenceReport:
    """
    Convert each steady state into the other by evolving for time_factor / Delta_L.

    Distances are ||exp(t1 L1) rho2 - rho1||_1 and ||exp(t2 L2) rho1 - rho2||_1.
    """
    if first is None or second is None:
        first, second = reference_systems()
    spectra = [damping_gap_and_ness(first), damping_gap_and_ness(second)]
    times = [time_factor / s.damping_gap for s in spectra]

    distances: List[float] = [
        trace_norm(lcp_evolve(first, spectra[1].ness, times[0]) - spectra[0].ness),
        trace_norm(lcp_evolve(second, spectra[0].ness, times[1]) - spectra[1].ness),
    ]
    ratio = (
        perturbation_ratio(perturbation_strength, spectra[0])
        if perturbation_strength is not None
        else None
    )

    logger.info("LCP equivalence demo", times=times, distances=distances)
    return LcpEquivalenceReport(
        damping_gaps=[s.damping_gap for s in spectra],
        times=times,
        distances=distances,
        perturbation_ratio=ratio,
    )
