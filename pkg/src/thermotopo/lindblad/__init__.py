"""Lindblad module - Liouvillians, steady states and finite-time local maps."""

from thermotopo.lindblad.demo import (
    bell_measurement_demo,
    bell_state,
    lcp_equivalence_demo,
    mixture_report,
    reference_systems,
)
from thermotopo.lindblad.evolution import (
    lcp_evolve,
    propagator,
    trace_distance,
    trace_norm,
)
from thermotopo.lindblad.liouvillian import (
    build_liouvillian,
    damping_gap_and_ness,
    perturbation_ratio,
    spost,
    spre,
    sprepost,
    trace_residual,
    unvec,
    vec,
)
from thermotopo.lindblad.models import (
    BellReport,
    LcpEquivalenceReport,
    LindbladSpectrum,
    LindbladSystem,
    MixtureReport,
)
from thermotopo.lindblad.operators import (
    hamiltonian_from_terms,
    jumps_from_terms,
    local_operator,
    site_operator,
)

__all__ = [
    "LindbladSystem",
    "LindbladSpectrum",
    "MixtureReport",
    "BellReport",
    "LcpEquivalenceReport",
    "build_liouvillian",
    "damping_gap_and_ness",
    "perturbation_ratio",
    "trace_residual",
    "vec",
    "unvec",
    "spre",
    "spost",
    "sprepost",
    "lcp_evolve",
    "propagator",
    "trace_norm",
    "trace_distance",
    "bell_state",
    "bell_measurement_demo",
    "mixture_report",
    "lcp_equivalence_demo",
    "reference_systems",
    "site_operator",
    "local_operator",
    "hamiltonian_from_terms",
    "jumps_from_terms",
]
