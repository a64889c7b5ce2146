"""Topology module - Wilson-loop windings and plaquette band Chern numbers."""

from thermotopo.topology.bands import all_band_cherns, band_groups, plaquette_band_chern
from thermotopo.topology.bundle import (
    ManifoldWindow,
    build_manifold_bundle,
    closure_phases,
    manifold_window,
)
from thermotopo.topology.chern import compute_chern, default_grid, random_unitary
from thermotopo.topology.models import (
    BandChernResult,
    ChernResult,
    ManifoldBundle,
    TwistGrid,
    WilsonLoopData,
)
from thermotopo.topology.wilson import (
    chern_winding,
    unitarize,
    wilson_eigenphases,
    wilson_loop,
    wilson_loop_track,
    winding_from_loops,
)

__all__ = [
    "TwistGrid",
    "ManifoldBundle",
    "ManifoldWindow",
    "WilsonLoopData",
    "ChernResult",
    "BandChernResult",
    "manifold_window",
    "closure_phases",
    "build_manifold_bundle",
    "unitarize",
    "wilson_loop",
    "wilson_eigenphases",
    "wilson_loop_track",
    "winding_from_loops",
    "chern_winding",
    "compute_chern",
    "default_grid",
    "random_unitary",
    "plaquette_band_chern",
    "band_groups",
    "all_band_cherns",
]
