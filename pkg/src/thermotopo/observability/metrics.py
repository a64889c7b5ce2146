"""
Thermotopo - Prometheus Metrics
"""

from pathlib import Path
from typing import Union

from prometheus_client import REGISTRY, Counter, Histogram, Info, write_to_textfile

from thermotopo import __version__

# Application info
APP_INFO = Info(
    "thermotopo_app",
    "Thermotopo application information",
)
APP_INFO.info({
    "version": __version__,
    "name": "thermotopo",
})

# Eigensolver metrics
EIGENSOLVES_TOTAL = Counter(
    "thermotopo_eigensolves_total",
    "Total number of dense Hermitian eigendecompositions",
    ["kind", "status"],
)

EIGENSOLVE_DURATION = Histogram(
    "thermotopo_eigensolve_duration_seconds",
    "Duration of dense Hermitian eigendecompositions",
    ["kind"],
    buckets=[0.001, 0.01, 0.1, 0.5, 1, 2, 5, 10, 30],
)

# Topology metrics
WINDINGS_TOTAL = Counter(
    "thermotopo_windings_total",
    "Total number of Wilson-loop winding evaluations",
    ["status"],
)

REFINEMENTS_TOTAL = Counter(
    "thermotopo_grid_refinements_total",
    "Total number of twist-grid refinements triggered by the unwrapping guard",
)

# Sweep metrics
SWEEP_POINTS_TOTAL = Counter(
    "thermotopo_sweep_points_total",
    "Total number of evaluated sweep points",
    ["command"],
)

COMMAND_DURATION = Histogram(
    "thermotopo_command_duration_seconds",
    "Duration of CLI commands",
    ["command", "status"],
    buckets=[0.1, 1, 10, 60, 300, 1200, 3600, 7200],
)

# Open-system metrics
LIOUVILLIAN_BUILDS_TOTAL = Counter(
    "thermotopo_liouvillian_builds_total",
    "Total number of Liouvillian superoperators built",
)


def write_metrics(path: Union[str, Path]) -> None:
    """Dump the default registry to a node-exporter textfile."""
    write_to_textfile(str(path), REGISTRY)
