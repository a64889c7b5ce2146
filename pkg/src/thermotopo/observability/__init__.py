"""Observability module - Prometheus metrics."""

from thermotopo.observability.metrics import write_metrics

__all__ = ["write_metrics"]
