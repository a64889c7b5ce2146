"""Orchestration module - Parallel job execution."""

from thermotopo.orchestration.pool import resolve_workers, run_jobs

__all__ = ["run_jobs", "resolve_workers"]
