"""Reports module - CSV and JSON writers."""

from thermotopo.reports.writers import write_csv, write_json

__all__ = ["write_csv", "write_json"]
