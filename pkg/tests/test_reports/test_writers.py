"""
Thermotopo - Report Writer Tests
"""

import json

import numpy as np
import pandas as pd
import pytest

from thermotopo.core.config import settings
from thermotopo.reports.writers import elapsed_since, write_csv, write_json


class TestWriteCsv:
    """Tests for CSV reports."""

    def test_summary_line(self, tmp_path):
        """Test the trailing rows/elapsed comment."""
        settings.REPORT_ELAPSED = False
        path = tmp_path / "out.csv"
        write_csv(pd.DataFrame({"g": [0.0, 0.5], "e0": [-1.25, -1.0]}), path, started=0.0)

        lines = path.read_text().splitlines()
        assert lines[0] == "g,e0"
        assert lines[-1] == "# rows=2 elapsed_s=0"

    def test_read_back(self, tmp_path):
        """Test that the report reads back once the summary comment is skipped."""
        path = tmp_path / "nested" / "out.csv"
        frame = pd.DataFrame({"mu": [1, 2, 3], "gap": [0.1, 0.25, 1.0 / 3.0]})
        write_csv(frame, path)

        loaded = pd.read_csv(path, comment="#")
        assert list(loaded.columns) == ["mu", "gap"]
        assert loaded["gap"].tolist() == pytest.approx(frame["gap"].tolist(), rel=1e-11)

    def test_stdout(self, capsys):
        """Test writing to stdout."""
        write_csv(pd.DataFrame({"a": [1]}), "-")

        assert capsys.readouterr().out.startswith("a\n1\n# rows=1")


class TestWriteJson:
    """Tests for JSON reports."""

    def test_sorted_keys(self, tmp_path):
        """Test deterministic key order."""
        path = tmp_path / "out.json"
        write_json({"winding": 1, "dimension": 3}, path)

        text = path.read_text()
        assert text.index('"dimension"') < text.index('"winding"')

    def test_numpy_values(self, tmp_path):
        """Test arrays, numpy scalars and complex numbers."""
        path = tmp_path / "out.json"
        write_json({"levels": np.array([0.5, 1.5]), "count": np.int64(4), "z": 1 + 2j}, path)

        payload = json.loads(path.read_text())
        assert payload == {"levels": [0.5, 1.5], "count": 4, "z": [1.0, 2.0]}


class TestElapsed:
    """Tests for elapsed-time reporting."""

    def test_disabled(self):
        """Test that disabled timing reports zero."""
        settings.REPORT_ELAPSED = False

        assert elapsed_since(0.0) == 0.0

    def test_without_start(self):
        """Test a missing start time."""
        assert elapsed_since(None) == 0.0
