"""
Thermotopo - CLI Tests
"""

import json
import math
from pathlib import Path

import pandas as pd
import pytest
from typer.testing import CliRunner

from thermotopo import __version__
from thermotopo.cli import app
from thermotopo.core.config import settings

runner = CliRunner()


def _json(path: Path) -> dict:
    return json.loads(path.read_text(encoding="utf-8"))


def _csv(path: Path) -> pd.DataFrame:
    return pd.read_csv(path, comment="#")


class TestGlobalOptions:
    """Tests for options shared by every command."""

    def test_version(self):
        """Test --version."""
        result = runner.invoke(app, ["--version"])

        assert result.exit_code == 0
        assert __version__ in result.output

    def test_invalid_grid(self, tmp_path):
        """Test that a twist grid below 4x4 is a configuration error."""
        result = runner.invoke(app, ["--grid", "2x2", "bands", "chern", "--nk", "8", "--out", str(tmp_path / "b.json")])

        assert result.exit_code == 2

    def test_invalid_option_value(self, tmp_path):
        """Test that an option rejected by the configuration schema exits with code 2."""
        result = runner.invoke(app, ["bands", "chern", "--kind", "graphene", "--out", str(tmp_path / "b.json")])

        assert result.exit_code == 2
        assert "CONFIG_ERROR" in result.output
        assert "kind" in result.output
        assert not (tmp_path / "b.json").exists()

    def test_metrics_textfile(self, tmp_path, monkeypatch):
        """Test that metrics are written when a textfile path is configured."""
        metrics = tmp_path / "thermotopo.prom"
        monkeypatch.setattr(settings, "METRICS_TEXTFILE", str(metrics))

        result = runner.invoke(app, ["bands", "chern", "--nk", "8", "--out", str(tmp_path / "b.json")])

        assert result.exit_code == 0
        assert "thermotopo_command_duration_seconds" in metrics.read_text()


class TestToyCommands:
    """Tests for the toy-model commands."""

    def test_classify(self, tmp_path):
        """Test classification from command-line parameters."""
        out = tmp_path / "toy.json"
        result = runner.invoke(app, ["toy", "classify", "--j", "0.6", "--n", "4", "--out", str(out)])

        assert result.exit_code == 0
        payload = _json(out)
        assert payload["n_blocks"] == 3
        assert len(payload["gaps"]) == 4
        assert len(payload["sampled_gaps"]) == 4

    def test_phase_diagram(self, tmp_path, config_dir):
        """Test the full (J/Delta, T) grid with the trailing summary line."""
        out = tmp_path / "phase.csv"
        result = runner.invoke(
            app,
            ["--no-timing", "toy", "phase-diagram", "--config", str(config_dir / "toy_phase_diagram.yaml"), "--out", str(out)],
        )

        assert result.exit_code == 0
        frame = _csv(out)
        assert len(frame) == 91
        wide = frame[(frame["j_over_delta"] == 0.6) & (frame["temperature"] == 1.0)].iloc[0]
        assert wide["n_blocks"] == 3
        assert wide["chern_list"] == "-1;0;1"
        assert (frame[frame["j_over_delta"] == 0.0]["n_blocks"].iloc[1:-1] == 5).all()
        assert out.read_text().splitlines()[-1] == "# rows=91 elapsed_s=0"

    def test_phase_diagram_reproducible(self, tmp_path, config_dir):
        """Test byte-identical output across runs without timing."""
        config = str(config_dir / "toy_phase_diagram.yaml")
        outputs = [tmp_path / "first.csv", tmp_path / "second.csv"]
        for out in outputs:
            result = runner.invoke(app, ["--no-timing", "toy", "phase-diagram", "-c", config, "-o", str(out)])
            assert result.exit_code == 0

        assert outputs[0].read_bytes() == outputs[1].read_bytes()

    def test_invalid_config_reports_line(self, write_config, tmp_path):
        """Test exit code 2 and the offending line for a bad value."""
        path = write_config('{\n  "delta": 1.0,\n  "j": -0.5\n}\n')
        result = runner.invoke(app, ["toy", "classify", "--config", str(path), "--out", str(tmp_path / "t.json")])

        assert result.exit_code == 2
        assert "line 3" in result.output


class TestLatticeCommands:
    """Tests for band and many-body commands."""

    def test_bands_chern(self, tmp_path):
        """Test that the Haldane bands carry opposite Chern numbers."""
        out = tmp_path / "bands.json"
        result = runner.invoke(app, ["bands", "chern", "--nk", "16", "--out", str(out)])

        assert result.exit_code == 0
        payload = _json(out)
        assert payload["total"] == 0
        assert sorted(b["chern"] for b in payload["bands"]) == [-1, 1]

    def test_hh_chern_single_particle(self, tmp_path, config_dir):
        """Test the winding of the lowest Landau level of one fermion."""
        out = tmp_path / "chern.json"
        result = runner.invoke(
            app, ["hh", "chern", "--config", str(config_dir / "single_particle_chern.json"), "--out", str(out)]
        )

        assert result.exit_code == 0
        payload = _json(out)
        assert abs(payload["winding"]) == 1
        assert payload["dimension"] == 3

    def test_hh_manifolds_resource_cap(self, write_config, tmp_path):
        """Test exit code 4 when the Fock space exceeds the dense cap."""
        path = write_config('{"command": "hh manifolds", "model": {"lx": 4, "ly": 6, "n_particles": 12}}')
        result = runner.invoke(app, ["hh", "manifolds", "--config", str(path), "--out", str(tmp_path / "m.json")])

        assert result.exit_code == 4

    def test_hh_spectrum(self, write_config, tmp_path):
        """Test the sweep table and its JSON summary."""
        path = write_config(
            '{"command": "hh spectrum", "model": {"lx": 4, "ly": 2, "n_particles": 2, "u": 1.0}, '
            '"sweep": {"name": "g", "start": 0.0, "stop": 1.0, "step": 0.5}, "levels": 6}'
        )
        out = tmp_path / "spectrum.csv"
        result = runner.invoke(app, ["--no-timing", "hh", "spectrum", "--config", str(path), "--out", str(out)])

        assert result.exit_code == 0
        frame = _csv(out)
        assert list(frame.columns) == ["g"] + [f"E_{i}" for i in range(1, 7)]
        assert frame["g"].tolist() == [0.0, 0.5, 1.0]
        summary = _json(tmp_path / "spectrum.json")
        assert summary["parameter"] == "g"
        assert len(summary["points"]) == 3

    def test_hh_manifolds(self, write_config, tmp_path):
        """Test the manifold report of a small interacting system."""
        path = write_config('{"command": "hh manifolds", "model": {"lx": 4, "ly": 2, "n_particles": 2, "u": 1.0}}')
        out = tmp_path / "manifolds.json"
        result = runner.invoke(app, ["hh", "manifolds", "--config", str(path), "--out", str(out)])

        assert result.exit_code == 0
        report = _json(out)
        assert report["hilbert_dim"] == 28
        assert sum(m["size"] for m in report["manifolds"]) <= 28
        assert report["manifolds"][0]["start"] == 0

    def test_hh_wilson_track(self, tmp_path, config_dir):
        """Test the arg det W table with the global grid override."""
        out = tmp_path / "wilson.csv"
        result = runner.invoke(
            app,
            ["--grid", "6x8", "hh", "wilson", "-c", str(config_dir / "single_particle_chern.json"), "-o", str(out)],
        )

        assert result.exit_code == 0
        frame = _csv(out)
        assert list(frame.columns) == ["theta_y", "arg_det_W", "unwrapped_phase"]
        assert len(frame) >= 9
        assert frame["theta_y"].iloc[-1] == pytest.approx(2 * math.pi)
        assert abs(frame["unwrapped_phase"].iloc[-1] - frame["unwrapped_phase"].iloc[0]) == pytest.approx(2 * math.pi, abs=1e-2)

    def test_hh_spectrum_needs_sweep(self, write_config, tmp_path):
        """Test that a spectrum scan without a sweep block is rejected."""
        path = write_config('{"command": "hh spectrum", "model": {"lx": 4, "ly": 2, "n_particles": 2}}')
        result = runner.invoke(app, ["hh", "spectrum", "--config", str(path), "--out", str(tmp_path / "s.csv")])

        assert result.exit_code == 2


class TestLindbladCommands:
    """Tests for the open-system commands."""

    def test_ness(self, tmp_path, config_dir):
        """Test damping gap, steady state and perturbation ratio of qubit decay."""
        out = tmp_path / "ness.json"
        result = runner.invoke(
            app, ["lindblad", "ness", "--config", str(config_dir / "lindblad_qubit_decay.json"), "--out", str(out)]
        )

        assert result.exit_code == 0
        payload = _json(out)
        assert payload["damping_gap"] == pytest.approx(0.5, abs=1e-10)
        assert payload["ness_diag"] == pytest.approx([0.0, 1.0], abs=1e-9)
        assert payload["perturbation_ratio"] == pytest.approx(0.1)
        assert payload["trace_residual"] < 1e-10

    def test_ness_not_unique(self, write_config, tmp_path):
        """Test exit code 3 for a purely Hamiltonian generator."""
        path = write_config('{"dim": 2, "hamiltonian": [{"operator": "sigma_z", "sites": [0]}]}')
        result = runner.invoke(app, ["lindblad", "ness", "--config", str(path), "--out", str(tmp_path / "n.json")])

        assert result.exit_code == 3

    def test_demo_bell(self, tmp_path):
        """Test the Bell dephasing report."""
        out = tmp_path / "bell.json"
        result = runner.invoke(app, ["lindblad", "demo-bell", "--kappa", "2", "--out", str(out)])

        assert result.exit_code == 0
        assert _json(out)["after"]["weights"] == pytest.approx([0.5, 0.5], abs=1e-8)

    def test_demo_lcp(self, tmp_path):
        """Test the steady-state conversion report."""
        out = tmp_path / "lcp.json"
        result = runner.invoke(app, ["lindblad", "demo-lcp", "--out", str(out)])

        assert result.exit_code == 0
        assert max(_json(out)["distances"]) <= 1e-6

    def test_demo_bell_rejects_zero_rate(self, tmp_path):
        """Test that an undephased Bell demo is refused."""
        result = runner.invoke(app, ["lindblad", "demo-bell", "--kappa", "0", "--out", str(tmp_path / "bell.json")])

        assert result.exit_code == 2


class TestRefinementBudget:
    """Tests for windings that stay unresolved after refinement."""

    def test_wilson_track_not_written(self, tmp_path, write_config, monkeypatch):
        """Test exit code 3 and no CSV when the coarse grid cannot be refined."""
        monkeypatch.setattr(settings, "MAX_REFINEMENTS", 0)
        path = write_config(
            '{"command": "hh wilson", "model": {"lx": 4, "ly": 6, "u": 0.0, "n_particles": 2}, "manifold": 1}'
        )
        out = tmp_path / "wilson.csv"

        result = runner.invoke(app, ["--grid", "4x4", "hh", "wilson", "-c", str(path), "-o", str(out)])

        assert result.exit_code == 3
        assert "REFINEMENT_ERROR" in result.output
        assert not out.exists()


class TestReproducibility:
    """Identical configuration and seed give byte-identical outputs."""

    @staticmethod
    def _run_twice(tmp_path: Path, name: str, args: list) -> list:
        outputs = []
        for run in ("first", "second"):
            out = tmp_path / run / name
            out.parent.mkdir()
            result = runner.invoke(app, ["--no-timing", *args, "--out", str(out)])
            assert result.exit_code == 0, result.output
            outputs.append(out)
        return outputs

    def test_hh_spectrum(self, tmp_path, write_config):
        """Test the sweep table and its JSON summary on the 4x2 torus."""
        path = write_config(
            '{"command": "hh spectrum", "model": {"lx": 4, "ly": 2, "n_particles": 2, "u": 1.0}, '
            '"sweep": {"name": "g", "start": 0.0, "stop": 2.0, "step": 0.5}, "levels": 8}'
        )
        first, second = self._run_twice(tmp_path, "spectrum.csv", ["hh", "spectrum", "-c", str(path)])

        assert first.read_bytes() == second.read_bytes()
        assert first.with_suffix(".json").read_bytes() == second.with_suffix(".json").read_bytes()

    def test_hh_wilson_with_gauge_checks(self, tmp_path, config_dir):
        """Test the arg det W track with seeded random-gauge checks."""
        config = str(config_dir / "single_particle_chern.json")
        first, second = self._run_twice(
            tmp_path, "wilson.csv", ["--seed", "5", "--grid", "6x8", "hh", "wilson", "-c", config]
        )

        assert first.read_bytes() == second.read_bytes()
        assert first.read_text().splitlines()[-1].endswith("elapsed_s=0")

    def test_hh_chern_with_gauge_checks(self, tmp_path, config_dir):
        """Test the chern report including its verification and gauge windings."""
        config = str(config_dir / "single_particle_chern.json")
        first, second = self._run_twice(tmp_path, "chern.json", ["--seed", "5", "hh", "chern", "-c", config])

        assert first.read_bytes() == second.read_bytes()
        assert len(_json(first)["gauge_windings"]) == 2

    def test_lindblad_ness(self, tmp_path, config_dir):
        """Test the steady-state report of the driven chain."""
        config = str(config_dir / "lindblad_driven_chain.json")
        first, second = self._run_twice(tmp_path, "ness.json", ["lindblad", "ness", "-c", config])

        assert first.read_bytes() == second.read_bytes()
