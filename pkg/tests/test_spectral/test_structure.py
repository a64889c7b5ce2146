"""
Thermotopo - Spectral Structure Tests
"""

import numpy as np
import pytest

from thermotopo.core.exceptions import InvalidInputError
from thermotopo.spectral import (
    EigenSystem,
    ThermalEnsemble,
    detect_manifolds,
    manifold_report,
    thermal_ensemble,
    thermal_spectral_structure,
)


def _eigensystem(energies) -> EigenSystem:
    values = np.asarray(energies, dtype=float)
    return EigenSystem(values, np.eye(len(values)))


class TestDetectManifolds:
    """Tests for gap-based manifold detection."""

    def test_example_partition(self):
        """Test the partition of [0, 0.01, 0.02, 1.0, 1.01, 3.0] at threshold 0.1."""
        structure = detect_manifolds([0.0, 0.01, 0.02, 1.0, 1.01, 3.0], 0.1)

        assert structure.manifolds == [(0, 3), (3, 5), (5, 6)]
        assert structure.gaps == pytest.approx([0.98, 1.99])
        assert structure.sizes == [3, 2, 1]
        assert structure.signature(2) == (3, 2)

    def test_degenerate_levels_form_one_manifold(self):
        """Test that equal levels never split."""
        structure = detect_manifolds([0.5] * 7, 0.1)

        assert structure.manifolds == [(0, 7)]
        assert structure.gaps == []

    def test_spacing_equal_to_threshold_separates(self):
        """Test that a spacing equal to the threshold opens a gap."""
        structure = detect_manifolds([0.0, 0.25], 0.25)

        assert structure.n_manifolds == 2

    def test_manifolds_tile_the_spectrum(self, rng):
        """Test contiguity and coverage for random levels."""
        levels = np.sort(rng.exponential(size=50))
        structure = detect_manifolds(levels, 0.05)

        assert structure.manifolds[0][0] == 0
        assert structure.manifolds[-1][1] == 50
        for (_, end), (start, _) in zip(structure.manifolds, structure.manifolds[1:]):
            assert end == start
        for (_, end), gap in zip(structure.manifolds, structure.gaps):
            assert gap >= 0.05
            assert gap == pytest.approx(levels[end] - levels[end - 1])

    def test_scale_invariance(self, rng):
        """Test that scaling levels and threshold together keeps the partition."""
        levels = np.sort(rng.uniform(0, 5, 30))
        base = detect_manifolds(levels, 0.2)
        scaled = detect_manifolds(3.0 * levels, 0.6)

        assert scaled.manifolds == base.manifolds

    def test_manifold_is_one_based(self):
        """Test manifold(mu) indexing."""
        structure = detect_manifolds([0.0, 1.0, 1.0], 0.5)

        assert structure.manifold(1) == (0, 1)
        assert structure.manifold(2) == (1, 3)
        with pytest.raises(IndexError):
            structure.manifold(3)

    @pytest.mark.parametrize(
        "levels, threshold",
        [([], 0.1), ([0.0, 1.0], 0.0), ([1.0, 0.0], 0.1)],
    )
    def test_invalid_input(self, levels, threshold):
        """Test empty spectra, non-positive thresholds and unsorted levels."""
        with pytest.raises(InvalidInputError):
            detect_manifolds(levels, threshold)

    def test_degeneracies(self):
        """Test the exact-degeneracy pattern inside manifolds."""
        structure = detect_manifolds([0.0, 0.0, 0.05, 1.0], 0.5)

        assert structure.degeneracies() == [[2, 1], [1]]


class TestThermalStructure:
    """Tests for the spectral structure of Gibbs states."""

    def test_constant_shift_invariance(self, rng):
        """Test that adding a constant to H changes nothing."""
        energies = np.sort(rng.uniform(-3, 3, 40))
        base = thermal_spectral_structure(_eigensystem(energies), 2.0, 0.1)
        shifted = thermal_spectral_structure(_eigensystem(energies + 17.5), 2.0, 0.1)

        assert shifted.manifolds == base.manifolds
        np.testing.assert_allclose(shifted.gaps, base.gaps, rtol=1e-9)

    def test_gaps_scale_with_beta(self, rng):
        """Test that doubling beta doubles every gap at fixed energy threshold."""
        energies = np.sort(rng.uniform(0, 4, 25))
        one = thermal_spectral_structure(_eigensystem(energies), 1.0, 0.15)
        two = thermal_spectral_structure(_eigensystem(energies), 2.0, 0.15)

        assert two.manifolds == one.manifolds
        np.testing.assert_allclose(two.gaps, 2.0 * np.asarray(one.gaps))

    def test_high_temperature_merges(self):
        """Test that beta -> 0 at a fixed level threshold leaves one manifold."""
        es = _eigensystem([0.0, 0.5, 2.0, 2.05, 6.0])

        assert thermal_spectral_structure(es, 1.0, level_threshold=0.1).n_manifolds == 4
        assert thermal_spectral_structure(es, 1e-3, level_threshold=0.1).n_manifolds == 1

    def test_max_levels(self):
        """Test truncation to the lowest K levels."""
        es = _eigensystem([0.0, 1.0, 2.0, 3.0])

        assert thermal_spectral_structure(es, 1.0, 0.5, max_levels=2).n_manifolds == 2

    def test_non_positive_beta(self):
        """Test that the level structure needs beta > 0."""
        with pytest.raises(InvalidInputError):
            thermal_spectral_structure(_eigensystem([0.0, 1.0]), 0.0)


class TestThermalEnsemble:
    """Tests for Gibbs probabilities."""

    def test_probabilities_normalized(self, rng):
        """Test normalization and agreement with the direct Boltzmann sum."""
        energies = rng.uniform(-2, 2, 12)
        ensemble = ThermalEnsemble(beta=0.7, energies=energies)
        direct = np.exp(-0.7 * energies) / np.sum(np.exp(-0.7 * energies))

        assert ensemble.probabilities.sum() == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_allclose(ensemble.probabilities, direct, rtol=1e-12)

    def test_large_beta_is_stable(self):
        """Test that log-sum-exp keeps huge beta finite."""
        ensemble = ThermalEnsemble(beta=1e4, energies=np.array([0.0, 1.0, 2.0]))

        assert ensemble.probabilities == pytest.approx([1.0, 0.0, 0.0])
        assert ensemble.entropy == pytest.approx(0.0, abs=1e-12)

    def test_infinite_temperature(self):
        """Test entropy log(n) and purity 1/n at beta = 0."""
        ensemble = thermal_ensemble(_eigensystem(np.arange(8.0)), 0.0)

        assert ensemble.entropy == pytest.approx(np.log(8))
        assert ensemble.purity == pytest.approx(1 / 8)

    def test_negative_beta(self):
        """Test that negative beta is rejected."""
        with pytest.raises(InvalidInputError):
            thermal_ensemble(_eigensystem([0.0]), -1.0)


class TestManifoldReport:
    """Tests for the JSON manifold report."""

    def test_report_format(self):
        """Test manifolds, gaps and thermal summary."""
        es = _eigensystem([0.0, 0.0, 1.0, 1.05, 3.0])
        structure = thermal_spectral_structure(es, 1.0, 0.5)
        report = manifold_report(structure, thermal_ensemble(es, 1.0))

        assert [m["size"] for m in report["manifolds"]] == [2, 2, 1]
        assert [m["start"] for m in report["manifolds"]] == [0, 2, 4]
        assert report["manifolds"][1]["width"] == pytest.approx(0.05)
        assert report["gaps"] == pytest.approx([1.0, 1.95])
        assert report["manifolds"][0]["degeneracies"] == [2]
        assert len(report["purity_gaps"]) == 2
        assert report["thermal"]["beta"] == 1.0

    def test_report_truncation(self):
        """Test truncation to the lowest manifolds."""
        structure = thermal_spectral_structure(_eigensystem([0.0, 1.0, 2.0, 3.0]), 1.0, 0.5)
        report = manifold_report(structure, max_manifolds=2)

        assert len(report["manifolds"]) == 2
        assert len(report["gaps"]) == 1
