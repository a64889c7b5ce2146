"""
Thermotopo - Toy Model Analytics Tests
"""

import math

import pytest

from thermotopo.core.exceptions import InvalidInputError
from thermotopo.toymodel import (
    ToyBandModel,
    classify_toy_phase,
    phase_diagram,
    sampled_gap,
    toy_gap,
    toy_manifold_chern,
)


class TestToyGap:
    """Tests for closed-form gaps of -log(rho)."""

    def test_flat_bands(self):
        """Test that every gap equals beta*Delta at J = 0."""
        model = ToyBandModel(delta=1.0, j=0.0, n_particles=4, beta=2.0)

        assert [toy_gap(model, mu) for mu in range(1, 5)] == pytest.approx([2.0] * 4)

    def test_particle_hole_mirror(self):
        """Test gap(mu) = gap(N + 1 - mu)."""
        model = ToyBandModel(delta=1.0, j=0.2, n_particles=6)

        for mu in range(1, 7):
            assert toy_gap(model, mu) == pytest.approx(toy_gap(model, 7 - mu))

    def test_gap_closes_at_boundary(self):
        """Test the exact phase boundary J = Delta / (2(mu - 1)) for mu = 2."""
        below = ToyBandModel(delta=1.0, j=0.5 - 1e-9, n_particles=6)
        above = ToyBandModel(delta=1.0, j=0.5 + 1e-9, n_particles=6)
        at = ToyBandModel(delta=1.0, j=0.5, n_particles=6)

        assert toy_gap(below, 2) > 0
        assert toy_gap(above, 2) == 0.0
        assert toy_gap(at, 2) == 0.0
        assert toy_gap(below, 5) > 0 and toy_gap(above, 5) == 0.0

    def test_outer_gaps_never_close(self):
        """Test that mu = 1 and mu = N keep the full band gap."""
        model = ToyBandModel(delta=1.0, j=5.0, n_particles=5, beta=0.5)

        assert toy_gap(model, 1) == pytest.approx(0.5)
        assert toy_gap(model, 5) == pytest.approx(0.5)

    def test_sampled_gap(self):
        """Test the gap realized by an evenly sampled dispersion."""
        model = ToyBandModel(delta=1.0, j=0.3, n_particles=4)

        assert sampled_gap(model, 1) == pytest.approx(1.0)
        assert sampled_gap(model, 2) == pytest.approx(1.0 - 2 * 0.3 * 1 * 2 / 3)
        assert sampled_gap(model, 4) == pytest.approx(1.0)

    def test_mu_range(self):
        """Test that mu must lie in [1, N]."""
        model = ToyBandModel(delta=1.0, j=0.0, n_particles=3)

        with pytest.raises(InvalidInputError):
            toy_gap(model, 0)
        with pytest.raises(InvalidInputError):
            toy_gap(model, 4)


class TestManifoldChern:
    """Tests for per-manifold Chern numbers."""

    def test_three_particles(self):
        """Test C = -3 over 9 states for N = 3, mu = 1."""
        assert toy_manifold_chern(3, 1) == (-3, 9)

    def test_extreme_manifolds(self):
        """Test the filled lower band (-1) and the filled upper band (+1)."""
        for n in range(1, 8):
            assert toy_manifold_chern(n, 0) == (-1, 1)
            assert toy_manifold_chern(n, n) == (1, 1)

    def test_totals_vanish(self):
        """Test that the Chern numbers of all manifolds sum to zero."""
        for n in range(1, 11):
            assert sum(toy_manifold_chern(n, mu)[0] for mu in range(n + 1)) == 0
            assert sum(toy_manifold_chern(n, mu)[1] for mu in range(n + 1)) == math.comb(2 * n, n)

    def test_out_of_range(self):
        """Test mu outside [0, N]."""
        with pytest.raises(InvalidInputError):
            toy_manifold_chern(3, 4)


class TestClassification:
    """Tests for finite-temperature phase classification."""

    def test_flat_bands_keep_every_manifold(self):
        """Test N + 1 blocks with the single-manifold Chern numbers at J = 0."""
        result = classify_toy_phase(ToyBandModel(delta=1.0, j=0.0, n_particles=4))

        assert result.n_blocks == 5
        assert result.chern_per_block == [toy_manifold_chern(4, mu)[0] for mu in range(5)]

    def test_wide_bands_merge_interior(self):
        """Test blocks [0], [1..N-1], [N] with Chern -1, 0, +1 once 2J > Delta."""
        result = classify_toy_phase(ToyBandModel(delta=1.0, j=0.6, n_particles=4))

        assert result.blocks == [(0, 0), (1, 3), (4, 4)]
        assert result.chern_per_block == [-1, 0, 1]
        assert result.open_gaps == [1, 4]

    def test_beta_independence(self):
        """Test that any finite positive beta gives the same classification."""
        blocks = {
            tuple(classify_toy_phase(ToyBandModel(1.0, 0.3, 5, beta)).blocks) for beta in (0.1, 1.0, 10.0)
        }

        assert len(blocks) == 1

    def test_infinite_temperature(self):
        """Test a single trivial block at beta = 0."""
        result = classify_toy_phase(ToyBandModel(delta=1.0, j=0.0, n_particles=4, beta=0.0))

        assert result.blocks == [(0, 4)]
        assert result.chern_per_block == [0]

    def test_zero_temperature(self):
        """Test the ground manifold alone at beta = inf."""
        result = classify_toy_phase(ToyBandModel(delta=1.0, j=0.2, n_particles=4, beta=math.inf))

        assert result.blocks == [(0, 0)]
        assert result.chern_per_block == [-1]

    def test_to_dict(self):
        """Test the classification report."""
        payload = classify_toy_phase(ToyBandModel(delta=1.0, j=0.6, n_particles=4)).to_dict()

        assert payload["n_blocks"] == 3
        assert payload["blocks"][1] == {"mu_start": 1, "mu_end": 3, "chern": 0, "count": 68}


class TestPhaseDiagram:
    """Tests for the (J/Delta, T) phase diagram."""

    def test_grid_layout(self):
        """Test J/Delta outer and T inner ordering."""
        frame = phase_diagram(1.0, 4, [0.0, 0.6], [0.0, 1.0, math.inf])

        assert list(frame.columns) == ["j_over_delta", "temperature", "n_blocks", "chern_list"]
        assert frame["j_over_delta"].tolist() == [0.0, 0.0, 0.0, 0.6, 0.6, 0.6]
        assert frame["n_blocks"].tolist() == [1, 5, 1, 1, 3, 1]
        assert frame["chern_list"].tolist()[:3] == ["-1", "-1;-8;0;8;1", "0"]
        assert frame["chern_list"].iloc[4] == "-1;0;1"


class TestModelValidation:
    """Tests for toy model parameters."""

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"delta": 0.0, "j": 0.0, "n_particles": 2},
            {"delta": 1.0, "j": -0.1, "n_particles": 2},
            {"delta": 1.0, "j": 0.0, "n_particles": 0},
            {"delta": 1.0, "j": 0.0, "n_particles": 2, "beta": -1.0},
        ],
    )
    def test_invalid_parameters(self, kwargs):
        """Test non-positive gap, negative width, empty filling and negative beta."""
        with pytest.raises(InvalidInputError):
            ToyBandModel(**kwargs)

    def test_temperature_mapping(self):
        """Test T = 0 -> beta = inf and T = inf -> beta = 0."""
        assert math.isinf(ToyBandModel.at_temperature(1.0, 0.0, 2, 0.0).beta)
        assert ToyBandModel.at_temperature(1.0, 0.0, 2, math.inf).beta == 0.0
        assert ToyBandModel.at_temperature(1.0, 0.0, 2, 4.0).beta == pytest.approx(0.25)
