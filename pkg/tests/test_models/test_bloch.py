"""
Thermotopo - Bloch Model Tests
"""

from fractions import Fraction

import numpy as np
import pytest

from thermotopo.core.exceptions import ConfigurationError
from thermotopo.core.schemas import BandsConfig
from thermotopo.models import (
    BlochKind,
    BlochModel,
    HaldaneParams,
    HofstadterParams,
    bloch_hamiltonian,
    get_bloch_model,
    haldane_model,
    hofstadter_model,
    k_grid,
)


class TestBlochHamiltonian:
    """Tests for Bloch Hamiltonians."""

    @pytest.mark.parametrize("model", [haldane_model(), hofstadter_model()])
    def test_hermitian_and_periodic(self, model, rng):
        """Test H(k) = H(k)+ and H(k + 2*pi) = H(k)."""
        for _ in range(5):
            k = rng.uniform(0, 2 * np.pi, 2)
            h = bloch_hamiltonian(model, k)

            np.testing.assert_allclose(h, h.conj().T, atol=1e-14)
            np.testing.assert_allclose(bloch_hamiltonian(model, k + 2 * np.pi), h, atol=1e-12)
            np.testing.assert_allclose(bloch_hamiltonian(model, k + [2 * np.pi, 0.0]), h, atol=1e-12)

    def test_band_counts(self):
        """Test two Haldane bands and q Hofstadter bands."""
        assert haldane_model().n_bands == 2
        assert hofstadter_model(Fraction(1, 8)).n_bands == 8
        assert hofstadter_model(Fraction(3, 7)).n_bands == 7

    def test_graphene_dirac_point(self):
        """Test that the mass term alone splits the Dirac point by 2M."""
        model = haldane_model(t2=0.0, m=0.3)
        energies = np.linalg.eigvalsh(bloch_hamiltonian(model, [2 * np.pi / 3, 4 * np.pi / 3]))

        np.testing.assert_allclose(energies, [-0.3, 0.3], atol=1e-12)

    def test_hofstadter_trace(self, rng):
        """Test that the magnetic-cell Hamiltonian is traceless."""
        h = bloch_hamiltonian(hofstadter_model(), rng.uniform(0, 2 * np.pi, 2))

        assert abs(np.trace(h)) < 1e-12


class TestBlochModel:
    """Tests for band-model validation and construction."""

    def test_params_must_match_kind(self):
        """Test that a Haldane model rejects Hofstadter parameters."""
        with pytest.raises(ConfigurationError):
            BlochModel(BlochKind.HALDANE, HofstadterParams())

    def test_grid_minimum(self):
        """Test that k-grids need at least 4 points per direction."""
        with pytest.raises(ConfigurationError):
            BlochModel(BlochKind.HALDANE, HaldaneParams(), nk1=2, nk2=8)

    def test_k_grid_shape(self):
        """Test the (nk1, nk2, 2) momentum array."""
        grid = k_grid(haldane_model(nk=6))

        assert grid.shape == (6, 6, 2)
        assert grid[1, 2] == pytest.approx([2 * np.pi / 6, 4 * np.pi / 6])

    def test_factory(self):
        """Test construction from a bands configuration."""
        model = get_bloch_model(BandsConfig(kind="hofstadter", alpha_num=1, alpha_den=4, n_k=16))

        assert model.kind == BlochKind.HOFSTADTER
        assert model.n_bands == 4
        assert (model.nk1, model.nk2) == (16, 16)
        assert model.to_dict()["params"]["alpha"] == "1/4"
