"""
Thermotopo - Band Chern Number Tests
"""

from fractions import Fraction

import numpy as np
import pytest

from thermotopo.core.exceptions import GapClosedError, InvalidInputError
from thermotopo.models import haldane_model, hofstadter_model
from thermotopo.topology import all_band_cherns, band_groups, plaquette_band_chern

HOFSTADTER_GROUPS = [[0], [1], [2], [3, 4], [5], [6], [7]]


class TestHaldaneBands:
    """Tests for the two-band Haldane model."""

    def test_opposite_unit_chern_numbers(self):
        """Test C = +/-1 for the lower band and the opposite for the upper band."""
        model = haldane_model(t2=0.1, phi=np.pi / 2, m=0.0, nk=32)
        lower = plaquette_band_chern(model, [0])
        upper = plaquette_band_chern(model, [1])

        assert abs(lower.chern) == 1
        assert upper.chern == -lower.chern
        assert lower.min_gap > 0.1

    def test_time_reversed_flux_flips_sign(self):
        """Test that phi -> -phi reverses the Chern number."""
        forward = plaquette_band_chern(haldane_model(phi=np.pi / 2, nk=32), [0]).chern
        backward = plaquette_band_chern(haldane_model(phi=-np.pi / 2, nk=32), [0]).chern

        assert backward == -forward

    def test_large_mass_is_trivial(self):
        """Test C = 0 when the sublattice offset dominates."""
        model = haldane_model(t2=0.1, m=2.0, nk=32)

        assert plaquette_band_chern(model, [0]).chern == 0

    def test_grid_doubling_is_stable(self):
        """Test the same integer on 32x32 and 64x64 grids."""
        model = haldane_model(nk=32)

        assert plaquette_band_chern(model, [0]).chern == plaquette_band_chern(model, [0], grid=(64, 64)).chern

    def test_dirac_point_on_grid(self):
        """Test that graphene bands touching on the grid raise GapClosedError."""
        with pytest.raises(GapClosedError):
            plaquette_band_chern(haldane_model(t2=0.0, m=0.0, nk=6), [0])

    def test_full_group_is_trivial(self):
        """Test C = 0 for both bands together."""
        assert plaquette_band_chern(haldane_model(nk=16), [0, 1]).chern == 0


class TestHofstadterBands:
    """Tests for the q-band Hofstadter model."""

    def test_band_chern_numbers(self):
        """Test +/-1 for isolated bands, -6 times that for the touching pair, zero total."""
        results = all_band_cherns(hofstadter_model(Fraction(1, 8), nk=64), HOFSTADTER_GROUPS)
        cherns = [r.chern for r in results]

        assert abs(cherns[0]) == 1
        assert cherns == [cherns[0]] * 3 + [-6 * cherns[0]] + [cherns[0]] * 3
        assert sum(cherns) == 0

    def test_groups_partition_bands(self):
        """Test that detected groups cover every band once, in order."""
        groups = band_groups(hofstadter_model(Fraction(1, 8), nk=16))

        assert [band for group in groups for band in group] == list(range(8))

    def test_detected_groups_sum_to_zero(self):
        """Test the zero total for automatically detected groups."""
        results = all_band_cherns(haldane_model(nk=16))

        assert [r.bands for r in results] == [[0], [1]]
        assert sum(r.chern for r in results) == 0

    @pytest.mark.parametrize("bands", [[0, 2], [7, 8], []])
    def test_invalid_groups(self, bands):
        """Test non-consecutive, out-of-range and empty groups."""
        with pytest.raises(InvalidInputError):
            plaquette_band_chern(hofstadter_model(Fraction(1, 8), nk=8), bands)
