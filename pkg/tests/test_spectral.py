import numpy as np
import pytest

from colorfulnoise import (
    DataError,
    HermitianError,
    Latent,
    NoiseConfig,
    ShapeError,
    SpectrumBands,
    decompose,
    make_band_spec,
    normalized_radius,
    recompose,
    sample_white,
)

from oracles import enumerate_band_counts


def white(seed=7, shape=(4, 128, 128)):
    return sample_white(NoiseConfig("white", seed, shape))


class TestBandSpec:
    def test_extreme_cutoffs_zero_one(self):
        spec = make_band_spec(0.0, 1.0, 64, 64)
        assert spec.low.sum() == 0
        assert spec.high.sum() == 0
        assert spec.mid.all()

    def test_extreme_cutoffs_one_one(self):
        spec = make_band_spec(1.0, 1.0, 128, 128)
        assert spec.high.sum() == 0
        # only the exact corner Nyquist bin reaches r=1
        assert spec.mid.sum() == 1
        assert spec.mid[64, 64]
        assert spec.low.sum() == 128 * 128 - 1

    def test_counts_match_enumeration(self):
        spec = make_band_spec(0.25, 0.75, 128, 128)
        counts, grid = enumerate_band_counts(0.25, 0.75, 128, 128)
        assert int(spec.low.sum()) == counts["low"]
        assert int(spec.mid.sum()) == counts["mid"]
        assert int(spec.high.sum()) == counts["high"]
        for (u, v), band in grid.items():
            assert spec.mask_for(band)[u, v]

    @pytest.mark.parametrize("h,w", [(128, 128), (64, 96), (65, 33), (2, 2)])
    def test_partition_and_symmetry(self, h, w):
        spec = make_band_spec(0.3, 0.6, h, w)
        total = spec.low.astype(int) + spec.mid.astype(int) + spec.high.astype(int)
        assert (total == 1).all()
        neg = np.ix_((-np.arange(h)) % h, (-np.arange(w)) % w)
        for mask in (spec.low, spec.mid, spec.high):
            assert np.array_equal(mask, mask[neg])

    def test_dc_assignment(self):
        assert make_band_spec(0.01, 0.5, 32, 32).low[0, 0]
        assert make_band_spec(0.0, 0.5, 32, 32).mid[0, 0]

    def test_invalid_cutoffs(self):
        with pytest.raises(DataError):
            make_band_spec(0.8, 0.2, 32, 32)
        with pytest.raises(DataError):
            make_band_spec(-0.1, 0.5, 32, 32)
        with pytest.raises(DataError):
            make_band_spec(0.1, 0.5, 1, 32)

    def test_radius_range(self):
        r = normalized_radius(128, 128)
        assert r.min() == 0.0
        assert np.isclose(r.max(), 1.0)
        assert r[64, 64] == r.max()


class TestDecompose:
    def test_constant_latent_is_dc_only(self):
        spec = make_band_spec(0.25, 0.75, 32, 32)
        bands = decompose(Latent(np.full((2, 32, 32), 3.0)), spec)
        assert np.allclose(bands.low[:, 0, 0], 3.0 * 32 * 32)
        low_rest = bands.low.copy()
        low_rest[:, 0, 0] = 0.0
        assert np.abs(low_rest).max() < 1e-9
        assert np.abs(bands.mid).max() < 1e-9
        assert np.abs(bands.high).max() < 1e-9

    def test_pure_cosine_lands_in_mid(self):
        # frequency (0.25, 0.25): r = sqrt(2)*0.25 / sqrt(0.5) = 0.5 exactly
        h = w = 128
        y, x = np.mgrid[0:h, 0:w]
        signal = np.cos(2 * np.pi * (32 * y / h + 32 * x / w))
        bands = decompose(Latent(signal[None]), make_band_spec(0.25, 0.75, h, w))
        e_low = np.abs(bands.low).sum()
        e_mid = np.abs(bands.mid).sum()
        e_high = np.abs(bands.high).sum()
        assert e_low < 1e-6 * e_mid
        assert e_high < 1e-6 * e_mid

    def test_white_band_energy_proportional_to_bin_count(self):
        spec = make_band_spec(0.25, 0.75, 128, 128)
        bands = decompose(white(seed=11), spec)
        n_bins = 4 * 128 * 128
        for mask, band in ((spec.low, bands.low), (spec.mid, bands.mid), (spec.high, bands.high)):
            energy = (np.abs(band) ** 2).sum()
            expected = (np.abs(bands.low + bands.mid + bands.high) ** 2).sum() * (4 * mask.sum() / n_bins)
            assert abs(energy - expected) < 0.10 * expected

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            decompose(white(shape=(4, 64, 64)), make_band_spec(0.25, 0.75, 128, 128))


class TestRecompose:
    def test_roundtrip(self):
        z = white(seed=3)
        spec = make_band_spec(0.25, 0.75, 128, 128)
        back = recompose(decompose(z, spec))
        assert np.abs(back.data - z.data).max() < 1e-5

    def test_zero_bands_give_zero_latent(self):
        spec = make_band_spec(0.25, 0.75, 16, 16)
        zero = np.zeros((2, 16, 16), dtype=complex)
        out = recompose(SpectrumBands(zero, zero, zero, spec, (2, 16, 16)))
        assert not out.data.any()

    def test_high_band_swap_preserves_low_mid(self):
        spec = make_band_spec(0.25, 0.75, 128, 128)
        b1 = decompose(white(seed=21), spec)
        b2 = decompose(white(seed=22), spec)
        swapped = recompose(SpectrumBands(b1.low, b1.mid, b2.high, spec, b1.origin_shape))
        again = decompose(swapped, spec)
        assert np.abs(again.low - b1.low).max() < 1e-5
        assert np.abs(again.mid - b1.mid).max() < 1e-5
        assert np.abs(again.high - b2.high).max() < 1e-5

    def test_non_hermitian_rejected(self):
        spec = make_band_spec(0.25, 0.75, 16, 16)
        low = np.zeros((1, 16, 16), dtype=complex)
        low[0, 1, 2] = 10.0  # no mirrored bin: imaginary output
        zero = np.zeros_like(low)
        with pytest.raises(HermitianError):
            recompose(SpectrumBands(low, zero, zero, spec, (1, 16, 16)))

    def test_band_shape_mismatch(self):
        spec = make_band_spec(0.25, 0.75, 16, 16)
        zero = np.zeros((1, 16, 16), dtype=complex)
        with pytest.raises(ShapeError):
            recompose(SpectrumBands(zero, zero, np.zeros((1, 8, 8), dtype=complex), spec, (1, 16, 16)))


class TestInvariants:
    def test_parseval(self):
        z = white(seed=5)
        bands = decompose(z, make_band_spec(0.25, 0.75, 128, 128))
        spatial = (z.data**2).sum()
        spectral = sum((np.abs(b) ** 2).sum() for b in (bands.low, bands.mid, bands.high))
        assert abs(spatial - spectral / (128 * 128)) < 1e-4 * spatial

    def test_linearity(self):
        spec = make_band_spec(0.25, 0.75, 64, 64)
        z1, z2 = white(seed=31, shape=(2, 64, 64)), white(seed=32, shape=(2, 64, 64))
        combo = Latent(1.5 * z1.data - 0.5 * z2.data)
        b = decompose(combo, spec)
        b1, b2 = decompose(z1, spec), decompose(z2, spec)
        for band in ("low", "mid", "high"):
            lhs = getattr(b, band)
            rhs = 1.5 * getattr(b1, band) - 0.5 * getattr(b2, band)
            assert np.abs(lhs - rhs).max() < 1e-5
