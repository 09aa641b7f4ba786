"""Band manipulations of noise latents.

The method path replaces the low-frequency band of a noise latent with the
gamma-scaled low band of a conditioning latent; everything above the alpha
cutoff stays untouched (beta is pinned to 1, mid and high are not
separated there).  The three-band machinery survives in
:func:`inject_band` / :func:`mix_bands` for analysis experiments.
Masked blending and interpolation act pointwise in the spatial latent
domain after composition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DataError, ShapeError
from .noise_gen import NoiseConfig
from .spectral import BandSpec, SpectrumBands, decompose, make_band_spec, recompose
from .tensor_io import Latent, Mask
from .wavelet import wavelet_colorful


@dataclass(frozen=True)
class ConditioningConfig:
    """Knobs of the conditioning pipeline.

    `alpha` is the low cutoff, `gamma` the injected-band scale.  `mask`
    restricts the replacement spatially and `interp_t` linearly blends the
    result back toward the original noise (t=1 keeps it fully).
    """

    alpha: float
    gamma: float
    transform: str = "fft"
    dwt_levels: int = 1
    dwt_basis: str = "haar"
    mask: Mask | None = None
    interp_t: float = 1.0
    base_noise: NoiseConfig | None = None

    def __post_init__(self):
        if not (0.0 <= self.alpha <= 1.0):
            raise DataError(f"alpha must be in [0,1], got {self.alpha}")
        if not (np.isfinite(self.gamma) and self.gamma >= 0.0):
            raise DataError(f"gamma must be finite and >= 0, got {self.gamma}")
        if self.transform not in ("fft", "dwt"):
            raise DataError(f"transform must be fft or dwt, got {self.transform!r}")
        if not (0.0 <= self.interp_t <= 1.0):
            raise DataError(f"interp_t must be in [0,1], got {self.interp_t}")
        if self.dwt_levels < 1:
            raise DataError(f"dwt_levels must be >= 1, got {self.dwt_levels}")


def _check_same_shape(a: Latent, b: Latent) -> None:
    if a.shape != b.shape:
        raise ShapeError(f"latent shapes differ: {a.shape} vs {b.shape}")


def colorful_noise(z: Latent, c: Latent, cfg: ConditioningConfig) -> Latent:
    """Replace z's low band with gamma-scaled low band of c.

    FFT path: decompose both with cutoffs (alpha, 1) and recompose
    (gamma·c_low, z_mid, z_high); with beta=1 the high band is empty, so
    everything above alpha comes from z.  DWT path swaps the deepest LL
    instead.  alpha=0 leaves z unchanged (the low band is empty).
    """
    _check_same_shape(z, c)
    if cfg.transform == "dwt":
        return wavelet_colorful(z, c, cfg.dwt_levels, cfg.gamma, cfg.dwt_basis)
    spec = make_band_spec(cfg.alpha, 1.0, z.height, z.width)
    zb = decompose(z, spec)
    cb = decompose(c, spec)
    return recompose(
        SpectrumBands(
            low=cfg.gamma * cb.low,
            mid=zb.mid,
            high=zb.high,
            spec=spec,
            origin_shape=z.shape,
        )
    )


def inject_band(z: Latent, ref: Latent, band: str, spec: BandSpec, gamma: float) -> Latent:
    """Replace one band of z with gamma times the same band of ref."""
    _check_same_shape(z, ref)
    if band not in ("low", "mid", "high"):
        raise DataError(f"unknown band {band!r}")
    zb = decompose(z, spec)
    rb = decompose(ref, spec)
    parts = {"low": zb.low, "mid": zb.mid, "high": zb.high}
    parts[band] = gamma * getattr(rb, band)
    return recompose(SpectrumBands(spec=spec, origin_shape=z.shape, **parts))


def mix_bands(low_src: Latent, mid_src: Latent, high_src: Latent, spec: BandSpec) -> Latent:
    """Compose a latent from three sources, one per band."""
    _check_same_shape(low_src, mid_src)
    _check_same_shape(low_src, high_src)
    return recompose(
        SpectrumBands(
            low=decompose(low_src, spec).low,
            mid=decompose(mid_src, spec).mid,
            high=decompose(high_src, spec).high,
            spec=spec,
            origin_shape=low_src.shape,
        )
    )


def masked_blend(z: Latent, zc: Latent, mask: Mask) -> Latent:
    """Pointwise blend: mask·zc + (1-mask)·z, broadcast over channels."""
    _check_same_shape(z, zc)
    if mask.shape != (z.height, z.width):
        raise ShapeError(f"mask {mask.shape} does not match latent plane {(z.height, z.width)}")
    m = mask.weights[None, :, :]
    return Latent(m * zc.data + (1.0 - m) * z.data)


def interpolate(z: Latent, zc: Latent, t: float, renorm: bool = False) -> Latent:
    """Linear interpolation (1-t)·z + t·zc.

    No renormalization by default; with `renorm` each output channel is
    rescaled to the std of the corresponding channel of z (variance shrinks
    mid-segment, and some pipelines care).  Zero-variance output channels
    are left untouched.
    """
    _check_same_shape(z, zc)
    if not (0.0 <= t <= 1.0):
        raise DataError(f"t must be in [0,1], got {t}")
    out = (1.0 - t) * z.data + t * zc.data
    if renorm:
        std_out = out.std(axis=(1, 2), keepdims=True)
        std_z = z.data.std(axis=(1, 2), keepdims=True)
        scale = np.where(std_out > 0.0, std_z / np.where(std_out > 0.0, std_out, 1.0), 1.0)
        out = out * scale
    return Latent(out)


def condition_latent(z: Latent, c: Latent, cfg: ConditioningConfig) -> Latent:
    """Full conditioning pipeline: band replacement, optional mask, optional blend.

    The mask applies in the spatial domain (replacement only where painted);
    interp_t then interpolates between z and the masked result.
    """
    zc = colorful_noise(z, c, cfg)
    if cfg.mask is not None:
        zc = masked_blend(z, zc, cfg.mask)
    if cfg.interp_t != 1.0:
        zc = interpolate(z, zc, cfg.interp_t)
    return zc


def calibrate_gamma(z: Latent, c: Latent, alpha: float) -> float:
    """Closed-form gamma that matches low-band power to white noise.

    Returns gamma* with mean per-bin power of gamma*·c_low equal to the
    white-noise expectation (H·W per bin under the unnormalized forward
    DFT).  A starting point for manual tuning, never applied silently.
    """
    _check_same_shape(z, c)
    spec = make_band_spec(alpha, 1.0, z.height, z.width)
    n_low = int(spec.low.sum())
    if n_low == 0:
        raise DataError(f"alpha={alpha} yields an empty low band")
    power = np.abs(np.fft.fft2(c.data, axes=(-2, -1))) ** 2
    mean_power = power[:, spec.low].mean()
    if mean_power == 0.0:
        raise DataError("conditioning latent has zero power in the low band")
    expected = z.height * z.width
    return float(np.sqrt(expected / mean_power))
