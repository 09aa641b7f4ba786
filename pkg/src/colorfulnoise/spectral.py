"""2D DFT band decomposition of latents.

Frequency bins are classified by a normalized radial distance: with signed
normalized frequencies fu, fv in [-0.5, 0.5) (numpy ``fftfreq`` layout),

    r(u, v) = sqrt(fu² + fv²) / sqrt(0.5² + 0.5²)

so r runs over [0, 1] and only the extreme corner bin reaches r = 1.
A bin is *low* when r < alpha, *high* when r > beta, and *mid* otherwise;
the DC bin therefore lands in low exactly when alpha > 0.

DFT convention: unnormalized forward, 1/(H·W) on the inverse (numpy
default).  Band masks are binary — replacement semantics substitute whole
bands, no apodization.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DataError, HermitianError, ShapeError
from .tensor_io import Latent

RADIUS_METRIC = "euclidean-normalized"

_CORNER_RADIUS = np.sqrt(0.5**2 + 0.5**2)

# Max tolerated |Im|/|Re| after recomposition; beyond this the bands were
# not Hermitian and no real latent exists.
_IMAG_TOLERANCE = 1e-4


def normalized_radius(h: int, w: int) -> np.ndarray:
    """Per-bin normalized radius r(u,v) in [0,1] on an H×W frequency grid."""
    fu = np.fft.fftfreq(h)[:, None]
    fv = np.fft.fftfreq(w)[None, :]
    return np.sqrt(fu * fu + fv * fv) / _CORNER_RADIUS


@dataclass(frozen=True)
class BandSpec:
    """Cutoffs (alpha, beta) plus the derived binary band masks.

    The three masks partition the H×W frequency grid and are symmetric
    under frequency negation (u,v) -> (-u,-v) mod (H,W), which guarantees
    real recomposition.  Use :func:`make_band_spec` to construct.
    """

    alpha: float
    beta: float
    low: np.ndarray
    mid: np.ndarray
    high: np.ndarray
    radius_metric: str = RADIUS_METRIC

    @property
    def shape(self) -> tuple[int, int]:
        return self.low.shape

    def mask_for(self, band: str) -> np.ndarray:
        try:
            return {"low": self.low, "mid": self.mid, "high": self.high}[band]
        except KeyError:
            raise DataError(f"unknown band {band!r}, expected low/mid/high") from None


def _negation_symmetric(mask: np.ndarray) -> bool:
    h, w = mask.shape
    return bool(np.array_equal(mask, mask[(-np.arange(h)) % h][:, (-np.arange(w)) % w]))


def make_band_spec(alpha: float, beta: float, h: int, w: int) -> BandSpec:
    """Build the low/mid/high masks for an H×W grid.

    low is strict r < alpha, high is strict r > beta, mid is the closed
    remainder.  Raises on alpha > beta or degenerate grid dims.
    """
    if not (np.isfinite(alpha) and np.isfinite(beta)):
        raise DataError("cutoffs must be finite")
    if not (0.0 <= alpha <= beta <= 1.0):
        raise DataError(f"need 0 <= alpha <= beta <= 1, got alpha={alpha}, beta={beta}")
    if h < 2 or w < 2:
        raise DataError(f"degenerate frequency grid {h}×{w}")
    r = normalized_radius(h, w)
    low = r < alpha
    high = r > beta
    mid = ~(low | high)
    # Guaranteed by construction; kept as a cheap guard because real
    # recomposition depends on it.
    for name, mask in (("low", low), ("mid", mid), ("high", high)):
        if not _negation_symmetric(mask):
            raise DataError(f"{name} mask broke frequency-negation symmetry")
    if not np.array_equal(low.astype(int) + mid.astype(int) + high.astype(int), np.ones((h, w), dtype=int)):
        raise DataError("band masks do not partition the frequency grid")
    for mask in (low, mid, high):
        mask.flags.writeable = False
    return BandSpec(alpha=float(alpha), beta=float(beta), low=low, mid=mid, high=high)


@dataclass(frozen=True)
class SpectrumBands:
    """Band-limited DFT coefficients of a latent: low/mid/high, each C×H×W."""

    low: np.ndarray
    mid: np.ndarray
    high: np.ndarray
    spec: BandSpec
    origin_shape: tuple[int, int, int]


def decompose(z: Latent, spec: BandSpec) -> SpectrumBands:
    """Split a latent into band-masked spectra (per-channel 2D DFT)."""
    if z.data.shape[1:] != spec.shape:
        raise ShapeError(f"latent {z.shape} does not match band spec grid {spec.shape}")
    spectrum = np.fft.fft2(z.data, axes=(-2, -1))
    return SpectrumBands(
        low=spectrum * spec.low,
        mid=spectrum * spec.mid,
        high=spectrum * spec.high,
        spec=spec,
        origin_shape=z.shape,
    )


def recompose(bands: SpectrumBands) -> Latent:
    """Inverse of :func:`decompose`: sum the bands and inverse-DFT.

    The imaginary residual is discarded after checking it is negligible;
    a substantial residual means the bands were not Hermitian-symmetric.
    """
    shape = bands.origin_shape
    for name, band in (("low", bands.low), ("mid", bands.mid), ("high", bands.high)):
        if band.shape != shape:
            raise ShapeError(f"{name} band shape {band.shape} != origin {shape}")
    out = np.fft.ifft2(bands.low + bands.mid + bands.high, axes=(-2, -1))
    im_max = np.abs(out.imag).max()
    re_max = np.abs(out.real).max()
    if im_max > _IMAG_TOLERANCE * re_max:
        raise HermitianError(
            f"imaginary residual {im_max:.3e} vs real peak {re_max:.3e}: "
            "bands are not Hermitian-symmetric"
        )
    return Latent(out.real)
