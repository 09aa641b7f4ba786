"""Quantitative instruments: PSD whiteness, histogram EMD, band cosine, silhouette.

Whiteness is the RMS deviation of normalized radial band powers from a
flat spectrum: 0 for perfectly flat, larger as power concentrates.  EMD
compares per-channel intensity histograms with the exact 1D Wasserstein-1
(CDF) formula, scaled to intensity units [0,255] and summed over channels;
localized means averaged over aligned patches.  The silhouette score
consumes an externally computed distance matrix, keeping neural distance
models out of this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import DataError, ShapeError
from .spectral import BandSpec, normalized_radius
from .tensor_io import Latent, RgbImage


@dataclass(frozen=True)
class WhitenessReport:
    """Radial band powers per channel (rows sum to 1) and the flatness score."""

    bins: int
    per_channel_band_power: np.ndarray
    score: float

    def __post_init__(self):
        rows = self.per_channel_band_power.sum(axis=1)
        if np.abs(rows - 1.0).max() > 1e-6:
            raise DataError("band power rows must sum to 1")
        if self.score < 0.0:
            raise DataError("whiteness score must be >= 0")


def _radial_bin_index(h: int, w: int, bins: int) -> np.ndarray:
    r = normalized_radius(h, w)
    return np.minimum((r * bins).astype(int), bins - 1)


def whiteness(z: Latent, bins: int = 16) -> WhitenessReport:
    """PSD whiteness: std of occupancy-averaged radial band powers around 1/K.

    Per channel the squared DFT magnitudes are accumulated into `bins`
    equal-width radial bins, averaged by bin occupancy (otherwise the
    metric measures grid geometry, not whiteness) and row-normalized.
    """
    if bins < 2:
        raise DataError(f"need at least 2 bins, got {bins}")
    c, h, w = z.shape
    idx = _radial_bin_index(h, w, bins)
    counts = np.bincount(idx.ravel(), minlength=bins)
    if np.any(counts == 0):
        raise DataError(f"{bins} radial bins leave empty bins on a {h}×{w} grid")
    psd = np.abs(np.fft.fft2(z.data, axes=(-2, -1))) ** 2
    band_power = np.empty((c, bins))
    for ch in range(c):
        band_power[ch] = np.bincount(idx.ravel(), weights=psd[ch].ravel(), minlength=bins) / counts
    totals = band_power.sum(axis=1, keepdims=True)
    if np.any(totals == 0.0):
        raise DataError("all-zero channel: whiteness normalization undefined")
    normalized = band_power / totals
    score = float(np.sqrt(np.mean((normalized - 1.0 / bins) ** 2)))
    return WhitenessReport(bins=bins, per_channel_band_power=normalized, score=score)


@dataclass(frozen=True)
class EMDReport:
    """Localized (patch-mean) and global EMD plus the per-patch breakdown."""

    localized: float
    global_: float
    patch_size: int
    per_patch: list[float]


def _histogram(channel: np.ndarray, bins: int) -> np.ndarray:
    idx = (channel.astype(np.int64) * bins) // 256
    hist = np.bincount(idx.ravel(), minlength=bins).astype(np.float64)
    return hist / hist.sum()


def _emd_1d(hist_a: np.ndarray, hist_b: np.ndarray, bins: int) -> float:
    # W1 between bin distributions via the CDF difference; ground distance
    # between adjacent bins is 255/(bins-1) so full-range moves cost 255.
    cdf_diff = np.cumsum(hist_a - hist_b)[:-1]
    return float(np.abs(cdf_diff).sum() * (255.0 / (bins - 1)))


def _emd_rgb(a: np.ndarray, b: np.ndarray, bins: int) -> float:
    return sum(_emd_1d(_histogram(a[:, :, ch], bins), _histogram(b[:, :, ch], bins), bins) for ch in range(3))


def emd(a: RgbImage, b: RgbImage, patch: int = 64, bins: int = 32) -> EMDReport:
    """Localized and global histogram EMD between two images.

    Localized: the mean over aligned non-overlapping `patch`×`patch` pairs
    of the per-channel 1D Wasserstein-1 summed over R,G,B.  Global: the
    same distance on the whole images.
    """
    if a.pixels.shape != b.pixels.shape:
        raise ShapeError(f"image dims differ: {a.pixels.shape} vs {b.pixels.shape}")
    if bins < 2:
        raise DataError(f"need at least 2 histogram bins, got {bins}")
    h, w = a.height, a.width
    if patch < 1 or h % patch or w % patch:
        raise DataError(f"dims {h}×{w} not divisible by patch {patch}")
    per_patch = []
    for i in range(0, h, patch):
        for j in range(0, w, patch):
            per_patch.append(
                _emd_rgb(a.pixels[i : i + patch, j : j + patch], b.pixels[i : i + patch, j : j + patch], bins)
            )
    return EMDReport(
        localized=float(np.mean(per_patch)),
        global_=_emd_rgb(a.pixels, b.pixels, bins),
        patch_size=patch,
        per_patch=per_patch,
    )


class BandCosines(NamedTuple):
    low: Optional[float]
    mid: Optional[float]
    high: Optional[float]


def band_cosine(a: Latent, b: Latent, spec: BandSpec) -> BandCosines:
    """Cosine similarity between band-masked spectra of a and b.

    Each band is flattened to a real vector (real and imaginary parts of
    all channels concatenated).  Empty or zero-power bands are undefined
    and reported as None, never as 0.
    """
    if a.shape != b.shape:
        raise ShapeError(f"latent shapes differ: {a.shape} vs {b.shape}")
    if a.data.shape[1:] != spec.shape:
        raise ShapeError(f"latent {a.shape} does not match band spec grid {spec.shape}")
    fa = np.fft.fft2(a.data, axes=(-2, -1))
    fb = np.fft.fft2(b.data, axes=(-2, -1))
    out = {}
    for band in ("low", "mid", "high"):
        mask = spec.mask_for(band)
        if not mask.any():
            out[band] = None
            continue
        va = fa[:, mask]
        vb = fb[:, mask]
        dot = float(np.sum(va.real * vb.real + va.imag * vb.imag))
        na = float(np.sqrt(np.sum(va.real**2 + va.imag**2)))
        nb = float(np.sqrt(np.sum(vb.real**2 + vb.imag**2)))
        out[band] = dot / (na * nb) if na > 0.0 and nb > 0.0 else None
    return BandCosines(**out)


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric nonnegative N×N matrix with zero diagonal."""

    d: np.ndarray

    def __post_init__(self):
        arr = np.array(self.d, dtype=np.float64, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DataError(f"distance matrix must be square, got {arr.shape}")
        if not np.isfinite(arr).all():
            raise DataError("distance matrix contains NaN/Inf")
        if np.abs(arr - arr.T).max() > 1e-9:
            raise DataError("distance matrix is not symmetric")
        if np.abs(np.diag(arr)).max() > 0.0:
            raise DataError("distance matrix diagonal must be zero")
        if arr.min() < 0.0:
            raise DataError("distances must be nonnegative")
        arr.flags.writeable = False
        object.__setattr__(self, "d", arr)

    @property
    def n(self) -> int:
        return self.d.shape[0]


def silhouette(d: DistanceMatrix, labels: Sequence) -> float:
    """Mean silhouette score from a precomputed distance matrix.

    s(i) = (b(i) - a(i)) / max(a(i), b(i)) with a the mean intra-cluster
    distance (excluding self) and b the smallest mean distance to another
    cluster; singletons contribute 0, as does max(a,b)=0.
    """
    labels = list(labels)
    if len(labels) != d.n:
        raise DataError(f"{len(labels)} labels for a {d.n}×{d.n} matrix")
    clusters = {}
    for i, lab in enumerate(labels):
        clusters.setdefault(lab, []).append(i)
    if len(clusters) < 2:
        raise DataError("silhouette needs at least 2 clusters")
    members = {lab: np.array(idx) for lab, idx in clusters.items()}
    scores = np.zeros(d.n)
    for i, lab in enumerate(labels):
        own = members[lab]
        if own.size == 1:
            continue
        a_i = d.d[i, own].sum() / (own.size - 1)
        b_i = min(d.d[i, members[other]].mean() for other in members if other != lab)
        denom = max(a_i, b_i)
        scores[i] = (b_i - a_i) / denom if denom > 0.0 else 0.0
    return float(scores.mean())
