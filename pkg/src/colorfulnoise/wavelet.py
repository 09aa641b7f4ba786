"""J-level discrete wavelet decomposition, the alternative to the DFT path.

Orthonormal filter banks (Haar or db2) with periodic extension, so the
analysis operator is orthogonal and reconstruction is exact.  Periodic
boundaries match the DFT path's implicit periodicity, which keeps the two
transforms comparable.  Each level splits the running LL into
(LL, LH, HL, HH); only LL is decomposed further.

Sub-band naming: first letter is the filter along height, second along
width, so LH holds low-pass rows / high-pass columns.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import DataError, ShapeError
from .tensor_io import Latent

_SQRT3 = np.sqrt(3.0)

# Orthonormal analysis low-pass filters.
_SCALING_FILTERS = {
    "haar": np.array([1.0, 1.0]) / np.sqrt(2.0),
    "db2": np.array([1.0 + _SQRT3, 3.0 + _SQRT3, 3.0 - _SQRT3, 1.0 - _SQRT3]) / (4.0 * np.sqrt(2.0)),
}


def _filters(basis: str) -> tuple[np.ndarray, np.ndarray]:
    try:
        h = _SCALING_FILTERS[basis]
    except KeyError:
        raise DataError(f"unknown wavelet basis {basis!r}, expected one of {sorted(_SCALING_FILTERS)}") from None
    # Quadrature mirror: g[k] = (-1)^k h[L-1-k]
    g = ((-1.0) ** np.arange(len(h))) * h[::-1]
    return h, g


def _analyze_axis(x: np.ndarray, h: np.ndarray, g: np.ndarray, axis: int):
    """One periodized analysis step along `axis`: a[n] = Σ_k f[k]·x[(2n+k) mod N]."""
    xm = np.moveaxis(x, axis, -1)
    n = xm.shape[-1]
    idx = (2 * np.arange(n // 2)[:, None] + np.arange(len(h))[None, :]) % n
    windows = xm[..., idx]
    lo = windows @ h
    hi = windows @ g
    return np.moveaxis(lo, -1, axis), np.moveaxis(hi, -1, axis)


def _synthesize_axis(lo: np.ndarray, hi: np.ndarray, h: np.ndarray, g: np.ndarray, axis: int) -> np.ndarray:
    """Adjoint of :func:`_analyze_axis`; exact inverse for orthonormal filters."""
    lm = np.moveaxis(lo, axis, -1)
    hm = np.moveaxis(hi, axis, -1)
    half = lm.shape[-1]
    n = 2 * half
    out = np.zeros(lm.shape[:-1] + (n,))
    base = 2 * np.arange(half)
    for k in range(len(h)):
        # positions (2n+k) mod N are distinct for fixed k, so += is safe
        out[..., (base + k) % n] += lm * h[k] + hm * g[k]
    return np.moveaxis(out, -1, axis)


def _dwt2_level(x: np.ndarray, h: np.ndarray, g: np.ndarray):
    lo_w, hi_w = _analyze_axis(x, h, g, axis=-1)
    ll, hl = _analyze_axis(lo_w, h, g, axis=-2)
    lh, hh = _analyze_axis(hi_w, h, g, axis=-2)
    return ll, lh, hl, hh


def _idwt2_level(ll, lh, hl, hh, h, g):
    lo_w = _synthesize_axis(ll, hl, h, g, axis=-2)
    hi_w = _synthesize_axis(lh, hh, h, g, axis=-2)
    return _synthesize_axis(lo_w, hi_w, h, g, axis=-1)


@dataclass(frozen=True)
class WaveletPyramid:
    """Recursive LL/LH/HL/HH decomposition to depth `levels`.

    `highs[0]` is the finest level, `highs[-1]` the coarsest; `ll` is the
    deepest low-pass residual.  `origin_hw` records the pre-padding dims
    so recomposition can crop back.
    """

    ll: np.ndarray
    highs: list[tuple[np.ndarray, np.ndarray, np.ndarray]]
    levels: int
    basis: str
    origin_hw: tuple[int, int]


def dwt_decompose(z: Latent, levels: int, basis: str = "haar") -> WaveletPyramid:
    """Decompose a latent channel-wise to `levels` wavelet levels.

    Dims are padded periodically to multiples of 2^levels when needed;
    the padding is recorded and cropped away on recomposition.
    """
    if levels < 1:
        raise DataError(f"levels must be >= 1, got {levels}")
    h_filt, g_filt = _filters(basis)
    c, h, w = z.shape
    block = 2**levels
    if h < block or w < block:
        raise DataError(f"latent {h}×{w} too small for {levels} levels (needs >= {block})")
    pad_h = (-h) % block
    pad_w = (-w) % block
    x = np.pad(z.data, ((0, 0), (0, pad_h), (0, pad_w)), mode="wrap") if pad_h or pad_w else z.data
    highs = []
    ll = x
    for _ in range(levels):
        ll, lh, hl, hh = _dwt2_level(ll, h_filt, g_filt)
        highs.append((lh, hl, hh))
    return WaveletPyramid(ll=ll, highs=highs, levels=levels, basis=basis, origin_hw=(h, w))


def dwt_recompose(p: WaveletPyramid) -> Latent:
    """Invert :func:`dwt_decompose`; exact up to float rounding."""
    if p.levels != len(p.highs):
        raise DataError(f"pyramid says {p.levels} levels but holds {len(p.highs)}")
    h_filt, g_filt = _filters(p.basis)
    ll = p.ll
    for lh, hl, hh in reversed(p.highs):
        for name, band in (("LH", lh), ("HL", hl), ("HH", hh)):
            if band.shape != ll.shape:
                raise ShapeError(f"{name} shape {band.shape} inconsistent with LL {ll.shape}")
        ll = _idwt2_level(ll, lh, hl, hh, h_filt, g_filt)
    h, w = p.origin_hw
    return Latent(ll[:, :h, :w])


def wavelet_colorful(z: Latent, c: Latent, levels: int, gamma: float, basis: str = "haar") -> Latent:
    """Swap the deepest LL of z for gamma-scaled LL of c; keep z's detail bands."""
    if z.shape != c.shape:
        raise ShapeError(f"latent shapes differ: {z.shape} vs {c.shape}")
    if not (np.isfinite(gamma) and gamma >= 0):
        raise DataError(f"gamma must be finite and >= 0, got {gamma}")
    pz = dwt_decompose(z, levels, basis)
    pc = dwt_decompose(c, levels, basis)
    return dwt_recompose(replace(pz, ll=gamma * pc.ll))
