"""Seeded generation of white Gaussian and blue-noise latents.

All randomness comes from numpy's Philox counter-based generator
(Philox 4x64, 10 rounds), keyed as (seed, stream).  Counter-based state
makes outputs reproducible across machines and safe to parallelize over
disjoint seeds.  Gaussian draws use float32 so every generated value is
exactly representable in the float32 file format; the in-memory latent is
the lossless float64 upcast.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DataError
from .spectral import normalized_radius
from .tensor_io import Latent

GENERATOR_NAME = "philox4x64-10/normal-f32"


def philox_generator(seed: int, stream: int = 0) -> np.random.Generator:
    """Counter-based generator keyed by (seed, stream), both mod 2^64."""
    key = np.array([seed % 2**64, stream % 2**64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


@dataclass(frozen=True)
class NoiseConfig:
    """What to sample: kind, seed, latent shape and (blue only) the cutoff."""

    kind: str
    seed: int
    shape: tuple[int, int, int]
    blue_cutoff: float | None = None

    def __post_init__(self):
        if self.kind not in ("white", "blue"):
            raise DataError(f"unknown noise kind {self.kind!r}")
        c, h, w = self.shape
        if c < 1 or h < 2 or w < 2:
            raise DataError(f"noise shape {self.shape} out of range")
        if self.kind == "blue":
            if self.blue_cutoff is None:
                raise DataError("blue noise needs blue_cutoff")
            if not (0.0 < self.blue_cutoff < 1.0):
                raise DataError(f"blue_cutoff must be in (0,1), got {self.blue_cutoff}")


def _white_values(cfg: NoiseConfig) -> np.ndarray:
    rng = philox_generator(cfg.seed)
    return rng.standard_normal(cfg.shape, dtype=np.float32).astype(np.float64)


def sample_white(cfg: NoiseConfig) -> Latent:
    """I.i.d. standard-normal latent; same seed gives the identical tensor."""
    if cfg.kind != "white":
        raise DataError(f"config kind is {cfg.kind!r}, expected 'white'")
    return Latent(_white_values(cfg))


def sample_blue(cfg: NoiseConfig) -> Latent:
    """Spectrally synthesized blue noise: white noise with the low band removed.

    DFT bins with normalized radius below the cutoff are zeroed exactly
    (DC always among them), then each channel is rescaled to unit variance.
    """
    if cfg.kind != "blue":
        raise DataError(f"config kind is {cfg.kind!r}, expected 'blue'")
    white = _white_values(NoiseConfig(kind="white", seed=cfg.seed, shape=cfg.shape))
    spectrum = np.fft.fft2(white, axes=(-2, -1))
    kill = normalized_radius(cfg.shape[1], cfg.shape[2]) < cfg.blue_cutoff
    spectrum[:, kill] = 0.0
    x = np.fft.ifft2(spectrum, axes=(-2, -1)).real
    std = x.std(axis=(1, 2), keepdims=True)
    if np.any(std == 0.0):
        raise DataError(f"cutoff {cfg.blue_cutoff} removed all frequency content")
    x = x / std
    # Quantize through float32 so the latent survives file round-trips bit-exactly.
    return Latent(x.astype(np.float32).astype(np.float64))
