"""Deterministic synthetic low-frequency evaluation images.

Each image is the plane partitioned by one circle and one line, every
region filled with an independent uniform random color: at most four flat
regions, hard edges (no antialiasing), so the spectrum is dominated by
low frequencies.  Generation is keyed per (seed, index) with a Philox
counter-based generator, so images are reproducible individually and safe
to generate in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DataError
from .noise_gen import philox_generator
from .tensor_io import RgbImage


@dataclass(frozen=True)
class SynthSpec:
    seed: int
    count: int
    size: tuple[int, int] = (512, 512)
    radius_range: tuple[float, float] = (0.1, 0.45)

    def __post_init__(self):
        if self.count < 1:
            raise DataError(f"count must be >= 1, got {self.count}")
        h, w = self.size
        if h < 2 or w < 2:
            raise DataError(f"size {self.size} too small")
        lo, hi = self.radius_range
        if not (0.1 <= lo <= hi <= 0.45):
            raise DataError(f"radius_range must satisfy 0.1 <= lo <= hi <= 0.45, got {self.radius_range}")


def generate_one(spec: SynthSpec, index: int) -> tuple[RgbImage, dict]:
    """Generate image `index` of the set plus its parameter record."""
    if not (0 <= index < spec.count):
        raise DataError(f"index {index} outside [0, {spec.count})")
    h, w = spec.size
    rng = philox_generator(spec.seed, stream=index)
    cx = rng.uniform(0.0, w)
    cy = rng.uniform(0.0, h)
    radius = rng.uniform(*spec.radius_range) * min(h, w)
    px = rng.uniform(0.0, w)
    py = rng.uniform(0.0, h)
    angle = rng.uniform(0.0, np.pi)
    colors = rng.integers(0, 256, size=(4, 3)).astype(np.uint8)

    # Pixel centers; region = (inside circle, side of line) -> 0..3.
    xs = np.arange(w) + 0.5
    ys = np.arange(h) + 0.5
    xx, yy = np.meshgrid(xs, ys)
    inside = (xx - cx) ** 2 + (yy - cy) ** 2 <= radius**2
    side = (xx - px) * np.sin(angle) - (yy - py) * np.cos(angle) > 0.0
    region = inside.astype(np.uint8) * 2 + side.astype(np.uint8)
    image = RgbImage(colors[region])
    record = {
        "index": index,
        "circle_center": [cx, cy],
        "circle_radius": radius,
        "line_point": [px, py],
        "line_angle": angle,
        "colors": colors.tolist(),
    }
    return image, record


def generate(spec: SynthSpec) -> tuple[list[RgbImage], list[dict]]:
    """Generate the whole set and its manifest (one parameter record per image)."""
    images = []
    records = []
    for i in range(spec.count):
        img, rec = generate_one(spec, i)
        images.append(img)
        records.append(rec)
    return images, records
