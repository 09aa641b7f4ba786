"""Core tensor types and bit-exact file exchange.

Latents travel between tools as v1.0 ``.npy`` array containers holding a
3-D little-endian float32 array in C order.  In memory the toolkit works
in float64; quantization to float32 happens only when a file is written.
Images and masks are 8-bit PNGs (anything Pillow reads is accepted).
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass

import numpy as np
from numpy.lib import format as npy_format
from PIL import Image

from .errors import DataError, HeaderError, NonFiniteError, RankError, ShapeError

_LATENT_FILE_DTYPE = np.dtype("<f4")


@dataclass(frozen=True)
class Latent:
    """A real C×H×W tensor, the unit of all noise/conditioning math.

    The data array is copied, upcast to float64 and frozen on
    construction; entries must be finite.
    """

    data: np.ndarray

    def __post_init__(self):
        arr = np.array(self.data, dtype=np.float64, copy=True)
        if arr.ndim != 3:
            raise RankError(f"latent must be 3-D (C,H,W), got rank {arr.ndim}")
        c, h, w = arr.shape
        if c < 1 or h < 2 or w < 2:
            raise ShapeError(f"latent shape {arr.shape} out of range (C>=1, H,W>=2)")
        if not np.isfinite(arr).all():
            raise NonFiniteError("latent contains NaN or Inf entries")
        arr.flags.writeable = False
        object.__setattr__(self, "data", arr)

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.data.shape

    @property
    def channels(self) -> int:
        return self.data.shape[0]

    @property
    def height(self) -> int:
        return self.data.shape[1]

    @property
    def width(self) -> int:
        return self.data.shape[2]


@dataclass(frozen=True)
class RgbImage:
    """8-bit sRGB raster, stored H×W×3 uint8."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.array(self.pixels, dtype=np.uint8, copy=True)
        if arr.ndim != 3 or arr.shape[2] != 3:
            raise RankError(f"image must be H×W×3, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ShapeError("image must be at least 1×1")
        arr.flags.writeable = False
        object.__setattr__(self, "pixels", arr)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]


@dataclass(frozen=True)
class Mask:
    """Per-pixel blend weights in [0,1], shape H×W.

    Values are clamped into [0,1] on construction; weights stay soft
    (no binarization), since latent-resolution masks are coarse.
    """

    weights: np.ndarray

    def __post_init__(self):
        arr = np.array(self.weights, dtype=np.float64, copy=True)
        if arr.ndim != 2:
            raise RankError(f"mask must be 2-D (H,W), got rank {arr.ndim}")
        if not np.isfinite(arr).all():
            raise NonFiniteError("mask contains NaN or Inf entries")
        np.clip(arr, 0.0, 1.0, out=arr)
        arr.flags.writeable = False
        object.__setattr__(self, "weights", arr)

    @property
    def shape(self) -> tuple[int, int]:
        return self.weights.shape


def write_latent(z: Latent, path: str | os.PathLike) -> None:
    """Write a latent as a v1.0 array container (little-endian float32, C order)."""
    payload = np.ascontiguousarray(z.data.astype(_LATENT_FILE_DTYPE))
    buf = io.BytesIO()
    npy_format.write_array(buf, payload, version=(1, 0))
    with open(path, "wb") as fp:
        fp.write(buf.getvalue())


def read_latent(path: str | os.PathLike) -> Latent:
    """Read a latent written by :func:`write_latent`.

    Round-trips bit-exactly: the float32 payload is upcast to float64,
    which is lossless, and writing casts it straight back.

    Raises:
        HeaderError: not a v1.0 container of little-endian float32 in C order.
        RankError: stored array is not 3-D.
        NonFiniteError: payload contains NaN/Inf.
    """
    with open(path, "rb") as fp:
        try:
            version = npy_format.read_magic(fp)
        except ValueError as exc:
            raise HeaderError(f"{path}: not an array container ({exc})") from exc
        if version != (1, 0):
            raise HeaderError(f"{path}: unsupported container version {version}")
        try:
            shape, fortran_order, dtype = npy_format.read_array_header_1_0(fp)
        except ValueError as exc:
            raise HeaderError(f"{path}: malformed header ({exc})") from exc
        if dtype != _LATENT_FILE_DTYPE:
            raise HeaderError(f"{path}: dtype {dtype} is not little-endian float32")
        if fortran_order:
            raise HeaderError(f"{path}: Fortran-order payload not supported")
        if len(shape) != 3:
            raise RankError(f"{path}: rank mismatch, expected 3-D, got {len(shape)}-D")
        raw = fp.read()
    count = int(np.prod(shape))
    values = np.frombuffer(raw, dtype=_LATENT_FILE_DTYPE)
    if values.size != count:
        raise HeaderError(f"{path}: payload holds {values.size} values, header says {count}")
    return Latent(values.reshape(shape))


def read_image(path: str | os.PathLike) -> RgbImage:
    """Load any Pillow-readable image as 8-bit RGB."""
    with Image.open(path) as img:
        return RgbImage(np.asarray(img.convert("RGB"), dtype=np.uint8))


def write_image(img: RgbImage, path: str | os.PathLike) -> None:
    Image.fromarray(img.pixels, mode="RGB").save(path)


def _box_weights(src: int, dst: int) -> np.ndarray:
    """Area-overlap weight matrix W (dst×src) with rows summing to 1.

    W[d, s] is the fraction of destination cell d covered by source cell s,
    so W @ values is an exact area average for any integer sizes dst <= src.
    """
    if dst > src:
        raise ShapeError(f"area downsampling only: target {dst} > source {src}")
    factor = src / dst
    w = np.zeros((dst, src))
    for d in range(dst):
        lo = d * factor
        hi = lo + factor
        s0 = int(np.floor(lo))
        s1 = min(int(np.ceil(hi)), src)
        for s in range(s0, s1):
            w[d, s] = (min(hi, s + 1) - max(lo, s)) / factor
    return w


def _area_downsample(plane: np.ndarray, th: int, tw: int) -> np.ndarray:
    wh = _box_weights(plane.shape[0], th)
    ww = _box_weights(plane.shape[1], tw)
    return wh @ plane.astype(np.float64) @ ww.T


def image_to_pseudolatent(img: RgbImage, target: tuple[int, int, int]) -> Latent:
    """Lift an RGB image into latent shape without a VAE.

    The image is area-downsampled to the target plane and mapped linearly
    from [0,255] to [-1,1].  C=3 keeps (R,G,B); C=4 appends mean(R,G,B) as
    the fourth channel.  This is a deterministic stand-in for a real
    encoder so the frequency math can run on plain images.
    """
    c, h, w = target
    if c not in (3, 4):
        raise DataError(f"pseudolatent supports 3 or 4 channels, got {c}")
    if h > img.height or w > img.width:
        raise ShapeError(
            f"target {h}×{w} larger than image {img.height}×{img.width}"
        )
    planes = [_area_downsample(img.pixels[:, :, k], h, w) for k in range(3)]
    if c == 4:
        planes.append((planes[0] + planes[1] + planes[2]) / 3.0)
    stacked = np.stack(planes, axis=0)
    return Latent(stacked / 127.5 - 1.0)


def read_mask(path: str | os.PathLike, target: tuple[int, int]) -> Mask:
    """Read a grayscale/RGB image as soft blend weights at latent resolution.

    Luminance is mapped [0,255] -> [0,1] and area-downsampled to the target
    (H,W); fractional boundary weights are kept.
    """
    with Image.open(path) as img:
        lum = np.asarray(img.convert("L"), dtype=np.float64)
    th, tw = target
    return Mask(_area_downsample(lum, th, tw) / 255.0)
