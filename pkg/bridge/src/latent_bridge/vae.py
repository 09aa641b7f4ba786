"""Encode reference images into true VAE latents (and decode back).

Two ways to supply the autoencoder:

1. Exported module directory (works offline): a directory holding
   ``vae.pt`` (TorchScript, forward: float32 B×3×H×W in [-1,1] -> latent
   posterior mean B×C×h×w) and ``vae.json`` with ``scaling_factor``,
   ``latent_channels`` and ``downscale``.  An optional ``vae_decoder.pt``
   enables decoding.  For a diffusers checkpoint this is a one-time
   ``torch.jit.trace`` of ``vae.encode(x).latent_dist.mode()``.

2. A diffusers model id or checkpoint directory, used when the
   ``diffusers`` package is installed.

The model's latent scaling factor is applied to encoder output (and
undone before decoding), matching how pipelines consume initial noise.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import torch
from PIL import Image

from .errors import ModelError
from .io import write_latent_array, write_manifest

MODEL_ENV_VAR = "BRIDGE_MODEL"


def resolve_model_id(model: str | None) -> str:
    model = model or os.environ.get(MODEL_ENV_VAR)
    if not model:
        raise ModelError(f"no model given (flag or ${MODEL_ENV_VAR})")
    return model


@dataclass(frozen=True)
class Autoencoder:
    encoder: object
    decoder: object | None
    scaling_factor: float
    latent_channels: int
    downscale: int


def _load_scripted(model_dir: Path) -> Autoencoder:
    config = json.loads((model_dir / "vae.json").read_text())
    try:
        encoder = torch.jit.load(model_dir / "vae.pt", map_location="cpu")
    except (RuntimeError, OSError) as exc:
        raise ModelError(f"{model_dir}: cannot load vae.pt ({exc})") from exc
    decoder = None
    decoder_path = model_dir / "vae_decoder.pt"
    if decoder_path.exists():
        decoder = torch.jit.load(decoder_path, map_location="cpu")
    return Autoencoder(
        encoder=encoder,
        decoder=decoder,
        scaling_factor=float(config["scaling_factor"]),
        latent_channels=int(config["latent_channels"]),
        downscale=int(config["downscale"]),
    )


def _load_diffusers(model_id: str) -> Autoencoder:
    try:
        from diffusers import AutoencoderKL
    except ImportError as exc:
        raise ModelError(
            f"{model_id}: not an exported vae.pt directory and diffusers is not installed"
        ) from exc
    try:
        vae = AutoencoderKL.from_pretrained(model_id, subfolder="vae")
    except Exception:
        vae = AutoencoderKL.from_pretrained(model_id)
    vae.eval()

    def encode(x):
        return vae.encode(x).latent_dist.mode()

    def decode(z):
        return vae.decode(z).sample

    return Autoencoder(
        encoder=encode,
        decoder=decode,
        scaling_factor=float(vae.config.scaling_factor),
        latent_channels=int(vae.config.latent_channels),
        downscale=2 ** (len(vae.config.block_out_channels) - 1),
    )


def load_autoencoder(model: str | None) -> Autoencoder:
    model_id = resolve_model_id(model)
    path = Path(model_id)
    if path.is_dir() and (path / "vae.pt").exists():
        return _load_scripted(path)
    return _load_diffusers(model_id)


def image_to_tensor(path: str | Path) -> torch.Tensor:
    with Image.open(path) as img:
        pixels = np.asarray(img.convert("RGB"), dtype=np.float32)
    x = torch.from_numpy(pixels / 127.5 - 1.0).permute(2, 0, 1)
    return x.unsqueeze(0)


def encode_reference(image_path: str | Path, model: str | None, out_path: str | Path) -> np.ndarray:
    """VAE-encode an RGB image and write the scaled latent as a toolkit file.

    The output file only appears after encoding succeeds: a missing or
    broken model leaves no partial artifact behind.
    """
    vae = load_autoencoder(model)
    x = image_to_tensor(image_path)
    with torch.no_grad():
        latent = vae.encoder(x)
    latent = (latent * vae.scaling_factor)[0].cpu().numpy().astype(np.float32)
    expected_hw = (x.shape[2] // vae.downscale, x.shape[3] // vae.downscale)
    if latent.shape[0] != vae.latent_channels or latent.shape[1:] != expected_hw:
        raise ModelError(
            f"autoencoder produced {latent.shape}, expected "
            f"({vae.latent_channels}, {expected_hw[0]}, {expected_hw[1]})"
        )
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    write_latent_array(latent, out_path)
    write_manifest(
        Path(str(out_path) + ".manifest.json"),
        command="encode",
        config={
            "model": resolve_model_id(model),
            "scaling_factor": vae.scaling_factor,
            "latent_shape": list(latent.shape),
        },
        inputs=[image_path],
        outputs=[out_path],
    )
    return latent


def decode_latent(latent: np.ndarray, model: str | None) -> np.ndarray:
    """Inverse of :func:`encode_reference` (needs a decoder); returns H×W×3 uint8."""
    vae = load_autoencoder(model)
    if vae.decoder is None:
        raise ModelError("model has no decoder")
    z = torch.from_numpy(latent.astype(np.float32)).unsqueeze(0) / vae.scaling_factor
    with torch.no_grad():
        x = vae.decoder(z)[0]
    pixels = ((x.clamp(-1.0, 1.0) + 1.0) * 127.5).round().to(torch.uint8)
    return pixels.permute(1, 2, 0).cpu().numpy()
