"""Hand a toolkit latent to a latent-diffusion pipeline as the initial noise.

The pipeline contract is the diffusers calling convention: a callable
accepting ``prompt``, ``latents`` (B×C×H×W torch tensor used verbatim as
the initial noise), ``num_inference_steps``, ``guidance_scale``,
``generator`` and ``output_type="np"``, returning an object with an
``images`` array.  Any object honoring that shape works; by default the
model id is loaded through diffusers when installed.

The latent file is validated before any model is loaded, and its values
reach the pipeline unchanged except for the float32 -> model dtype cast.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import torch
from PIL import Image

from .errors import LatentFormatError, ModelError
from .io import read_latent_array, write_manifest
from .vae import resolve_model_id


@dataclass(frozen=True)
class BridgeJob:
    latent_path: str
    prompt: str
    model: str | None
    out_dir: str
    steps: int = 30
    guidance_scale: float = 5.0
    seed: int | None = None
    extra: dict = field(default_factory=dict)


def load_pipeline(model: str | None):
    model_id = resolve_model_id(model)
    try:
        from diffusers import DiffusionPipeline
    except ImportError as exc:
        raise ModelError(f"{model_id}: diffusers is not installed; pass a pipeline object") from exc
    return DiffusionPipeline.from_pretrained(model_id)


def _expected_shape(pipeline):
    """Best-effort (C,H,W) the pipeline wants, None when unknowable."""
    shape = getattr(pipeline, "latent_shape", None)
    if shape is not None:
        return tuple(shape)
    unet = getattr(pipeline, "unet", None)
    if unet is not None and hasattr(unet, "config"):
        size = unet.config.sample_size
        return (unet.config.in_channels, size, size)
    return None


def run_pipeline(job: BridgeJob, pipeline=None) -> list[Path]:
    """Run generation seeded with the latent from ``job.latent_path``.

    Returns the written image paths.  The latent is checked against the
    exchange format (and, once known, the pipeline's expected shape)
    before the model is loaded or invoked.
    """
    latent = read_latent_array(job.latent_path)
    if pipeline is None:
        pipeline = load_pipeline(job.model)
    expected = _expected_shape(pipeline)
    if expected is not None and tuple(latent.shape) != tuple(expected):
        raise LatentFormatError(f"latent shape {latent.shape} does not match pipeline {expected}")

    generator = None
    if job.seed is not None:
        generator = torch.Generator().manual_seed(job.seed)
    # dtype cast only: the toolkit is the single source of noise math
    latents = torch.from_numpy(latent).unsqueeze(0)
    result = pipeline(
        prompt=job.prompt,
        latents=latents,
        num_inference_steps=job.steps,
        guidance_scale=job.guidance_scale,
        generator=generator,
        output_type="np",
        **job.extra,
    )
    images = np.asarray(result.images)
    if images.ndim == 3:
        images = images[None]

    out_dir = Path(job.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, image in enumerate(images):
        pixels = np.clip(np.asarray(image) * 255.0, 0, 255).round().astype(np.uint8)
        path = out_dir / f"image_{i:03d}.png"
        Image.fromarray(pixels, mode="RGB").save(path)
        paths.append(path)
    write_manifest(
        out_dir / "manifest.json",
        command="generate",
        config={
            "model": job.model,
            "prompt": job.prompt,
            "steps": job.steps,
            "guidance_scale": job.guidance_scale,
            "seed": job.seed,
        },
        inputs=[job.latent_path],
        outputs=paths,
    )
    return paths
