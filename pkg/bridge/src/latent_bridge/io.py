"""Latent file exchange and run manifests.

The bridge talks to the noise toolkit exclusively through its public file
formats: v1.0 ``.npy`` containers holding 3-D little-endian float32
arrays, 8-bit PNG images, and JSON manifests.  Values are never
transformed here beyond dtype casting.
"""

from __future__ import annotations

import hashlib
import json
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .errors import LatentFormatError


def read_latent_array(path: str | Path) -> np.ndarray:
    """Read a toolkit latent file, enforcing the exchange contract."""
    try:
        arr = np.load(path, allow_pickle=False)
    except ValueError as exc:
        raise LatentFormatError(f"{path}: not a valid array container ({exc})") from exc
    if arr.ndim != 3:
        raise LatentFormatError(f"{path}: expected a 3-D (C,H,W) latent, got rank {arr.ndim}")
    if arr.dtype != np.float32:
        raise LatentFormatError(f"{path}: expected float32 payload, got {arr.dtype}")
    if not np.isfinite(arr).all():
        raise LatentFormatError(f"{path}: latent contains NaN/Inf")
    return arr


def write_latent_array(arr: np.ndarray, path: str | Path) -> None:
    np.save(path, np.ascontiguousarray(arr, dtype=np.float32))


def sha256_file(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def write_manifest(path: Path, command: str, config: dict, inputs: list, outputs: list) -> None:
    """One manifest per bridge run; links back to a toolkit manifest when present."""
    upstream = {}
    for p in inputs:
        toolkit_manifest = Path(str(p) + ".manifest.json")
        if toolkit_manifest.exists():
            upstream[str(p)] = str(toolkit_manifest)
    payload = {
        "tool": "latent-bridge",
        "command": command,
        "config": config,
        "inputs": {str(p): sha256_file(p) for p in inputs},
        "outputs": {str(p): sha256_file(p) for p in outputs},
        "upstream_manifests": upstream,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    path.write_text(json.dumps(payload, indent=2) + "\n")
