"""Bridge between the noise toolkit's latent files and diffusion pipelines."""

__version__ = "0.1.0"

from .errors import BridgeError, LatentFormatError, ModelError
from .io import read_latent_array, write_latent_array
from .pipeline import BridgeJob, load_pipeline, run_pipeline
from .vae import Autoencoder, decode_latent, encode_reference, load_autoencoder

__all__ = [
    "__version__",
    "Autoencoder",
    "BridgeError",
    "BridgeJob",
    "LatentFormatError",
    "ModelError",
    "decode_latent",
    "encode_reference",
    "load_autoencoder",
    "load_pipeline",
    "read_latent_array",
    "run_pipeline",
    "write_latent_array",
]
