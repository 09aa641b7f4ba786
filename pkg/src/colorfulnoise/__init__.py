"""Frequency-band manipulation of diffusion noise latents.

Decompose latents into radial DFT bands (or wavelet pyramids), replace
low-frequency content with scaled conditioning-image frequencies, and
measure the result: spectral whiteness, histogram EMD, band-wise cosine
similarity and silhouette clustering.
"""

__version__ = "0.1.0"

from .conditioning import (
    ConditioningConfig,
    calibrate_gamma,
    colorful_noise,
    condition_latent,
    inject_band,
    interpolate,
    masked_blend,
    mix_bands,
)
from .errors import (
    ColorfulNoiseError,
    DataError,
    HeaderError,
    HermitianError,
    NonFiniteError,
    RankError,
    ShapeError,
    UsageError,
)
from .metrics import (
    BandCosines,
    DistanceMatrix,
    EMDReport,
    WhitenessReport,
    band_cosine,
    emd,
    silhouette,
    whiteness,
)
from .noise_gen import GENERATOR_NAME, NoiseConfig, philox_generator, sample_blue, sample_white
from .spectral import (
    RADIUS_METRIC,
    BandSpec,
    SpectrumBands,
    decompose,
    make_band_spec,
    normalized_radius,
    recompose,
)
from .synthset import SynthSpec, generate, generate_one
from .tensor_io import (
    Latent,
    Mask,
    RgbImage,
    image_to_pseudolatent,
    read_image,
    read_latent,
    read_mask,
    write_image,
    write_latent,
)
from .wavelet import WaveletPyramid, dwt_decompose, dwt_recompose, wavelet_colorful

__all__ = [
    "__version__",
    "BandCosines",
    "BandSpec",
    "ColorfulNoiseError",
    "ConditioningConfig",
    "DataError",
    "DistanceMatrix",
    "EMDReport",
    "GENERATOR_NAME",
    "HeaderError",
    "HermitianError",
    "Latent",
    "Mask",
    "NoiseConfig",
    "NonFiniteError",
    "RADIUS_METRIC",
    "RankError",
    "RgbImage",
    "ShapeError",
    "SpectrumBands",
    "SynthSpec",
    "UsageError",
    "WaveletPyramid",
    "WhitenessReport",
    "band_cosine",
    "calibrate_gamma",
    "colorful_noise",
    "condition_latent",
    "decompose",
    "dwt_decompose",
    "dwt_recompose",
    "emd",
    "generate",
    "generate_one",
    "image_to_pseudolatent",
    "inject_band",
    "interpolate",
    "make_band_spec",
    "masked_blend",
    "mix_bands",
    "normalized_radius",
    "philox_generator",
    "read_image",
    "read_latent",
    "read_mask",
    "recompose",
    "sample_blue",
    "sample_white",
    "silhouette",
    "wavelet_colorful",
    "whiteness",
    "write_image",
    "write_latent",
]
