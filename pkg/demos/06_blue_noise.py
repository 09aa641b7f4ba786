"""Blue noise and its combination with low-frequency conditioning.

Blue noise is white noise with everything below a radial cutoff removed
(then rescaled to unit variance).  Conditioning refills exactly that
hole with image frequencies, so the two compose naturally.
"""

from pathlib import Path

import matplotlib.pyplot as plt
import numpy as np

from colorfulnoise import (
    ConditioningConfig,
    NoiseConfig,
    colorful_noise,
    normalized_radius,
    sample_blue,
    sample_white,
)
from colorfulnoise.synthset import SynthSpec, generate_one
from colorfulnoise.tensor_io import image_to_pseudolatent

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

shape = (4, 128, 128)
white = sample_white(NoiseConfig("white", seed=5, shape=shape))
blue = sample_blue(NoiseConfig("blue", seed=5, shape=shape, blue_cutoff=0.25))

img, _ = generate_one(SynthSpec(seed=9, count=1, size=(128, 128)), 0)
c = image_to_pseudolatent(img, shape)
blue_conditioned = colorful_noise(blue, c, ConditioningConfig(alpha=0.125, gamma=0.2))


def radial_profile(latent, bins=32):
    psd = (np.abs(np.fft.fft2(latent.data, axes=(-2, -1))) ** 2).mean(axis=0)
    r = normalized_radius(128, 128)
    idx = np.minimum((r * bins).astype(int), bins - 1)
    counts = np.bincount(idx.ravel(), minlength=bins)
    power = np.bincount(idx.ravel(), weights=psd.ravel(), minlength=bins)
    return (np.arange(bins) + 0.5) / bins, power / counts


fig, axes = plt.subplots(1, 4, figsize=(15, 3.6))
for ax, (name, latent) in zip(
    axes[:3], (("white", white), ("blue (cutoff 0.25)", blue), ("blue + conditioning", blue_conditioned))
):
    ax.imshow(latent.data[0], cmap="gray")
    ax.set_title(name)
    ax.axis("off")
for name, latent in (("white", white), ("blue", blue), ("blue+cond", blue_conditioned)):
    radius, power = radial_profile(latent)
    axes[3].semilogy(radius, power / (128 * 128), label=name)
axes[3].axvline(0.25, color="gray", ls="--", lw=1)
axes[3].set_xlabel("normalized radius")
axes[3].set_ylabel("mean bin power / (H*W)")
axes[3].set_title("radial power profile")
axes[3].legend()
fig.tight_layout()
fig.savefig(OUT / "blue_noise.png", dpi=120)

low = normalized_radius(128, 128) < 0.25
psd_blue = np.abs(np.fft.fft2(blue.data, axes=(-2, -1))) ** 2
print(f"blue noise power below cutoff: {psd_blue[:, low].sum() / psd_blue.sum():.2e} of total")
print(f"per-channel variance: {blue.data.var(axis=(1, 2))}")
print(f"saved {OUT / 'blue_noise.png'}")
