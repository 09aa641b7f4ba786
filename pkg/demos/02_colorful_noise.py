"""The core trick: swap the low band of white noise for image frequencies.

A synthetic color image is lifted to a pseudolatent, its low band is
scaled by gamma and written over the noise's low band.  At small alpha
and gamma the result still looks like noise, but its low frequencies now
carry the image's color layout.
"""

from pathlib import Path

import matplotlib.pyplot as plt
import numpy as np

from colorfulnoise import ConditioningConfig, NoiseConfig, colorful_noise, sample_white, whiteness
from colorfulnoise.synthset import SynthSpec, generate_one
from colorfulnoise.tensor_io import image_to_pseudolatent

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

img, _ = generate_one(SynthSpec(seed=12, count=1, size=(128, 128)), 0)
c = image_to_pseudolatent(img, (4, 128, 128))
z = sample_white(NoiseConfig("white", seed=0, shape=(4, 128, 128)))

settings = {
    "sketch setting (a=0.03, g=0.04)": ConditioningConfig(alpha=0.03, gamma=0.04),
    "image setting (a=0.125, g=0.2)": ConditioningConfig(alpha=0.125, gamma=0.2),
    "heavy (a=0.25, g=1.0)": ConditioningConfig(alpha=0.25, gamma=1.0),
}

fig, axes = plt.subplots(2, len(settings) + 2, figsize=(16, 6.5))
axes[0, 0].imshow(img.pixels)
axes[0, 0].set_title("conditioning image")
axes[1, 0].axis("off")
axes[0, 1].imshow(z.data[0], cmap="gray")
axes[0, 1].set_title(f"white noise\nwhiteness {whiteness(z, 16).score:.4f}")
axes[1, 1].imshow(np.fft.fftshift(np.log1p(np.abs(np.fft.fft2(z.data[0])))), cmap="magma")

for col, (label, cfg) in enumerate(settings.items(), start=2):
    zc = colorful_noise(z, c, cfg)
    score = whiteness(zc, 16).score
    print(f"{label}: whiteness {score:.4f}")
    axes[0, col].imshow(zc.data[0], cmap="gray")
    axes[0, col].set_title(f"{label}\nwhiteness {score:.4f}")
    axes[1, col].imshow(np.fft.fftshift(np.log1p(np.abs(np.fft.fft2(zc.data[0])))), cmap="magma")

for ax in axes.ravel():
    ax.axis("off")
axes[1, 1].set_title("log |spectrum| below each latent", loc="left")
fig.tight_layout()
fig.savefig(OUT / "colorful_noise.png", dpi=120)
print(f"saved {OUT / 'colorful_noise.png'}")
