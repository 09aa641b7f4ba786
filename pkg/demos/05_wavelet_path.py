"""The wavelet alternative: swap the deepest LL instead of a DFT band.

Decomposes noise and a conditioning pseudolatent three levels deep,
replaces the coarsest low-pass residual with the scaled conditioning LL,
and compares the result against the DFT path at a matched setting.
"""

from pathlib import Path

import matplotlib.pyplot as plt

from colorfulnoise import (
    ConditioningConfig,
    NoiseConfig,
    colorful_noise,
    dwt_decompose,
    sample_white,
    wavelet_colorful,
    whiteness,
)
from colorfulnoise.synthset import SynthSpec, generate_one
from colorfulnoise.tensor_io import image_to_pseudolatent

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

img, _ = generate_one(SynthSpec(seed=21, count=1, size=(128, 128)), 0)
c = image_to_pseudolatent(img, (4, 128, 128))
z = sample_white(NoiseConfig("white", seed=2, shape=(4, 128, 128)))

pyramid = dwt_decompose(c, levels=3, basis="haar")
print(f"pyramid: LL {pyramid.ll.shape[1:]}, detail levels " + ", ".join(str(lh.shape[1:]) for lh, _, _ in pyramid.highs))

zc_dwt = wavelet_colorful(z, c, levels=3, gamma=0.083)
zc_fft = colorful_noise(z, c, ConditioningConfig(alpha=0.0625, gamma=0.083))
print(f"whiteness  white={whiteness(z,16).score:.4f}  dwt={whiteness(zc_dwt,16).score:.4f}  fft={whiteness(zc_fft,16).score:.4f}")

fig, axes = plt.subplots(1, 5, figsize=(16, 3.6))
axes[0].imshow(img.pixels)
axes[0].set_title("conditioning image")
axes[1].imshow(pyramid.ll[0], cmap="gray")
axes[1].set_title("deepest LL (16x16)")
axes[2].imshow(z.data[0], cmap="gray")
axes[2].set_title("white noise")
axes[3].imshow(zc_dwt.data[0], cmap="gray")
axes[3].set_title("wavelet path (J=3, g=0.083)")
axes[4].imshow(zc_fft.data[0], cmap="gray")
axes[4].set_title("DFT path (a=0.0625, g=0.083)")
for ax in axes:
    ax.axis("off")
fig.tight_layout()
fig.savefig(OUT / "wavelet_path.png", dpi=120)
print(f"saved {OUT / 'wavelet_path.png'}")
