"""Command-line front end: every library operation as a subcommand.

Each output-producing invocation writes exactly one JSON manifest next to
its outputs (command line, resolved config, content digests, timestamp),
so any artifact can be regenerated from scratch.  Option precedence is
CLI flag > --config file (TOML or JSON) > built-in default.

Exit codes: 0 ok, 2 usage error, 3 data error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .conditioning import (
    ConditioningConfig,
    calibrate_gamma,
    colorful_noise,
    inject_band,
    interpolate,
    masked_blend,
)
from .errors import DataError, UsageError
from .metrics import DistanceMatrix, band_cosine, emd, silhouette, whiteness
from .noise_gen import GENERATOR_NAME, NoiseConfig, sample_blue, sample_white
from .spectral import RADIUS_METRIC, SpectrumBands, decompose, make_band_spec, recompose
from .synthset import SynthSpec, generate_one
from .tensor_io import (
    image_to_pseudolatent,
    read_image,
    read_latent,
    read_mask,
    write_image,
    write_latent,
)

DEFAULTS = {
    "alpha": 0.125,
    "beta": 1.0,
    "gamma": 0.2,
    "t": 1.0,
    "bins": 16,
    "patch": 64,
    "hist_bins": 32,
    "transform": "fft",
    "dwt_levels": 1,
    "basis": "haar",
    "seed": 0,
    "cutoff": 0.25,
    "shape": "4,128,128",
    "size": "512,512",
    "count": 1000,
}


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    p = Path(path)
    text = p.read_bytes()
    if p.suffix.lower() == ".json":
        return json.loads(text)
    try:
        import tomllib
    except ModuleNotFoundError:
        import tomli as tomllib
    return tomllib.loads(text.decode())


def _resolve(args, key: str):
    cli_value = getattr(args, key.replace("-", "_"), None)
    if cli_value is not None:
        return cli_value
    if key in args.config_values:
        return args.config_values[key]
    return DEFAULTS[key]


def _parse_ints(text: str, n: int, what: str) -> tuple[int, ...]:
    parts = text.split(",")
    if len(parts) != n:
        raise UsageError(f"{what} must be {n} comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"bad {what}: {text!r}") from exc


def _parse_floats(text: str, what: str) -> list[float]:
    try:
        values = [float(p) for p in text.split(",") if p.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"bad {what}: {text!r}") from exc
    if not values:
        raise UsageError(f"{what} must not be empty")
    return values


def _sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fp:
        for chunk in iter(lambda: fp.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _write_manifest(manifest_path: Path, args, config: dict, inputs: list, outputs: list) -> None:
    manifest = {
        "tool": "colorful-noise",
        "version": __version__,
        "command": args.command,
        "argv": args.raw_argv,
        "config": {"radius_metric": RADIUS_METRIC, "generator": GENERATOR_NAME, **config},
        "inputs": {str(p): _sha256(Path(p)) for p in inputs},
        "outputs": {str(p): _sha256(Path(p)) for p in outputs},
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n")


def _write_report(path: Path, payload: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2) + "\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_noise(args) -> int:
    kind = args.kind
    seed = int(_resolve(args, "seed"))
    shape = _parse_ints(_resolve(args, "shape"), 3, "--shape")
    out = Path(args.output)
    if kind == "white":
        z = sample_white(NoiseConfig(kind="white", seed=seed, shape=shape))
        cutoff = None
    else:
        cutoff = float(_resolve(args, "cutoff"))
        z = sample_blue(NoiseConfig(kind="blue", seed=seed, shape=shape, blue_cutoff=cutoff))
    out.parent.mkdir(parents=True, exist_ok=True)
    write_latent(z, out)
    config = {"kind": kind, "seed": seed, "shape": list(shape), "cutoff": cutoff}
    _write_manifest(Path(str(out) + ".manifest.json"), args, config, [], [out])
    return 0


def cmd_pseudolatent(args) -> int:
    img = read_image(args.image)
    shape = _parse_ints(_resolve(args, "shape"), 3, "--shape")
    z = image_to_pseudolatent(img, shape)
    out = Path(args.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    write_latent(z, out)
    config = {"shape": list(shape)}
    _write_manifest(Path(str(out) + ".manifest.json"), args, config, [args.image], [out])
    return 0


def cmd_decompose(args) -> int:
    z = read_latent(args.latent)
    alpha = float(_resolve(args, "alpha"))
    beta = float(_resolve(args, "beta"))
    spec = make_band_spec(alpha, beta, z.height, z.width)
    bands = decompose(z, spec)
    zero = np.zeros_like(bands.low)
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    outputs = []
    for name, band in (("low", bands.low), ("mid", bands.mid), ("high", bands.high)):
        projected = recompose(SpectrumBands(band, zero, zero, spec, z.shape))
        path = outdir / f"{name}.npy"
        write_latent(projected, path)
        outputs.append(path)
    config = {"alpha": alpha, "beta": beta}
    _write_manifest(outdir / "manifest.json", args, config, [args.latent], outputs)
    return 0


def cmd_condition(args) -> int:
    z = read_latent(args.latent)
    c = read_latent(args.conditioning)
    alpha = float(_resolve(args, "alpha"))
    gamma = float(_resolve(args, "gamma"))
    transform = str(_resolve(args, "transform"))
    dwt_levels = int(_resolve(args, "dwt_levels"))
    basis = str(_resolve(args, "basis"))
    t = float(_resolve(args, "t"))
    cfg = ConditioningConfig(
        alpha=alpha, gamma=gamma, transform=transform, dwt_levels=dwt_levels, dwt_basis=basis
    )
    zc = colorful_noise(z, c, cfg)
    inputs = [args.latent, args.conditioning]
    mask_path = args.mask
    if mask_path is not None:
        zc = masked_blend(z, zc, read_mask(mask_path, (z.height, z.width)))
        inputs.append(mask_path)
    if t != 1.0:
        zc = interpolate(z, zc, t, renorm=args.renorm)
    out = Path(args.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    write_latent(zc, out)
    config = {
        "alpha": alpha,
        "beta": 1.0,
        "gamma": gamma,
        "transform": transform,
        "dwt_levels": dwt_levels,
        "basis": basis,
        "t": t,
        "renorm": bool(args.renorm),
        "mask": mask_path,
    }
    _write_manifest(Path(str(out) + ".manifest.json"), args, config, inputs, [out])
    return 0


def cmd_inject(args) -> int:
    z = read_latent(args.latent)
    ref = read_latent(args.ref)
    alpha = float(_resolve(args, "alpha"))
    beta = float(_resolve(args, "beta"))
    gamma = float(_resolve(args, "gamma"))
    spec = make_band_spec(alpha, beta, z.height, z.width)
    out = Path(args.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    write_latent(inject_band(z, ref, args.band, spec, gamma), out)
    config = {"alpha": alpha, "beta": beta, "gamma": gamma, "band": args.band}
    _write_manifest(Path(str(out) + ".manifest.json"), args, config, [args.latent, args.ref], [out])
    return 0


def cmd_mix(args) -> int:
    n = int(args.seeds)
    if n < 1:
        raise UsageError(f"--seeds must be >= 1, got {n}")
    base_seed = int(_resolve(args, "seed"))
    alpha = float(_resolve(args, "alpha"))
    beta = float(_resolve(args, "beta"))
    shape = _parse_ints(_resolve(args, "shape"), 3, "--shape")
    spec = make_band_spec(alpha, beta, shape[1], shape[2])
    seeds = [base_seed + i for i in range(n)]
    decomposed = [
        decompose(sample_white(NoiseConfig(kind="white", seed=s, shape=shape)), spec) for s in seeds
    ]
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    outputs = []
    grid = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                mixed = recompose(
                    SpectrumBands(
                        low=decomposed[i].low,
                        mid=decomposed[j].mid,
                        high=decomposed[k].high,
                        spec=spec,
                        origin_shape=tuple(shape),
                    )
                )
                path = outdir / f"mix_i{i:02d}_j{j:02d}_k{k:02d}.npy"
                write_latent(mixed, path)
                outputs.append(path)
                grid.append({"i": i, "j": j, "k": k, "file": path.name})
    config = {
        "alpha": alpha,
        "beta": beta,
        "seeds": seeds,
        "shape": list(shape),
        "grid": grid,
    }
    _write_manifest(outdir / "manifest.json", args, config, [], outputs)
    return 0


def cmd_blend(args) -> int:
    z = read_latent(args.latent)
    zc = read_latent(args.conditioned)
    mask = read_mask(args.mask, (z.height, z.width))
    out = Path(args.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    write_latent(masked_blend(z, zc, mask), out)
    _write_manifest(
        Path(str(out) + ".manifest.json"),
        args,
        {"mask": args.mask},
        [args.latent, args.conditioned, args.mask],
        [out],
    )
    return 0


def cmd_interp(args) -> int:
    z = read_latent(args.latent)
    zc = read_latent(args.conditioned)
    t = float(_resolve(args, "t"))
    out = Path(args.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    write_latent(interpolate(z, zc, t, renorm=args.renorm), out)
    config = {"t": t, "renorm": bool(args.renorm)}
    _write_manifest(Path(str(out) + ".manifest.json"), args, config, [args.latent, args.conditioned], [out])
    return 0


def cmd_whiteness(args) -> int:
    z = read_latent(args.latent)
    bins = int(_resolve(args, "bins"))
    report = whiteness(z, bins)
    out = Path(args.output)
    _write_report(
        out,
        {
            "bins": report.bins,
            "score": report.score,
            "per_channel_band_power": report.per_channel_band_power.tolist(),
        },
    )
    _write_manifest(Path(str(out) + ".manifest.json"), args, {"bins": bins}, [args.latent], [out])
    print(f"whiteness: {report.score:.6f}")
    return 0


def cmd_emd(args) -> int:
    a = read_image(args.image_a)
    b = read_image(args.image_b)
    patch = int(_resolve(args, "patch"))
    bins = int(_resolve(args, "hist_bins"))
    report = emd(a, b, patch=patch, bins=bins)
    out = Path(args.output)
    _write_report(
        out,
        {
            "localized": report.localized,
            "global": report.global_,
            "patch_size": report.patch_size,
            "per_patch": report.per_patch,
        },
    )
    config = {"patch": patch, "hist_bins": bins}
    _write_manifest(Path(str(out) + ".manifest.json"), args, config, [args.image_a, args.image_b], [out])
    print(f"localized EMD: {report.localized:.6f}  global EMD: {report.global_:.6f}")
    return 0


def cmd_cosine_bands(args) -> int:
    a = read_latent(args.latent_a)
    b = read_latent(args.latent_b)
    alpha = float(_resolve(args, "alpha"))
    beta = float(_resolve(args, "beta"))
    spec = make_band_spec(alpha, beta, a.height, a.width)
    cos = band_cosine(a, b, spec)
    out = Path(args.output)
    _write_report(out, {"low": cos.low, "mid": cos.mid, "high": cos.high, "alpha": alpha, "beta": beta})
    _write_manifest(
        Path(str(out) + ".manifest.json"),
        args,
        {"alpha": alpha, "beta": beta},
        [args.latent_a, args.latent_b],
        [out],
    )
    return 0


def _read_labels(text: str) -> list[str]:
    path = Path(text)
    if path.exists():
        return [line.strip() for line in path.read_text().splitlines() if line.strip()]
    return [p.strip() for p in text.split(",") if p.strip()]


def cmd_silhouette(args) -> int:
    matrix = np.loadtxt(args.distances, delimiter=",", ndmin=2)
    labels = _read_labels(args.labels)
    score = silhouette(DistanceMatrix(matrix), labels)
    out = Path(args.output)
    _write_report(out, {"score": score, "n": len(labels), "clusters": sorted(set(labels))})
    _write_manifest(Path(str(out) + ".manifest.json"), args, {}, [args.distances], [out])
    print(f"silhouette: {score:.6f}")
    return 0


def cmd_synthset(args) -> int:
    seed = int(_resolve(args, "seed"))
    count = int(_resolve(args, "count"))
    size = _parse_ints(_resolve(args, "size"), 2, "--size")
    spec = SynthSpec(seed=seed, count=count, size=size)
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    outputs = []
    records = []
    for i in range(count):
        img, rec = generate_one(spec, i)
        path = outdir / f"img_{i:05d}.png"
        write_image(img, path)
        rec["file"] = path.name
        outputs.append(path)
        records.append(rec)
    config = {"seed": seed, "count": count, "size": list(size), "images": records}
    _write_manifest(outdir / "manifest.json", args, config, [], outputs)
    return 0


def cmd_sweep(args) -> int:
    alphas = _parse_floats(args.alphas, "--alphas")
    gammas = _parse_floats(args.gammas, "--gammas")
    z = read_latent(args.latent)
    c = read_latent(args.conditioning)
    bins = int(_resolve(args, "bins"))
    out = Path(args.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="") as fp:
        writer = csv.writer(fp)
        writer.writerow(["alpha", "gamma", "whiteness", "error"])
        for alpha in alphas:
            for gamma in gammas:
                try:
                    zc = colorful_noise(z, c, ConditioningConfig(alpha=alpha, gamma=gamma))
                    score = whiteness(zc, bins).score
                    writer.writerow([alpha, gamma, f"{score:.10g}", ""])
                except DataError as exc:
                    writer.writerow([alpha, gamma, "", str(exc)])
    config = {"alphas": alphas, "gammas": gammas, "bins": bins, "beta": 1.0}
    _write_manifest(Path(str(out) + ".manifest.json"), args, config, [args.latent, args.conditioning], [out])
    return 0


def cmd_calibrate_gamma(args) -> int:
    z = read_latent(args.latent)
    c = read_latent(args.conditioning)
    alpha = float(_resolve(args, "alpha"))
    gamma_star = calibrate_gamma(z, c, alpha)
    out = Path(args.output)
    _write_report(out, {"gamma_star": gamma_star, "alpha": alpha})
    _write_manifest(
        Path(str(out) + ".manifest.json"), args, {"alpha": alpha}, [args.latent, args.conditioning], [out]
    )
    print(f"gamma*: {gamma_star:.6f}")
    return 0


# ---------------------------------------------------------------------------
# parser


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorful-noise",
        description="Frequency-band manipulation of diffusion noise latents.",
    )
    parser.add_argument("--config", help="TOML or JSON file with default option values")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("noise", help="sample a white or blue noise latent")
    p.add_argument("--kind", choices=["white", "blue"], required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--shape", help="C,H,W (default 4,128,128)")
    p.add_argument("--cutoff", type=float, help="blue-noise low cutoff in (0,1)")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_noise)

    p = sub.add_parser("pseudolatent", help="lift an image to latent shape without a VAE")
    p.add_argument("--image", required=True)
    p.add_argument("--shape", help="C,H,W target (default 4,128,128)")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_pseudolatent)

    p = sub.add_parser("decompose", help="project a latent onto its low/mid/high bands")
    p.add_argument("-z", "--latent", required=True)
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("-o", "--output", required=True, help="output directory")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("condition", help="inject low frequencies of a conditioning latent")
    p.add_argument("-z", "--latent", required=True)
    p.add_argument("-c", "--conditioning", required=True)
    p.add_argument("--alpha", type=float)
    p.add_argument("--gamma", type=float)
    p.add_argument("--transform", choices=["fft", "dwt"])
    p.add_argument("--dwt-levels", type=int)
    p.add_argument("--basis", choices=["haar", "db2"])
    p.add_argument("--mask", help="PNG mask; replacement only where painted")
    p.add_argument("--t", type=float, help="interpolation toward the conditioned latent")
    p.add_argument("--renorm", action="store_true")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_condition)

    p = sub.add_parser("inject", help="replace one band of a latent from a reference")
    p.add_argument("-z", "--latent", required=True)
    p.add_argument("--ref", required=True)
    p.add_argument("--band", choices=["low", "mid", "high"], required=True)
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--gamma", type=float)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_inject)

    p = sub.add_parser("mix", help="all n^3 band mixtures of n seeded white latents")
    p.add_argument("--seeds", type=int, required=True, help="number of base latents n")
    p.add_argument("--seed", type=int, help="first seed (consecutive from here)")
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--shape")
    p.add_argument("-o", "--output", required=True, help="output directory")
    p.set_defaults(func=cmd_mix)

    p = sub.add_parser("blend", help="mask-blend a conditioned latent into the original")
    p.add_argument("-z", "--latent", required=True)
    p.add_argument("--zc", "--conditioned", dest="conditioned", required=True)
    p.add_argument("--mask", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_blend)

    p = sub.add_parser("interp", help="linear interpolation between two latents")
    p.add_argument("-z", "--latent", required=True)
    p.add_argument("--zc", "--conditioned", dest="conditioned", required=True)
    p.add_argument("--t", type=float)
    p.add_argument("--renorm", action="store_true")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("whiteness", help="PSD whiteness of a latent")
    p.add_argument("-z", "--latent", required=True)
    p.add_argument("--bins", type=int)
    p.add_argument("-o", "--output", required=True, help="JSON report path")
    p.set_defaults(func=cmd_whiteness)

    p = sub.add_parser("emd", help="localized/global histogram EMD between two images")
    p.add_argument("-a", "--image-a", required=True)
    p.add_argument("-b", "--image-b", required=True)
    p.add_argument("--patch", type=int)
    p.add_argument("--hist-bins", type=int)
    p.add_argument("-o", "--output", required=True, help="JSON report path")
    p.set_defaults(func=cmd_emd)

    p = sub.add_parser("cosine-bands", help="per-band cosine similarity of two latents")
    p.add_argument("-a", "--latent-a", required=True)
    p.add_argument("-b", "--latent-b", required=True)
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("-o", "--output", required=True, help="JSON report path")
    p.set_defaults(func=cmd_cosine_bands)

    p = sub.add_parser("silhouette", help="mean silhouette from a distance-matrix CSV")
    p.add_argument("--distances", required=True, help="headerless CSV, symmetric matrix")
    p.add_argument("--labels", required=True, help="label file (one per line) or comma list")
    p.add_argument("-o", "--output", required=True, help="JSON report path")
    p.set_defaults(func=cmd_silhouette)

    p = sub.add_parser("synthset", help="generate the synthetic flat-color dataset")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--size", help="H,W (default 512,512)")
    p.add_argument("-o", "--output", required=True, help="output directory")
    p.set_defaults(func=cmd_synthset)

    p = sub.add_parser("sweep", help="whiteness over an alpha × gamma grid")
    p.add_argument("--alphas", required=True, help="comma list")
    p.add_argument("--gammas", required=True, help="comma list")
    p.add_argument("-z", "--latent", required=True)
    p.add_argument("-c", "--conditioning", required=True)
    p.add_argument("--bins", type=int)
    p.add_argument("-o", "--output", required=True, help="CSV report path")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("calibrate-gamma", help="closed-form whiteness-matching gamma")
    p.add_argument("-z", "--latent", required=True)
    p.add_argument("-c", "--conditioning", required=True)
    p.add_argument("--alpha", type=float)
    p.add_argument("-o", "--output", required=True, help="JSON report path")
    p.set_defaults(func=cmd_calibrate_gamma)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.raw_argv = argv
    try:
        args.config_values = _load_config(args.config)
    except OSError as exc:
        print(f"error[io]: {exc}", file=sys.stderr)
        return 4
    except (json.JSONDecodeError, ValueError) as exc:
        print(f"error[usage]: bad config file: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error[usage]: {exc}", file=sys.stderr)
        return 2
    except DataError as exc:
        print(f"error[data]: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error[io]: {exc}", file=sys.stderr)
        return 4


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
