"""Bridge CLI: `encode` an image to a latent, `generate` from a latent."""

from __future__ import annotations

import argparse
import sys

from .errors import BridgeError
from .pipeline import BridgeJob, run_pipeline
from .vae import MODEL_ENV_VAR, encode_reference


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latent-bridge",
        description="Exchange latents between the noise toolkit and diffusion pipelines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="VAE-encode a reference image into a latent file")
    p.add_argument("--image", required=True)
    p.add_argument("--model", help=f"model id/dir (default ${MODEL_ENV_VAR})")
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("generate", help="run a pipeline with a latent as the initial noise")
    p.add_argument("--latent", required=True)
    p.add_argument("--prompt", default="")
    p.add_argument("--model", help=f"model id/dir (default ${MODEL_ENV_VAR})")
    p.add_argument("--steps", type=int, default=30)
    p.add_argument("--guidance", type=float, default=5.0)
    p.add_argument("--seed", type=int)
    p.add_argument("-o", "--output", required=True, help="output directory")
    return parser


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "encode":
            encode_reference(args.image, args.model, args.output)
        else:
            job = BridgeJob(
                latent_path=args.latent,
                prompt=args.prompt,
                model=args.model,
                out_dir=args.output,
                steps=args.steps,
                guidance_scale=args.guidance,
                seed=args.seed,
            )
            run_pipeline(job)
    except BridgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
