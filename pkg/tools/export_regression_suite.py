#!/usr/bin/env python3
"""Write the solver regression suite as frame documents."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from dotenv import load_dotenv

load_dotenv(dotenv_path=Path(__file__).resolve().parents[1] / ".env")

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from afsa.config import Config  # noqa: E402
from afsa.frame_io import serialize_frame  # noqa: E402
from afsa.framework import FrameworkKind  # noqa: E402
from afsa.generators import KIND_CYCLE, regression_suite  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description="Export the seeded regression suite as .af files.")
    parser.add_argument("--out", default="data/regression", help="Output directory")
    parser.add_argument("--seed", type=int, default=Config.SEED, help="Generator seed")
    parser.add_argument("--size", type=int, default=200, help="Number of frameworks")
    parser.add_argument(
        "--kind",
        action="append",
        choices=[kind.value for kind in FrameworkKind],
        help="Restrict to these kinds (repeatable); default cycles through all five",
    )
    args = parser.parse_args()

    kinds = [FrameworkKind(kind) for kind in args.kind] if args.kind else list(KIND_CYCLE)
    suite = regression_suite(seed=args.seed, size=args.size, kinds=kinds)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    width = len(str(len(suite)))
    for index, framework in enumerate(suite):
        path = out_dir / f"{index:0{width}d}_{framework.kind.value}.af"
        path.write_text(serialize_frame(framework), encoding="utf-8")
    print(f"Wrote {len(suite)} frameworks (seed {args.seed}) to {out_dir}")


if __name__ == "__main__":
    main()
