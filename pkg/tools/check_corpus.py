#!/usr/bin/env python3
"""Round-trip and oracle-equivalence checks over a directory of frame documents."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Tuple

from dotenv import load_dotenv

load_dotenv(dotenv_path=Path(__file__).resolve().parents[1] / ".env")

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from afsa.cli import check_equivalence  # noqa: E402
from afsa.errors import AfsaError  # noqa: E402
from afsa.frame_io import load_frame, parse_frame, serialize_frame  # noqa: E402


def check_file(path: Path, cap: int | None) -> Tuple[bool, str]:
    try:
        framework = load_frame(str(path))
    except AfsaError as e:
        return False, f"unreadable: {e}"

    text = serialize_frame(framework)
    if parse_frame(text) != framework or serialize_frame(parse_frame(text)) != text:
        return False, "round trip changed the framework"

    try:
        report = check_equivalence(framework, cap)
    except AfsaError as e:
        return False, str(e)
    return report.startswith("PASS"), report.splitlines()[0]


def main():
    parser = argparse.ArgumentParser(description="Check every .af file in a directory.")
    parser.add_argument("directory", nargs="?", default="data/frames", help="Corpus directory")
    parser.add_argument("--cap", type=int, default=None, help="Enumeration cap per file")
    args = parser.parse_args()

    paths = sorted(Path(args.directory).glob("*.af"))
    if not paths:
        raise FileNotFoundError(f"No .af files in {args.directory}")

    failures: List[str] = []
    for path in paths:
        ok, message = check_file(path, args.cap)
        print(f"{'✓' if ok else '✗'} {path.name}: {message}")
        if not ok:
            failures.append(path.name)

    print(f"\n{len(paths) - len(failures)}/{len(paths)} files passed")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
