#!/usr/bin/env python3
"""Run the test suite with the randomized suites at acceptance size."""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import pytest
from dotenv import load_dotenv

ROOT = Path(__file__).resolve().parents[1]

load_dotenv(dotenv_path=ROOT / ".env")

# the seeded suites draw 60 frameworks per kind and family, so 5 gives 300 each
ACCEPTANCE_SCALE = 5.0


def main():
    parser = argparse.ArgumentParser(description="Run pytest at acceptance scale.")
    parser.add_argument("--scale", type=float, default=ACCEPTANCE_SCALE,
                        help="AFSA_PROPERTY_SCALE for this run")
    # anything else goes to pytest unchanged
    args, pytest_args = parser.parse_known_args()

    if args.scale <= 0:
        parser.error("--scale must be positive")

    # afsa.config reads the scale at import, so it has to be set before pytest collects
    os.environ["AFSA_PROPERTY_SCALE"] = str(args.scale)
    print(f"Running tests at AFSA_PROPERTY_SCALE={args.scale}")
    code = pytest.main([str(ROOT / "tests"), *pytest_args])
    print(f"pytest exited with {int(code)}")
    sys.exit(int(code))


if __name__ == "__main__":
    main()
