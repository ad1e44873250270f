#!/usr/bin/env python3
"""Invariance fuzz over every bundled fixture.

Applies random moves to each fixture, verifies each transport map and
compares invariant reports. Prints one summary line per fixture and exits
nonzero if any violation is found.
"""
import argparse
import json
import sys
import time

from enhanced_alexander.cli import Config, fuzz_diagram
from enhanced_alexander.fixtures import GAUSS, fixture


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--moves", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--welded", action="store_true")
    ap.add_argument("--dump", default=None, help="write violations as JSON")
    args = ap.parse_args()
    cfg = Config(trials=args.trials, moves=args.moves, seed=args.seed, welded=args.welded)
    violations = []
    for name in sorted(GAUSS):
        start = time.perf_counter()
        summary = fuzz_diagram(fixture(name), cfg)
        print(
            f"{name:16s} trials={summary.trials} moves={summary.moves} "
            f"violations={len(summary.violations)} time={time.perf_counter() - start:.1f}s"
        )
        violations += [dict(v, fixture=name) for v in summary.violations]
    if args.dump:
        with open(args.dump, "w", encoding="utf-8") as fh:
            json.dump(violations, fh, indent=2)
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
