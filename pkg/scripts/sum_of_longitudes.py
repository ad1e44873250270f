#!/usr/bin/env python3
"""Is the sum of all longitudes zero in the module?

Runs the membership search on the classical multi-component fixtures and on
random classical-move descendants of them, then prints a table. Outcomes
other than ZERO are flagged for manual review; they are search limits, not
disproofs.
"""
import argparse
import random

from enhanced_alexander.cli import sum_longitudes_result
from enhanced_alexander.fixtures import CLASSICAL, GAUSS, fixture
from enhanced_alexander.modalg import default_degree_bound
from enhanced_alexander.moves import random_equivalent


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--descendants", type=int, default=12)
    ap.add_argument("--moves", type=int, default=10)
    ap.add_argument("--seed", type=int, default=10)
    ap.add_argument("--include-virtual", action="store_true")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    names = [n for n in GAUSS if args.include_virtual or n in CLASSICAL]
    cases = [(n, fixture(n)) for n in names]
    for k in range(args.descendants):
        name = rng.choice(CLASSICAL)
        d, _ = random_equivalent(fixture(name), args.moves, rng.randrange(2**31))
        cases.append((f"{name}+{k}", d))
    for label, d in cases:
        res = sum_longitudes_result(d, default_degree_bound(d))
        flag = "" if res["result"] == "ZERO" else "  <- manual review"
        print(f"{label:20s} mu={d.mu} crossings={d.n_crossings:3d} {res['result']}{flag}")


if __name__ == "__main__":
    main()
