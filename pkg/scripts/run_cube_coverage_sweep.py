#!/usr/bin/env python3
"""Measure how often random cube sequences of length ceil(c * log2 n) cover a
random Latin square, per order and constant."""

import argparse
import json

from cayleyrank.experiments import cube_coverage_sweep


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="8,16,32")
    parser.add_argument("--c", type=float, default=4.0)
    parser.add_argument("--tries", type=int, default=1000)
    parser.add_argument("--instances", type=int, default=40)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = tuple(int(s) for s in args.sizes.split(","))
    doc = cube_coverage_sweep(
        sizes=sizes, c=args.c, tries=args.tries, instances=args.instances, seed=args.seed
    )
    print(json.dumps(doc, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
