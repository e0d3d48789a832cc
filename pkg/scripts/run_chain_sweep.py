#!/usr/bin/env python3
"""Sweep the five-rank chain inequality over the mixed corpus and print the table."""

import argparse
import json

from cayleyrank.experiments import chain_sweep


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=10)
    args = parser.parse_args()
    print(json.dumps(chain_sweep(max_n=args.max_n), indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
