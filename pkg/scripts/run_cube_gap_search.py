#!/usr/bin/env python3
"""Scan small quasigroups for generating sets strictly smaller than their
minimum cube generating sequence."""

import argparse
import json

from cayleyrank.experiments import cube_gap_search


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5)
    args = parser.parse_args()
    print(json.dumps(cube_gap_search(max_n=args.max_n), indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
