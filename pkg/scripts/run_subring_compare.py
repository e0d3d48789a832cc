#!/usr/bin/env python3
"""Compare subring graph reachability against the with-one closure oracle over
the ring corpus, recording every counterexample."""

import argparse
import json

from cayleyrank.experiments import subring_compare


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=16)
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    doc = subring_compare(max_n=args.max_n, samples=args.samples, seed=args.seed)
    print(json.dumps(doc, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
