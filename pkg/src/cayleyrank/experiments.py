"""Experiment sweeps: chain inequality, random cube-sequence success rates,
subring graph-vs-closure comparison, and the generating-set vs cube-sequence
gap search.

Each function returns a JSON-ready dict; the CLI prints them verbatim and the
scripts under scripts/ are thin wrappers.
"""

from __future__ import annotations

import math
import random
from itertools import combinations

from .core import balanced_parenthesization, cube_set, log2_ceil
from .corpus import (
    corpus_quasigroups,
    corpus_rings,
    corpus_structures,
    gen_random_latin_square,
)
from .membership import (
    subring_closure_with_one,
    subring_membership_graph,
)
from .ranks import EXHAUSTIVE_CUBE_LIMIT, magma_rank, quasigroup_cube_rank, SearchLimits
from .variants import check_chain


def chain_sweep(max_n: int = 10, variant_limit: int = 12) -> dict:
    """check_chain over the whole mixed corpus with n <= max_n."""
    rows = []
    violations = 0
    for name, table in corpus_structures(max_n):
        if table.n > max_n:
            continue
        report = check_chain(table, max_n=variant_limit)
        rows.append(
            {
                "structure": name,
                "n": table.n,
                "small": report.small,
                "lower": report.lower,
                "intermediate": report.intermediate,
                "upper": report.upper,
                "large": report.large,
                "ok": report.ok,
            }
        )
        if not report.ok:
            violations += 1
    return {
        "experiment": "chain-sweep",
        "max_n": max_n,
        "structures": len(rows),
        "violations": violations,
        "rows": rows,
    }


def cube_coverage_sweep(
    sizes: tuple[int, ...] = (8, 16, 32),
    c: float = 4.0,
    tries: int = 1000,
    instances: int = 40,
    rate_samples: int = 50,
    seed: int = 0,
) -> dict:
    """Success statistics for random cube sequences of length ceil(c * log2 n).

    For each order, `instances` random Latin squares are drawn; for each, up
    to `tries` random sequences are tested until one covers the square.  The
    first `rate_samples` sequences are always all evaluated so the per-
    sequence hit rate is estimated without stopping bias.
    """
    results = []
    for n in sizes:
        length = max(1, math.ceil(c * log2_ceil(n)))
        p = balanced_parenthesization(length)
        solved = 0
        tries_to_success = []
        rate_hits = 0
        rate_total = 0
        for inst in range(instances):
            square = gen_random_latin_square(n, seed=seed * 10_000 + inst)
            rng = random.Random(f"{seed}:{n}:{inst}")
            first_hit = None
            for attempt in range(1, tries + 1):
                if first_hit is not None and attempt > rate_samples:
                    break
                seq = tuple(rng.randrange(n) for _ in range(length))
                covers = cube_set(square, seq, p, budget=max(32, length)).is_full
                if attempt <= rate_samples:
                    rate_total += 1
                    rate_hits += int(covers)
                if covers and first_hit is None:
                    first_hit = attempt
            if first_hit is not None:
                solved += 1
                tries_to_success.append(first_hit)
        results.append(
            {
                "n": n,
                "sequence_length": length,
                "instances": instances,
                "solved_within_tries": solved,
                "solved_fraction": solved / instances,
                "max_tries": tries,
                "median_tries_to_success": (
                    sorted(tries_to_success)[len(tries_to_success) // 2] if tries_to_success else None
                ),
                "per_sequence_hit_rate": rate_hits / rate_total if rate_total else None,
            }
        )
    return {
        "experiment": "cube-coverage-sweep",
        "c": c,
        "seed": seed,
        "rows": results,
    }


def subring_compare(
    max_n: int = 16,
    exhaustive_limit: int = 8,
    samples: int = 200,
    seed: int = 0,
    max_report: int = 10,
) -> dict:
    """Compare graph reachability against the with-one closure oracle.

    Rings of order up to exhaustive_limit are checked on every generator
    subset; larger rings on `samples` seeded random subsets.  Each
    disagreement is recorded as a counterexample (set, element, both
    verdicts).  The report is produced even when everything agrees.
    """
    rows = []
    total_disagreements = 0
    for name, ring in corpus_rings(max_n):
        n = ring.n
        if n <= exhaustive_limit:
            subsets = [list(c) for size in range(n + 1) for c in combinations(range(n), size)]
            mode = "exhaustive"
        else:
            rng = random.Random(f"{seed}:{name}")
            subsets = []
            for _ in range(samples):
                size = rng.randrange(n + 1)
                subsets.append(sorted(rng.sample(range(n), size)))
            mode = "sampled"
        queries = 0
        disagreements = []
        for s in subsets:
            oracle = subring_closure_with_one(ring, s)
            for h in range(n):
                queries += 1
                graph = subring_membership_graph(ring, h, s)
                if graph != (h in oracle):
                    disagreements.append(
                        {"generators": list(s), "element": h, "graph": graph, "with_one_closure": h in oracle}
                    )
        total_disagreements += len(disagreements)
        rows.append(
            {
                "ring": name,
                "n": n,
                "mode": mode,
                "queries": queries,
                "disagreements": len(disagreements),
                "counterexamples": disagreements[:max_report],
            }
        )
    return {
        "experiment": "subring-compare",
        "max_n": max_n,
        "total_disagreements": total_disagreements,
        "agreement": total_disagreements == 0,
        "rows": rows,
    }


def cube_gap_search(max_n: int = 5, extra_latin_seeds: tuple[int, ...] = (0, 1, 2, 3)) -> dict:
    """Search small quasigroups for a generating set strictly smaller than the
    minimum cube generating sequence.

    Reports the plain (set) rank next to the exact cube rank for every
    quasigroup scanned; rows with gap=True are witnesses.  No value is
    asserted: this is measurement.
    """
    seen = set()
    tables = []
    for name, t in corpus_quasigroups(max_n):
        if t.n <= max_n and t.rows not in seen:
            seen.add(t.rows)
            tables.append((name, t))
    for n in range(3, max_n + 1):
        for s in extra_latin_seeds:
            t = gen_random_latin_square(n, seed=100 + s)
            if t.rows not in seen:
                seen.add(t.rows)
                tables.append((f"latin-{n}-x{s}", t))
    rows = []
    gaps = 0
    for name, t in tables:
        if t.n > EXHAUSTIVE_CUBE_LIMIT:
            continue
        set_rank = magma_rank(t, SearchLimits(max_subset_size=t.n)).rank
        cube = quasigroup_cube_rank(t)
        assert set_rank is not None and cube.rank is not None
        gap = set_rank < cube.rank
        gaps += int(gap)
        rows.append(
            {
                "structure": name,
                "n": t.n,
                "set_rank": set_rank,
                "cube_rank": cube.rank,
                "gap": gap,
            }
        )
    return {
        "experiment": "cube-gap-search",
        "max_n": max_n,
        "structures": len(rows),
        "gap_witnesses": gaps,
        "rows": rows,
    }
