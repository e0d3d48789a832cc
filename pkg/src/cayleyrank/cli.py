"""Command-line front end.

Every invocation prints exactly one JSON document.  Exit codes: 0 for a
definitive answer, 2 when a bounded search ended with the `exhausted`
verdict, 1 for input or usage errors.  Randomized commands take --seed
(default 0, echoed in the output).  --threads is accepted as a hint and
deliberately excluded from the echoed payload, so outputs are byte-identical
across thread settings.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import experiments, tableio
from .core import (
    BudgetError,
    CayleyTable,
    Decision,
    ElementSet,
    InputError,
    Parenthesization,
    RingTable,
    classify,
    validate_ring,
)
from .corpus import (
    gen_cyclic,
    gen_direct_product,
    gen_elementary_abelian,
    gen_field_gf4,
    gen_paper_quasigroup,
    gen_random_latin_square,
    gen_right_zero,
    gen_ring_boolean_cube,
    gen_ring_modular,
    gen_shuffled,
)
from .iso import quasigroup_isomorphic
from .membership import (
    bounded_subquasigroup_membership,
    submagma_membership,
    subring_membership,
    subring_membership_graph,
    subgroup_membership,
    subsemigroup_membership,
)
from .ranks import (
    SearchLimits,
    magma_rank,
    group_rank,
    membership_via_rank,
    quasigroup_cube_rank,
    quasigroup_rank_decision,
    rank_decision,
    ring_rank,
)
from .variants import rank_variant

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_EXHAUSTED = 2


def _jsonable(value):
    if isinstance(value, ElementSet):
        return value.members()
    if isinstance(value, Parenthesization):
        return value.to_nested()
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _emit(payload: dict, out) -> None:
    print(json.dumps(_jsonable(payload), indent=2, sort_keys=True), file=out)


def _load_table(path: str) -> tableio.LoadedTable:
    loaded = tableio.load(path)
    if not isinstance(loaded, tableio.LoadedTable):
        raise InputError(f"{path} holds a ring, expected a single table")
    return loaded

def _load_ring(path: str) -> RingTable:
    loaded = tableio.load(path)
    if not isinstance(loaded, tableio.LoadedRing):
        raise InputError(f"{path} holds a single table, expected a ring")
    return validate_ring(loaded.add, loaded.mul)


def _parse_gens(raw: str, n: int) -> list[int]:
    if raw.strip() == "":
        return []
    try:
        gens = [int(part) for part in raw.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"bad generator list {raw!r}") from exc
    for g in gens:
        if not (0 <= g < n):
            raise InputError(f"generator {g} out of range 0..{n - 1}")
    return gens


def cmd_classify(args) -> tuple[dict, int]:
    loaded = _load_table(args.file)
    kind = classify(loaded.table)
    payload = {
        "command": "classify",
        "file_hint": loaded.hint,
        "n": loaded.table.n,
        "kind": kind.kind,
        "flags": {
            "associative": kind.is_associative,
            "latin_square": kind.is_latin_square,
            "left_identity": kind.has_left_identity,
            "right_identity": kind.has_right_identity,
            "two_sided_identity": kind.has_two_sided_identity,
            "inverses": kind.has_inverses,
        },
    }
    return payload, EXIT_OK


def _decision_fields(decision: Decision) -> tuple[dict, int]:
    if decision.exhausted:
        return (
            {"verdict": "exhausted", "candidates_examined": decision.examined, "note": decision.note},
            EXIT_EXHAUSTED,
        )
    fields = {"verdict": decision.truth, "candidates_examined": decision.examined}
    if decision.witness is not None:
        fields["witness"] = decision.witness
    return fields, EXIT_OK


def cmd_rank(args) -> tuple[dict, int]:
    loaded = _load_table(args.file)
    t = loaded.table
    payload: dict = {
        "command": "rank",
        "variant": args.variant,
        "n": t.n,
        "seed": args.seed,
    }
    limits = SearchLimits() if args.budget is None else SearchLimits(max_candidates=args.budget, max_subset_size=t.n)
    if args.k is not None:
        if args.variant == "cube":
            decision = quasigroup_rank_decision(t, args.k, seed=args.seed, budget=args.budget)
        elif args.variant == "lower":
            decision = rank_decision(t, args.k, limits)
        else:
            value = rank_variant(t, args.variant)
            truth = value <= args.k if args.variant == "large" else value >= args.k
            decision = Decision(truth, examined=0)
        payload["k"] = args.k
        fields, code = _decision_fields(decision)
        payload.update(fields)
        return payload, code
    if args.variant == "cube":
        report = quasigroup_cube_rank(t, seed=args.seed, budget=args.budget)
        payload.update(
            {
                "rank": report.rank,
                "method": report.method,
                "exact": report.exact,
                "candidates_examined": report.candidates_examined,
            }
        )
        if report.exhausted:
            payload["verdict"] = "exhausted"
            return payload, EXIT_EXHAUSTED
        seq, tree = report.witness
        payload["witness"] = {"sequence": list(seq), "parenthesization": tree}
        return payload, EXIT_OK
    if args.variant == "lower":
        kind = classify(t)
        if kind.kind == "group":
            report = group_rank(t)
        else:
            report = magma_rank(t, limits)
        payload.update(
            {
                "method": report.method,
                "exact": report.exact,
                "candidates_examined": report.candidates_examined,
            }
        )
        if report.exhausted:
            payload["verdict"] = "exhausted"
            payload["rank"] = None
            return payload, EXIT_EXHAUSTED
        payload["rank"] = report.rank
        payload["witness"] = report.witness
        return payload, EXIT_OK
    payload["rank"] = rank_variant(t, args.variant)
    payload["method"] = "exhaustive"
    return payload, EXIT_OK


def cmd_member(args) -> tuple[dict, int]:
    loaded = tableio.load(args.file)
    payload: dict = {"command": "member", "algo": args.algo, "target": args.target}
    if isinstance(loaded, tableio.LoadedRing):
        ring = validate_ring(loaded.add, loaded.mul)
        gens = _parse_gens(args.gens, ring.n)
        payload["generators"] = gens
        if args.algo == "closure":
            payload["verdict"] = subring_membership(ring, args.target, gens)
        elif args.algo == "graph":
            payload["verdict"] = subring_membership_graph(ring, args.target, gens)
        else:
            raise InputError(f"algo {args.algo!r} does not apply to rings")
        return payload, EXIT_OK
    t = loaded.table
    gens = _parse_gens(args.gens, t.n)
    payload["generators"] = gens
    if args.algo == "closure":
        kind = classify(t)
        if kind.kind == "group":
            payload["verdict"] = subgroup_membership(t, args.target, gens)
        elif kind.is_associative:
            payload["verdict"] = subsemigroup_membership(t, args.target, gens)
        else:
            payload["verdict"] = submagma_membership(t, args.target, gens)
        return payload, EXIT_OK
    if args.algo == "via-rank":
        payload["verdict"] = membership_via_rank(t, args.target, gens)
        return payload, EXIT_OK
    if args.algo == "cube":
        k = args.k if args.k is not None else t.n
        d = args.depth if args.depth is not None else t.n
        decision = bounded_subquasigroup_membership(t, args.target, gens, k, d, budget=args.budget)
        payload["k"] = k
        payload["d"] = d
        fields, code = _decision_fields(decision)
        if "witness" in fields:
            seq, tree = fields["witness"]
            fields["witness"] = {"sequence": list(seq), "parenthesization": tree}
        payload.update(fields)
        return payload, code
    raise InputError(f"algo {args.algo!r} does not apply to plain tables")


def cmd_ring_rank(args) -> tuple[dict, int]:
    ring = _load_ring(args.file)
    report = ring_rank(ring)
    payload = {
        "command": "ring-rank",
        "n": ring.n,
        "rank": report.rank,
        "witness": report.witness,
        "additive_group_rank": report.additive_group_rank,
        "multiplicative_monoid_rank": report.multiplicative_monoid_rank,
        "candidates_examined": report.candidates_examined,
    }
    return payload, EXIT_OK


def cmd_iso(args) -> tuple[dict, int]:
    g = _load_table(args.file_g).table
    h = _load_table(args.file_h).table
    verdict = quasigroup_isomorphic(g, h, mode=args.mode, budget=args.budget, seed=args.seed)
    payload: dict = {
        "command": "iso",
        "mode": args.mode,
        "result": verdict.result,
        "reason": verdict.reason,
        "candidates_examined": verdict.candidates_examined,
        "seed": args.seed,
    }
    if verdict.mapping is not None:
        payload["mapping"] = list(verdict.mapping)
    if verdict.certificate is not None:
        g_seq, h_seq, tree = verdict.certificate
        payload["certificate"] = {
            "sequence_g": list(g_seq),
            "sequence_h": list(h_seq),
            "parenthesization": tree,
        }
    return payload, EXIT_EXHAUSTED if verdict.result == "exhausted" else EXIT_OK


_GENERATE_HINTS = {
    "cyclic": "group",
    "elementary-abelian": "group",
    "right-zero": "semigroup",
    "paper-quasigroup": "quasigroup",
    "latin": "quasigroup",
    "product": "magma",
    "shuffled": "magma",
}


def _build_family(args) -> tuple[str, object]:
    fam = args.family
    params = args.params
    def int_params(count: int) -> list[int]:
        if len(params) != count:
            raise InputError(f"family {fam!r} takes {count} parameter(s), got {len(params)}")
        try:
            return [int(p) for p in params]
        except ValueError as exc:
            raise InputError(f"family {fam!r} needs integer parameters, got {params}") from exc

    if fam == "cyclic":
        return "group", gen_cyclic(*int_params(1))
    if fam == "elementary-abelian":
        return "group", gen_elementary_abelian(*int_params(1))
    if fam == "right-zero":
        return "semigroup", gen_right_zero(*int_params(1))
    if fam == "paper-quasigroup":
        int_params(0)
        return "quasigroup", gen_paper_quasigroup()
    if fam == "latin":
        return "quasigroup", gen_random_latin_square(int_params(1)[0], seed=args.seed)
    if fam == "product":
        if len(params) != 2:
            raise InputError("family 'product' takes two table file paths")
        t1 = _load_table(params[0]).table
        t2 = _load_table(params[1]).table
        return "magma", gen_direct_product(t1, t2)
    if fam == "shuffled":
        if len(params) != 1:
            raise InputError("family 'shuffled' takes one table file path")
        loaded = _load_table(params[0])
        return loaded.hint, gen_shuffled(loaded.table, seed=args.seed)
    if fam == "ring-modular":
        return "ring", gen_ring_modular(*int_params(1))
    if fam == "ring-boolean-cube":
        return "ring", gen_ring_boolean_cube(*int_params(1))
    if fam == "gf4":
        int_params(0)
        return "ring", gen_field_gf4()
    raise InputError(f"unknown family {fam!r}")


def cmd_generate(args) -> tuple[dict, int]:
    hint, built = _build_family(args)
    comment = f"generated: {args.family} {' '.join(args.params)} seed={args.seed}".rstrip()
    if isinstance(built, RingTable):
        text = tableio.format_ring(built.add, built.mul, comment=comment)
        n = built.n
    else:
        assert isinstance(built, CayleyTable)
        text = tableio.format_table(built, hint=hint, comment=comment)
        n = built.n
    payload: dict = {
        "command": "generate",
        "family": args.family,
        "params": list(args.params),
        "n": n,
        "seed": args.seed,
    }
    if args.out:
        tableio.save(args.out, text)
        payload["written"] = args.out
    else:
        payload["text"] = text
    return payload, EXIT_OK


def cmd_experiment(args) -> tuple[dict, int]:
    name = args.name
    if name == "chain-sweep":
        payload = experiments.chain_sweep(max_n=args.max_n or 10)
    elif name == "cube-coverage":
        sizes = tuple(int(s) for s in (args.sizes or "8,16,32").split(","))
        payload = experiments.cube_coverage_sweep(
            sizes=sizes,
            c=args.c,
            tries=args.tries,
            instances=args.instances,
            seed=args.seed,
        )
    elif name == "subring-compare":
        payload = experiments.subring_compare(max_n=args.max_n or 16, seed=args.seed)
    elif name == "cube-gap":
        payload = experiments.cube_gap_search(max_n=args.max_n or 5)
    else:
        raise InputError(f"unknown experiment {name!r}")
    payload["command"] = "experiment"
    payload["seed"] = args.seed
    return payload, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleyrank",
        description="Classify finite algebraic structures given as Cayley tables and "
        "compute membership, rank and isomorphism questions exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seeded: bool = True):
        if seeded:
            p.add_argument("--seed", type=int, default=0, help="random seed (echoed in output)")
        p.add_argument("--budget", type=int, default=None, help="search budget override")
        p.add_argument("--threads", type=int, default=1, help="worker hint; results are identical for any value")

    p = sub.add_parser("classify", help="print structure flags and kind label")
    p.add_argument("file")
    common(p, seeded=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("rank", help="rank of the structure in a file")
    p.add_argument("file")
    p.add_argument("--variant", choices=["lower", "upper", "intermediate", "small", "large", "cube"], default="lower")
    p.add_argument("--k", type=int, default=None, help="decide against a bound instead of computing the value")
    common(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("member", help="membership of a target in the closure of generators")
    p.add_argument("file")
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--gens", default="", help="comma- or space-separated generator indices")
    p.add_argument("--algo", choices=["closure", "cube", "graph", "via-rank"], default="closure")
    p.add_argument("--k", type=int, default=None, help="sequence length bound for --algo cube")
    p.add_argument("--depth", type=int, default=None, help="parenthesization depth bound for --algo cube")
    common(p, seeded=False)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("ring-rank", help="ring rank plus the additive/multiplicative side ranks")
    p.add_argument("file")
    common(p, seeded=False)
    p.set_defaults(func=cmd_ring_rank)

    p = sub.add_parser("iso", help="quasigroup isomorphism")
    p.add_argument("file_g")
    p.add_argument("file_h")
    p.add_argument("--mode", choices=["cube", "brute"], default="cube")
    common(p)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("generate", help="write a corpus structure file")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--out", default=None, help="output path (default: embed text in the JSON payload)")
    common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("experiment", help="run an experiment sweep")
    p.add_argument("name", choices=["chain-sweep", "cube-coverage", "subring-compare", "cube-gap"])
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--sizes", default=None, help="comma-separated orders for cube-coverage")
    p.add_argument("--c", type=float, default=4.0)
    p.add_argument("--tries", type=int, default=1000)
    p.add_argument("--instances", type=int, default=40)
    common(p)
    p.set_defaults(func=cmd_experiment)

    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code:
            _emit({"error": "usage error; see stderr"}, out)
            return EXIT_ERROR
        return EXIT_OK
    if getattr(args, "threads", 1) < 1:
        _emit({"error": "--threads must be at least 1"}, out)
        return EXIT_ERROR
    try:
        payload, code = args.func(args)
    except (InputError, BudgetError, OSError) as exc:
        _emit({"command": args.command, "error": str(exc)}, out)
        return EXIT_ERROR
    _emit(payload, out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
