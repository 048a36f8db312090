"""Batch command line interface.

Four subcommands: ``gen`` writes instances as pcdg text, ``dfs`` runs the
traversal and reports the forest (tsv or json, optionally with operation
counters), ``check`` compares the traversal against the brute-force oracle
over a file or a stream of seeded random instances, and ``bench`` times
instrumented runs across instance sizes and reports steps per unit of
input size.

Exit codes: 0 success, 1 check failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .dfs import InvariantViolation, pc_dfs_forest
from .oracle import (
    GENERATOR_KINDS,
    GeneratorSpec,
    SplitMix64,
    forests_equal,
    generate,
    standard_dfs,
    trial_specs,
)
from .pcdg import ParseError, parse, serialize
from .pcgraph import PcGraphError, materialize

BENCH_KINDS = ("complete-complement", "random", "path")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def run_gen(args) -> int:
    spec = GeneratorSpec(
        kind=args.kind,
        n=args.n,
        arc_count=args.arc_count,
        density=args.density,
        complement_probability=args.complement_prob,
        seed=args.seed,
    )
    text = serialize(generate(spec))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def run_dfs(args) -> int:
    g = parse(_read_text(args.file))
    forest, ops = pc_dfs_forest(g, instrument=args.count_ops)
    if args.format == "json":
        payload = {
            "n": g.n,
            "parent": forest.parent[1:],
            "pre": forest.pre[1:],
            "post": forest.post[1:],
            "roots": forest.roots,
        }
        if args.count_ops:
            payload["counters"] = _counter_payload(ops, g.n, g.m_tilde)
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        lines = ["vertex\tparent\tpre\tpost"]
        for v in range(1, g.n + 1):
            lines.append(
                f"{v}\t{forest.parent[v]}\t{forest.pre[v]}\t{forest.post[v]}")
        if args.count_ops:
            for key, value in _counter_payload(ops, g.n, g.m_tilde).items():
                lines.append(f"# {key} {value}")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _counter_payload(ops, n: int, m_tilde: int) -> dict:
    return {
        "calls": ops.calls,
        "fwd_steps": ops.fwd_steps,
        "back_steps": ops.back_steps,
        "deletions": ops.deletions,
        "u_removals": ops.u_removals,
        "restarts": ops.restarts,
        "total": ops.total(),
        "ratio": ops.ratio(n, m_tilde),
    }


def _check_one(g) -> tuple[bool, str]:
    try:
        forest, _ = pc_dfs_forest(g, instrument=False, debug_checks=True)
    except InvariantViolation as exc:
        return False, f"invariant violation: {exc}"
    return forests_equal(forest, standard_dfs(materialize(g)))


def run_check(args) -> int:
    if args.file:
        g = parse(_read_text(args.file))
        ok, diagnostic = _check_one(g)
        if ok:
            print("check: instance matches the oracle")
            return 0
        print(f"check FAILED: {diagnostic}", file=sys.stderr)
        sys.stderr.write(serialize(g))
        return 1

    specs = trial_specs(args.seed, args.trials, args.max_n,
                        args.complement_prob)
    for i, spec in enumerate(specs):
        g = generate(spec)
        ok, diagnostic = _check_one(g)
        if not ok:
            print(f"check FAILED at trial {i}: {diagnostic}",
                  file=sys.stderr)
            sys.stderr.write(serialize(g))
            return 1
    print(f"check: {args.trials}/{args.trials} instances match the oracle")
    return 0


def _bench_instance(kind: str, n: int, rng: SplitMix64, arcs_per_vertex: int,
                    complement_prob: float):
    if kind == "random":
        arc_count = min(arcs_per_vertex * n, n * (n - 1))
        return generate(GeneratorSpec(
            kind="random", n=n, arc_count=arc_count,
            complement_probability=complement_prob, seed=rng.next_u64()))
    return generate(GeneratorSpec(kind=kind, n=n))


def run_bench(args) -> int:
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    except ValueError:
        print(f"error: bad --sizes value {args.sizes!r}", file=sys.stderr)
        return 2
    if not sizes:
        print("error: --sizes is empty", file=sys.stderr)
        return 2
    rng = SplitMix64(args.seed)
    lines = ["n\tm_tilde\telapsed_s\tops\tratio"]
    for n in sizes:
        g = _bench_instance(args.kind, n, rng, args.arcs_per_vertex,
                            args.complement_prob)
        start = time.perf_counter()
        _, ops = pc_dfs_forest(g, instrument=True, debug_checks=False)
        elapsed = time.perf_counter() - start
        lines.append(f"{n}\t{g.m_tilde}\t{elapsed:.6f}\t{ops.total()}\t"
                     f"{ops.ratio(n, g.m_tilde):.4f}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcdfs",
        description="DFS on a digraph given its partially complemented "
                    "representation, in time linear in that representation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance as pcdg text")
    p.add_argument("--kind", required=True, choices=GENERATOR_KINDS)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--arc-count", type=int, default=None)
    p.add_argument("--density", type=float, default=None)
    p.add_argument("--complement-prob", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=run_gen)

    p = sub.add_parser("dfs", help="run the traversal on a pcdg file")
    p.add_argument("file", help="pcdg file, or - for stdin")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--count-ops", action="store_true")
    p.set_defaults(func=run_dfs)

    p = sub.add_parser(
        "check", help="compare the traversal against the brute-force oracle")
    p.add_argument("file", nargs="?", default=None,
                   help="pcdg file; omit to run seeded random trials")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=64)
    p.add_argument("--complement-prob", type=float, default=0.5)
    p.set_defaults(func=run_check)

    p = sub.add_parser("bench", help="time instrumented runs across sizes")
    p.add_argument("--kind", choices=BENCH_KINDS,
                   default="complete-complement")
    p.add_argument("--sizes", default="1024,4096,16384,65536")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--arcs-per-vertex", type=int, default=4)
    p.add_argument("--complement-prob", type=float, default=0.5)
    p.set_defaults(func=run_bench)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PcGraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
