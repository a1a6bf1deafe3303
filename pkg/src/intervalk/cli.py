"""Command-line front end.

Exit codes: 0 accept / ok, 1 reject / violation, 2 input error,
3 recognizer and brute-force oracle disagree.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .graph import GraphFormatError, gen_random, read_graph, render_graph
from .oracle import ORDERING_BOUND, InstanceTooLarge, brute_force_recognize
from .pairdigraph import PairDigraph
from .recognizer import recognize
from .representation import NotAPermutation, verify_ordering

EXIT_ACCEPT, EXIT_REJECT, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path):
    try:
        return read_graph(path)
    except (OSError, GraphFormatError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _plain(outcome) -> str:
    if outcome.accepted:
        lines = ["ACCEPT", "ordering " + " ".join(map(str, outcome.ordering))]
        lines += [f"{v} {l} {r}" for v, (l, r) in enumerate(outcome.intervals)]
    else:
        ev = outcome.evidence
        lines = ["REJECT", f"evidence {ev.kind}"]
        lines += ["circuit " + " ".join(f"({a},{b})" for a, b in c) for c in ev.circuits]
        if ev.triple is not None:
            lines.append("triple " + " ".join(map(str, ev.triple)))
    return "\n".join(lines)


def cmd_recognize(args) -> int:
    G, H = _load(args.path)
    trace = None
    if args.trace:
        trace = lambda line: print(line, file=sys.stderr)
    outcome = recognize(G, H, trace=trace, rules=args.rules)
    doc = outcome.to_dict()
    code = EXIT_ACCEPT if outcome.accepted else EXIT_REJECT
    if args.oracle:
        try:
            found = brute_force_recognize(G, H, bound=args.bound)
        except InstanceTooLarge as exc:
            raise InputError(str(exc)) from None
        doc["oracle"] = "accept" if found is not None else "reject"
        if (found is not None) != outcome.accepted:
            code = EXIT_DISAGREE
    if args.audit:
        other = recognize(G, H, rules="literal_h" if args.rules == "unified" else "unified")
        doc["audit"] = {"other_rules_verdict": other.verdict, "differs": other.verdict != outcome.verdict}
    if args.plain:
        print(_plain(outcome))
        if "oracle" in doc:
            print(f"oracle {doc['oracle']}")
    else:
        print(json.dumps(doc, sort_keys=True))
    return code


def cmd_intervals(args) -> int:
    G, H = _load(args.path)
    outcome = recognize(G, H)
    if not outcome.accepted:
        print(f"REJECT {outcome.evidence.kind}", file=sys.stderr)
        return EXIT_REJECT
    for v, (l, r) in enumerate(outcome.intervals):
        print(f"{v} {l} {r}")
    return EXIT_ACCEPT


def cmd_verify(args) -> int:
    G, H = _load(args.path)
    try:
        with open(args.ordering) as fh:
            ordering = [int(x) for x in fh.read().split()]
        bad = verify_ordering(G, H, ordering)
    except (OSError, ValueError) as exc:
        if isinstance(exc, NotAPermutation) or not isinstance(exc, OSError):
            raise InputError(f"{args.ordering}: {exc}") from None
        raise InputError(str(exc)) from None
    if bad is None:
        print("OK")
        return EXIT_ACCEPT
    print(f"VIOLATION {bad.a} {bad.b} {bad.c} {bad.tag}")
    return EXIT_REJECT


def cmd_oracle(args) -> int:
    G, H = _load(args.path)
    try:
        found = brute_force_recognize(G, H, bound=args.bound)
    except InstanceTooLarge as exc:
        raise InputError(str(exc)) from None
    if found is None:
        print("REJECT")
        return EXIT_REJECT
    print("ACCEPT " + " ".join(map(str, found)))
    return EXIT_ACCEPT


def cmd_gen(args) -> int:
    try:
        G = gen_random(args.n, args.k, args.p, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(render_graph(G))
    return EXIT_ACCEPT


def cmd_dump_gplus(args) -> int:
    G, H = _load(args.path)
    sys.stdout.write(PairDigraph(G, H, rules=args.rules).dump())
    return EXIT_ACCEPT


def _bench_one(job):
    n, degree, seed, repeats = job
    p = min(1.0, degree / max(1, n // 2))
    G = gen_random(n, 2, p, seed)
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        outcome = recognize(G)
        times.append(time.perf_counter() - t0)
    return n, G.m, statistics.median(times), outcome.verdict


def bench(sizes, degree=4.0, seed=0, repeats=3, jobs=1):
    """Time ``recognize`` on random bipartite graphs of fixed average degree.

    Returns rows ``(n, m, seconds, verdict)`` and the least-squares slope of
    log(seconds) against log(n*m) (None with fewer than two usable rows).
    """
    work = [(n, degree, seed + i, repeats) for i, n in enumerate(sizes)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_bench_one, work))
    else:
        rows = [_bench_one(job) for job in work]
    pts = [(math.log(n * m), math.log(t)) for n, m, t, _ in rows if m > 0 and t > 0]
    exponent = None
    if len(pts) >= 2 and len({x for x, _ in pts}) > 1:
        exponent = statistics.linear_regression([x for x, _ in pts], [y for _, y in pts]).slope
    return rows, exponent


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()] if args.sizes else []
    rows, exponent = bench(sizes, args.degree, args.seed, args.repeats, args.jobs)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["n", "m", "nm", "seconds", "verdict"])
    for n, m, t, verdict in rows:
        out.writerow([n, m, n * m, f"{t:.6f}", verdict])
    if exponent is not None:
        print(f"# exponent {exponent:.3f}")
    return EXIT_ACCEPT


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="intervalk", description="Interval k-graph recognition")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide membership, print JSON outcome")
    p.add_argument("path")
    p.add_argument("--trace", action="store_true", help="log decided-pair events on stderr")
    p.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    p.add_argument("--bound", type=int, default=ORDERING_BOUND)
    p.add_argument("--rules", choices=["unified", "literal_h"], default="unified")
    p.add_argument("--audit", action="store_true", help="also run the other arc rules")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--plain", action="store_true")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("intervals", help="print '<id> <l> <r>' per vertex")
    p.add_argument("path")
    p.set_defaults(func=cmd_intervals)

    p = sub.add_parser("verify", help="check an ordering file for forbidden patterns")
    p.add_argument("path")
    p.add_argument("ordering")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force ordering search")
    p.add_argument("path")
    p.add_argument("--bound", type=int, default=ORDERING_BOUND)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="random colored graph in the text format")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("p", type=float)
    p.add_argument("seed", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("dump-gplus", help="arcs and strong components of the pair digraph")
    p.add_argument("path")
    p.add_argument("--rules", choices=["unified", "literal_h"], default="unified")
    p.set_defaults(func=cmd_dump_gplus)

    p = sub.add_parser("bench", help="timing table on random bipartite graphs (CSV)")
    p.add_argument("--sizes", default="50,100,200,400")
    p.add_argument("--degree", type=float, default=4.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
