"""Command-line front end: ``dompoly compute|verify|fixtures|bench``."""

from __future__ import annotations

import argparse
import csv
import json
import multiprocessing as mp
import sys
import time
from typing import Sequence

from . import fixtures as fx
from . import verify
from .graph import Graph, GraphError
from .graphio import ParseError, read_graph
from .solver import Solver, Strategy, compute

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

MAX_CORPUS_N = 9
BENCH_CAPS = {"blockchain": 12, "path": 63, "cycle": 63}
BENCH_METHODS = ("auto", "split", "vertex", "edge", "brute")
BLOCK_SIZE = 6


def _fail(message: str, code: int = EXIT_USAGE) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


# -- compute ------------------------------------------------------------------


def cmd_compute(args) -> int:
    try:
        g = read_graph(args.path)
        d = compute(g, Strategy(args.method))
    except ParseError as exc:
        return _fail(f"{args.path}: {exc}")
    except OSError as exc:
        return _fail(str(exc))
    except GraphError as exc:
        return _fail(str(exc))
    if args.format == "json":
        print(json.dumps({"n": g.n, "coefficients": [str(c) for c in d.coeffs or (0,)]}))
    else:
        print(d)
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def cmd_verify(args) -> int:
    unknown = [s for s in args.skip if s not in verify.IDENTITY_IDS]
    if unknown:
        return _fail(f"unknown identity id(s): {', '.join(unknown)}")
    if args.corpus is not None:
        if not 0 <= args.corpus <= MAX_CORPUS_N:
            return _fail(f"corpus bound must be between 0 and {MAX_CORPUS_N}")
        graphs = verify.corpus(args.corpus)
    else:
        try:
            g = read_graph(args.path)
        except ParseError as exc:
            return _fail(f"{args.path}: {exc}")
        except OSError as exc:
            return _fail(str(exc))
        if g.n > verify.SINGLE_GRAPH_MAX_N:
            return _fail(f"single-graph verification is limited to {verify.SINGLE_GRAPH_MAX_N} vertices")
        graphs = [g]
    report = verify.run_suite(graphs, skip=args.skip)
    print(f"graphs checked: {report.graphs}")
    for line in report.lines():
        print(line)
    if report.ok:
        return EXIT_OK
    print(f"failing identities: {', '.join(report.failing())}", file=sys.stderr)
    return EXIT_FAIL


# -- fixtures -----------------------------------------------------------------


def cmd_fixtures(args) -> int:
    ok = True
    for name, diff in fx.check_fixtures():
        if diff is None:
            print(f"PASS {name}")
            continue
        ok = False
        if diff[0] == "shape":
            print(f"FAIL {name}: shape {diff[1]} != stored {diff[2]}")
        else:
            r, c, got, want = diff
            print(f"FAIL {name}: first difference at ({r},{c}): generated {got}, stored {want}")
    # the stored inverse carries a different scale than its label says
    alt = fx.first_scaled_difference(
        fx.generated_d_pair_inverse(), fx.ENTRY_INVERSE_SCALE, fx.load_matrix(fx.D_PAIR_INVERSE)
    )
    verdict = "matches" if alt is None else "does not match"
    print(f"info {fx.D_PAIR_INVERSE}: x^2*(1+x)^4 * inverse {verdict} the stored entries")
    return EXIT_OK if ok else EXIT_FAIL


# -- bench --------------------------------------------------------------------


def block_chain(blocks: int, size: int = BLOCK_SIZE) -> Graph:
    """``blocks`` copies of K_size, consecutive copies sharing one vertex."""
    edges = []
    for b in range(blocks):
        first = b * (size - 1)
        members = range(first, first + size)
        edges += [(u, v) for u in members for v in members if u < v]
    return Graph.from_edges(blocks * (size - 1) + 1, edges)


def bench_graph(family: str, size: int) -> Graph:
    if family == "blockchain":
        return block_chain(size)
    if family == "path":
        return Graph.path(size)
    return Graph.cycle(size)


def _timed_run(g: Graph, method: str, out) -> None:
    solver = Solver(Strategy(method))
    sys.setrecursionlimit(20000)
    start = time.perf_counter()
    compute(g, solver=solver)
    out.put(((time.perf_counter() - start) * 1000.0, solver.memo_hits))


def run_with_timeout(g: Graph, method: str, timeout: float):
    """(wall ms, memo hits), or None if the method failed or ran out of time."""
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    out = ctx.Queue()
    proc = ctx.Process(target=_timed_run, args=(g, method, out), daemon=True)
    proc.start()
    proc.join(timeout)
    if proc.is_alive():
        proc.terminate()
        proc.join()
        return None
    if proc.exitcode != 0 or out.empty():
        return None
    return out.get()


def cmd_bench(args) -> int:
    cap = BENCH_CAPS[args.family]
    low = 1 if args.family == "blockchain" else (3 if args.family == "cycle" else 0)
    if not low <= args.size <= cap:
        return _fail(f"size for {args.family} must be between {low} and {cap}")
    g = bench_graph(args.family, args.size)
    methods = args.method or list(BENCH_METHODS)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["family", "n", "method", "wall-time-ms", "memo-hits"])
    for method in methods:
        if method == "brute" and g.n > 25:
            continue
        res = run_with_timeout(g, method, args.timeout)
        if res is None:
            print(f"note: {method} did not finish within {args.timeout:g}s", file=sys.stderr)
            continue
        ms, hits = res
        writer.writerow([args.family, g.n, method, f"{ms:.2f}", hits])
        sys.stdout.flush()
    return EXIT_OK


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dompoly", description="Exact domination polynomials of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="print D(G, x) for a graph file")
    c.add_argument("path")
    c.add_argument("--method", choices=[s.value for s in Strategy], default="auto")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="check every identity against brute force")
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("path", nargs="?")
    src.add_argument("--corpus", type=int, metavar="N")
    v.add_argument("--skip", action="append", default=[], metavar="ID",
                   help="identity id to leave out (repeatable)")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("fixtures", help="regenerate the stored matrices and diff them")
    f.set_defaults(func=cmd_fixtures)

    b = sub.add_parser("bench", help="time each method on a graph family, as CSV")
    b.add_argument("--family", choices=sorted(BENCH_CAPS), required=True)
    b.add_argument("--size", type=int, required=True)
    b.add_argument("--method", action="append", choices=BENCH_METHODS,
                   help="restrict to this method (repeatable)")
    b.add_argument("--timeout", type=float, default=10.0, help="seconds per method")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
