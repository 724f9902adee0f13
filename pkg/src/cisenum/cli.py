"""Command-line front end: ``cisenum {enumerate,count,verify,bench,info}``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from . import _backend
from .baselines import DEFAULT_BRUTE_CAP, BruteForceCapExceeded, brute_force_enumerate, collect
from .graph import (
    Graph,
    GraphFormatError,
    connected_components,
    count_upper_bound,
    generate_graph,
    max_degree,
    read_graph,
)
from .kdelta import StopEnumeration, _drive

EXIT_OK, EXIT_FAIL, EXIT_ERROR, EXIT_TIMEOUT = 0, 1, 2, 3
ALGORITHMS = ("kdelta", "simple", "brute")
DEFAULT_TIME_LIMIT = 600.0


class UsageError(Exception):
    pass


def parse_k_range(text: str) -> list[int]:
    """``"5"``, ``"2..6"`` (inclusive) or ``"2,4,7"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            ks = list(range(int(lo), int(hi) + 1))
        else:
            ks = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"invalid k specification {text!r}") from None
    if not ks:
        raise UsageError(f"k specification {text!r} is empty")
    if min(ks) < 1:
        raise UsageError("k must be at least 1")
    return ks


@dataclass
class RunConfig:
    input: Optional[str]
    generate: Optional[str]
    format: str = "auto"
    ks: tuple[int, ...] = (3,)
    algorithms: tuple[str, ...] = ("kdelta",)
    mode: str = "sets"
    time_limit: float = DEFAULT_TIME_LIMIT
    include_sink_time: bool = False
    backend: str = "auto"

    def validate(self) -> None:
        if (self.input is None) == (self.generate is None):
            raise UsageError("give exactly one of an input file or --generate")
        if not self.time_limit > 0:
            raise UsageError("time limit must be positive")
        if not self.ks:
            raise UsageError("k range is empty")
        for a in self.algorithms:
            if a not in ALGORITHMS:
                raise UsageError(f"unknown algorithm {a!r}; choose from {', '.join(ALGORITHMS)}")

    def load_graph(self) -> Graph:
        if self.generate is not None:
            try:
                return generate_graph(self.generate)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        return read_graph(self.input, self.format)


@dataclass
class BenchRecord:
    graph: str
    n: int
    num_edges: int
    max_degree: int
    k: int
    algorithm: str
    solutions: int
    wall_time: float
    max_delay: float
    max_calls_between_outputs: int
    completed: bool

    FIELDS = ("graph", "n", "num_edges", "max_degree", "k", "algorithm", "solutions",
              "wall_time", "max_delay", "max_calls_between_outputs", "completed")

    def tsv(self) -> str:
        row = asdict(self)
        return "\t".join(f"{row[f]:.6f}" if isinstance(row[f], float) else str(row[f])
                         for f in self.FIELDS)


def _label_key(label):
    return (isinstance(label, str), label)


def format_solution(g: Graph, vertices) -> str:
    return " ".join(str(x) for x in sorted(g.to_labels(vertices), key=_label_key))


class DeadlineSink:
    """Forwards solutions and raises :class:`StopEnumeration` past a deadline."""

    def __init__(self, time_limit: float, forward=None, every: int = 256):
        self.deadline = time.perf_counter() + time_limit
        self.forward = forward
        self.mask = every - 1
        self.expired = False

    def __call__(self, sol, ordinal):
        if self.forward is not None:
            self.forward(sol, ordinal)
        if ordinal & self.mask == 0 and time.perf_counter() > self.deadline:
            self.expired = True
            raise StopEnumeration


def run_bench_cell(g: Graph, k: int, algorithm: str, backend: str, time_limit: float) -> BenchRecord:
    delta = max_degree(g) if g.n else 0
    if algorithm == "brute":
        start = time.perf_counter()
        try:
            sols = len(brute_force_enumerate(g, k))
            done = True
        except BruteForceCapExceeded:
            sols, done = 0, False
        return BenchRecord(g.name, g.n, g.num_edges, delta, k, algorithm, sols,
                           time.perf_counter() - start, 0.0, 0, done)
    sink = DeadlineSink(time_limit)
    stats = _drive(algorithm, g, k, sink, backend, True, False)
    return BenchRecord(g.name, g.n, g.num_edges, delta, k, algorithm, stats.solutions,
                       stats.wall_time, stats.max_delay, stats.max_calls_between_outputs,
                       not sink.expired)


# -- subcommands -------------------------------------------------------------

def cmd_enumerate(cfg: RunConfig, args) -> int:
    g = cfg.load_graph()
    k = cfg.ks[0]
    algo = cfg.algorithms[0]
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        if algo == "brute":
            sols = brute_force_enumerate(g, k, args.brute_cap)
            if cfg.mode == "sets":
                for s in sols:
                    out.write(format_solution(g, s) + "\n")
            elif cfg.mode == "count":
                out.write(f"{len(sols)}\n")
            return EXIT_OK
        write = None
        if cfg.mode == "sets":
            def write(sol, _):
                out.write(format_solution(g, sol) + "\n")
        sink = DeadlineSink(cfg.time_limit, write)
        stats = _drive(algo, g, k, sink, cfg.backend, True, cfg.include_sink_time)
        if cfg.mode == "count":
            out.write(f"{stats.solutions}\n")
        elif cfg.mode == "stats":
            out.write(json.dumps(stats.as_dict()) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    if sink.expired:
        print(f"time limit of {cfg.time_limit}s exceeded after {stats.solutions} solutions",
              file=sys.stderr)
        return EXIT_TIMEOUT
    return EXIT_OK


def cmd_count(cfg: RunConfig, args) -> int:
    g = cfg.load_graph()
    algo = cfg.algorithms[0]
    total = 0
    status = EXIT_OK
    for k in cfg.ks:
        if algo == "brute":
            c = len(brute_force_enumerate(g, k, args.brute_cap))
        else:
            sink = DeadlineSink(cfg.time_limit)
            c = _drive(algo, g, k, sink, cfg.backend, False, False).solutions
            if sink.expired:
                status = EXIT_TIMEOUT
        total += c
        print(c if len(cfg.ks) == 1 else f"{k}\t{c}")
    if len(cfg.ks) > 1:
        print(f"total\t{total}")
    return status


def cmd_verify(cfg: RunConfig, args) -> int:
    g = cfg.load_graph()
    failed = False
    for k in cfg.ks:
        try:
            oracle = brute_force_enumerate(g, k, args.brute_cap)
        except BruteForceCapExceeded as exc:
            print(f"k={k}: cannot verify: {exc}", file=sys.stderr)
            return EXIT_ERROR
        for algo in cfg.algorithms:
            if algo == "brute":
                continue
            try:
                got, stats = collect(algo, g, k, cfg.backend)
            except AssertionError as exc:
                print(f"FAIL k={k} {algo}: {exc}")
                failed = True
                continue
            diff = oracle.first_difference(got)
            if diff is not None:
                tag, s = diff
                print(f"FAIL k={k} {algo}: {tag} set {format_solution(g, s)}")
                failed = True
            elif algo == "kdelta" and got.sets and stats.max_calls_between_outputs > k:
                print(f"FAIL k={k} {algo}: {stats.max_calls_between_outputs} calls between outputs > k")
                failed = True
            else:
                print(f"PASS k={k} {algo}: {len(got)} sets")
    print("FAIL" if failed else "PASS")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_bench(cfg: RunConfig, args) -> int:
    g = cfg.load_graph()
    if not g.name:
        g = Graph(g.n, g.offsets, g.neighbors, g.external_labels, g.report, "graph")
    cells = [(k, a) for k in cfg.ks for a in cfg.algorithms]
    tsv = open(args.tsv, "w") if args.tsv else sys.stdout
    jsonl = open(args.jsonl, "w") if args.jsonl else None
    records: list[BenchRecord] = []
    try:
        tsv.write("\t".join(BenchRecord.FIELDS) + "\n")
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                futures = [pool.submit(run_bench_cell, g, k, a, cfg.backend, cfg.time_limit)
                           for k, a in cells]
                results = (f.result() for f in futures)
                _write_records(results, tsv, jsonl, records)
        else:
            results = (run_bench_cell(g, k, a, cfg.backend, cfg.time_limit) for k, a in cells)
            _write_records(results, tsv, jsonl, records)
    finally:
        if tsv is not sys.stdout:
            tsv.close()
        if jsonl is not None:
            jsonl.close()
    for algo in cfg.algorithms:
        mine = [r for r in records if r.algorithm == algo]
        done = [r for r in mine if r.completed]
        ks = ",".join(str(r.k) for r in done)
        print(f"# cumulative {algo}: {sum(r.wall_time for r in done):.6f}s over k={ks or '-'}",
              file=sys.stderr)
    by_k: dict[int, set[int]] = {}
    for r in records:
        if r.completed:
            by_k.setdefault(r.k, set()).add(r.solutions)
    if any(len(v) > 1 for v in by_k.values()):
        print("# inconsistent solution counts across algorithms", file=sys.stderr)
        return EXIT_FAIL
    if not all(r.completed for r in records):
        return EXIT_TIMEOUT
    return EXIT_OK


def _write_records(results, tsv, jsonl, records):
    for rec in results:
        records.append(rec)
        tsv.write(rec.tsv() + "\n")
        tsv.flush()
        if jsonl is not None:
            jsonl.write(json.dumps({f: getattr(rec, f) for f in BenchRecord.FIELDS}) + "\n")


def cmd_info(cfg: RunConfig, args) -> int:
    g = cfg.load_graph()
    comps = connected_components(g)
    delta = max_degree(g)
    print(f"n\t{g.n}")
    print(f"edges\t{g.num_edges}")
    print(f"max_degree\t{delta}")
    print(f"components\t{len(comps)}")
    print("component_sizes\t" + " ".join(str(len(c)) for c in sorted(comps, key=len, reverse=True)))
    if g.report.dropped:
        print(f"dropped\t{g.report.self_loops} self-loops, {g.report.duplicates} duplicate edges")
    if args.k:
        for k in cfg.ks:
            print(f"upper_bound_k{k}\t{count_upper_bound(g.n, delta, k):.6g}")
    return EXIT_OK


# -- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="edge list or Matrix Market file")
    common.add_argument("--generate", metavar="SPEC",
                        help="synthetic graph: path:N, cycle:N, star:LEAVES, clique:N, random:N:P:SEED")
    common.add_argument("--format", default="auto", choices=["auto", "edge_list", "matrix_market"])
    common.add_argument("--backend", default="auto", choices=["auto", "python", "compiled"])
    common.add_argument("--time-limit", type=float, default=DEFAULT_TIME_LIMIT, metavar="SECONDS")
    common.add_argument("--brute-cap", type=int, default=DEFAULT_BRUTE_CAP,
                        help="largest number of k-subsets the brute-force oracle may scan")

    parser = argparse.ArgumentParser(prog="cisenum", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="print every solution, one per line")
    p.add_argument("--k", required=True)
    p.add_argument("--algo", default="kdelta", choices=ALGORITHMS)
    p.add_argument("--mode", default="sets", choices=["sets", "count", "stats"])
    p.add_argument("--output", "-o", metavar="FILE")
    p.add_argument("--include-sink-time", action="store_true",
                   help="count output writing towards the measured delay")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", parents=[common], help="print the number of solutions")
    p.add_argument("--k", required=True)
    p.add_argument("--algo", default="kdelta", choices=ALGORITHMS)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[common], help="compare algorithms against brute force")
    p.add_argument("--k", required=True)
    p.add_argument("--algo", default="kdelta,simple")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time algorithms over a k range")
    p.add_argument("--k", default="2..6")
    p.add_argument("--algo", default="kdelta,simple")
    p.add_argument("--tsv", metavar="FILE", help="TSV destination (default stdout)")
    p.add_argument("--jsonl", metavar="FILE", help="also write JSON lines here")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("info", parents=[common], help="graph summary and count bounds")
    p.add_argument("--k", default=None)
    p.set_defaults(func=cmd_info)
    return parser


def config_from_args(args) -> RunConfig:
    algos = tuple(a.strip() for a in getattr(args, "algo", "kdelta").split(",") if a.strip())
    cfg = RunConfig(
        input=args.input,
        generate=args.generate,
        format=args.format,
        ks=tuple(parse_k_range(args.k)) if args.k else (1,),
        algorithms=algos,
        mode=getattr(args, "mode", "sets"),
        time_limit=args.time_limit,
        include_sink_time=getattr(args, "include_sink_time", False),
        backend=args.backend,
    )
    cfg.validate()
    if args.command == "enumerate" and len(cfg.ks) != 1:
        raise UsageError("enumerate takes a single k")
    return cfg


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        _backend.get_kernels(cfg.backend)
        return args.func(cfg, args)
    except (UsageError, GraphFormatError, BruteForceCapExceeded, ValueError, OSError) as exc:
        print(f"cisenum: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
