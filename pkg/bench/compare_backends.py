"""Compare the compiled and pure-Python kernels on seeded random graphs.

Usage: python bench/compare_backends.py [--graph random:300:0.03:1] [--k 3..5] [--repeats 3]
"""

import argparse
import time

from cisenum import BACKENDS, enumerate_k_subgraphs, generate_graph, simple_enumerate
from cisenum.cli import parse_k_range

ALGOS = {"kdelta": enumerate_k_subgraphs, "simple": simple_enumerate}


def best_of(fn, g, k, backend, repeats, measure_delay):
    best, stats = float("inf"), None
    for _ in range(repeats):
        t0 = time.perf_counter()
        stats = fn(g, k, backend=backend, measure_delay=measure_delay)
        best = min(best, time.perf_counter() - t0)
    return best, stats.solutions


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graph", action="append", help="generator spec, repeatable")
    ap.add_argument("--k", default="3..5")
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--measure-delay", action="store_true", help="keep delay instrumentation on")
    args = ap.parse_args(argv)

    specs = args.graph or ["random:300:0.03:1", "random:120:0.08:2"]
    backends = sorted(BACKENDS)
    print("graph\tk\talgorithm\tsolutions\t" + "\t".join(f"{b}_s" for b in backends) + "\tratio")
    for spec in specs:
        g = generate_graph(spec)
        for k in parse_k_range(args.k):
            for name, fn in ALGOS.items():
                times, counts = [], set()
                for b in backends:
                    t, c = best_of(fn, g, k, b, args.repeats, args.measure_delay)
                    times.append(t)
                    counts.add(c)
                if len(counts) != 1:
                    raise SystemExit(f"backends disagree on {spec} k={k} {name}: {sorted(counts)}")
                ratio = times[-1] / times[0] if len(times) == 2 else 1.0
                cols = "\t".join(f"{t:.4f}" for t in times)
                print(f"{spec}\t{k}\t{name}\t{counts.pop()}\t{cols}\t{ratio:.1f}", flush=True)


if __name__ == "__main__":
    main()
