"""Timing comparison of the compiled and pure-Python search kernels.

Runs the same exact-cover workloads through both kernels, checks that they
return identical results, and prints a small table.  Usage:

    python3 benchmarks/bench_solver.py [--repeats N]
"""

import argparse
import random
import time
from itertools import combinations

from cliquecover import complete_graph, graph_from_edges, max_cover_over_graphs, max_cover_sum
from cliquecover.solver import available_kernels


def _random_graphs(seed, count, n, max_edges):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        pairs = list(combinations(range(n), 2))
        rng.shuffle(pairs)
        out.append(graph_from_edges(n, pairs[: rng.randint(0, max_edges)]))
    return out


def _solve_result_key(res):
    witness = None if res.witness is None else tuple(c.vertices for c in res.witness.cliques)
    return res.feasible, res.best_sum, witness


WORKLOADS = [
    ("complete graph n=7, budget 7",
     lambda kern: _solve_result_key(max_cover_sum(complete_graph(7), 7, kernel=kern))),
    ("complete graph n=8, budget 8",
     lambda kern: _solve_result_key(max_cover_sum(complete_graph(8), 8, kernel=kern))),
    ("complete graph n=9, budget 9",
     lambda kern: _solve_result_key(
         max_cover_sum(complete_graph(9), 9, max_edges=36, kernel=kern))),
    ("all graphs on 5 vertices",
     lambda kern: max_cover_over_graphs(5, kernel=kern)[0]),
    ("50 random graphs n=6, <=12 edges",
     lambda kern: [
         _solve_result_key(max_cover_sum(g, 6, kernel=kern))
         for g in _random_graphs(17, 50, 6, 12)
     ]),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3,
                        help="timing repeats per workload, best is reported")
    args = parser.parse_args()

    kernels = available_kernels()
    print(f"kernels: {', '.join(kernels)}")
    header = f"{'workload':<34}" + "".join(f"{k:>12}" for k in kernels)
    if len(kernels) > 1:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    all_agree = True
    for name, run in WORKLOADS:
        times = {}
        results = {}
        for kern in kernels:
            best = float("inf")
            for _ in range(args.repeats):
                t0 = time.perf_counter()
                results[kern] = run(kern)
                best = min(best, time.perf_counter() - t0)
            times[kern] = best
        row = f"{name:<34}" + "".join(f"{times[k]:>11.4f}s" for k in kernels)
        if len(kernels) > 1:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)
        baseline = results[kernels[0]]
        if any(results[k] != baseline for k in kernels[1:]):
            all_agree = False
            print(f"  MISMATCH between kernels on: {name}")

    print(f"kernels agree on all workloads: {'yes' if all_agree else 'NO'}")
    return 0 if all_agree else 1


if __name__ == "__main__":
    raise SystemExit(main())
