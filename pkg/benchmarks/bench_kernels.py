"""Compare the compiled and pure-Python kernels on identical inputs.

exact_search runs on weighted cycles C_n (three competing e.d.s, so the
branch and bound has to search); find_induced looks for P4+P2 in the
planted (P4+P2)-free family, where it is absent and the backtracking is
exhaustive.

Usage: python benchmarks/bench_kernels.py [--reps 3] [--sizes 40 80 120]
"""

from __future__ import annotations

import argparse
import random
import time

from effdom.core import _kernel_weights, plant_p4p2_instance
from effdom.graph import WeightedGraph, build_graph
from effdom.kernels import backends
from effdom.patterns import linear_forest


def _time(fn, reps: int) -> float:
    best = float("inf")
    for _ in range(reps):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best * 1000.0


def weighted_cycle(n: int, seed: int) -> WeightedGraph:
    rng = random.Random(seed)
    G = build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    return WeightedGraph.of(G, [rng.randint(1, 9) for _ in range(n)])


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--sizes", type=int, nargs="+", default=[40, 80, 120])
    args = parser.parse_args()

    impls = backends()
    if "cython" not in impls:
        print("compiled kernels not built; only the Python backend is available")
    pattern = linear_forest((4, 2))
    print("kernel,n,m," + ",".join(f"{name}_ms" for name in impls) + ",speedup")
    for n in args.sizes:
        cycle = weighted_cycle(3 * n, seed=n)
        cw = _kernel_weights(cycle)
        family, _ = plant_p4p2_instance(4, max(2, n // 8), n // 2, seed=n)
        cases = [
            ("exact_search", cycle.graph,
             lambda mod, G=cycle.graph: mod.exact_search(G.n, G.sorted_adj, cw)),
            ("find_induced", family.graph,
             lambda mod, G=family.graph: mod.find_induced(
                 G.n, G.sorted_adj, pattern.earlier_adj(), list(pattern.after))),
        ]
        for kernel, G, job in cases:
            results = {name: job(mod) for name, mod in impls.items()}
            if len({repr(r) for r in results.values()}) != 1:
                raise SystemExit(f"backends disagree on {kernel} at n={G.n}")
            times = {name: _time(lambda mod=mod: job(mod), args.reps) for name, mod in impls.items()}
            speedup = times["python"] / times["cython"] if times.get("cython") else float("nan")
            cols = ",".join(f"{times[name]:.3f}" for name in impls)
            print(f"{kernel},{G.n},{G.m},{cols},{speedup:.1f}")


if __name__ == "__main__":
    main()
