#!/usr/bin/env python3
"""Benchmark the compiled DFS kernel against the pure-Python fallback.

Workloads are deterministic (full exhaustions, a forced find, and a
node-budget-capped run), so both kernels expand exactly the same number of
nodes; the comparison is pure inner-loop throughput.
"""

import argparse
import time

from oddgraceful import (SearchConfig, build_theorem2, cycle_graph,
                         find_odd_graceful)
from oddgraceful import _dfs_py

try:
    from oddgraceful import _dfs_core
except ImportError:
    _dfs_core = None


WORKLOADS = [
    ("exhaust C7", lambda: cycle_graph(7), SearchConfig()),
    ("exhaust C9", lambda: cycle_graph(9), SearchConfig()),
    ("find C12", lambda: cycle_graph(12), SearchConfig()),
    ("cap 5e5 on sub-ladder(2,1)", lambda: build_theorem2(2, 1),
     SearchConfig(node_budget=500_000)),
]


def run(kernel, graph, cfg, repeats):
    best = float("inf")
    outcome = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        outcome = find_odd_graceful(graph, cfg, _kernel=kernel)
        best = min(best, time.perf_counter() - t0)
    return outcome, best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3,
                        help="take the best of this many runs per kernel")
    args = parser.parse_args()

    if _dfs_core is None:
        print("compiled kernel unavailable; build the extension first "
              "(pip install -e . --no-build-isolation)")
        return 1

    header = (f"{'workload':28s} {'verdict':12s} {'nodes':>10s} "
              f"{'compiled':>10s} {'pure':>10s} {'speedup':>8s}")
    print(header)
    print("-" * len(header))
    for name, make, cfg in WORKLOADS:
        graph = make()
        fast, t_fast = run(_dfs_core, graph, cfg, args.repeats)
        slow, t_slow = run(_dfs_py, graph, cfg, args.repeats)
        if (fast.status, fast.stats.nodes_expanded) != \
                (slow.status, slow.stats.nodes_expanded):
            raise SystemExit(f"kernel mismatch on {name!r}")
        print(f"{name:28s} {fast.status:12s} "
              f"{fast.stats.nodes_expanded:>10d} "
              f"{t_fast * 1000:>8.1f}ms {t_slow * 1000:>8.1f}ms "
              f"{t_slow / t_fast:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
