"""Compare the compiled and pure-Python search kernels on identical workloads.

    python benchmarks/bench_kernels.py [--repeat R]

Each row times one kernel over a fixed, seeded batch and checks that both
backends return identical results.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections.abc import Callable
from itertools import combinations

from clique_immersion import kernels
from clique_immersion.andrasfai import build_gamma
from clique_immersion.generators import XorShift64Star, gen_random_alpha2
from clique_immersion.graph import Graph, complement


def random_graph(rng: XorShift64Star, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def triangle_free(rng: XorShift64Star, n: int, p: float) -> Graph:
    adj = [0] * n
    for u, v in combinations(range(n), 2):
        if rng.random() < p and not adj[u] & adj[v]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def workloads() -> dict[str, list[tuple]]:
    rng = XorShift64Star(1)
    clique = [(list(g.adj), g.n) for g in (random_graph(rng, 60, 0.5) for _ in range(20))]
    clique += [(list(g.adj), g.n) for g in (gen_random_alpha2(60, 0.3, s) for s in range(20))]
    coloring = [(list(g.adj), g.n, 5) for g in (random_graph(rng, 45, 0.3) for _ in range(20))]
    coloring += [(list(complement(g).adj), g.n, 4) for g in (gen_random_alpha2(24, 0.6, s) for s in range(20))]
    hom = []
    for _ in range(30):
        f = triangle_free(rng, 40, 0.2)
        for d in (2, 3, 4):
            gamma = build_gamma(d)
            hom.append((list(f.adj), f.n, list(gamma.graph.adj), gamma.order, 0))
    return {"max_clique": clique, "k_coloring": coloring, "hom_search": hom}


def bench(fn: Callable, batch: list[tuple], repeat: int) -> tuple[float, list]:
    best = float("inf")
    out: list = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = [fn(*args) for args in batch]
        best = min(best, time.perf_counter() - start)
    return best, out


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if "cython" not in kernels.BACKENDS:
        print("compiled kernels unavailable; rebuild with Cython installed", file=sys.stderr)
        return 1
    py, cy = kernels.BACKENDS["python"], kernels.BACKENDS["cython"]
    print(f"{'kernel':<12} {'instances':>9} {'python s':>10} {'cython s':>10} {'speedup':>8}  agree")
    for name, batch in workloads().items():
        t_py, r_py = bench(getattr(py, name), batch, args.repeat)
        t_cy, r_cy = bench(getattr(cy, name), batch, args.repeat)
        print(f"{name:<12} {len(batch):>9} {t_py:>10.4f} {t_cy:>10.4f} {t_py / t_cy:>7.1f}x  {r_py == r_cy}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
