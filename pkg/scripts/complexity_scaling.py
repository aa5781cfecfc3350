"""Wall time of one convolution layer on a growing sparse family.

    python scripts/complexity_scaling.py --sizes 10000 20000 40000 80000 --runs 5
"""

import argparse
import gc
import statistics
import time

import numpy as np

from superhypergraph.core import Superedge, SuperHyperGraph, nested
from superhypergraph.shgnn import LayerParams, nshgnn_convolve, shgnn_convolve


def sparse_family(nnz: int, rng: np.random.Generator) -> SuperHyperGraph:
    """Superedges of two disjoint 4-leaf supervertices, about two edges per vertex."""
    n = nnz // 2
    names = [f"x{i}" for i in range(n)]
    edges = []
    for j in range(nnz // 8):
        idx = rng.choice(n, 8, replace=False)
        members = (nested([names[i] for i in idx[:4]]), nested([names[i] for i in idx[4:]]))
        edges.append(Superedge(members, 1.0, j))
    return SuperHyperGraph(tuple(names), 1, (), tuple(edges))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10_000, 20_000, 40_000])
    ap.add_argument("--runs", type=int, default=5)
    ap.add_argument("--dim", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    cases = []
    for nnz in args.sizes:
        shg = sparse_family(nnz, rng)
        X = rng.standard_normal((len(shg.base_vertices), args.dim))
        cases.append((shg, X, LayerParams(rng.standard_normal((args.dim, args.dim)))))
    for fn in (shgnn_convolve, nshgnn_convolve):
        samples = [[] for _ in cases]
        for case in cases:
            fn(*case)
        for _ in range(args.runs):
            for i, case in enumerate(cases):
                gc.collect()
                t0 = time.perf_counter()
                fn(*case)
                samples[i].append(time.perf_counter() - t0)
        times = [statistics.median(s) for s in samples]
        print(fn.__name__)
        prev = None
        for nnz, t in zip(args.sizes, times):
            ratio = f"  x{t / prev:.2f}" if prev else ""
            print(f"  nnz {nnz:>8}  {t * 1e3:8.1f} ms{ratio}")
            prev = t


if __name__ == "__main__":
    main()
