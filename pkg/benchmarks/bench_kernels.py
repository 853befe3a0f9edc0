"""Compare the numba kernels with their numpy / plain-Python fallbacks.

    python benchmarks/bench_kernels.py [--repeat 3]

Both implementations are called directly from :mod:`lngraph.kernels`, so one
run times both regardless of LNGRAPH_DISABLE_NUMBA. Results are also checked
for equality.
"""

import argparse
import time

import numpy as np

from lngraph import _accel, build_ln, kernels


def best_of(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def search_all_anchors(find_path, g, length):
    """Does any vertex lie on a cycle of ``length``? Exhausts every anchor and neighbor."""
    hits = 0
    for v in range(g.order):
        for p in range(g.indptr[v], g.indptr[v + 1]):
            out = np.zeros(length, dtype=np.int64)
            counter = np.zeros(1, dtype=np.int64)
            hits += find_path(g.indptr, g.indices, v, g.indices[p], length - 1, 10**8, out, counter) == 1
    return hits


def annihilator(matmul, g):
    a = g.adjacency_matrix()
    eye = np.eye(g.order, dtype=np.int64)
    prod = eye
    for c in (-2, -1, 0, g.n - 2, g.n - 1):
        prod = matmul(prod, a - c * eye)
    return prod


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not _accel.NUMBA_ENABLED:
        raise SystemExit("numba is disabled or missing; nothing to compare against")

    g5, g7, g12, g20 = build_ln(5), build_ln(7), build_ln(12), build_ln(20)
    # warm up the JIT so compile time is not measured
    search_all_anchors(kernels.find_path, build_ln(4), 4)
    kernels.bfs_distances(g5.indptr, g5.indices)
    kernels.girth(g5.indptr, g5.indices)
    annihilator(kernels.int_matmul, g5)

    cases = [
        ("dfs: no 5-cycle in L(5)", lambda f: search_all_anchors(f, g5, 5), kernels.find_path, kernels.find_path_py),
        ("dfs: 9-cycles in L(7)", lambda f: search_all_anchors(f, g7, 9), kernels.find_path, kernels.find_path_py),
        ("bfs: all pairs L(20)", lambda f: f(g20.indptr, g20.indices), kernels.bfs_distances, kernels.bfs_distances_np),
        ("girth: L(20)", lambda f: f(g20.indptr, g20.indices), kernels.girth, kernels.girth_py),
        ("annihilator: L(12)", lambda f: annihilator(f, g12), kernels.int_matmul, kernels.int_matmul_np),
    ]
    print(f"{'kernel':28} {'numba':>10} {'fallback':>10} {'speedup':>8}")
    for name, run, fast, slow in cases:
        t_fast, r_fast = best_of(lambda: run(fast), args.repeat)
        t_slow, r_slow = best_of(lambda: run(slow), args.repeat)
        assert np.array_equal(np.asarray(r_fast), np.asarray(r_slow)), name
        print(f"{name:28} {t_fast * 1e3:8.2f}ms {t_slow * 1e3:8.2f}ms {t_slow / t_fast:7.1f}x")


if __name__ == "__main__":
    main()
