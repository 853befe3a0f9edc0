"""Numeric kernels over CSR adjacency arrays.

Each kernel exists in two forms: a ``*_py`` reference written against numpy
arrays, and the public name, which is the numba-compiled version when numba is
enabled (see :mod:`lngraph._accel`) or a numpy fallback otherwise. Both forms
stay importable so the benchmark and tests can compare them directly.
"""

from __future__ import annotations

import numpy as np

from lngraph._accel import NUMBA_ENABLED, jit

# Return codes of the path search.
FOUND = 1
NOT_FOUND = 0
BUDGET_EXHAUSTED = -1


def find_path_py(indptr, indices, src, dst, length, budget, out, counter):
    """Depth-first search for a simple ``src``-``dst`` path with exactly ``length`` edges.

    Neighbors are tried in CSR order, which is lexicographic for graphs built by
    :func:`lngraph.graph.build_ln`. On success the path is written to
    ``out[0:length + 1]``. ``counter[0]`` accumulates node expansions across
    calls; once it passes ``budget`` the search returns ``BUDGET_EXHAUSTED``
    rather than a definite answer.
    """
    nv = indptr.shape[0] - 1
    out[0] = src
    if length == 0:
        return 1 if src == dst else 0
    if src == dst:
        return 0
    visited = np.zeros(nv, dtype=np.bool_)
    ptr = np.zeros(length + 1, dtype=np.int64)
    visited[src] = True
    ptr[0] = indptr[src]
    depth = 0
    while depth >= 0:
        u = out[depth]
        if ptr[depth] == indptr[u + 1]:
            visited[u] = False
            depth -= 1
            continue
        x = indices[ptr[depth]]
        ptr[depth] += 1
        if visited[x]:
            continue
        if depth + 1 == length:
            if x == dst:
                out[length] = x
                return 1
            continue
        # dst may only close the path
        if x == dst:
            continue
        counter[0] += 1
        if counter[0] > budget:
            return -1
        depth += 1
        out[depth] = x
        visited[x] = True
        ptr[depth] = indptr[x]
    return 0


def bfs_distances_py(indptr, indices):
    """All-pairs hop distances; ``-1`` marks unreachable pairs."""
    nv = indptr.shape[0] - 1
    dist = np.full((nv, nv), -1, dtype=np.int64)
    queue = np.empty(nv, dtype=np.int64)
    for s in range(nv):
        row = dist[s]
        row[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            for p in range(indptr[u], indptr[u + 1]):
                x = indices[p]
                if row[x] < 0:
                    row[x] = row[u] + 1
                    queue[tail] = x
                    tail += 1
    return dist


def girth_py(indptr, indices):
    """Length of a shortest cycle, or ``-1`` for a forest.

    BFS from every root; a non-tree edge (u, x) closes a closed walk of length
    dist[u] + dist[x] + 1, and the minimum over all roots is the girth.
    """
    nv = indptr.shape[0] - 1
    best = -1
    dist = np.empty(nv, dtype=np.int64)
    parent = np.empty(nv, dtype=np.int64)
    queue = np.empty(nv, dtype=np.int64)
    for s in range(nv):
        dist[:] = -1
        parent[:] = -1
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            if best >= 0 and 2 * dist[u] + 1 >= best:
                break
            for p in range(indptr[u], indptr[u + 1]):
                x = indices[p]
                if dist[x] < 0:
                    dist[x] = dist[u] + 1
                    parent[x] = u
                    queue[tail] = x
                    tail += 1
                elif parent[u] != x:
                    cyc = dist[u] + dist[x] + 1
                    if best < 0 or cyc < best:
                        best = cyc
    return best


def int_matmul_py(a, b):
    """Exact int64 matrix product by explicit loops (the kernel numba compiles)."""
    rows = a.shape[0]
    inner = a.shape[1]
    cols = b.shape[1]
    out = np.zeros((rows, cols), dtype=np.int64)
    for i in range(rows):
        for k in range(inner):
            aik = a[i, k]
            if aik == 0:
                continue
            for j in range(cols):
                out[i, j] += aik * b[k, j]
    return out


def bfs_distances_np(indptr, indices):
    """Frontier-at-a-time BFS for all sources at once, in plain numpy."""
    nv = indptr.shape[0] - 1
    adj = np.zeros((nv, nv), dtype=np.bool_)
    rows = np.repeat(np.arange(nv), np.diff(indptr))
    adj[rows, indices] = True
    dist = np.full((nv, nv), -1, dtype=np.int64)
    reached = np.eye(nv, dtype=np.bool_)
    frontier = reached.copy()
    dist[reached] = 0
    step = 0
    while frontier.any():
        step += 1
        nxt = (frontier.astype(np.int64) @ adj.astype(np.int64)) > 0
        nxt &= ~reached
        dist[nxt] = step
        reached |= nxt
        frontier = nxt
    return dist


def int_matmul_np(a, b):
    # numpy integer matmul does not go through BLAS and is exact in int64
    return np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)


if NUMBA_ENABLED:
    find_path = jit(find_path_py)
    bfs_distances = jit(bfs_distances_py)
    girth = jit(girth_py)
    int_matmul = jit(int_matmul_py)
else:
    find_path = find_path_py
    bfs_distances = bfs_distances_np
    girth = girth_py
    int_matmul = int_matmul_np
