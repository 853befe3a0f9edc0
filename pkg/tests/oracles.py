"""Independent reference implementations used only by the tests.

Nothing here imports the package's graph, search or kernel code; adjacency is
recomputed from the vertex encoding.
"""

from itertools import permutations


def vertices(n):
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def adjacent(u, v):
    return u != v and (u[0] == v[0] or (u[0] == v[1] and u[1] == v[0]))


def adjacency(n):
    vs = vertices(n)
    return {u: sorted(v for v in vs if adjacent(u, v)) for u in vs}


def simple_paths(adj, u, v, length):
    """Yield every simple u-v path with exactly ``length`` edges (recursive, no pruning)."""

    def walk(path):
        last = path[-1]
        if len(path) == length + 1:
            if last == v:
                yield list(path)
            return
        for x in adj[last]:
            if x in path or (x == v and len(path) < length):
                continue
            path.append(x)
            yield from walk(path)
            path.pop()

    if u == v:
        return
    yield from walk([u])


def has_path(adj, u, v, length):
    return next(simple_paths(adj, u, v, length), None) is not None


def has_cycle_through(adj, v, length):
    return any(has_path(adj, v, u, length - 1) for u in adj[v])


def count_cycles_of_length(n, length):
    """Count distinct cycles of a given length by brute force over vertex tuples (tiny n only)."""
    vs = vertices(n)
    seen = set()
    for combo in permutations(vs, length):
        if combo[0] != min(combo):
            continue
        if all(adjacent(combo[k], combo[(k + 1) % length]) for k in range(length)):
            cyc = combo if combo[1] < combo[-1] else (combo[0],) + tuple(reversed(combo[1:]))
            seen.add(cyc)
    return len(seen)


def is_simple_path(seq):
    return len(set(seq)) == len(seq) and all(adjacent(a, b) for a, b in zip(seq, seq[1:]))


def is_simple_cycle(seq):
    return len(seq) >= 3 and is_simple_path(seq) and adjacent(seq[-1], seq[0])


def bfs_dist(adj, s):
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            for x in adj[u]:
                if x not in dist:
                    dist[x] = dist[u] + 1
                    nxt.append(x)
        frontier = nxt
    return dist


def girth(adj):
    """Shortest cycle length by trying, for each edge, the shortest detour avoiding it."""
    best = None
    for u in adj:
        for v in adj[u]:
            if u < v:
                sub = {x: [y for y in nb if {x, y} != {u, v}] for x, nb in adj.items()}
                d = bfs_dist(sub, u).get(v)
                if d is not None and (best is None or d + 1 < best):
                    best = d + 1
    return best
