"""Construction of B(n) and its line graph L(n).

A vertex of L(n) is the B(n)-edge {{i}, {i, j}}, written ``[i,ij]`` and stored
as the ordered pair ``Vertex(head=i, tail=j)``. Two vertices (i, j) and (r, s)
are adjacent iff they share a head, or one is the swap of the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Tuple

import numpy as np

from lngraph import kernels
from lngraph.errors import InvalidOrderError, InvalidVertexError, SameCliqueError

DEFAULT_N_CAP = 50


class Vertex(NamedTuple):
    head: int
    tail: int

    def __str__(self) -> str:
        return f"[{self.head},{self.head}{self.tail}]"


def check_order(n: int, cap: Optional[int] = DEFAULT_N_CAP, minimum: int = 3) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise InvalidOrderError(f"n must be an integer, got {n!r}")
    if n < minimum:
        raise InvalidOrderError(f"n must be ≥ {minimum}")
    if cap is not None and n > cap:
        raise InvalidOrderError(f"n = {n} exceeds the configured cap of {cap}")


def is_valid_vertex(v, n: int) -> bool:
    try:
        h, t = v
    except (TypeError, ValueError):
        return False
    return (
        isinstance(h, (int, np.integer))
        and isinstance(t, (int, np.integer))
        and 1 <= h <= n
        and 1 <= t <= n
        and h != t
    )


def clique_of(v: Vertex) -> int:
    """Index i of the clique C_i containing v = (i, j)."""
    return v[0]


def companion_clique(v: Vertex) -> int:
    """The one clique outside clique_of(v) holding a neighbor of v: C_j for v = (i, j)."""
    return v[1]


def bridge(a: int, b: int) -> Tuple[Vertex, Vertex]:
    """The unique adjacent pair joining C_a to C_b, C_a side first."""
    if a == b:
        raise SameCliqueError(f"bridge needs two distinct cliques, got C_{a} twice")
    return Vertex(a, b), Vertex(b, a)


def ln_adjacent(u, v) -> bool:
    """Adjacency in L(n) from the encoding alone; needs no graph object."""
    return u != v and (u[0] == v[0] or (u[0] == v[1] and u[1] == v[0]))


# --------------------------------------------------------------------------- B(n)


@dataclass(frozen=True, order=True)
class BnVertex:
    """A 1-subset (singleton) or 2-subset (pair) of [n]."""

    elements: Tuple[int, ...]

    def __post_init__(self):
        if len(self.elements) not in (1, 2) or len(set(self.elements)) != len(self.elements):
            raise InvalidVertexError(f"B(n) vertex needs 1 or 2 distinct elements: {self.elements}")
        object.__setattr__(self, "elements", tuple(sorted(self.elements)))

    @property
    def kind(self) -> str:
        return "singleton" if len(self.elements) == 1 else "pair"

    def __str__(self) -> str:
        return ",".join(map(str, self.elements))


@dataclass(frozen=True)
class BnGraph:
    n: int
    vertices: Tuple[BnVertex, ...]
    edges: FrozenSet[FrozenSet[BnVertex]]

    def degree(self, v: BnVertex) -> int:
        return sum(1 for e in self.edges if v in e)

    def sorted_edges(self) -> List[Tuple[BnVertex, BnVertex]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


def build_bn(n: int, cap: Optional[int] = DEFAULT_N_CAP) -> BnGraph:
    check_order(n, cap)
    singles = [BnVertex((i,)) for i in range(1, n + 1)]
    pairs = [BnVertex(p) for p in combinations(range(1, n + 1), 2)]
    edges = frozenset(
        frozenset((BnVertex((i,)), p)) for p in pairs for i in p.elements
    )
    return BnGraph(n=n, vertices=tuple(singles + pairs), edges=edges)


def line_graph(edges) -> Dict[FrozenSet, FrozenSet[FrozenSet]]:
    """Line graph of a simple graph given by its edges (2-element frozensets).

    Accepts a :class:`BnGraph` or any iterable of edges. Returns a mapping from
    each edge to the set of edges sharing an endpoint with it.
    """
    if isinstance(edges, BnGraph):
        edges = edges.edges
    incident: Dict[object, List[FrozenSet]] = {}
    nodes = {}
    for e in edges:
        e = frozenset(e)
        nodes[e] = set()
        for x in e:
            incident.setdefault(x, []).append(e)
    for group in incident.values():
        for e in group:
            nodes[e].update(group)
    return {e: frozenset(nb - {e}) for e, nb in nodes.items()}


def relabel_bn_edge(e) -> Vertex:
    """Canonical relabeling {{i},{i,j}} -> (i, j)."""
    a, b = sorted(e, key=lambda x: len(x.elements))
    (i,) = a.elements
    (j,) = set(b.elements) - {i}
    return Vertex(i, j)


# --------------------------------------------------------------------------- L(n)


class LnGraph:
    """Immutable L(n) with its clique partition and CSR adjacency.

    Vertices are numbered by their position in lexicographic order; the CSR
    neighbor lists are sorted, so every traversal is deterministic.
    """

    __slots__ = ("n", "vertices", "index", "cliques", "indptr", "indices", "_neighbors")

    def __init__(self, n: int, cap: Optional[int] = DEFAULT_N_CAP):
        check_order(n, cap)
        object.__setattr__(self, "n", int(n))
        verts = tuple(Vertex(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j)
        index = {v: k for k, v in enumerate(verts)}
        neighbors = {}
        for v in verts:
            i, j = v
            nb = [Vertex(i, k) for k in range(1, n + 1) if k != i and k != j]
            nb.append(Vertex(j, i))
            neighbors[v] = tuple(sorted(nb))
        indptr = np.zeros(len(verts) + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(neighbors[v]) for v in verts])
        indices = np.fromiter(
            (index[x] for v in verts for x in neighbors[v]), dtype=np.int64, count=int(indptr[-1])
        )
        indptr.setflags(write=False)
        indices.setflags(write=False)
        cliques = tuple(tuple(Vertex(i, j) for j in range(1, n + 1) if j != i) for i in range(1, n + 1))
        for name, value in (
            ("vertices", verts),
            ("index", index),
            ("cliques", cliques),
            ("indptr", indptr),
            ("indices", indices),
            ("_neighbors", neighbors),
        ):
            object.__setattr__(self, name, value)

    def __setattr__(self, name, value):
        raise AttributeError("LnGraph is immutable")

    def __repr__(self) -> str:
        return f"LnGraph(n={self.n})"

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return is_valid_vertex(v, self.n)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return int(self.indptr[-1]) // 2

    def check_vertex(self, v) -> Vertex:
        if not is_valid_vertex(v, self.n):
            raise InvalidVertexError(f"{v!r} is not a vertex of L({self.n})")
        return Vertex(int(v[0]), int(v[1]))

    def neighbors(self, v) -> Tuple[Vertex, ...]:
        return self._neighbors[self.check_vertex(v)]

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def adjacent(self, u, v) -> bool:
        return ln_adjacent(u, v) and u in self and v in self

    def clique(self, i: int) -> Tuple[Vertex, ...]:
        if not 1 <= i <= self.n:
            raise InvalidVertexError(f"no clique C_{i} in L({self.n})")
        return self.cliques[i - 1]

    def edges(self) -> Iterator[Tuple[Vertex, Vertex]]:
        """Each edge once, smaller endpoint first, in lexicographic order."""
        for v in self.vertices:
            for x in self._neighbors[v]:
                if v < x:
                    yield v, x

    def adjacency_sets(self) -> Dict[Vertex, FrozenSet[Vertex]]:
        return {v: frozenset(nb) for v, nb in self._neighbors.items()}

    def adjacency_matrix(self) -> np.ndarray:
        nv = self.order
        a = np.zeros((nv, nv), dtype=np.int64)
        rows = np.repeat(np.arange(nv), np.diff(self.indptr))
        a[rows, self.indices] = 1
        return a


def build_ln(n: int, cap: Optional[int] = DEFAULT_N_CAP) -> LnGraph:
    return LnGraph(n, cap=cap)


# --------------------------------------------------------------------------- metrics


@dataclass(frozen=True)
class GraphMetrics:
    order: int
    size: int
    min_degree: int
    max_degree: int
    girth: int  # -1 when acyclic
    diameter: int  # -1 when disconnected
    connected: bool


def metrics(g: LnGraph) -> GraphMetrics:
    degrees = np.diff(g.indptr)
    dist = kernels.bfs_distances(g.indptr, g.indices)
    connected = bool((dist >= 0).all())
    return GraphMetrics(
        order=g.order,
        size=g.size,
        min_degree=int(degrees.min()),
        max_degree=int(degrees.max()),
        girth=int(kernels.girth(g.indptr, g.indices)),
        diameter=int(dist.max()) if connected else -1,
        connected=connected,
    )


# --------------------------------------------------------------------------- export


def _node_id(v: Vertex) -> str:
    return f"{v.head}_{v.tail}"


def to_edgelist(g: LnGraph) -> str:
    return "".join(f"{u.head},{u.tail} {v.head},{v.tail}\n" for u, v in g.edges())


def to_dot(g: LnGraph) -> str:
    lines = [f"graph L{g.n} {{"]
    for v in g.vertices:
        lines.append(f'  {_node_id(v)} [label="{v}"];')
    for u, v in g.edges():
        lines.append(f"  {_node_id(u)} -- {_node_id(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def bn_to_edgelist(b: BnGraph) -> str:
    return "".join(f"{u} {v}\n" for u, v in b.sorted_edges())


def bn_to_dot(b: BnGraph) -> str:
    def nid(x: BnVertex) -> str:
        return ("s" if x.kind == "singleton" else "p") + "_".join(map(str, x.elements))

    lines = [f"graph B{b.n} {{"]
    for x in sorted(b.vertices, key=lambda x: (len(x.elements), x.elements)):
        lines.append(f'  {nid(x)} [label="{{{x}}}"];')
    for u, v in b.sorted_edges():
        lines.append(f"  {nid(u)} -- {nid(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
