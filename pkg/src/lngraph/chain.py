"""Clique-chain paths and in-clique splicing.

The chain path leaves a clique C_i at v, passes through t other cliques
(entering and leaving each along its bridge pair) and comes back to C_i at w,
giving a path with 2t + 1 edges. The intermediate cliques are fixed in closed
form instead of being grown one at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from lngraph.errors import CapacityError, ExpansionError, ParameterError, SameVertexError
from lngraph.graph import LnGraph, Vertex, clique_of, ln_adjacent


@dataclass(frozen=True)
class CliqueChainPath:
    vertices: Tuple[Vertex, ...]
    clique_trace: Tuple[int, ...]
    t: int

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class ExpansionPlan:
    counts: Dict[int, int]
    order: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def as_list(self) -> List[int]:
        return [self.counts[c] for c in self.order]


def chain_cliques(n: int, i: int, j: int, k: int, t: int) -> List[int]:
    """Clique indices m_1..m_t: j first, k last, the t-2 smallest spare indices between."""
    spare = [x for x in range(1, n + 1) if x not in (i, j, k)]
    return [j, *spare[: t - 2], k]


def lemma22_path(g: LnGraph, v, w, t: int) -> CliqueChainPath:
    """Path v, v_1, w_1, ..., v_t, w_t, w of length 2t+1 through t cliques other than clique_of(v).

    With m_0 = m_{t+1} = i, the s-th visited clique C_{m_s} is entered at
    (m_s, m_{s-1}) and left at (m_s, m_{s+1}).
    """
    v = g.check_vertex(v)
    w = g.check_vertex(w)
    if v == w:
        raise SameVertexError(f"endpoints coincide: {v}")
    if clique_of(v) != clique_of(w):
        raise ParameterError(f"{v} and {w} are not in the same clique")
    if not 2 <= t <= g.n - 1:
        raise ParameterError(f"t must lie in [2, {g.n - 1}], got {t}")
    i, j = v
    k = w.tail
    ms = [i, *chain_cliques(g.n, i, j, k, t), i]
    verts = [v]
    for s in range(1, t + 1):
        verts.append(Vertex(ms[s], ms[s - 1]))
        verts.append(Vertex(ms[s], ms[s + 1]))
    verts.append(w)
    return CliqueChainPath(vertices=tuple(verts), clique_trace=tuple(ms[1:-1]), t=t)


def expand_in_clique(path: Sequence[Vertex], position: int, extra: Sequence[Vertex]) -> List[Vertex]:
    """Splice ``extra`` between ``path[position]`` and ``path[position + 1]``.

    Both anchors and every spliced vertex must share one clique, so any order
    stays a path; callers pass ``extra`` already in the order they want.
    """
    path = list(path)
    if not 0 <= position < len(path) - 1:
        raise ExpansionError(f"position {position} has no successor in a path of {len(path)} vertices")
    a, b = path[position], path[position + 1]
    if not ln_adjacent(a, b):
        raise ExpansionError(f"anchors {a} and {b} are not adjacent")
    c = clique_of(a)
    if clique_of(b) != c:
        raise ExpansionError(f"anchors {a} and {b} lie in different cliques")
    on_path = set(path)
    seen = set()
    for x in extra:
        if clique_of(x) != c:
            raise ExpansionError(f"{x} is not in clique C_{c}")
        if x in on_path or x in seen:
            raise ExpansionError(f"duplicate vertex {x}")
        seen.add(x)
    return path[: position + 1] + list(extra) + path[position + 1 :]


def allocate_insertions(base_slots: Sequence[Tuple[int, int]], total: int) -> ExpansionPlan:
    """Greedy fill: each slot in order takes as much of the remainder as it can hold."""
    if total < 0:
        raise CapacityError(f"negative insertion total {total}")
    if any(cap < 0 for _, cap in base_slots):
        raise CapacityError("slot capacities must be non-negative")
    room = sum(cap for _, cap in base_slots)
    if total > room:
        raise CapacityError(f"{total} insertions exceed aggregate capacity {room}")
    counts = {}
    left = total
    for clique, cap in base_slots:
        take = min(left, cap)
        counts[clique] = counts.get(clique, 0) + take
        left -= take
    return ExpansionPlan(counts=counts, order=tuple(c for c, _ in base_slots))
