"""Cycles of every length 3..n(n-1) through a chosen vertex of L(n), n >= 6.

Three regimes by target length m:

* m <= 5: a cycle inside the vertex's own clique.
* 6 <= m <= 3(n-1): close a 2-clique chain path into a 6-cycle and pad each
  of the three cliques it touches.
* m > 3(n-1): the same with a chain through all n-1 other cliques (a 2n-cycle).
"""

from __future__ import annotations

import time
from typing import List, Sequence

from lngraph.certificates import CycleCertificate
from lngraph.chain import CliqueChainPath, allocate_insertions, expand_in_clique, lemma22_path
from lngraph.errors import LengthError, UnsupportedOrderError
from lngraph.graph import LnGraph, Vertex, clique_of
from lngraph.oracle import SurveyReport, verify_cycle

MIN_ORDER = 6


def regime(n: int, m: int) -> str:
    if m <= 5:
        return "clique"
    if m <= 3 * (n - 1):
        return "short-chain"
    return "long-chain"


def _spare(g: LnGraph, clique: int, used: Sequence[Vertex], count: int) -> List[Vertex]:
    taken = set(used)
    return [x for x in g.clique(clique) if x not in taken][:count]


def _padded_cycle(g: LnGraph, chain: CliqueChainPath, m: int) -> List[Vertex]:
    path = list(chain.vertices)
    v, w = path[0], path[-1]
    home = clique_of(v)
    slots = [(home, g.n - 3)] + [(c, g.n - 3) for c in chain.clique_trace]
    plan = allocate_insertions(slots, m - len(path))
    # pad the intermediate cliques back to front so earlier positions stay put
    for s in range(chain.t, 0, -1):
        pos = 2 * s - 1
        extra = _spare(g, chain.clique_trace[s - 1], (path[pos], path[pos + 1]), plan.counts[chain.clique_trace[s - 1]])
        path = expand_in_clique(path, pos, extra)
    # the closing edge w-v: rotate it to the front, splice, rotate back
    rotated = [w] + path[:-1]
    rotated = expand_in_clique(rotated, 0, _spare(g, home, (v, w), plan.counts[home]))
    k = rotated.index(v)
    return rotated[k:] + rotated[:k]


def cycle_through(g: LnGraph, v, m: int) -> CycleCertificate:
    """An m-cycle of L(n) listed from ``v``."""
    n = g.n
    if n < MIN_ORDER:
        raise UnsupportedOrderError(f"cycle construction needs n ≥ {MIN_ORDER}, got n = {n}")
    v = g.check_vertex(v)
    if not 3 <= m <= n * (n - 1):
        raise LengthError(f"cycle length must lie in [3, {n * (n - 1)}], got {m}")
    home = g.clique(clique_of(v))
    if m <= 5:
        verts = [v] + [x for x in home if x != v][: m - 1]
    else:
        w = next(x for x in home if x != v)
        t = 2 if m <= 3 * (n - 1) else n - 1
        verts = _padded_cycle(g, lemma22_path(g, v, w, t), m)
    return CycleCertificate(n=n, anchor=v, vertices=tuple(verts))


def pancyclicity_survey(g: LnGraph) -> SurveyReport:
    if g.n < MIN_ORDER:
        raise UnsupportedOrderError(f"pancyclicity survey needs n ≥ {MIN_ORDER}, got n = {g.n}")
    report = SurveyReport(kind="pancyclic", n=g.n)
    start = time.perf_counter()
    for v in g.vertices:
        for m in range(3, g.order + 1):
            case = f"v={v.head},{v.tail} m={m}"
            try:
                cert = cycle_through(g, v, m)
            except Exception as exc:  # report, don't abort
                report.record(case, False, f"{type(exc).__name__}: {exc}")
                continue
            res = verify_cycle(g, cert, length=m)
            report.record(case, res.ok, "; ".join(res.lines()))
    report.elapsed = time.perf_counter() - start
    return report
