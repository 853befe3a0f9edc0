"""Hamiltonian paths between any two distinct vertices of L(n), n >= 4."""

from __future__ import annotations

import random
import time
from itertools import combinations
from typing import List, Optional, Tuple

from lngraph.certificates import PathCertificate
from lngraph.chain import expand_in_clique, lemma22_path
from lngraph.errors import SameVertexError, UnsupportedOrderError
from lngraph.graph import LnGraph, Vertex, bridge, clique_of, companion_clique
from lngraph.oracle import DEFAULT_BUDGET, SurveyReport, find_path_of_length, verify_path

MIN_ORDER = 4
DEFAULT_SEED = 20220326

SAME_CLIQUE = "same-clique"
DISTINCT_CLIQUES = "distinct-cliques"
SEARCH = "search"


def _same_clique_path(g: LnGraph, v: Vertex, w: Vertex) -> List[Vertex]:
    home = g.clique(clique_of(v))
    w1 = next(x for x in home if x not in (v, w))
    chain = lemma22_path(g, v, w1, g.n - 1)
    path = list(chain.vertices)
    for s in range(chain.t, 0, -1):
        pos = 2 * s - 1
        ends = (path[pos], path[pos + 1])
        extra = [x for x in g.clique(chain.clique_trace[s - 1]) if x not in ends]
        path = expand_in_clique(path, pos, extra)
    path.append(w)
    rest = [x for x in home if x not in (v, w, w1)]
    return expand_in_clique(path, len(path) - 2, rest)


def middle_order(n: int, v: Vertex, w: Vertex) -> Optional[List[int]]:
    """Order of the n-2 cliques visited between clique_of(v) and clique_of(w).

    Starts ascending, then the first slot is kept off companion_clique(v) and
    the last off companion_clique(w), each by one swap with the nearest slot
    that works. Returns None when no such swap exists (only possible for n = 4).
    """
    a, b = clique_of(v), clique_of(w)
    cv, cw = companion_clique(v), companion_clique(w)
    order = [c for c in range(1, n + 1) if c not in (a, b)]
    last = len(order) - 1

    def legal(o):
        return o[0] != cv and o[-1] != cw

    def swap_near(o, pos, accept):
        for d in range(1, len(o)):
            for k in (pos + d, pos - d):
                if 0 <= k < len(o):
                    cand = list(o)
                    cand[pos], cand[k] = cand[k], cand[pos]
                    if accept(cand):
                        return cand
        return None

    if order[0] == cv:
        fixed = swap_near(order, 0, legal) or swap_near(order, 0, lambda o: o[0] != cv)
        if fixed is None:
            return None
        order = fixed
    if order[-1] == cw:
        order = swap_near(order, last, legal)
    return order if order is not None and legal(order) else None


def _distinct_clique_path(g: LnGraph, v: Vertex, w: Vertex, order: List[int]) -> List[Vertex]:
    seq = [clique_of(v), *order, clique_of(w)]
    path = []
    for pos, c in enumerate(seq):
        entry = v if pos == 0 else bridge(c, seq[pos - 1])[0]
        exit_ = w if pos == len(seq) - 1 else bridge(c, seq[pos + 1])[0]
        inner = [x for x in g.clique(c) if x not in (entry, exit_)]
        path += [entry, *inner, exit_]
    return path


def hamilton_path_with_method(g: LnGraph, v, w, budget: int = DEFAULT_BUDGET) -> Tuple[PathCertificate, str]:
    """Like :func:`hamilton_path`, also naming the construction that was used."""
    if g.n < MIN_ORDER:
        raise UnsupportedOrderError(f"Hamiltonian path construction needs n ≥ {MIN_ORDER}, got n = {g.n}")
    v = g.check_vertex(v)
    w = g.check_vertex(w)
    if v == w:
        raise SameVertexError(f"endpoints coincide: {v}")
    if clique_of(v) == clique_of(w):
        path, method = _same_clique_path(g, v, w), SAME_CLIQUE
    else:
        order = middle_order(g.n, v, w)
        if order is not None:
            path, method = _distinct_clique_path(g, v, w, order), DISTINCT_CLIQUES
        else:
            path = find_path_of_length(g, v, w, g.order - 1, budget)
            if path is None:
                raise RuntimeError(f"no Hamiltonian {v}-{w} path exists in L({g.n})")
            method = SEARCH
    return PathCertificate(n=g.n, endpoints=(v, w), vertices=tuple(path)), method


def hamilton_path(g: LnGraph, v, w) -> PathCertificate:
    return hamilton_path_with_method(g, v, w)[0]


def sample_pairs(g: LnGraph, sample: Optional[int] = None, seed: int = DEFAULT_SEED) -> List[Tuple[Vertex, Vertex]]:
    pairs = list(combinations(g.vertices, 2))
    if sample is None or sample >= len(pairs):
        return pairs
    picked = random.Random(seed).sample(range(len(pairs)), sample)
    return [pairs[k] for k in sorted(picked)]


def hamilton_survey(g: LnGraph, sample: Optional[int] = None, seed: int = DEFAULT_SEED) -> SurveyReport:
    report = SurveyReport(kind="hamilton", n=g.n)
    start = time.perf_counter()
    for v, w in sample_pairs(g, sample, seed):
        case = f"u={v.head},{v.tail} v={w.head},{w.tail}"
        try:
            cert, method = hamilton_path_with_method(g, v, w)
        except Exception as exc:
            report.record(case, False, f"{type(exc).__name__}: {exc}")
            continue
        if method == SEARCH:
            report.fallbacks += 1
        res = verify_path(g, cert, length=g.order - 1)
        report.record(case, res.ok, "; ".join(res.lines()))
    report.elapsed = time.perf_counter() - start
    if report.fallbacks:
        report.notes.append(f"{report.fallbacks} pair(s) served by exhaustive search")
    return report
