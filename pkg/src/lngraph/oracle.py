"""Certificate verification, exhaustive search oracles and the exact spectrum check."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from lngraph import kernels
from lngraph.certificates import CycleCertificate, PathCertificate
from lngraph.errors import InvalidVertexError, SearchBudgetExceeded
from lngraph.graph import LnGraph, Vertex, build_bn, build_ln, line_graph, ln_adjacent, relabel_bn_edge

DEFAULT_BUDGET = 10**8

NOT_ADJACENT = "not-adjacent"
DUPLICATE_VERTEX = "duplicate-vertex"
WRONG_ENDPOINT = "wrong-endpoint"
WRONG_LENGTH = "wrong-length"
NOT_CLOSED = "not-closed"
UNKNOWN_VERTEX = "unknown-vertex"


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of checking a certificate.

    Violation indices: ``not-adjacent`` at k means vertices[k] and vertices[k+1]
    are not adjacent (for ``not-closed``, k is the last index); ``wrong-length``
    is reported at index len(vertices).
    """

    violations: Tuple[Tuple[int, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def lines(self) -> List[str]:
        return [f"{reason} at index {idx}" for idx, reason in self.violations]


def _check_sequence(g: LnGraph, vertices: Sequence) -> List[Tuple[int, str]]:
    out = []
    known = [v in g for v in vertices]
    seen = {}
    for k, v in enumerate(vertices):
        if not known[k]:
            out.append((k, UNKNOWN_VERTEX))
            continue
        key = tuple(v)
        if key in seen:
            out.append((k, DUPLICATE_VERTEX))
        else:
            seen[key] = k
    for k in range(len(vertices) - 1):
        if known[k] and known[k + 1] and not ln_adjacent(tuple(vertices[k]), tuple(vertices[k + 1])):
            out.append((k, NOT_ADJACENT))
    return out


def _sorted(violations) -> Tuple[Tuple[int, str], ...]:
    return tuple(sorted(violations))


def verify_path(g: LnGraph, cert: PathCertificate, length: Optional[int] = None) -> VerificationResult:
    """Check a path certificate; ``length`` (in edges) is checked only when given."""
    vs = cert.vertices
    out = []
    if cert.n != g.n:
        raise ValueError(f"certificate is for L({cert.n}), graph is L({g.n})")
    if not vs:
        return VerificationResult(((0, WRONG_LENGTH),))
    out.extend(_check_sequence(g, vs))
    if tuple(vs[0]) != tuple(cert.endpoints[0]):
        out.append((0, WRONG_ENDPOINT))
    if tuple(vs[-1]) != tuple(cert.endpoints[1]):
        out.append((len(vs) - 1, WRONG_ENDPOINT))
    if length is not None and len(vs) - 1 != length:
        out.append((len(vs), WRONG_LENGTH))
    return VerificationResult(_sorted(out))


def verify_cycle(g: LnGraph, cert: CycleCertificate, length: Optional[int] = None) -> VerificationResult:
    """Check a cycle certificate: simple, closed, at least 3 vertices, anchor first."""
    vs = cert.vertices
    out = []
    if cert.n != g.n:
        raise ValueError(f"certificate is for L({cert.n}), graph is L({g.n})")
    out.extend(_check_sequence(g, vs))
    if len(vs) < 3 or (length is not None and len(vs) != length):
        out.append((len(vs), WRONG_LENGTH))
    if vs and tuple(vs[0]) != tuple(cert.anchor):
        out.append((0, WRONG_ENDPOINT))
    if len(vs) >= 2 and vs[0] in g and vs[-1] in g and not ln_adjacent(tuple(vs[-1]), tuple(vs[0])):
        out.append((len(vs) - 1, NOT_CLOSED))
    return VerificationResult(_sorted(out))


def verify(g: LnGraph, cert, length: Optional[int] = None) -> VerificationResult:
    if isinstance(cert, CycleCertificate):
        return verify_cycle(g, cert, length)
    return verify_path(g, cert, length)


# --------------------------------------------------------------------------- search oracles


def _search(g: LnGraph, src: Vertex, dst: Vertex, length: int, budget: int, counter=None):
    out = np.zeros(max(length, 0) + 1, dtype=np.int64)
    if counter is None:
        counter = np.zeros(1, dtype=np.int64)
    status = kernels.find_path(
        g.indptr, g.indices, g.index[src], g.index[dst], length, budget, out, counter
    )
    if status == kernels.BUDGET_EXHAUSTED:
        raise SearchBudgetExceeded(budget)
    if status == kernels.FOUND:
        return [g.vertices[k] for k in out]
    return None


def find_path_of_length(g: LnGraph, u, v, l: int, budget: int = DEFAULT_BUDGET) -> Optional[List[Vertex]]:
    """A simple u-v path with exactly ``l`` edges, or None.

    Raises :class:`SearchBudgetExceeded` when the search cannot decide.
    """
    u = g.check_vertex(u)
    v = g.check_vertex(v)
    if l < 1:
        raise ValueError("path length must be at least 1")
    return _search(g, u, v, l, budget)


def exists_path_of_length(g: LnGraph, u, v, l: int, budget: int = DEFAULT_BUDGET) -> bool:
    return find_path_of_length(g, u, v, l, budget) is not None


def find_cycle_through(g: LnGraph, v, l: int, budget: int = DEFAULT_BUDGET) -> Optional[List[Vertex]]:
    """A simple l-cycle starting at ``v`` (closing back to it), or None."""
    v = g.check_vertex(v)
    if l < 3:
        raise ValueError("cycle length must be at least 3")
    counter = np.zeros(1, dtype=np.int64)
    for u in g.neighbors(v):
        found = _search(g, v, u, l - 1, budget, counter)
        if found is not None:
            return found
    return None


def exists_cycle_of_length_through(g: LnGraph, v, l: int, budget: int = DEFAULT_BUDGET) -> bool:
    return find_cycle_through(g, v, l, budget) is not None


def edge_cycle_membership(g: LnGraph, e, l: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff some simple l-cycle uses the edge ``e`` = (x, y)."""
    x, y = (g.check_vertex(p) for p in e)
    if not ln_adjacent(x, y):
        raise InvalidVertexError(f"{x} and {y} are not adjacent")
    if l < 3:
        raise ValueError("cycle length must be at least 3")
    # a y-x path of l-1 >= 2 edges never reuses the edge itself
    return _search(g, y, x, l - 1, budget) is not None


# --------------------------------------------------------------------------- spectrum


def claimed_eigenvalues(n: int) -> Tuple[int, ...]:
    return (-2, -1, 0, n - 2, n - 1)


def _norm_bound(n: int, values: Sequence[int]) -> int:
    # max absolute row sum of A - c I is (n - 1) + |c|; it bounds every entry of the product
    bound = 1
    for c in values:
        bound *= (n - 1) + abs(c)
    return bound


def annihilating_product(g: LnGraph, values: Optional[Sequence[int]] = None) -> np.ndarray:
    """Exact product of (A - c I) over ``values`` (default: the claimed spectrum).

    Uses int64 kernels when the entry bound fits, Python integers otherwise.
    """
    values = claimed_eigenvalues(g.n) if values is None else tuple(values)
    a = g.adjacency_matrix()
    eye = np.eye(g.order, dtype=np.int64)
    if _norm_bound(g.n, values) < 2**62:
        prod = eye.copy()
        for c in values:
            prod = kernels.int_matmul(prod, a - c * eye)
        return prod
    a_obj = a.astype(object)
    eye_obj = eye.astype(object)
    prod = eye_obj.copy()
    for c in values:
        prod = prod.dot(a_obj - c * eye_obj)
    return prod


def check_spectrum(g: LnGraph) -> bool:
    """True iff every adjacency eigenvalue of L(n) lies in {-2, -1, 0, n-2, n-1}."""
    return not np.any(annihilating_product(g))


def attained_eigenvalues(g: LnGraph) -> Tuple[int, ...]:
    """Which claimed values actually occur as eigenvalues.

    A is symmetric, so its minimal polynomial is squarefree; once the full
    product vanishes, a value c is an eigenvalue iff dropping the factor for c
    leaves a nonzero product.
    """
    claim = tuple(dict.fromkeys(claimed_eigenvalues(g.n)))
    if np.any(annihilating_product(g, claim)):
        raise ValueError(f"spectrum of L({g.n}) is not contained in {claim}")
    return tuple(c for c in claim if np.any(annihilating_product(g, [x for x in claim if x != c])))


# --------------------------------------------------------------------------- cross-validation


def cross_validate_line_graph(n: int) -> bool:
    """Compare build_ln(n) with the relabeled line graph of build_bn(n)."""
    direct = build_ln(n).adjacency_sets()
    via_bn = {
        relabel_bn_edge(e): frozenset(relabel_bn_edge(x) for x in nb)
        for e, nb in line_graph(build_bn(n)).items()
    }
    return direct == via_bn


@dataclass
class SurveyReport:
    kind: str
    n: int
    total: int = 0
    passed: int = 0
    failures: List[Tuple[str, str]] = field(default_factory=list)
    fallbacks: int = 0
    elapsed: float = 0.0
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.passed == self.total

    def record(self, case: str, ok: bool, reason: str = "") -> None:
        self.total += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append((case, reason))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "total": self.total,
            "passed": self.passed,
            "failures": [list(f) for f in self.failures],
            "fallbacks": self.fallbacks,
            "notes": list(self.notes),
            "ok": self.ok,
        }

    def summary(self) -> str:
        head = f"{self.kind} n={self.n}: {self.passed}/{self.total} pass"
        lines = [head + ("" if self.ok else " FAILED")]
        lines += [f"  {note}" for note in self.notes]
        lines += [f"  FAIL {case}: {reason}" for case, reason in self.failures]
        return "\n".join(lines)


NEGATIVE_PAIR = (Vertex(1, 2), Vertex(2, 1))

# n -> cycle lengths that no vertex of L(n) lies on
ABSENT_CYCLE_LENGTHS = {4: (4, 5), 5: (5,)}


def negatives_survey(g: LnGraph, budget: int = DEFAULT_BUDGET) -> SurveyReport:
    """Exhaustively confirm the known non-existence results for L(n).

    Each case passes only on a definite "no"; an exhausted budget is a failure.
    """
    report = SurveyReport(kind="negatives", n=g.n)
    start = time.perf_counter()
    u, v = NEGATIVE_PAIR

    def expect_none(case, query):
        try:
            found = query()
        except SearchBudgetExceeded as exc:
            report.record(case, False, f"unknown: {exc}")
            return
        report.record(case, not found, "" if not found else "a witness exists")

    for l in (3, 4):
        expect_none(f"no path of length {l} between {u} and {v}", lambda: exists_path_of_length(g, u, v, l, budget))
    for l in (3, 4):
        expect_none(f"edge {{{u},{v}}} on no {l}-cycle", lambda: edge_cycle_membership(g, (u, v), l, budget))
    for l in ABSENT_CYCLE_LENGTHS.get(g.n, ()):
        expect_none(
            f"no {l}-cycle in L({g.n})",
            lambda: any(exists_cycle_of_length_through(g, x, l, budget) for x in g.vertices),
        )
    report.elapsed = time.perf_counter() - start
    return report


def spectrum_survey(g: LnGraph) -> SurveyReport:
    report = SurveyReport(kind="spectrum", n=g.n)
    start = time.perf_counter()
    claim = claimed_eigenvalues(g.n)
    ok = check_spectrum(g)
    report.record(f"annihilating product over {sorted(set(claim))} vanishes", ok)
    if ok:
        report.notes.append(f"attained eigenvalues: {sorted(attained_eigenvalues(g))}")
    report.elapsed = time.perf_counter() - start
    return report
