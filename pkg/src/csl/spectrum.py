"""Cycle lengths: bounded exhaustive search, an exact oracle, girth and gap certificates.

The workhorse is :func:`enumerate_cycle_lengths_upto`.  Edges are taken in
index order.  For edge ``uv`` every simple ``v -> u`` path of length at most
``L - 1`` avoiding the edges already processed is explored by depth-first
search, and the edge is then deleted, so each cycle is seen from exactly one
edge (its smallest).  Before the search a breadth-first pass computes
distances to ``u``; a branch at depth ``t`` standing on ``y`` is cut as soon
as ``t + 1 + dist(y) > L``.  On the family graphs this pruning keeps the
search linear in practice.
"""

from __future__ import annotations

import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import BudgetExceeded, CircumferenceTooSmall, Forest, TooLarge
from .plane import PlaneGraph

__all__ = [
    "CycleLengthSet",
    "GapCertificate",
    "SearchBudget",
    "Circumference",
    "enumerate_cycle_lengths_upto",
    "full_spectrum_oracle",
    "has_cycle_in",
    "circumference",
    "girth",
    "gap_report",
    "is_cycle",
]

ORACLE_LIMIT = 24


@dataclass(frozen=True)
class SearchBudget:
    """Limits for a bounded search; ``None`` means unlimited."""

    max_length: int | None = None
    max_nodes: int | None = None
    max_seconds: float | None = None

    def __post_init__(self):
        for name in ("max_length", "max_nodes", "max_seconds"):
            val = getattr(self, name)
            if val is not None and val <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class CycleLengthSet:
    """Cycle lengths found, with the horizon they are complete up to.

    ``horizon`` is ``None`` when the whole graph was enumerated (the set is
    then the exact spectrum).  ``witnesses`` maps some lengths to a cycle
    given as a vertex index sequence.
    """

    lengths: tuple
    horizon: int | None
    exhaustive: bool = True
    witnesses: dict = field(default_factory=dict, compare=False, repr=False)
    nodes: int = field(default=0, compare=False)

    def __contains__(self, c):
        return c in self.lengths

    def __iter__(self):
        return iter(self.lengths)

    def __len__(self):
        return len(self.lengths)

    def within(self, a: int, b: int) -> list:
        return [c for c in self.lengths if a <= c <= b]


@dataclass(frozen=True)
class Circumference:
    length: int
    exact: bool
    witness: tuple = ()


@dataclass(frozen=True)
class GapCertificate:
    """``spectrum(G)`` misses ``[k, gap_end]``; ``witness`` is a cycle longer than ``gap_end``.

    ``gap_end == k - 1`` means there is no gap at ``k`` (the witness then has
    length exactly ``k``).
    """

    k: int
    gap_end: int
    witness: tuple
    horizon: int
    exhaustive: bool
    lengths: tuple = ()
    witness_source: str = "search"

    @property
    def interval(self):
        return (self.k, self.gap_end) if self.gap_end >= self.k else None

    @property
    def witness_length(self) -> int:
        return len(self.witness)

    @property
    def has_gap(self) -> bool:
        return self.gap_end >= self.k


def _adjacency(G: PlaneGraph):
    return [sorted(s) for s in G.adjacency()]


def is_cycle(G: PlaneGraph, verts) -> bool:
    """True iff ``verts`` is a simple cycle of ``G`` (length at least 3)."""
    verts = list(verts)
    if len(verts) < 3 or len(set(verts)) != len(verts):
        return False
    adj = G.adjacency()
    return all(verts[i] in adj[verts[i - 1]] for i in range(len(verts)))


def _search(adj, edges, L, todo, want=None, budget=None, witnesses=None):
    """Core bounded search.

    ``edges`` are processed in order and deleted; the DFS runs only for
    positions listed in ``todo``.  ``want`` is an optional ``(a, b)``
    interval for early exit.  Returns ``(found, nodes, hit)``.
    """
    adj = [list(r) for r in adj]
    found = set()
    nodes = 0
    max_nodes = budget.max_nodes if budget else None
    deadline = time.monotonic() + budget.max_seconds if budget and budget.max_seconds else None
    todo = set(todo)
    for ei, (u, v) in enumerate(edges):
        adj[u].remove(v)
        adj[v].remove(u)
        if ei not in todo:
            continue
        dist = {u: 0}
        dq = deque([u])
        while dq:
            x = dq.popleft()
            dx = dist[x]
            if dx >= L - 1:
                continue
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dx + 1
                    dq.append(y)
        if v not in dist:
            continue
        path = [v]
        onpath = {v}
        stack = [iter(adj[v])]
        while stack:
            it = stack[-1]
            depth = len(path)
            for y in it:
                if y == u:
                    c = depth + 1
                    if c not in found:
                        found.add(c)
                        if witnesses is not None:
                            witnesses[c] = tuple([u] + path)
                        if want and want[0] <= c <= want[1]:
                            return found, nodes, c
                    continue
                if y in onpath:
                    continue
                dy = dist.get(y)
                if dy is None or depth + 1 + dy > L:
                    continue
                path.append(y)
                onpath.add(y)
                stack.append(iter(adj[y]))
                nodes += 1
                if max_nodes is not None and nodes > max_nodes:
                    raise _Stop(found, nodes)
                if deadline is not None and not nodes & 4095 and time.monotonic() > deadline:
                    raise _Stop(found, nodes)
                break
            else:
                stack.pop()
                onpath.discard(path.pop())
    return found, nodes, None


class _Stop(Exception):
    def __init__(self, found, nodes):
        self.found = found
        self.nodes = nodes


def _worker(args):
    adj, edges, L, todo, want, budget = args
    wit = {}
    try:
        found, nodes, hit = _search(adj, edges, L, todo, want, budget, wit)
    except _Stop as stop:
        return stop.found, stop.nodes, None, wit, False
    return found, nodes, hit, wit, True


def _run(G, L, want=None, budget=None, jobs=1):
    adj = _adjacency(G)
    edges = sorted({(min(a, b), max(a, b)) for a, b in G.edges()})
    idx = list(range(len(edges)))
    if jobs <= 1 or len(edges) < 64:
        parts = [idx]
    else:
        parts = [idx[i::jobs] for i in range(jobs)]
    args = [(adj, edges, L, p, want, budget) for p in parts]
    if len(args) == 1:
        results = [_worker(args[0])]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_worker, args))
    found, wit, nodes, complete, hit = set(), {}, 0, True, None
    for f, nd, h, w, ok in results:
        found |= f
        nodes += nd
        complete &= ok
        for c, cyc in w.items():
            wit.setdefault(c, cyc)
        if h is not None and (hit is None or h < hit):
            hit = h
    return found, wit, nodes, complete, hit


def enumerate_cycle_lengths_upto(G: PlaneGraph, L: int, budget: SearchBudget | None = None, jobs: int = 1) -> CycleLengthSet:
    """All cycle lengths ``<= L``.

    Raises:
        BudgetExceeded: with the partial set (``exhaustive=False``) attached.
    """
    if L < 3:
        raise ValueError("L must be at least 3")
    if budget and budget.max_length:
        L = min(L, budget.max_length)
    found, wit, nodes, complete, _ = _run(G, L, None, budget, jobs)
    res = CycleLengthSet(tuple(sorted(found)), L, complete, wit, nodes)
    if not complete:
        raise BudgetExceeded(res)
    return res


def has_cycle_in(G: PlaneGraph, a: int, b: int, budget: SearchBudget | None = None, jobs: int = 1):
    """A cycle (vertex index tuple) with length in ``[a, b]``, or ``None`` if there is none."""
    if not 3 <= a <= b:
        raise ValueError("need 3 <= a <= b")
    b_eff = min(b, G.n)
    if a > b_eff:
        return None
    found, wit, nodes, complete, hit = _run(G, b_eff, (a, b_eff), budget, jobs)
    if hit is not None:
        return wit[hit]
    if not complete:
        raise BudgetExceeded(CycleLengthSet(tuple(sorted(found)), b_eff, False, wit, nodes))
    return None


def full_spectrum_oracle(G: PlaneGraph, limit: int = ORACLE_LIMIT) -> CycleLengthSet:
    """Exact spectrum by enumerating every simple cycle.

    Cycles are rooted at their smallest vertex and grown through larger
    vertices only; each cycle is met twice (once per direction).  This is a
    different enumeration from the bounded search and serves as its oracle.
    """
    if G.n > limit:
        raise TooLarge(f"{G.n} vertices exceeds the oracle limit {limit}")
    adj = _adjacency(G)
    found = set()
    wit = {}
    for r in range(G.n):
        path = [r]
        onpath = {r}
        stack = [iter([w for w in adj[r] if w > r])]
        while stack:
            advanced = False
            for y in stack[-1]:
                if y in onpath:
                    continue
                path.append(y)
                onpath.add(y)
                if len(path) >= 3 and r in adj[y]:
                    c = len(path)
                    if c not in found:
                        found.add(c)
                        wit[c] = tuple(path)
                stack.append(iter([w for w in adj[y] if w > r]))
                advanced = True
                break
            if not advanced:
                stack.pop()
                onpath.discard(path.pop())
    return CycleLengthSet(tuple(sorted(found)), None, True, wit)


def _facial_cycles(G: PlaneGraph):
    for f in G.faces():
        if len(set(f.vertices)) == len(f.vertices) >= 3:
            yield f


def circumference(G: PlaneGraph, exact_threshold: int = ORACLE_LIMIT) -> Circumference:
    """Longest cycle; exact up to ``exact_threshold`` vertices, else a lower bound from the faces."""
    if G.n <= exact_threshold:
        spec = full_spectrum_oracle(G, limit=max(exact_threshold, G.n))
        if not spec.lengths:
            return Circumference(0, True, ())
        c = spec.lengths[-1]
        return Circumference(c, True, spec.witnesses[c])
    best = max(_facial_cycles(G), key=lambda f: f.length, default=None)
    if best is None:
        return Circumference(0, False, ())
    return Circumference(best.length, False, best.vertices)


def girth(G: PlaneGraph) -> int:
    """Shortest cycle length, by a breadth-first search from every vertex."""
    if not G.is_simple():
        return 2
    adj = _adjacency(G)
    best = None
    for r in range(G.n):
        dist = {r: 0}
        parent = {r: -1}
        dq = deque([r])
        while dq:
            x = dq.popleft()
            if best is not None and 2 * dist[x] + 1 >= best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    dq.append(y)
                elif parent[x] != y:
                    c = dist[x] + dist[y] + 1
                    if best is None or c < best:
                        best = c
        if best == 3:
            break
    if best is None:
        raise Forest("graph has no cycle")
    return best


def gap_report(G: PlaneGraph, k: int, horizon: int | None = None, budget: SearchBudget | None = None,
               jobs: int = 1) -> GapCertificate:
    """Certify the largest ``X`` with no cycle length in ``[k, X]``.

    The search covers lengths up to ``horizon`` (default ``2k + 4``).  If
    the first length at least ``k`` shows up within the horizon its cycle is
    the witness.  Otherwise the longest facial cycle serves, provided it is
    longer than the horizon.

    Raises:
        CircumferenceTooSmall: no cycle of length ``>= k`` could be exhibited.
        BudgetExceeded: the search did not finish.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if horizon is None:
        horizon = 2 * k + 4
    horizon = max(3, min(horizon, G.n))
    res = enumerate_cycle_lengths_upto(G, horizon, budget, jobs)
    labels = G.labels
    long_enough = [c for c in res.lengths if c >= k]
    if long_enough:
        w = long_enough[0]
        return GapCertificate(k, w - 1, tuple(labels[v] for v in res.witnesses[w]), horizon, True,
                              res.lengths, "search")
    best = max(_facial_cycles(G), key=lambda f: f.length, default=None)
    if best is not None and best.length > horizon:
        return GapCertificate(k, horizon, G.face_labels(best), horizon, True, res.lengths, "face")
    if horizon >= G.n:
        raise CircumferenceTooSmall(f"no cycle of length >= {k}")
    if G.n <= ORACLE_LIMIT:
        c = circumference(G)
        if c.length >= k:
            spec = full_spectrum_oracle(G)
            w = min(x for x in spec.lengths if x >= k)
            return GapCertificate(k, w - 1, tuple(labels[v] for v in spec.witnesses[w]), G.n, True,
                                  spec.lengths, "oracle")
        raise CircumferenceTooSmall(f"circumference {c.length} < {k}")
    raise CircumferenceTooSmall(f"no cycle of length >= {k} found up to the horizon {horizon}")
