"""Short/long face bookkeeping and the reduction pipeline.

Faces shorter than ``k`` are *short*, the rest *long*.  The pipeline runs on
any 2-connected plane graph:

1. :func:`reduce_to_g_prime` repeatedly deletes the common edges of two
   adjacent short faces and keeps the block containing a fixed long face;
2. :func:`make_subcubic` splits vertices of degree above three;
3. :func:`counting_report` suppresses degree-two vertices and evaluates the
   counting inequalities;
4. :func:`discharge` and :func:`interior_charge_check` run the face-charge
   bookkeeping on a cubic graph.

Steps whose validity depends on the graph having no cycle in a forbidden
interval are evaluated and reported, never assumed.  Faces are matched
between a graph and its derived graphs through dart keys (see
:mod:`csl.plane`).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .errors import (
    FaceNotShort,
    IdentityViolation,
    NoAdjacentShortPair,
    NoLongFace,
    Not2Connected,
    Not3Connected,
    NotCubic,
    NotSubcubic,
)
from .plane import FaceRef, PlaneGraph, biconnected_components, edge_subgraph, is_k_connected, split_vertex, suppress_degree_two

__all__ = [
    "FaceClassification",
    "EliminationStep",
    "ReductionTrace",
    "PropertyCheck",
    "LemmaReport",
    "SplitStep",
    "SplitTrace",
    "CountingReport",
    "ChargeLedger",
    "SubdividedPathDiagnostics",
    "InteriorChargeReport",
    "classify_faces",
    "find_long_facial_cycle",
    "eliminate_step",
    "reduce_to_g_prime",
    "validate_lemma_properties",
    "make_subcubic",
    "counting_report",
    "subdivided_path_bound_check",
    "long_faces_in",
    "discharge",
    "interior_charge_check",
]


@dataclass(frozen=True)
class FaceClassification:
    """Partition of the faces of one graph by length.

    ``X`` holds the ids of faces shorter than ``k``, ``Y`` the others;
    ``lengths[i]`` is the length of face ``i``.
    """

    k: int
    X: tuple
    Y: tuple
    lengths: tuple

    def is_short(self, face_id: int) -> bool:
        return self.lengths[face_id] < self.k

    def to_dict(self) -> dict:
        return {"k": self.k, "X": list(self.X), "Y": list(self.Y), "lengths": list(self.lengths)}


def classify_faces(G: PlaneGraph, k: int) -> FaceClassification:
    lengths = tuple(f.length for f in G.faces())
    X = tuple(i for i, L in enumerate(lengths) if L < k)
    Y = tuple(i for i, L in enumerate(lengths) if L >= k)
    return FaceClassification(k, X, Y, lengths)


def find_long_facial_cycle(G: PlaneGraph, classification: FaceClassification) -> FaceRef:
    """The first long face in face order."""
    if not classification.Y:
        raise NoLongFace(f"every face is shorter than {classification.k}")
    return G.faces()[classification.Y[0]]


def _face_ids_by_key(G: PlaneGraph) -> dict:
    """Dart key -> id of the face on its left."""
    return {G.dart_key(d): G.face_of(d).id for d in range(2 * G.m)}


def _edge_tags(G: PlaneGraph, f: FaceRef) -> frozenset:
    return frozenset(G.tags[d >> 1] for d in f.darts)


def _labels(G: PlaneGraph, verts) -> tuple:
    return tuple(G.label(v) for v in verts)


def _edge_labels(G: PlaneGraph, e: int) -> tuple:
    u, v = G.edge(e)
    return G.label(u), G.label(v)


# -- elimination ------------------------------------------------------------


@dataclass(frozen=True)
class EliminationStep:
    """One elimination of two adjacent short faces.

    ``d_cycles`` are the cycles the symmetric difference of the two faces
    splits into (vertex labels in walk order); ``kept`` lists those whose
    edges all survive in the kept block.
    """

    index: int
    c1: tuple
    c2: tuple
    deleted_edges: tuple
    deleted_vertices: tuple
    d_cycles: tuple
    kept: tuple
    blocks: int
    n_before: int
    m_before: int
    n_after: int
    m_after: int

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "c1": list(self.c1),
            "c2": list(self.c2),
            "deleted_edges": [list(e) for e in self.deleted_edges],
            "deleted_vertices": list(self.deleted_vertices),
            "d_cycles": [list(c) for c in self.d_cycles],
            "kept": list(self.kept),
            "blocks": self.blocks,
            "n_before": self.n_before,
            "m_before": self.m_before,
            "n_after": self.n_after,
            "m_after": self.m_after,
        }


def _adjacent_short_pair(G: PlaneGraph, cls: FaceClassification):
    best = None
    for e in range(G.m):
        a, b = G.face_of(2 * e).id, G.face_of(2 * e + 1).id
        if a != b and cls.is_short(a) and cls.is_short(b):
            pair = (min(a, b), max(a, b))
            if best is None or pair < best:
                best = pair
    return best


def _cycle_decomposition(G: PlaneGraph, edge_ids) -> list:
    """Split an even-degree edge set into edge-disjoint cycles (vertex lists)."""
    inc = {}
    for e in sorted(edge_ids):
        for d in (2 * e, 2 * e + 1):
            inc.setdefault(G.origin(d), []).append(d)
    used = set()
    cycles = []
    for e in sorted(edge_ids):
        if e in used:
            continue
        # walk until a vertex repeats, peel off the closed part; in an
        # even-degree edge set the walk only gets stuck back at its start
        v = G.origin(2 * e)
        path = [v]
        where = {v: 0}
        while True:
            d = next((d for d in inc[v] if (d >> 1) not in used), None)
            if d is None:
                break
            used.add(d >> 1)
            w = G.head(d)
            if w in where:
                i = where[w]
                cycles.append(path[i:])
                for x in path[i + 1:]:
                    del where[x]
                del path[i + 1:]
            else:
                where[w] = len(path)
                path.append(w)
            v = path[-1]
    return cycles


def eliminate_step(G: PlaneGraph, k: int, classification: FaceClassification | None = None,
                   long_key=None, index: int = 0):
    """Delete the common edges of the first adjacent pair of short faces.

    The pair with the lowest face ids is taken.  ``long_key`` is the dart
    key of a dart of the long face to keep; by default the first long face
    is used.

    Returns:
        ``(G_next, EliminationStep)``; ``G_next`` is the block of the
        remaining graph that contains the long face.
    """
    cls = classification if classification is not None else classify_faces(G, k)
    if long_key is None:
        long_key = G.dart_key(find_long_facial_cycle(G, cls).darts[0])
    elif not cls.Y:
        raise NoLongFace(f"every face is shorter than {k}")
    pair = _adjacent_short_pair(G, cls)
    if pair is None:
        raise NoAdjacentShortPair("no two short faces share an edge")
    fl = G.faces()
    c1, c2 = fl[pair[0]], fl[pair[1]]
    e1 = {d >> 1 for d in c1.darts}
    e2 = {d >> 1 for d in c2.darts}
    shared = e1 & e2
    H = edge_subgraph(G, [e for e in range(G.m) if e not in shared])
    hd = H.dart_index()[long_key]
    blocks = biconnected_components(H)
    block = next(b for b in blocks if (hd >> 1) in b)
    G_next = edge_subgraph(H, block)
    kept_tags = set(G_next.tags)
    cycles = _cycle_decomposition(G, e1 ^ e2)
    kept = []
    for i, cyc in enumerate(cycles):
        ids = [G.dart_between(cyc[j], cyc[(j + 1) % len(cyc)]) >> 1 for j in range(len(cyc))]
        if all(G.tags[e] in kept_tags for e in ids):
            kept.append(i)
    gone = sorted(set(range(G.n)) - {G.index(lab) for lab in H.labels})
    step = EliminationStep(
        index=index,
        c1=_labels(G, c1.vertices),
        c2=_labels(G, c2.vertices),
        deleted_edges=tuple(_edge_labels(G, e) for e in sorted(shared)),
        deleted_vertices=_labels(G, gone),
        d_cycles=tuple(_labels(G, c) for c in cycles),
        kept=tuple(kept),
        blocks=len(blocks),
        n_before=G.n,
        m_before=G.m,
        n_after=G_next.n,
        m_after=G_next.m,
    )
    return G_next, step


@dataclass(frozen=True)
class PropertyCheck:
    holds: bool
    witness: object = None

    def to_dict(self) -> dict:
        return {"holds": self.holds, "witness": self.witness}


@dataclass(frozen=True)
class LemmaReport:
    """Outcome per property name ("A" .. "E" or "A'" .. "D'")."""

    checks: dict

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks.values())

    def __getitem__(self, name):
        return self.checks[name]

    def to_dict(self) -> dict:
        return {name: c.to_dict() for name, c in self.checks.items()}


@dataclass
class ReductionTrace:
    k: int
    long_face: tuple
    steps: list = field(default_factory=list)
    properties: LemmaReport | None = None

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "long_face": list(self.long_face),
            "steps": [s.to_dict() for s in self.steps],
            "properties": None if self.properties is None else self.properties.to_dict(),
        }


def reduce_to_g_prime(G: PlaneGraph, k: int, validate: bool = True):
    """Eliminate adjacent short faces until none are left.

    Returns:
        ``(G_prime, ReductionTrace)``.  With ``validate`` the trace carries
        :func:`validate_lemma_properties` for ``(G_prime, G)``.

    Raises:
        Not2Connected: ``G`` has a cut vertex.
        NoLongFace: every face of ``G`` is short.
    """
    if not is_k_connected(G, 2):
        raise Not2Connected("reduction needs a 2-connected graph")
    cls = classify_faces(G, k)
    C = find_long_facial_cycle(G, cls)
    key = G.dart_key(C.darts[0])
    trace = ReductionTrace(k, _labels(G, C.vertices))
    cur = G
    while True:
        try:
            cur, step = eliminate_step(cur, k, cls, key, index=len(trace.steps))
        except NoAdjacentShortPair:
            break
        trace.steps.append(step)
        cls = classify_faces(cur, k)
    if validate:
        trace.properties = validate_lemma_properties(cur, G, k)
    return cur, trace


def _long_pair_ok(Gp, fa, fb):
    va, vb = set(fa.vertices), set(fb.vertices)
    common = va & vb
    if len(common) <= 1:
        return True
    ea = {d >> 1 for d in fa.darts}
    eb = {d >> 1 for d in fb.darts}
    shared = ea & eb
    return len(common) == 2 and len(shared) == 1 and set(Gp.edge(next(iter(shared)))) == common


def validate_lemma_properties(Gp: PlaneGraph, G: PlaneGraph, k: int) -> LemmaReport:
    """Check properties (A) to (E) of a reduced graph against its source.

    (A) no two short faces of ``Gp`` share an edge; (B) ``Gp`` has a long
    face; (C) every long face of ``Gp`` is a face of ``G``; (D) two long
    faces of ``Gp`` meet in nothing, one vertex or one edge; (E) every face
    of ``G`` on the inner side of a short face of ``Gp`` that touches its
    boundary is short.  Witnesses are given as vertex labels.
    """
    cls = classify_faces(Gp, k)
    fl = Gp.faces()
    checks = {}

    bad = None
    for e in range(Gp.m):
        a, b = Gp.face_of(2 * e).id, Gp.face_of(2 * e + 1).id
        if a != b and cls.is_short(a) and cls.is_short(b):
            bad = _edge_labels(Gp, e)
            break
    checks["A"] = PropertyCheck(bad is None, bad)
    checks["B"] = PropertyCheck(bool(cls.Y))

    # (C) and (D) speak about facial cycles, i.e. edge sets: both faces of
    # a bare cycle count as one cycle
    g_cycles = {_edge_tags(G, f) for f in G.faces()}
    bad = None
    for fid in cls.Y:
        f = fl[fid]
        if _edge_tags(Gp, f) not in g_cycles:
            bad = _labels(Gp, f.vertices)
            break
    checks["C"] = PropertyCheck(bad is None, bad)

    bad = None
    distinct = {}
    for fid in cls.Y:
        distinct.setdefault(_edge_tags(Gp, fl[fid]), fid)
    by_vertex = {}
    for fid in distinct.values():
        for v in set(fl[fid].vertices):
            by_vertex.setdefault(v, []).append(fid)
    seen = set()
    for fids in by_vertex.values():
        for i, a in enumerate(fids):
            for b in fids[i + 1:]:
                if (a, b) in seen:
                    continue
                seen.add((a, b))
                if not _long_pair_ok(Gp, fl[a], fl[b]):
                    bad = (_labels(Gp, fl[a].vertices), _labels(Gp, fl[b].vertices))
                    break
            if bad:
                break
        if bad:
            break
    checks["D"] = PropertyCheck(bad is None, bad)

    g_face = _face_ids_by_key(G)
    g_faces = G.faces()
    bad = None
    for fid in cls.X:
        for d in fl[fid].darts:
            gid = g_face.get(Gp.dart_key(d))
            if gid is None or g_faces[gid].length >= k:
                bad = {"face": _labels(Gp, fl[fid].vertices), "edge": _edge_labels(Gp, d >> 1)}
                break
        if bad:
            break
    checks["E"] = PropertyCheck(bad is None, bad)
    return LemmaReport(checks)


# -- vertex splitting -------------------------------------------------------


@dataclass(frozen=True)
class SplitStep:
    """``rule`` is ``"short"`` when the split follows a short face corner."""

    vertex: object
    rule: str
    first_block: tuple
    face_length: int | None

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "rule": self.rule, "first_block": list(self.first_block),
                "face_length": self.face_length}


@dataclass
class SplitTrace:
    steps: list = field(default_factory=list)
    properties: LemmaReport | None = None
    face_map: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"steps": [s.to_dict() for s in self.steps],
                "properties": None if self.properties is None else self.properties.to_dict()}


def _short_corners(G: PlaneGraph, v: int, k: int) -> list:
    """Corners ``(d, sigma(d))`` at ``v`` lying on a short face."""
    out = []
    for d in G.darts_at(v):
        f = G.face_of(d)
        if f.length < k:
            out.append((G.position(d), G.head(d), G.head(G.sigma(d)), f.length))
    return out


def _face_map(G2: PlaneGraph, G1: PlaneGraph) -> dict:
    """Face id of ``G2`` -> face id of ``G1`` through shared dart keys.

    A face of ``G2`` whose known darts land in several faces of ``G1`` maps
    to ``None``.
    """
    g1 = _face_ids_by_key(G1)
    out = {}
    for f in G2.faces():
        ids = {g1[key] for key in (G2.dart_key(d) for d in f.darts) if key in g1}
        out[f.id] = ids.pop() if len(ids) == 1 else None
    return out


def make_subcubic(Gp: PlaneGraph, k: int, choose: Callable | None = None, G: PlaneGraph | None = None):
    """Split vertices of degree above three until the graph is subcubic.

    A vertex on a short face gets a child of degree three adjacent to two
    consecutive neighbours ``w1, w2`` of that face.  ``choose`` picks among
    the candidate corners ``(position, w1, w2, face_length)``; the default
    is the first in rotation order.  Other vertices give their first two
    darts to the first child.  Split children keep provenance labels.

    Returns:
        ``(G2, SplitTrace)``; the trace validates properties (A') to (D')
        and carries the face map ``G2 -> Gp``.  Passing the original graph
        ``G`` also checks that long faces are faces of ``G``.
    """
    cur = Gp
    trace = SplitTrace()
    while True:
        big = [v for v in range(cur.n) if cur.degree(v) > 3]
        if not big:
            break
        v = big[0]
        corners = _short_corners(cur, v, k)
        if corners:
            pos, w1, w2, length = (choose or (lambda c: c[0]))(corners)
            step = SplitStep(cur.label(v), "short", (cur.label(w1), cur.label(w2)), length)
        else:
            pos = 0
            nb = cur.neighbors(v)
            step = SplitStep(cur.label(v), "free", (cur.label(nb[0]), cur.label(nb[1])), None)
        cur = split_vertex(cur, v, [pos, pos + 1])
        trace.steps.append(step)
    trace.face_map = _face_map(cur, Gp)
    trace.properties = _validate_split(cur, Gp, k, trace.face_map, G)
    return cur, trace


def _validate_split(G2, Gp, k, fmap, G=None) -> LemmaReport:
    fl2, fl1 = G2.faces(), Gp.faces()
    checks = {}
    bijective = None not in fmap.values() and sorted(fmap.values()) == list(range(len(fl1)))
    bad = None
    for f in fl2:
        src = fmap.get(f.id)
        if src is None:
            bad = _labels(G2, f.vertices)
            break
        L1 = fl1[src].length
        if (L1 < k and f.length != L1) or f.length < L1:
            bad = _labels(G2, f.vertices)
            break
    checks["faces"] = PropertyCheck(bijective and bad is None, bad)

    short = [f for f in fl2 if f.length < k]
    owner = {}
    bad = None
    for f in short:
        for v in f.vertices:
            if v in owner and owner[v] != f.id:
                bad = (_labels(G2, fl2[owner[v]].vertices), _labels(G2, f.vertices))
                break
            owner[v] = f.id
        if bad:
            break
    checks["A'"] = PropertyCheck(bad is None, bad)
    longs = [f for f in fl2 if f.length >= k]
    checks["B'"] = PropertyCheck(bool(longs))

    bad = None
    g_cycles = {_edge_tags(G, f) for f in G.faces()} if G is not None else None
    for f in longs:
        src = fmap.get(f.id)
        if src is None or fl1[src].length < k:
            bad = _labels(G2, f.vertices)
            break
        if g_cycles is not None and _edge_tags(Gp, fl1[src]) not in g_cycles:
            bad = _labels(G2, f.vertices)
            break
    checks["C'"] = PropertyCheck(bad is None, bad)

    bad = None
    edge_faces = Counter()
    for e in range(G2.m):
        a, b = G2.face_of(2 * e).id, G2.face_of(2 * e + 1).id
        if a != b and fl2[a].length >= k and fl2[b].length >= k:
            edge_faces[(min(a, b), max(a, b))] += 1
    for (a, b), c in sorted(edge_faces.items()):
        if c >= 2:
            bad = (_labels(G2, fl2[a].vertices), _labels(G2, fl2[b].vertices))
            break
    checks["D'"] = PropertyCheck(bad is None, bad)
    return LemmaReport(checks)


# -- counting ---------------------------------------------------------------


@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: int
    rel: str
    rhs: int

    @property
    def holds(self) -> bool:
        return {"==": self.lhs == self.rhs, ">=": self.lhs >= self.rhs,
                "<=": self.lhs <= self.rhs, "<": self.lhs < self.rhs}[self.rel]

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rel": self.rel, "rhs": self.rhs, "holds": self.holds}


@dataclass(frozen=True)
class CountingReport:
    """Counting data of the suppressed graph ``H``.

    ``x``/``y`` count faces shorter/not shorter than ``k`` (lengths measured
    before suppression); ``paths_X`` is the number of subdivided paths on
    the short faces.  ``contradiction`` is true when every inequality in
    the chain holds, which cannot happen for a real graph.
    """

    k: int
    n: int
    x: int
    y: int
    h_simple: bool
    paths_X: int
    sum_X: int
    sum_Y: int
    min_paths_per_face: int
    checks: tuple

    def check(self, name: str) -> Inequality:
        return next(c for c in self.checks if c.name == name)

    @property
    def failures(self) -> list:
        return [c.name for c in self.checks if not c.holds]

    @property
    def contradiction(self) -> bool:
        return self.h_simple and not self.failures

    def to_dict(self) -> dict:
        return {
            "k": self.k, "n": self.n, "x": self.x, "y": self.y, "h_simple": self.h_simple,
            "paths_X": self.paths_X, "sum_X": self.sum_X, "sum_Y": self.sum_Y,
            "min_paths_per_face": self.min_paths_per_face,
            "checks": [c.to_dict() for c in self.checks],
            "failures": self.failures, "contradiction": self.contradiction,
        }


def counting_report(G2: PlaneGraph, k: int) -> CountingReport:
    """Suppress degree-two vertices of a subcubic graph and count.

    The Euler identity ``x + y = n/2 + 2`` is asserted (it holds for every
    2-connected cubic plane graph); all other relations are reported.

    Raises:
        NotSubcubic, Not2Connected: input preconditions.
        AllDegreeTwo: ``G2`` is a cycle, so there is nothing to count.
        IdentityViolation: the Euler identity fails.
    """
    if G2.max_degree() > 3:
        raise NotSubcubic(f"maximum degree {G2.max_degree()}")
    if not is_k_connected(G2, 2):
        raise Not2Connected("counting needs a 2-connected graph")
    H, pm = suppress_degree_two(G2)
    n = H.n
    lH, l = [], []
    for f in H.faces():
        lH.append(f.length)
        l.append(sum(pm[d >> 1].length for d in f.darts))
    X = [i for i, L in enumerate(l) if L < k]
    Y = [i for i, L in enumerate(l) if L >= k]
    x, y = len(X), len(Y)
    paths_X = sum(lH[i] for i in X)
    sum_X = sum(l[i] for i in X)
    sum_Y = sum(l[i] for i in Y)
    if H.is_cubic() and 2 * (x + y) != n + 4:
        raise IdentityViolation(f"x + y = {x + y} but n/2 + 2 = {n / 2 + 2}")
    checks = (
        Inequality("euler", 2 * (x + y), "==", n + 4),
        Inequality("n>=paths_X", n, ">=", paths_X),
        Inequality("paths_X>=3x", paths_X, ">=", 3 * x),
        Inequality("paths_per_face>=3", min(lH, default=0), ">=", 3),
        Inequality("sum_Y<=3n+(k-7)x", sum_Y, "<=", 3 * n + (k - 7) * x),
        Inequality("sum_Y>=(2k+4)y", sum_Y, ">=", (2 * k + 4) * y),
        Inequality("final", (k + 2) * n - (2 * k + 4) * x, "<", 3 * n + (k - 7) * x),
    )
    return CountingReport(k, n, x, y, H.is_simple(), paths_X, sum_X, sum_Y, min(lH, default=0), checks)


# -- subdivided paths on short faces ---------------------------------------


@dataclass(frozen=True)
class FacePathInfo:
    face: tuple
    length: int
    paths: int
    longest: int
    p: int
    r: int

    @property
    def slack(self) -> int:
        return self.length - 3 - (self.p + self.r)

    def to_dict(self) -> dict:
        return {"face": list(self.face), "length": self.length, "paths": self.paths,
                "longest": self.longest, "p": self.p, "r": self.r, "slack": self.slack}


@dataclass(frozen=True)
class SubdividedPathDiagnostics:
    """Per short face: longest subdivided path (in edges) against ``(k-3)/2``.

    ``p`` is the number of inner vertices of the longest path and ``r`` the
    number of other degree-two vertices on the face.
    """

    k: int
    faces: tuple

    @property
    def bound(self) -> float:
        return (self.k - 3) / 2

    @property
    def max_path(self) -> int:
        return max((f.longest for f in self.faces), default=0)

    @property
    def within_bound(self) -> bool:
        return 2 * self.max_path <= self.k - 3

    @property
    def slack_ok(self) -> bool:
        return all(f.slack >= 0 for f in self.faces if f.paths >= 3)

    def to_dict(self) -> dict:
        return {"k": self.k, "bound": self.bound, "max_path": self.max_path,
                "within_bound": self.within_bound, "slack_ok": self.slack_ok,
                "faces": [f.to_dict() for f in self.faces]}


def subdivided_path_bound_check(Gp: PlaneGraph, k: int,
                                classification: FaceClassification | None = None) -> SubdividedPathDiagnostics:
    cls = classification if classification is not None else classify_faces(Gp, k)
    fl = Gp.faces()
    out = []
    for fid in cls.X:
        f = fl[fid]
        deg2 = [Gp.degree(v) == 2 for v in f.vertices]
        L = f.length
        if all(deg2):
            out.append(FacePathInfo(_labels(Gp, f.vertices), L, 0, L, L, 0))
            continue
        start = deg2.index(False)
        runs = []
        run = 0
        for i in range(1, L + 1):
            if deg2[(start + i) % L]:
                run += 1
            else:
                runs.append(run)
                run = 0
        p = max(runs)
        out.append(FacePathInfo(_labels(Gp, f.vertices), L, len(runs), p + 1, p, sum(deg2) - p))
    return SubdividedPathDiagnostics(k, tuple(out))


# -- discharging ------------------------------------------------------------


@dataclass
class ChargeLedger:
    """Face charges before and after moving one unit across each edge
    from a face in ``Y`` to a face outside ``Y``.

    ``bounds[f] = (final, ceil(l/((k-3)/2 + 1)), holds)`` for ``f`` in ``Y``.
    """

    k: int
    Y: tuple
    initial: list
    final: list
    transfers: list
    bounds: dict

    @property
    def conserved(self) -> bool:
        return sum(self.initial) == sum(self.final)

    @property
    def euler_sum(self) -> int:
        return sum(c - 6 for c in self.initial)

    @property
    def deficient(self) -> list:
        return [i for i, c in enumerate(self.final) if c < 6]

    def to_dict(self) -> dict:
        return {
            "k": self.k, "Y": list(self.Y), "initial": self.initial, "final": self.final,
            "transfers": [list(t) for t in self.transfers],
            "bounds": {str(f): list(b) for f, b in self.bounds.items()},
            "conserved": self.conserved, "euler_sum": self.euler_sum, "deficient": self.deficient,
        }


def long_faces_in(G: PlaneGraph, Gp: PlaneGraph, k: int) -> tuple:
    """Ids of the faces of ``G`` that are long faces of ``Gp``."""
    g_face = _face_ids_by_key(G)
    g_faces = G.faces()
    out = set()
    for f in Gp.faces():
        if f.length < k:
            continue
        ids = {g_face.get(Gp.dart_key(d)) for d in f.darts}
        if len(ids) == 1 and None not in ids:
            gid = ids.pop()
            if g_faces[gid].length == f.length:
                out.add(gid)
    return tuple(sorted(out))


def discharge(G: PlaneGraph, k: int, Y=None) -> ChargeLedger:
    """Run the discharging rule on a cubic 3-connected plane graph.

    ``Y`` is a collection of face ids of ``G`` (default: faces of length
    at least ``k``).  Conservation and ``sum(l - 6) == -12`` are asserted.
    """
    if not G.is_cubic():
        raise NotCubic("discharging needs a cubic graph")
    if not is_k_connected(G, 3):
        raise Not3Connected("discharging needs a 3-connected graph")
    fl = G.faces()
    Y = tuple(sorted(set(Y))) if Y is not None else tuple(f.id for f in fl if f.length >= k)
    inY = set(Y)
    initial = [f.length for f in fl]
    final = list(initial)
    transfers = []
    for e in range(G.m):
        a, b = G.face_of(2 * e).id, G.face_of(2 * e + 1).id
        for src, dst in ((a, b), (b, a)):
            if src in inY and dst not in inY:
                final[src] -= 1
                final[dst] += 1
                transfers.append((_edge_labels(G, e), src, dst))
    bounds = {}
    for f in Y:
        need = -(-2 * initial[f] // (k - 1))
        bounds[f] = (final[f], need, final[f] >= need)
    ledger = ChargeLedger(k, Y, initial, final, transfers, bounds)
    if not ledger.conserved:
        raise IdentityViolation("charge not conserved")
    if ledger.euler_sum != -12:
        raise IdentityViolation(f"sum of (l - 6) is {ledger.euler_sum}, expected -12")
    return ledger


@dataclass(frozen=True)
class InteriorChargeReport:
    """Charge inside one short face ``F0`` of a reduced graph.

    ``p1`` counts boundary vertices whose third edge leaves ``F0``; ``p2``
    counts boundary vertices whose third edge enters it plus inner
    vertices.
    """

    face: tuple
    p1: int
    p2: int
    interior_faces: tuple
    expected_faces: float
    charge: int
    expected_charge: int
    excess: int

    @property
    def face_count_ok(self) -> bool:
        return len(self.interior_faces) == self.expected_faces

    @property
    def charge_ok(self) -> bool:
        return self.charge == self.expected_charge

    def to_dict(self) -> dict:
        return {"face": list(self.face), "p1": self.p1, "p2": self.p2,
                "interior_faces": list(self.interior_faces), "expected_faces": self.expected_faces,
                "face_count_ok": self.face_count_ok, "charge": self.charge,
                "expected_charge": self.expected_charge, "charge_ok": self.charge_ok,
                "excess": self.excess}


def interior_charge_check(G: PlaneGraph, Gp: PlaneGraph, F0: FaceRef, ledger: ChargeLedger,
                          k: int) -> InteriorChargeReport:
    """Count vertices and faces of cubic ``G`` inside the face ``F0`` of ``Gp``.

    The inside of ``F0`` is the side its darts have on their left.
    """
    if F0.length >= k:
        raise FaceNotShort(f"face of length {F0.length} is not shorter than {k}")
    idx = G.dart_index()
    gdarts = [idx[Gp.dart_key(d)] for d in F0.darts]
    boundary_edges = {d >> 1 for d in gdarts}
    start = {G.face_of(d).id for d in gdarts}
    inside = set(start)
    todo = list(start)
    fl = G.faces()
    while todo:
        f = todo.pop()
        for d in fl[f].darts:
            if d >> 1 in boundary_edges:
                continue
            g = G.face_of(d ^ 1).id
            if g not in inside:
                inside.add(g)
                todo.append(g)
    inner_darts = {d for f in inside for d in fl[f].darts}
    bverts = {G.origin(d) for d in gdarts}
    p1 = p2 = 0
    for v in bverts:
        third = [d for d in G.darts_at(v) if d >> 1 not in boundary_edges]
        if third and third[0] in inner_darts and third[0] ^ 1 in inner_darts:
            p2 += 1
        else:
            p1 += 1
    for v in range(G.n):
        if v not in bverts and all(d in inner_darts for d in G.darts_at(v)):
            p2 += 1
    charge = sum(ledger.final[f] for f in inside)
    faces_in = tuple(sorted(inside))
    return InteriorChargeReport(
        face=_labels(Gp, F0.vertices),
        p1=p1,
        p2=p2,
        interior_faces=faces_in,
        expected_faces=p2 / 2 + 1,
        charge=charge,
        expected_charge=2 * p1 + 3 * p2,
        excess=charge - 6 * len(faces_in),
    )
