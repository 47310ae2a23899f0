"""Random and exhaustive generation of 3-connected plane graphs.

Graphs are grown from the tetrahedron by two kinds of embedding-preserving
expansions, both of which keep 3-connectivity:

* face splits: a new edge across a face, whose ends are corners of the face
  or new vertices subdividing edges of the face (ends on the same or on
  adjacent face positions are excluded);
* vertex splits: a vertex of degree at least 4 becomes two adjacent
  vertices, each keeping a contiguous block of at least two darts.

These operations produce every 3-connected planar graph.  Restricting to
face splits between two subdivided edges keeps graphs cubic and produces
every 3-connected cubic planar graph.  Samples are not uniform.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .errors import CSLError
from .plane import PlaneGraph, build_from_rotation, canonical_code, edge_subgraph, is_k_connected, split_vertex
from .polyhedra import tetrahedron

__all__ = [
    "face_split",
    "face_split_moves",
    "random_vertex_split",
    "random_3connected_planar",
    "random_cubic_planar",
    "random_2connected_planar",
    "all_cubic_planar",
    "GeneratorExhausted",
]


class GeneratorExhausted(CSLError):
    """Too many rejected expansion attempts in a row."""


def _ints(G: PlaneGraph) -> PlaneGraph:
    return G.relabel(range(G.n))


def face_split_moves(G: PlaneGraph, face, cubic_only: bool = False) -> list:
    """Admissible ``(end1, end2)`` pairs for :func:`face_split` on one face.

    An end is ``("v", i)`` for the ``i``-th corner of the walk or ``("e", i)``
    for a new vertex on its ``i``-th edge.
    """
    L = face.length
    verts = face.vertices
    adj = G.adjacency()
    moves = []
    for i in range(L):
        for j in range(i + 1, L):
            moves.append((("e", i), ("e", j)))
            if cubic_only:
                continue
            gap = j - i
            if gap not in (1, L - 1) and verts[j] not in adj[verts[i]]:
                moves.append((("v", i), ("v", j)))
            # vertex i with edge j (edge j runs from corner j to j+1)
            if j != i and (j + 1) % L != i:
                moves.append((("v", i), ("e", j)))
            if i != j and (i + 1) % L != j:
                moves.append((("e", i), ("v", j)))
    return moves


def face_split(G: PlaneGraph, face, end1, end2) -> PlaneGraph:
    """Add an edge across ``face`` between the two described ends.

    ``G`` must be simple with integer labels; the result is relabelled
    ``0..n-1`` with new vertices at the end.
    """
    rot = {v: list(G.neighbors(v)) for v in range(G.n)}
    walk = list(face.vertices)
    L = len(walk)
    nxt = {}

    def end_vertex(end):
        kind, i = end
        a, b = walk[i], walk[(i + 1) % L]
        if kind == "v":
            return a, b
        x = len(rot)
        ra, rb = rot[a], rot[b]
        ra[ra.index(b)] = x
        rb[rb.index(a)] = x
        rot[x] = [a, b]
        nxt[(a, b)] = x
        return x, b

    # subdivide first, then resolve corners, so that a corner whose outgoing
    # edge was subdivided points at the new vertex
    ends = []
    for end in (end1, end2):
        if end[0] == "e":
            ends.append(end_vertex(end))
        else:
            ends.append(None)
    for k, end in enumerate((end1, end2)):
        if end[0] == "v":
            a, b = end_vertex(end)
            b = nxt.get((a, b), b)
            ends[k] = (a, b)
    (p, p_next), (q, q_next) = ends
    rp, rq = rot[p], rot[q]
    rp.insert(rp.index(p_next) + 1, q)
    rq.insert(rq.index(q_next) + 1, p)
    return build_from_rotation(rot)


def random_vertex_split(G: PlaneGraph, rng: random.Random):
    big = [v for v in range(G.n) if G.degree(v) >= 4]
    if not big:
        return None
    v = rng.choice(big)
    d = G.degree(v)
    size = rng.randint(2, d - 2)
    start = rng.randrange(d)
    return _ints(split_vertex(G, v, [(start + i) % d for i in range(size)]))


def _random_face_split(G, rng, room, cubic_only=False):
    fl = G.faces()
    for _ in range(20):
        f = rng.choice(fl)
        moves = face_split_moves(G, f, cubic_only)
        added = {("v", "v"): 0, ("v", "e"): 1, ("e", "v"): 1, ("e", "e"): 2}
        moves = [mv for mv in moves if added[(mv[0][0], mv[1][0])] <= room]
        if moves:
            e1, e2 = rng.choice(moves)
            return face_split(G, f, e1, e2)
    return None


def random_3connected_planar(n: int, rng: random.Random, extra_edges: float | None = None,
                             max_retries: int = 100) -> PlaneGraph:
    """A random 3-connected plane graph with exactly ``n`` vertices.

    ``extra_edges`` (fraction of the possible chords) controls density
    after the vertex count has been reached; by default it is drawn at
    random.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    for _attempt in range(max_retries):
        G = tetrahedron()
        stuck = 0
        while G.n < n and stuck < 50:
            room = n - G.n
            r = rng.random()
            H = random_vertex_split(G, rng) if r < 0.35 else _random_face_split(G, rng, room)
            if H is None:
                stuck += 1
                continue
            G = H
        if G.n != n:
            continue
        frac = rng.random() * 0.5 if extra_edges is None else extra_edges
        for _ in range(int(frac * n)):
            H = _random_face_split(G, rng, 0)
            if H is not None:
                G = H
        if is_k_connected(G, 3):
            return G
    raise GeneratorExhausted(f"could not build a 3-connected graph on {n} vertices")


def random_cubic_planar(n: int, rng: random.Random) -> PlaneGraph:
    """A random 3-connected cubic plane graph on ``n`` (even, >= 4) vertices."""
    if n < 4 or n % 2:
        raise ValueError("need even n >= 4")
    G = tetrahedron()
    while G.n < n:
        f = rng.choice(G.faces())
        L = f.length
        i, j = rng.sample(range(L), 2)
        G = face_split(G, f, ("e", min(i, j)), ("e", max(i, j)))
    return G


def random_2connected_planar(max_n: int, rng: random.Random) -> PlaneGraph:
    """A random 2-connected plane graph with at most ``max_n`` vertices.

    A small 3-connected graph gets some edges subdivided and some edges
    deleted, keeping 2-connectivity.
    """
    n0 = rng.randint(4, max(4, min(max_n, 14)))
    G = random_3connected_planar(n0, rng, extra_edges=rng.random() * 0.3)
    room = max_n - G.n
    if room > 0:
        subs = rng.randint(0, room)
        for _ in range(subs):
            f = rng.choice(G.faces())
            e = rng.randrange(f.length)
            a, b = f.vertices[e], f.vertices[(e + 1) % f.length]
            rot = {v: list(G.neighbors(v)) for v in range(G.n)}
            x = G.n
            rot[a][rot[a].index(b)] = x
            rot[b][rot[b].index(a)] = x
            rot[x] = [a, b]
            G = build_from_rotation(rot)
    for _ in range(rng.randint(0, 4)):
        e = rng.randrange(G.m)
        H = edge_subgraph(G, [x for x in range(G.m) if x != e])
        if H.n == G.n and min(H.degrees()) >= 2 and is_k_connected(H, 2):
            G = _ints(H)
    return _ints(G)


@lru_cache(maxsize=None)
def _cubic_level(n: int) -> tuple:
    if n == 4:
        return (tetrahedron(),)
    out = {}
    for G in _cubic_level(n - 2):
        for f in G.faces():
            for i in range(f.length):
                for j in range(i + 1, f.length):
                    H = face_split(G, f, ("e", i), ("e", j))
                    key = canonical_code(H)
                    if key not in out and is_k_connected(H, 3):
                        out[key] = H
    return tuple(out[key] for key in sorted(out))


def all_cubic_planar(n: int) -> tuple:
    """Every 3-connected cubic planar graph on ``n`` vertices, one embedding each."""
    if n < 4 or n % 2:
        return ()
    return _cubic_level(n)
