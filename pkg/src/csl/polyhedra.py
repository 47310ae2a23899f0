"""Small named plane graphs used as bases, fixtures and sweep seeds."""

from __future__ import annotations

import math

from .errors import InvalidProfile, MatchingNotPerfect
from .plane import PlaneGraph, build_from_coordinates, build_from_rotation, dual, truncate

__all__ = [
    "ring_graph",
    "tetrahedron",
    "diamond",
    "cycle",
    "prism",
    "cube",
    "octahedron",
    "dodecahedron",
    "icosahedron",
    "wheel",
    "truncated",
    "named",
    "NAMED",
]


def ring_graph(lengths, links, labels=None) -> PlaneGraph:
    """Concentric rings joined by radial edges.

    Ring ``i`` has ``lengths[i]`` vertices numbered counter-clockwise.
    ``links[i]`` lists pairs ``(j, j2)`` joining vertex ``j`` of ring ``i``
    to vertex ``j2`` of ring ``i + 1``.  A vertex may have at most one link
    outwards and one inwards, and links between two rings must not cross
    (both ends increasing together, cyclically).  The rotation of a ring
    vertex is ``out, next, in, prev`` with absent entries dropped.
    """
    if len(links) != len(lengths) - 1:
        raise InvalidProfile("need one link list per pair of consecutive rings")
    out, inn = {}, {}
    for i, pairs in enumerate(links):
        for j, j2 in pairs:
            a, b = (i, j), (i + 1, j2)
            if not (0 <= j < lengths[i] and 0 <= j2 < lengths[i + 1]):
                raise MatchingNotPerfect(f"link {a}-{b} out of range")
            if a in out or b in inn:
                raise MatchingNotPerfect(f"vertex linked twice: {a} or {b}")
            out[a] = b
            inn[b] = a
        _check_noncrossing(pairs, lengths[i], lengths[i + 1])
    rot = {}
    for i, n in enumerate(lengths):
        for j in range(n):
            v = (i, j)
            r = []
            if v in out:
                r.append(out[v])
            if n > 1:
                r.append((i, (j + 1) % n))
            if v in inn:
                r.append(inn[v])
            if n > 2:
                r.append((i, (j - 1) % n))
            rot[v] = r
    G = build_from_rotation(rot)
    if labels is not None:
        G = G.relabel(labels)
    return G


def _check_noncrossing(pairs, n1, n2):
    ps = sorted(pairs)
    if len(ps) < 3:
        return
    # going once around the inner ring, the outer ends must also go once around
    turns = 0
    for (a, b), (c, d) in zip(ps, ps[1:] + ps[:1]):
        turns += (d - b) % n2
    if turns != n2:
        raise MatchingNotPerfect("links cross")


def _ints(G: PlaneGraph) -> PlaneGraph:
    return G.relabel(range(G.n))


def tetrahedron() -> PlaneGraph:
    return build_from_rotation([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]])


def diamond() -> PlaneGraph:
    """K4 minus an edge; the outer face is the 4-cycle 0-1-2-3."""
    pts = {0: (0, 1), 1: (-1, 0), 2: (0, -1), 3: (1, 0)}
    return build_from_coordinates(pts, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)])


def cycle(n: int) -> PlaneGraph:
    return build_from_rotation([[(i + 1) % n, (i - 1) % n] for i in range(n)])


def prism(n: int) -> PlaneGraph:
    return _ints(ring_graph([n, n], [[(j, j) for j in range(n)]]))


def cube() -> PlaneGraph:
    return prism(4)


def dodecahedron() -> PlaneGraph:
    links = [[(a, 2 * a) for a in range(5)], [(2 * a + 1, a) for a in range(5)]]
    return _ints(ring_graph([5, 10, 5], links))


def octahedron() -> PlaneGraph:
    return dual(cube())


def icosahedron() -> PlaneGraph:
    return dual(dodecahedron())


def wheel(n: int) -> PlaneGraph:
    """Hub 0 joined to the rim cycle 1..n."""
    pts = {0: (0.0, 0.0)}
    for i in range(n):
        t = 2 * math.pi * i / n
        pts[i + 1] = (math.cos(t), math.sin(t))
    edges = [(0, i + 1) for i in range(n)] + [(i + 1, (i + 1) % n + 1) for i in range(n)]
    return build_from_coordinates(pts, edges)


def truncated(G: PlaneGraph) -> PlaneGraph:
    return _ints(truncate(G))


NAMED = {
    "tetrahedron": tetrahedron,
    "k4": tetrahedron,
    "diamond": diamond,
    "prism": lambda: prism(3),
    "cube": cube,
    "octahedron": octahedron,
    "dodecahedron": dodecahedron,
    "icosahedron": icosahedron,
    "w4": lambda: wheel(4),
    "truncated-tetrahedron": lambda: truncated(tetrahedron()),
    "truncated-cube": lambda: truncated(cube()),
    "truncated-octahedron": lambda: truncated(octahedron()),
    "truncated-dodecahedron": lambda: truncated(dodecahedron()),
    "truncated-icosahedron": lambda: truncated(icosahedron()),
    "truncated-prism": lambda: truncated(prism(3)),
}


def named(name: str) -> PlaneGraph:
    try:
        return NAMED[name]()
    except KeyError:
        raise KeyError(f"unknown graph {name!r}; known: {', '.join(sorted(NAMED))}") from None
