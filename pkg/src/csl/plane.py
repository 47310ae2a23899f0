"""Plane graphs as rotation systems.

A :class:`PlaneGraph` stores an embedded graph as a combinatorial map.  Every
edge ``e`` owns the two darts ``2*e`` and ``2*e + 1``; the dart involution is
``d ^ 1``.  Each vertex carries the counter-clockwise cyclic order of the
darts leaving it.  Faces are the orbits of ``d -> sigma_inv(d ^ 1)``, so the
face of a dart is the one on its left.

Graphs are immutable.  Surgery functions return new graphs.  Two kinds of
provenance survive surgery:

* vertex labels (opaque hashables; split children are ``(parent, 1)`` and
  ``(parent, 2)``);
* edge tags, one per edge.  The pair ``(tag, d & 1)`` is the *dart key* of a
  dart, and stays attached to the same oriented edge across every operation
  that keeps that edge.  Face correspondences between a graph and a derived
  graph are computed through dart keys.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import (
    AllDegreeTwo,
    BareCycle,
    DegreeTooSmall,
    InconsistentRotation,
    NonContiguousBlocks,
    NonPlanarEmbedding,
    OverlappingTriangles,
    StructuralError,
)

__all__ = [
    "PlaneGraph",
    "FaceRef",
    "SubdividedPath",
    "build_from_rotation",
    "build_from_coordinates",
    "faces",
    "is_k_connected",
    "biconnected_components",
    "suppress_degree_two",
    "resubdivide",
    "split_vertex",
    "contract_edge",
    "contract_triangles",
    "subdivided_paths",
    "edge_subgraph",
    "subdivide_edges",
    "truncate",
    "dual",
    "canonical_code",
]


@dataclass(frozen=True)
class FaceRef:
    """One face walk.

    Attributes:
        id: position of the face in :meth:`PlaneGraph.faces` order (faces
            are numbered by their smallest dart).
        darts: boundary walk, each dart having the face on its left.
        vertices: origin vertex of each dart of the walk.
    """

    id: int
    darts: tuple
    vertices: tuple

    @property
    def length(self) -> int:
        return len(self.darts)

    def __len__(self):
        return len(self.darts)


@dataclass(frozen=True)
class SubdividedPath:
    """Maximal path whose interior vertices have degree two.

    ``vertices`` runs from one branch vertex to the other, ``darts`` are the
    darts walked along the way (``len(darts) == length``).
    """

    vertices: tuple
    darts: tuple

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def ends(self):
        return self.vertices[0], self.vertices[-1]


class PlaneGraph:
    """Immutable rotation system.

    Use :func:`build_from_rotation` (or :func:`build_from_coordinates`) to
    make one.  The raw constructor accepts dart-level data and is meant for
    the surgery functions in this module.
    """

    __slots__ = ("_labels", "_rot", "_origin", "_pos", "_tags", "_index", "_faces", "_face_of")

    def __init__(self, labels, rot, tags=None, *, allow_multi=True, require_plane=False):
        labels = tuple(labels)
        rot = tuple(tuple(r) for r in rot)
        if len(labels) != len(rot):
            raise InconsistentRotation("one rotation per vertex is required")
        ndarts = sum(len(r) for r in rot)
        if ndarts % 2:
            raise InconsistentRotation("odd number of darts")
        origin = [-1] * ndarts
        pos = [0] * ndarts
        for v, r in enumerate(rot):
            for i, d in enumerate(r):
                if not 0 <= d < ndarts or origin[d] != -1:
                    raise InconsistentRotation(f"dart {d} missing or repeated")
                origin[d] = v
                pos[d] = i
        for e in range(ndarts // 2):
            if origin[2 * e] == origin[2 * e + 1]:
                raise InconsistentRotation(f"loop at vertex {labels[origin[2 * e]]!r}")
        self._labels = labels
        self._rot = rot
        self._origin = tuple(origin)
        self._pos = tuple(pos)
        self._tags = tuple(range(ndarts // 2)) if tags is None else tuple(tags)
        if len(self._tags) != ndarts // 2:
            raise InconsistentRotation("one tag per edge is required")
        index = {}
        for v, lab in enumerate(labels):
            if lab in index:
                raise InconsistentRotation(f"duplicate vertex label {lab!r}")
            index[lab] = v
        self._index = index
        self._faces = None
        self._face_of = None
        if not allow_multi and not self.is_simple():
            raise InconsistentRotation("parallel edges")
        if require_plane and self.genus() != 0:
            raise NonPlanarEmbedding(self.genus())

    # -- basic access ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._rot)

    @property
    def m(self) -> int:
        return len(self._origin) // 2

    @property
    def labels(self) -> tuple:
        return self._labels

    @property
    def tags(self) -> tuple:
        return self._tags

    def label(self, v: int) -> Hashable:
        return self._labels[v]

    def index(self, label: Hashable) -> int:
        return self._index[label]

    def darts_at(self, v: int) -> tuple:
        """Darts leaving ``v`` in counter-clockwise order."""
        return self._rot[v]

    def origin(self, d: int) -> int:
        return self._origin[d]

    def head(self, d: int) -> int:
        return self._origin[d ^ 1]

    def sigma(self, d: int) -> int:
        r = self._rot[self._origin[d]]
        return r[(self._pos[d] + 1) % len(r)]

    def sigma_inv(self, d: int) -> int:
        r = self._rot[self._origin[d]]
        return r[self._pos[d] - 1]

    def position(self, d: int) -> int:
        """Index of ``d`` in the rotation at its origin."""
        return self._pos[d]

    def face_next(self, d: int) -> int:
        return self.sigma_inv(d ^ 1)

    def degree(self, v: int) -> int:
        return len(self._rot[v])

    def degrees(self) -> list:
        return [len(r) for r in self._rot]

    def neighbors(self, v: int) -> list:
        """Neighbours of ``v`` in rotation order."""
        o = self._origin
        return [o[d ^ 1] for d in self._rot[v]]

    def edge(self, e: int) -> tuple:
        return self._origin[2 * e], self._origin[2 * e + 1]

    def edges(self) -> list:
        o = self._origin
        return [(o[2 * e], o[2 * e + 1]) for e in range(self.m)]

    def dart_key(self, d: int) -> tuple:
        return self._tags[d >> 1], d & 1

    def dart_index(self) -> dict:
        """Map from dart key to dart."""
        return {(t, b): 2 * e + b for e, t in enumerate(self._tags) for b in (0, 1)}

    def dart_between(self, u: int, v: int) -> int:
        """A dart from ``u`` to ``v`` (the first one in rotation order)."""
        o = self._origin
        for d in self._rot[u]:
            if o[d ^ 1] == v:
                return d
        raise KeyError((u, v))

    def adjacency(self) -> list:
        """Neighbour sets, indexed by vertex."""
        o = self._origin
        return [{o[d ^ 1] for d in r} for r in self._rot]

    def rotation(self) -> dict:
        """Rotation as ``{label: [neighbour labels]}``."""
        L = self._labels
        return {L[v]: [L[w] for w in self.neighbors(v)] for v in range(self.n)}

    def rotation_lists(self) -> list:
        return [self.neighbors(v) for v in range(self.n)]

    # -- global properties ----------------------------------------------

    def is_simple(self) -> bool:
        for v in range(self.n):
            nb = self.neighbors(v)
            if len(set(nb)) != len(nb):
                return False
        return True

    def is_cubic(self) -> bool:
        return all(len(r) == 3 for r in self._rot)

    def max_degree(self) -> int:
        return max((len(r) for r in self._rot), default=0)

    def components(self) -> list:
        """Vertex sets of the connected components, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        o = self._origin
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                x = stack.pop()
                for d in self._rot[x]:
                    y = o[d ^ 1]
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def faces(self) -> list:
        if self._faces is None:
            nd = len(self._origin)
            face_of = [-1] * nd
            out = []
            for d0 in range(nd):
                if face_of[d0] != -1:
                    continue
                fid = len(out)
                walk = []
                d = d0
                while face_of[d] == -1:
                    face_of[d] = fid
                    walk.append(d)
                    d = self.face_next(d)
                out.append(FaceRef(fid, tuple(walk), tuple(self._origin[x] for x in walk)))
            self._faces = out
            self._face_of = tuple(face_of)
        return self._faces

    def face_of(self, d: int) -> FaceRef:
        """The face on the left of dart ``d``."""
        self.faces()
        return self._faces[self._face_of[d]]

    def face_labels(self, face: FaceRef) -> tuple:
        return tuple(self._labels[v] for v in face.vertices)

    def genus(self) -> int:
        nontrivial = sum(1 for c in self.components() if len(c) > 1 or self.degree(c[0]) > 0)
        isolated = sum(1 for r in self._rot if not r)
        chi = (self.n - isolated) - self.m + len(self.faces())
        g2 = 2 * nontrivial - chi
        if g2 % 2:
            raise InconsistentRotation("odd Euler defect")
        return g2 // 2

    def mirror(self) -> "PlaneGraph":
        """Same graph with every rotation reversed."""
        return PlaneGraph(self._labels, [tuple(reversed(r)) for r in self._rot], self._tags)

    def relabel(self, labels: Sequence) -> "PlaneGraph":
        return PlaneGraph(labels, self._rot, self._tags)

    def same_embedding(self, other: "PlaneGraph") -> bool:
        """Equal labels and equal cyclic rotations, up to dart numbering."""
        if self.n != other.n or self.m != other.m or set(self._labels) != set(other._labels):
            return False
        for v, lab in enumerate(self._labels):
            a = [self._labels[w] for w in self.neighbors(v)]
            b = [other._labels[w] for w in other.neighbors(other.index(lab))]
            if len(a) != len(b):
                return False
            if a and not any(a == b[i:] + b[:i] for i in range(len(b))):
                return False
        return True

    def __repr__(self):
        return f"PlaneGraph(n={self.n}, m={self.m}, faces={len(self.faces())})"


# -- construction -----------------------------------------------------------


def build_from_rotation(adjacency, *, require_plane: bool = True) -> PlaneGraph:
    """Build a simple plane graph from neighbour lists in rotation order.

    Args:
        adjacency: either a mapping ``label -> [neighbour labels]`` or a
            sequence of neighbour index lists (labels are then ``0..n-1``).
            Lists are read as counter-clockwise orders.
        require_plane: raise :class:`NonPlanarEmbedding` unless the rotation
            has genus 0.

    Raises:
        InconsistentRotation: asymmetric lists, loops or parallel edges.
    """
    if isinstance(adjacency, Mapping):
        labels = list(adjacency)
        index = {lab: i for i, lab in enumerate(labels)}
        try:
            nbrs = [[index[w] for w in adjacency[lab]] for lab in labels]
        except KeyError as exc:
            raise InconsistentRotation(f"unknown neighbour {exc.args[0]!r}") from None
    else:
        nbrs = [list(r) for r in adjacency]
        labels = list(range(len(nbrs)))
        for r in nbrs:
            for w in r:
                if not (isinstance(w, int) and 0 <= w < len(nbrs)):
                    raise InconsistentRotation(f"neighbour index {w!r} out of range")
    edge_id = {}
    rot = []
    for u, r in enumerate(nbrs):
        if len(set(r)) != len(r):
            raise InconsistentRotation(f"parallel edges at vertex {labels[u]!r}")
        row = []
        for w in r:
            if w == u:
                raise InconsistentRotation(f"loop at vertex {labels[u]!r}")
            key = (min(u, w), max(u, w))
            if key not in edge_id:
                edge_id[key] = len(edge_id)
            e = edge_id[key]
            row.append(2 * e + (0 if u < w else 1))
        rot.append(row)
    for u, r in enumerate(nbrs):
        for w in r:
            if u not in nbrs[w]:
                raise InconsistentRotation(f"{labels[u]!r} lists {labels[w]!r} but not conversely")
    return PlaneGraph(labels, rot, allow_multi=False, require_plane=require_plane)


def build_from_coordinates(points: Mapping, edges: Iterable, *, require_plane: bool = True) -> PlaneGraph:
    """Build a plane graph from a straight-line drawing.

    Rotations are the neighbours sorted counter-clockwise by angle.  The
    drawing has to be crossing-free for the result to be plane, which the
    genus check then confirms.
    """
    adj = {v: [] for v in points}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)

    def ang(v, w):
        (x0, y0), (x1, y1) = points[v], points[w]
        return math.atan2(y1 - y0, x1 - x0)

    rot = {v: sorted(nb, key=lambda w, v=v: ang(v, w)) for v, nb in adj.items()}
    return build_from_rotation(rot, require_plane=require_plane)


def _assemble(G: PlaneGraph, labels, rot_old, extra_tags=()) -> PlaneGraph:
    """Renumber darts after surgery.

    ``rot_old`` lists darts per new vertex.  Darts ``< 2*G.m`` are darts of
    ``G`` (their tag is kept); larger ones belong to new edges whose tags are
    ``extra_tags`` in order.
    """
    present = sorted({d >> 1 for r in rot_old for d in r})
    new_e = {e: i for i, e in enumerate(present)}
    tags = []
    for e in present:
        tags.append(G.tags[e] if e < G.m else extra_tags[e - G.m])
    rot = [[2 * new_e[d >> 1] + (d & 1) for d in r] for r in rot_old]
    return PlaneGraph(labels, rot, tags)


def edge_subgraph(G: PlaneGraph, edge_ids: Iterable[int]) -> PlaneGraph:
    """Subgraph on the given edges with the inherited embedding.

    Vertices left without edges are dropped; labels and tags survive.
    """
    keep = set(edge_ids)
    labels, rot = [], []
    for v in range(G.n):
        r = [d for d in G.darts_at(v) if (d >> 1) in keep]
        if r:
            labels.append(G.label(v))
            rot.append(r)
    return _assemble(G, labels, rot)


def faces(G: PlaneGraph) -> list:
    """Face walks of ``G``; every dart lies in exactly one."""
    return G.faces()


# -- connectivity -----------------------------------------------------------


def _no_cut_vertex(n, adj, skip=-1) -> bool:
    """True iff the graph minus ``skip`` is connected with no articulation point."""
    start = 0 if skip != 0 else 1
    if n - (skip >= 0) <= 1:
        return True
    disc = [-1] * n
    low = [0] * n
    if skip >= 0:
        disc[skip] = -2
    disc[start] = 0
    timer = 1
    root_children = 0
    stack = [(start, -1, iter(adj[start]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == skip or w == parent:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, iter(adj[w])))
                advanced = True
                break
            if disc[w] < low[v]:
                low[v] = disc[w]
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p == start:
                    root_children += 1
                elif low[v] >= disc[p]:
                    return False
    if root_children > 1:
        return False
    return timer == n - (skip >= 0)


def is_k_connected(G: PlaneGraph, c: int) -> bool:
    """Vertex ``c``-connectivity of a simple graph, for ``c`` in 1, 2, 3.

    True iff ``|V| > c`` and deleting fewer than ``c`` vertices never
    disconnects the graph.  For ``c = 3`` each single vertex is deleted in
    turn and the rest is tested for cut vertices.
    """
    if c < 1 or c > 3:
        raise ValueError("c must be 1, 2 or 3")
    n = G.n
    if n <= c:
        return False
    adj = [sorted(s) for s in G.adjacency()]
    if c == 1:
        return G.is_connected()
    if not _no_cut_vertex(n, adj):
        return False
    if c == 2:
        return True
    return all(_no_cut_vertex(n, adj, x) for x in range(n))


def biconnected_components(G: PlaneGraph) -> list:
    """Edge sets (lists of edge ids) of the blocks of ``G``."""
    n = G.n
    disc = [-1] * n
    low = [0] * n
    blocks = []
    timer = 0
    for s in range(n):
        if disc[s] != -1 or G.degree(s) == 0:
            continue
        disc[s] = low[s] = timer
        timer += 1
        estack = []
        stack = [(s, -1, iter(G.darts_at(s)))]
        while stack:
            v, in_edge, it = stack[-1]
            advanced = False
            for d in it:
                e = d >> 1
                if e == in_edge:
                    continue
                w = G.head(d)
                if disc[w] == -1:
                    estack.append(e)
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, iter(G.darts_at(w))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append(e)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] >= disc[p]:
                        block = []
                        while True:
                            e = estack.pop()
                            block.append(e)
                            if e == in_edge:
                                break
                        blocks.append(sorted(block))
    return blocks


# -- degree-two vertices ----------------------------------------------------


def _walk_paths(G: PlaneGraph):
    """Pairs (first dart, path) for every maximal path, from both ends."""
    out = []
    for v in range(G.n):
        if G.degree(v) == 2:
            continue
        for d in G.darts_at(v):
            verts = [v]
            darts = [d]
            x = G.head(d)
            while G.degree(x) == 2:
                verts.append(x)
                r = G.darts_at(x)
                nd = r[0] if r[1] == (darts[-1] ^ 1) else r[1]
                darts.append(nd)
                x = G.head(nd)
            verts.append(x)
            out.append((d, SubdividedPath(tuple(verts), tuple(darts))))
    return out


def subdivided_paths(G: PlaneGraph) -> list:
    """Maximal paths between branch vertices; each edge lies in exactly one.

    Raises:
        BareCycle: no vertex of degree other than two.
    """
    if any(G.degree(v) < 2 for v in range(G.n)):
        raise StructuralError("vertices of degree below two")
    if all(G.degree(v) == 2 for v in range(G.n)):
        raise BareCycle("graph is a cycle")
    seen = set()
    out = []
    for d, p in _walk_paths(G):
        if p.darts[-1] ^ 1 in seen:
            continue
        seen.add(d)
        out.append(p)
    return out


def suppress_degree_two(G: PlaneGraph):
    """Replace every maximal subdivided path by a single edge.

    Returns:
        ``(H, path_map)`` where ``path_map[e]`` is the
        :class:`SubdividedPath` of ``G`` replaced by edge ``e`` of ``H``,
        oriented like dart ``2*e``.  ``H`` keeps the labels of the branch
        vertices; its edge tags are those of the first edge of each path, so
        faces of ``H`` and ``G`` correspond through dart keys.  ``H`` may have
        parallel edges.

    Raises:
        AllDegreeTwo: ``G`` is a cycle.
    """
    if G.n and all(G.degree(v) == 2 for v in range(G.n)):
        raise AllDegreeTwo("every vertex has degree two")
    if any(G.degree(v) < 2 for v in range(G.n)):
        raise StructuralError("vertices of degree below two")
    branch = [v for v in range(G.n) if G.degree(v) != 2]
    new_index = {v: i for i, v in enumerate(branch)}
    hdart = {}
    path_map = {}
    tags = []
    for d, p in _walk_paths(G):
        if d in hdart:
            continue
        e = len(tags)
        tags.append(G.tags[d >> 1])
        hdart[d] = 2 * e
        hdart[p.darts[-1] ^ 1] = 2 * e + 1
        path_map[e] = p
    rot = [[hdart[d] for d in G.darts_at(v)] for v in branch]
    H = PlaneGraph([G.label(v) for v in branch], rot, tags)
    return H, path_map


def resubdivide(H: PlaneGraph, path_map: Mapping, labels_from: PlaneGraph | None = None) -> PlaneGraph:
    """Inverse of :func:`suppress_degree_two`.

    Each edge ``e`` of ``H`` becomes a path of ``path_map[e].length`` edges.
    Interior vertices take their labels from ``labels_from`` (the graph the
    path map refers to) when given, and are labelled ``("sub", tag, i)``
    otherwise.  The edge of ``H`` survives as the first segment.
    """
    labels = list(H.labels)
    rot = [list(r) for r in H._rot]
    extra = []
    for e in range(H.m):
        p = path_map[e]
        inner = p.vertices[1:-1]
        if not inner:
            continue
        ids = []
        for i, x in enumerate(inner):
            if labels_from is not None and x is not None:
                labels.append(labels_from.label(x))
            else:
                labels.append(("sub", H.tags[e], i))
            ids.append(H.m + len(extra))
            extra.append(("sub", H.tags[e], i))
        for i in range(len(inner)):
            back = 2 * e + 1 if i == 0 else 2 * ids[i - 1] + 1
            rot.append([2 * ids[i], back])
        r = rot[H.origin(2 * e + 1)]
        r[r.index(2 * e + 1)] = 2 * ids[-1] + 1
    return _assemble(H, labels, rot, extra)


def subdivide_edges(G: PlaneGraph, counts: Mapping) -> PlaneGraph:
    """Subdivide edge ``e`` with ``counts[e]`` new vertices."""
    path_map = {}
    for e in range(G.m):
        k = counts.get(e, 0)
        path_map[e] = SubdividedPath(tuple([G.origin(2 * e)] + [None] * k + [G.origin(2 * e + 1)]), (None,) * (k + 1))
    return resubdivide(G, path_map)


# -- splitting and contracting ----------------------------------------------


def split_vertex(G: PlaneGraph, v: int, block: Iterable[int]) -> PlaneGraph:
    """Split ``v`` into two adjacent vertices.

    Args:
        v: vertex index.
        block: rotation positions (indices into ``G.darts_at(v)``) of the
            darts that go to the first child.  They must form a cyclic
            interval; the complement goes to the second child.

    The children are labelled ``(label, 1)`` and ``(label, 2)``.  The first
    child keeps the index of ``v``, the second is appended.  The new edge is
    inserted in the two corners separating the blocks, so the total face
    length grows by exactly two.
    """
    deg = G.degree(v)
    if deg < 4:
        raise DegreeTooSmall(f"vertex of degree {deg} cannot be split")
    blk = sorted({int(i) % deg for i in block})
    p = len(blk)
    if p < 2 or deg - p < 2:
        raise DegreeTooSmall("both blocks need at least two darts")
    inside = set(blk)
    starts = [i for i in blk if (i - 1) % deg not in inside]
    if len(starts) != 1:
        raise NonContiguousBlocks(f"positions {blk} are not a cyclic interval")
    s = starts[0]
    r = G.darts_at(v)
    b1 = [r[(s + i) % deg] for i in range(p)]
    b2 = [r[(s + p + i) % deg] for i in range(deg - p)]
    new = 2 * G.m
    labels = list(G.labels)
    lab = labels[v]
    labels[v] = (lab, 1)
    labels.append((lab, 2))
    rot = [list(x) for x in G._rot]
    rot[v] = b1 + [new]
    rot.append(b2 + [new + 1])
    return _assemble(G, labels, rot, [("split", lab)])


def _merged_label(labs):
    # children of one parent (split halves, fragment or truncation pieces) merge back into it
    if all(isinstance(x, tuple) and len(x) == 2 for x in labs) and len({x[0] for x in labs}) == 1:
        return labs[0][0]
    return labs[0]


def _contract_groups(G: PlaneGraph, groups) -> PlaneGraph:
    """Contract vertex groups, each given with its internal darts in cyclic order.

    ``groups`` is a list of ``(vertices, inner_edges, outer_darts)`` where
    ``outer_darts`` is the merged rotation.
    """
    member = {}
    for gi, (verts, _, _) in enumerate(groups):
        for x in verts:
            member[x] = gi
    labels, rot = [], []
    placed = set()
    for v in range(G.n):
        if v not in member:
            labels.append(G.label(v))
            rot.append(list(G.darts_at(v)))
            continue
        gi = member[v]
        if gi in placed:
            continue
        placed.add(gi)
        verts, _, outer = groups[gi]
        labs = [G.label(x) for x in sorted(verts)]
        lab = _merged_label(labs)
        if lab != labs[0] and lab in G._index:
            lab = labs[0]
        labels.append(lab)
        rot.append(list(outer))
    return _assemble(G, labels, rot)


def contract_edge(G: PlaneGraph, e: int) -> PlaneGraph:
    """Contract edge ``e``; inverse of :func:`split_vertex` on the new edge."""
    a, b = 2 * e, 2 * e + 1
    u, w = G.origin(a), G.origin(b)
    if any(G.head(d) == w for d in G.darts_at(u) if d != a):
        raise StructuralError("contraction would create a loop")
    ru, rw = G.darts_at(u), G.darts_at(w)
    i, j = G.position(a), G.position(b)
    outer = list(ru[i + 1:] + ru[:i]) + list(rw[j + 1:] + rw[:j])
    return _contract_groups(G, [((u, w), {e}, outer)])


def contract_triangles(G: PlaneGraph, triangles: Iterable) -> PlaneGraph:
    """Contract vertex-disjoint facial triangles to single vertices.

    Triangles may be given as :class:`FaceRef`, face ids, or vertex
    triples.  The merged rotation lists the outer darts of the three corners
    in the order the face walk meets them.
    """
    fl = G.faces()
    by_vertices = {}
    for f in fl:
        if f.length == 3:
            by_vertices.setdefault(frozenset(f.vertices), f)
    chosen = []
    for t in triangles:
        if isinstance(t, FaceRef):
            f = fl[t.id]
        elif isinstance(t, int):
            f = fl[t]
        else:
            f = by_vertices.get(frozenset(t))
            if f is None:
                raise StructuralError(f"{tuple(t)} is not a facial triangle")
        if f.length != 3 or len(set(f.vertices)) != 3:
            raise StructuralError(f"face {f.id} is not a triangle")
        chosen.append(f)
    used = set()
    for f in chosen:
        if used & set(f.vertices):
            raise OverlappingTriangles("triangles share a vertex")
        used |= set(f.vertices)
    groups = []
    for f in chosen:
        outer = []
        inner = {d >> 1 for d in f.darts}
        walk = f.darts
        for i in range(3):
            d_in = walk[i - 1]
            d_out = walk[i]
            x = G.sigma(d_in ^ 1)
            while x != d_out:
                outer.append(x)
                x = G.sigma(x)
        groups.append((f.vertices, inner, outer))
    return _contract_groups(G, groups)


def truncate(G: PlaneGraph) -> PlaneGraph:
    """Replace every vertex of degree ``d`` by a ``d``-cycle.

    New vertices are labelled ``(label, i)`` where ``i`` is the rotation
    position of the dart they sit on.
    """
    vid = {}
    labels = []
    for v in range(G.n):
        for i, d in enumerate(G.darts_at(v)):
            vid[d] = len(labels)
            labels.append((G.label(v), i))
    rot = {}
    for d, x in vid.items():
        rot[x] = [vid[d ^ 1], vid[G.sigma(d)], vid[G.sigma_inv(d)]]
    return build_from_rotation({labels[x]: [labels[y] for y in rot[x]] for x in range(len(labels))})


def dual(G: PlaneGraph) -> PlaneGraph:
    """Plane dual; vertex ``i`` is face ``i`` of ``G``."""
    fl = G.faces()
    rot = []
    for f in fl:
        rot.append([d ^ 1 for d in f.darts])
    # dual dart d^1 leaves face(d): the dart d crosses from left face to right face
    return PlaneGraph(list(range(len(fl))), rot, G.tags)


# -- canonical form ---------------------------------------------------------


def canonical_code(G: PlaneGraph, colors: Sequence | None = None, mirror: bool = True) -> tuple:
    """Complete invariant of a connected plane map up to (orientation-reversing) isomorphism.

    For 3-connected planar graphs the embedding is unique up to mirror
    image, so equal codes then mean isomorphic graphs.  ``colors`` (one value
    per vertex) must be preserved by the isomorphism.
    """
    best = None
    senses = (True, False) if mirror else (True,)
    for d0 in range(2 * G.m):
        for fwd in senses:
            num = {G.origin(d0): 0}
            order = [G.origin(d0)]
            first = {order[0]: d0}
            code = []
            k = 0
            while k < len(order):
                v = order[k]
                d = first[v]
                for _ in range(G.degree(v)):
                    w = G.head(d)
                    if w not in num:
                        num[w] = len(order)
                        order.append(w)
                        first[w] = d ^ 1
                    code.append(num[w] + 1)
                    d = G.sigma(d) if fwd else G.sigma_inv(d)
                code.append(0)
                k += 1
            key = (tuple(code), tuple(colors[v] for v in order) if colors is not None else ())
            if best is None or key < best:
                best = key
    if best is None:
        return ((), tuple(colors) if colors is not None else ())
    return best


def rotation_positions(G: PlaneGraph, v: int, neighbours: Iterable[int]) -> list:
    """Rotation positions at ``v`` of the darts towards the given neighbours."""
    want = list(neighbours)
    nb = G.neighbors(v)
    return [nb.index(w) for w in want]


def all_cyclic_intervals(deg: int, size: int):
    """Start positions ``s`` with blocks ``s..s+size-1`` (mod ``deg``)."""
    return [tuple((s + i) % deg for i in range(size)) for s in range(deg)]
