"""Gap families: ring base graphs, fragments and vertex replacement.

Every family graph is a cubic plane base graph ``T`` whose vertices are
each replaced by a *fragment*, a small plane graph with three stubs.  A stub
is a vertex that receives one of the three edges of ``T`` at the replaced
vertex.  The fragments are chosen so that

* every fragment has circumference ``k - 1`` (so short cycles stay inside
  one fragment), and
* the three stub distances inside a fragment add up to ``k - 1``, while the
  assignment of fragments to ring positions makes every cycle that crosses
  fragments at least ``2k + 3`` long.

Fragments and ring patterns live in plain-text data files (see
:func:`read_rotation_file`).  ``CSL_DATA_DIR`` overrides the directory; when
a fragment file is missing the built-in generator produces the same
rotation.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Mapping

from .errors import (
    IncompatibleK,
    InvalidProfile,
    MatchingNotPerfect,
    MissingAssignment,
    NoneFound,
    StructuralError,
    StubMismatch,
)
from .plane import PlaneGraph, build_from_rotation, canonical_code, is_k_connected
from .polyhedra import dodecahedron, ring_graph
from .spectrum import full_spectrum_oracle, girth

__all__ = [
    "STUBS",
    "KINDS",
    "VARIANTS",
    "BaseRingSpec",
    "Fragment",
    "FamilySpec",
    "Family",
    "data_dir",
    "read_rotation_file",
    "write_rotation_file",
    "fragment_rotation",
    "make_fragment",
    "validate_fragment",
    "build_base_T",
    "ring_spec",
    "ring_roles",
    "load_assignment",
    "replace_vertices",
    "build_family",
    "expected_gap_end",
    "search_fragment",
    "write_data_files",
    "fragment_code",
    "default_family",
    "check_family",
    "expected_fragment_size",
]

STUBS = ("S1", "S2", "S3")
KINDS = ("triangle", "cubic-a", "cubic-b", "cubic-c", "planar-a", "planar-b")
VARIANTS = ("cubic-k5", "cubic-k7", "cubic-k9", "cubic-odd", "planar-odd")



# -- data files -------------------------------------------------------------


def data_dir() -> Path:
    """Directory searched first for data files (``CSL_DATA_DIR`` or the packaged copy)."""
    env = os.environ.get("CSL_DATA_DIR")
    if env:
        return Path(env)
    return _package_data()


def _package_data() -> Path:
    return Path(str(resources.files("csl") / "data"))


def _find(name: str) -> Path | None:
    for d in (data_dir(), _package_data()):
        p = d / name
        if p.is_file():
            return p
    return None


def read_rotation_file(path) -> dict:
    """Read ``name nb nb ...`` lines (``#`` starts a comment) into an ordered dict."""
    rot = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        name, nbrs = line[0], line[1:]
        if name in rot:
            raise StructuralError(f"{path}: vertex {name} listed twice")
        rot[name] = nbrs
    return rot


def write_rotation_file(path, rot: Mapping, comment: str = "") -> None:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines += [" ".join([str(v)] + [str(w) for w in nb]) for v, nb in rot.items()]
    Path(path).write_text("\n".join(lines) + "\n")


# -- fragments ----------------------------------------------------------------


def _ladder(t):
    """Tip ``A`` above ``t`` rungs; returns points and edges."""
    pts = {"A": (0.0, 0.0)}
    edges = []
    for i in range(t):
        pts[f"l{i}"] = (-1.0, -(i + 1.0))
        pts[f"r{i}"] = (1.0, -(i + 1.0))
        edges.append((f"l{i}", f"r{i}"))
        if i == 0:
            edges += [("A", "l0"), ("A", "r0")]
        else:
            edges += [(f"l{i-1}", f"l{i}"), (f"r{i-1}", f"r{i}")]
    return pts, edges


def _gadget(pts, edges, t, coords, gedges, left, right):
    y = -(t + 1.0)
    for name, (x, dy) in coords.items():
        pts[name] = (x, y + dy)
    L, R = (f"l{t-1}", f"r{t-1}") if t else ("A", "A")
    edges += [(L, left), (R, right)] + gedges


def _drawing(kind: str, k: int):
    """Points, edges and the vertex carrying each stub."""
    if kind == "triangle":
        pts = {"A": (0.0, 0.0), "b": (-1.0, -1.0), "c": (1.0, -1.0)}
        return pts, [("A", "b"), ("b", "c"), ("c", "A")], {"S1": "A", "S2": "b", "S3": "c"}
    if kind == "cubic-a":
        if k == 7:
            pts = {"A": (0, 0), "u": (-1, -0.5), "s2": (-1, -1.5), "v": (0, -2), "s3": (1, -1.5),
                   "w": (1, -0.5), "c": (0, -1)}
            edges = [("A", "u"), ("u", "s2"), ("s2", "v"), ("v", "s3"), ("s3", "w"), ("w", "A"),
                     ("c", "u"), ("c", "v"), ("c", "w")]
            return pts, edges, {"S1": "A", "S2": "s2", "S3": "s3"}
        t = (k - 7) // 2
        pts, edges = _ladder(t)
        _gadget(pts, edges, t,
                {"gl": (-1, 0), "gr": (1, 0), "c": (0, -0.5), "h": (0, -1.5), "s2": (-1, -2), "s3": (1, -2)},
                [("gl", "c"), ("c", "gr"), ("c", "h"), ("h", "s2"), ("h", "s3"), ("s2", "gl"), ("s3", "gr")],
                "gl", "gr")
        return pts, edges, {"S1": "A", "S2": "s2", "S3": "s3"}
    if kind == "cubic-b":
        if k == 9:
            pts, edges, st = _drawing("cubic-a", 9)
            return pts, edges, {"S1": st["S2"], "S2": st["S1"], "S3": st["S3"]}
        t = (k - 9) // 2
        pts, edges = _ladder(t)
        _gadget(pts, edges, t,
                {"g1": (-1, 0), "g11": (1, 0), "g5": (0, -0.5), "g4": (-1, -1), "s2": (-1, -2),
                 "g7": (-0.3, -1.6), "g9": (0.3, -1.6), "s3": (1, -1.2)},
                [("g1", "g5"), ("g5", "g11"), ("g5", "g9"), ("g1", "g4"), ("g4", "s2"), ("g4", "g7"),
                 ("g7", "s2"), ("g7", "g9"), ("g9", "s3"), ("s3", "g11")],
                "g1", "g11")
        return pts, edges, {"S1": "A", "S2": "s2", "S3": "s3"}
    if kind == "cubic-c":
        if k == 11:
            pts, edges, st = _drawing("cubic-b", 11)
            return pts, edges, {"S1": st["S3"], "S2": st["S1"], "S3": st["S2"]}
        t = (k - 11) // 2
        pts, edges = _ladder(t)
        _gadget(pts, edges, t,
                {"g1": (-1, 0), "g5": (1, 0), "g12": (0, -0.5), "g4": (-1, -1), "s2": (-1, -2),
                 "g7": (-0.4, -1.7), "g13": (0, -1.9), "g9": (0.4, -1.7), "s3": (1, -2), "g11": (1, -1)},
                [("g1", "g12"), ("g12", "g5"), ("g12", "g13"), ("g1", "g4"), ("g4", "s2"), ("g4", "g7"),
                 ("s2", "g7"), ("g7", "g13"), ("g13", "g9"), ("g9", "s3"), ("g9", "g11"), ("s3", "g11"),
                 ("g11", "g5")],
                "g1", "g5")
        return pts, edges, {"S1": "A", "S2": "s2", "S3": "s3"}
    if kind in ("planar-a", "planar-b"):
        p = (k - 3) // 2
        q = p + 1 if kind == "planar-a" else p
        a = ["A"] + [f"a{i}" for i in range(1, p)] + ["s2"]
        b = ["A"] + [f"b{i}" for i in range(1, q)] + ["s3"]
        pts = {"A": (0.0, 0.0)}
        for i, x in enumerate(a[1:], 1):
            pts[x] = (-1.0, -float(i))
        for i, x in enumerate(b[1:], 1):
            pts[x] = (1.0, -float(i))
        edges = list(zip(a, a[1:])) + list(zip(b, b[1:]))
        edges += [(a[i], b[i]) for i in range(1, p)]
        if kind == "planar-a":
            edges += [("s2", "s3"), (b[q - 1], "s2")]
        else:
            pts["m"] = (0.0, -(p + 1.0))
            edges += [("s2", "m"), ("m", "s3"), (a[p - 1], "m")]
        return pts, edges, {"S1": "A", "S2": "s2", "S3": "s3"}
    raise IncompatibleK(f"unknown fragment kind {kind!r}")


def _check_kind(kind: str, k: int):
    if kind not in KINDS:
        raise IncompatibleK(f"unknown fragment kind {kind!r}")
    if kind == "triangle":
        ok = k == 5
    elif kind == "cubic-a":
        ok = k >= 7 and k % 2 == 1
    elif kind == "cubic-b":
        ok = k >= 9 and k % 2 == 1
    elif kind == "cubic-c":
        ok = k >= 11 and k % 2 == 1
    else:
        ok = k >= 5 and k % 2 == 1
    if not ok:
        raise IncompatibleK(f"fragment {kind} is not defined for k={k}")


def _stub_cycle_ok(rot: Mapping) -> bool:
    """True iff S1, S2, S3 lie counter-clockwise around the fragment.

    An outside vertex joined to the stubs sees them clockwise, so the probe
    vertex gets the rotation ``S1, S3, S2`` and the whole thing must stay
    plane.
    """
    where = {}
    full = {}
    for v, toks in rot.items():
        full[v] = ["@" if t in STUBS else t for t in toks]
        for t in toks:
            if t in STUBS:
                where[t] = v
    full["@"] = [where["S1"], where["S3"], where["S2"]]
    try:
        G = build_from_rotation(full, require_plane=False)
    except StructuralError:
        # two stubs on one vertex; fall back to a dart-level probe
        return _stub_cycle_ok_multi(rot)
    return G.genus() == 0


def _stub_cycle_ok_multi(rot):
    names = list(rot) + ["@"]
    idx = {v: i for i, v in enumerate(names)}
    edge = {}
    darts = [[] for _ in names]
    probe = {}
    for v, toks in rot.items():
        for t in toks:
            if t in STUBS:
                e = len(edge)
                edge[("@", t)] = e
                darts[idx[v]].append(2 * e + 1)
                probe[t] = 2 * e
            else:
                key = (min(v, t), max(v, t))
                if key not in edge:
                    edge[key] = len(edge)
                e = edge[key]
                darts[idx[v]].append(2 * e + (0 if v < t else 1))
    darts[idx["@"]] = [probe["S1"], probe["S3"], probe["S2"]]
    return PlaneGraph(names, darts).genus() == 0


def _mirror_rot(rot: Mapping) -> dict:
    return {v: list(reversed(t)) for v, t in rot.items()}


def fragment_rotation(kind: str, k: int) -> dict:
    """Rotation with stub tokens produced by the built-in generator.

    Each vertex maps to its neighbours in counter-clockwise order; a token
    ``S1``/``S2``/``S3`` marks where the corresponding external edge
    attaches.  Stubs run counter-clockwise around the fragment.
    """
    _check_kind(kind, k)
    pts, edges, stubs = _drawing(kind, k)
    nbrs = {v: [] for v in pts}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    holder = {v: s for s, v in stubs.items()}

    def ang(v, w):
        if w in STUBS:
            dx, dy = _OUTWARD[v]
        else:
            dx, dy = pts[w][0] - pts[v][0], pts[w][1] - pts[v][1]
        return math.atan2(dy, dx)

    rot = {}
    for v in pts:
        toks = list(nbrs[v])
        if v in holder:
            toks.append(holder[v])
        rot[v] = sorted(toks, key=lambda w, v=v: ang(v, w))
    if not _stub_cycle_ok(rot):
        rot = _mirror_rot(rot)
    return rot


# external edges leave the tip upwards and the two bottom stubs sideways-down
_OUTWARD = {"A": (0.0, 1.0), "s2": (-1.0, -1.0), "b": (-1.0, -1.0), "s3": (1.0, -1.0), "c": (1.0, -1.0)}


@dataclass(frozen=True)
class Fragment:
    """A plane piece with three stubs.

    Attributes:
        kind: one of :data:`KINDS` (or ``"search"`` for search output).
        k: the target length the fragment is built for.
        rotation: tuple of ``(vertex, (tokens, ...))`` in file order.
        mirrored: whether the rotation was reversed relative to the source.
    """

    kind: str
    k: int
    rotation: tuple
    mirrored: bool = False
    source: str = field(default="generator", compare=False)

    @classmethod
    def from_rotation(cls, kind, k, rot: Mapping, source="generator"):
        return cls(kind, k, tuple((v, tuple(t)) for v, t in rot.items()), False, source)

    def rot(self) -> dict:
        return {v: list(t) for v, t in self.rotation}

    @property
    def vertices(self) -> list:
        return [v for v, _ in self.rotation]

    @property
    def n(self) -> int:
        return len(self.rotation)

    def stub_vertex(self, stub: str):
        for v, toks in self.rotation:
            if stub in toks:
                return v
        raise StubMismatch(f"fragment has no stub {stub}")

    @property
    def graph(self) -> PlaneGraph:
        return _fragment_graph(self.rotation)

    def mirror(self) -> "Fragment":
        rot = tuple((v, tuple(reversed(t))) for v, t in self.rotation)
        return Fragment(self.kind, self.k, rot, not self.mirrored, self.source)

    def profile(self) -> tuple:
        """Internal distances ``(d(S2,S3), d(S1,S2), d(S1,S3))``."""
        G = self.graph
        s1, s2, s3 = (G.index(self.stub_vertex(s)) for s in STUBS)
        return (_bfs(G, s2)[s3], _bfs(G, s1)[s2], _bfs(G, s1)[s3])

    def degrees_with_stubs(self) -> dict:
        return {v: len(t) for v, t in self.rotation}


@lru_cache(maxsize=None)
def _fragment_graph(rotation) -> PlaneGraph:
    rot = {v: [t for t in toks if t not in STUBS] for v, toks in rotation}
    return build_from_rotation(rot)


def _bfs(G, s):
    dist = {s: 0}
    order = [s]
    for x in order:
        for y in G.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                order.append(y)
    return dist


def expected_fragment_size(kind: str, k: int) -> int:
    if kind == "triangle":
        return 3
    return k if kind.startswith("cubic") else k - 1


def validate_fragment(F: Fragment) -> dict:
    """Check the fragment invariants; returns the measured quantities.

    Raises:
        StructuralError: on the first violated invariant.
    """
    G = F.graph
    if G.genus() != 0:
        raise StructuralError("fragment is not plane")
    stubs = [F.stub_vertex(s) for s in STUBS]
    if len(set(stubs)) != 3 and F.kind != "planar-b":
        raise StructuralError("stubs must sit on three distinct vertices")
    n = F.n
    want = expected_fragment_size(F.kind, F.k) if F.kind in KINDS else None
    if want is not None and n != want:
        raise StructuralError(f"{F.kind} fragment for k={F.k} has {n} vertices, expected {want}")
    spec = full_spectrum_oracle(G, limit=max(24, G.n))
    circ = spec.lengths[-1] if spec.lengths else 0
    target = 3 if F.kind == "triangle" else F.k - 1
    if F.kind in KINDS and circ != target:
        raise StructuralError(f"circumference {circ}, expected {target}")
    if circ >= F.k:
        raise StructuralError("fragment contains a cycle of length >= k")
    deg = F.degrees_with_stubs()
    if F.kind.startswith("cubic") or F.kind == "triangle":
        if any(d != 3 for d in deg.values()):
            raise StructuralError("cubic fragment has a vertex of degree other than 3")
    elif any(d < 3 for d in deg.values()):
        raise StructuralError("fragment vertex of degree below 3")
    if not _stub_cycle_ok(F.rot()):
        raise StructuralError("stubs are not in counter-clockwise order")
    prof = F.profile()
    return {"n": n, "circumference": circ, "profile": prof, "stub_sum": sum(prof)}


def make_fragment(kind: str, k: int) -> Fragment:
    """Fragment of the given kind, from the data directory or the generator."""
    _check_kind(kind, k)
    path = _find(f"fragment-{kind}-k{k}.rot")
    if path is not None:
        rot = read_rotation_file(path)
        for v, toks in rot.items():
            for t in toks:
                if t not in rot and t not in STUBS:
                    raise StructuralError(f"{path}: unknown neighbour {t}")
        return Fragment.from_rotation(kind, k, rot, source=str(path))
    return Fragment.from_rotation(kind, k, fragment_rotation(kind, k))


# -- base graph T -------------------------------------------------------------


@dataclass(frozen=True)
class BaseRingSpec:
    """Concentric rings of lengths ``mult * l``.

    ``patterns[i]`` is a string over ``U``/``D`` repeated around ring ``i``:
    ``U`` vertices take a radial edge outwards, ``D`` vertices inwards.  The
    ``j``-th ``U`` vertex of ring ``i`` is matched to the ``j``-th ``D``
    vertex of ring ``i + 1``.
    """

    l: int
    multipliers: tuple
    patterns: tuple
    name: str = ""

    @property
    def lengths(self) -> tuple:
        return tuple(m * self.l for m in self.multipliers)

    @property
    def n(self) -> int:
        return sum(self.lengths)


def _read_pattern(name: str):
    path = _find(f"rings-{name}.txt")
    if path is None:
        raise InvalidProfile(f"no ring pattern named {name!r}")
    mults, pats = [], []
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        mults.append(int(line[0]))
        pats.append(line[1])
    return tuple(mults), tuple(pats)


def ring_spec(name: str, l: int) -> BaseRingSpec:
    """Spec from the pattern file ``rings-<name>.txt`` (``seven`` or ``five``)."""
    mults, pats = _read_pattern(name)
    return BaseRingSpec(l, mults, pats, name)


def build_base_T(spec: BaseRingSpec) -> PlaneGraph:
    """Cubic ring graph; vertex labels are ``(ring, position)``.

    Raises:
        InvalidProfile: the ring lengths are not ``l, 2l, ..., 2l, l`` with an
            odd number of ``2l`` rings, or a pattern does not tile its ring.
        MatchingNotPerfect: ``U`` and ``D`` counts of consecutive rings differ.
    """
    m = spec.multipliers
    if spec.l < 3:
        raise InvalidProfile("l must be at least 3")
    if len(m) < 3 or m[0] != 1 or m[-1] != 1 or any(x != 2 for x in m[1:-1]) or (len(m) - 2) % 2 == 0:
        raise InvalidProfile(f"ring profile {m} is not l, 2l x odd, l")
    if len(spec.patterns) != len(m):
        raise InvalidProfile("one pattern per ring is required")
    lengths = spec.lengths
    roles = []
    for i, (n, pat) in enumerate(zip(lengths, spec.patterns)):
        if not pat or set(pat) - {"U", "D"} or n % len(pat):
            raise InvalidProfile(f"pattern {pat!r} does not tile ring {i}")
        r = [pat[j % len(pat)] for j in range(n)]
        if i == 0 and "D" in r or i == len(m) - 1 and "U" in r:
            raise MatchingNotPerfect("innermost ring must point out and outermost ring in")
        roles.append(r)
    links = []
    for i in range(len(m) - 1):
        ups = [j for j, x in enumerate(roles[i]) if x == "U"]
        downs = [j for j, x in enumerate(roles[i + 1]) if x == "D"]
        if len(ups) != len(downs):
            raise MatchingNotPerfect(f"rings {i} and {i+1}: {len(ups)} U against {len(downs)} D")
        links.append(list(zip(ups, downs)))
    return ring_graph(list(lengths), links)


def ring_roles(T: PlaneGraph) -> dict:
    """For a ring graph: label -> (ring, role, radial neighbour, next, prev)."""
    out = {}
    for v in range(T.n):
        i, j = T.label(v)
        radial = prev = nxt = None
        for w in T.neighbors(v):
            wi, wj = T.label(w)
            if wi != i:
                radial = T.label(w)
        ring = [T.label(w) for w in T.neighbors(v) if T.label(w)[0] == i]
        size = sum(1 for x in T.labels if x[0] == i)
        nxt = (i, (j + 1) % size)
        prev = (i, (j - 1) % size)
        if set(ring) != {nxt, prev}:
            raise StructuralError("not a ring graph")
        role = "U" if radial[0] > i else "D"
        out[T.label(v)] = (i, role, radial, nxt, prev)
    return out


# -- replacement --------------------------------------------------------------


def replace_vertices(T: PlaneGraph, assignment) -> PlaneGraph:
    """Substitute a fragment for every vertex of the cubic plane graph ``T``.

    Args:
        assignment: mapping (or callable) from a vertex label of ``T`` to a
            pair ``(fragment, stub_of)`` where ``stub_of`` maps each
            neighbour label to the stub (``S1``/``S2``/``S3``) receiving the
            edge towards it.  When the stubs read clockwise the fragment is
            mirrored.

    Returns:
        Plane graph with labels ``(T label, fragment vertex)``.

    Raises:
        MissingAssignment, StubMismatch.
    """
    get = assignment if callable(assignment) else assignment.get
    chosen = {}
    for v in range(T.n):
        lab = T.label(v)
        item = get(lab)
        if item is None:
            raise MissingAssignment(f"no fragment for vertex {lab!r}")
        frag, stub_of = item
        nb = [T.label(w) for w in T.neighbors(v)]
        if T.degree(v) != 3:
            raise StubMismatch(f"vertex {lab!r} has degree {T.degree(v)}")
        try:
            seq = [stub_of[w] for w in nb]
        except KeyError as exc:
            raise StubMismatch(f"vertex {lab!r}: no stub for neighbour {exc.args[0]!r}") from None
        if sorted(seq) != list(STUBS):
            raise StubMismatch(f"vertex {lab!r}: stubs {seq}")
        i = seq.index("S1")
        seq = seq[i:] + seq[:i]
        if seq != ["S1", "S2", "S3"]:
            frag = frag.mirror()
        chosen[lab] = (frag, {w: stub_of[w] for w in nb})
    rot = {}
    for lab, (frag, stub_of) in chosen.items():
        towards = {s: w for w, s in stub_of.items()}
        for x, toks in frag.rotation:
            out = []
            for t in toks:
                if t in STUBS:
                    w = towards[t]
                    wfrag, wstub = chosen[w]
                    out.append((w, wfrag.stub_vertex(wstub[lab])))
                else:
                    out.append((lab, t))
            rot[(lab, x)] = out
    return build_from_rotation(rot)


# -- families -----------------------------------------------------------------


def expected_gap_end(variant: str, k: int) -> int:
    return {"cubic-k5": 9, "cubic-k7": 14, "cubic-k9": 19}.get(variant, 2 * k + 2)


_RINGS = {"cubic-k9": "five", "cubic-odd": "seven", "planar-odd": "five"}


def load_assignment(variant: str) -> dict:
    """``(ring, role) -> (kind, stub order)`` from ``assign-<variant>.txt``.

    The stub order names the stubs taking the radial, next and previous
    edge (default ``S1 S3 S2``).
    """
    path = _find(f"assign-{variant}.txt")
    if path is None:
        raise MissingAssignment(f"no assignment file for {variant}")
    out = {}
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        ring, role, kind = int(line[0]), line[1], line[2]
        order = tuple(line[3:6]) if len(line) >= 6 else ("S1", "S3", "S2")
        out[(ring, role)] = (kind, order)
    return out


@dataclass(frozen=True)
class FamilySpec:
    """Which family to build.

    ``l`` defaults to ``k + 2`` for the ring variants and is ignored for
    ``cubic-k5``/``cubic-k7``, which use ``base`` (default: dodecahedron).
    ``assignment`` overrides the data file.
    """

    variant: str
    k: int
    l: int | None = None
    assignment: Mapping | None = None
    base: PlaneGraph | None = field(default=None, compare=False)

    def __post_init__(self):
        v, k = self.variant, self.k
        if v not in VARIANTS:
            raise IncompatibleK(f"unknown family {v!r}; choose from {', '.join(VARIANTS)}")
        need = {"cubic-k5": k == 5, "cubic-k7": k == 7, "cubic-k9": k == 9,
                "cubic-odd": k >= 11 and k % 2 == 1, "planar-odd": k >= 5 and k % 2 == 1}[v]
        if not need:
            rule = {"cubic-k5": "k = 5", "cubic-k7": "k = 7", "cubic-k9": "k = 9",
                    "cubic-odd": "k odd and >= 11", "planar-odd": "k odd and >= 5"}[v]
            raise IncompatibleK(f"family {v} needs {rule}, got k={k}")
        if v in _RINGS:
            if self.l is None:
                object.__setattr__(self, "l", k + 2)
            if self.l < k + 2:
                raise InvalidProfile(f"l must be at least k + 2 = {k + 2}, got {self.l}")

    @property
    def expected_gap_end(self) -> int:
        return expected_gap_end(self.variant, self.k)


@dataclass(frozen=True)
class Family:
    """A built family graph with its provenance."""

    spec: FamilySpec
    graph: PlaneGraph
    base: PlaneGraph
    kinds: dict = field(compare=False, repr=False, default_factory=dict)

    @property
    def k(self):
        return self.spec.k

    @property
    def l(self):
        return self.spec.l

    @property
    def expected_interval(self):
        return (self.spec.k, self.spec.expected_gap_end)

    @property
    def expected_witness_length(self):
        return self.spec.expected_gap_end + 1


def _ring_assignment(T: PlaneGraph, table: Mapping, k: int):
    roles = ring_roles(T)
    cache = {}
    out = {}
    kinds = {}
    for lab, (ring, role, radial, nxt, prev) in roles.items():
        if (ring, role) not in table:
            raise MissingAssignment(f"no fragment for ring {ring} role {role}")
        kind, order = table[(ring, role)]
        if kind not in cache:
            cache[kind] = make_fragment(kind, k)
        out[lab] = (cache[kind], {radial: order[0], nxt: order[1], prev: order[2]})
        kinds[lab] = kind
    return out, kinds


def build_family(spec: FamilySpec) -> Family:
    """Build the family graph described by ``spec``."""
    k = spec.k
    if spec.variant in ("cubic-k5", "cubic-k7"):
        T = spec.base if spec.base is not None else dodecahedron()
        if not T.is_cubic():
            raise StructuralError("base graph must be cubic")
        if girth(T) < 5:
            raise StructuralError("base graph must have girth at least 5")
        kind = "triangle" if k == 5 else "cubic-a"
        frag = make_fragment(kind, k)
        assign = {}
        for v in range(T.n):
            nb = [T.label(w) for w in T.neighbors(v)]
            assign[T.label(v)] = (frag, dict(zip(nb, STUBS)))
        G = replace_vertices(T, assign)
        return Family(spec, G, T, {T.label(v): kind for v in range(T.n)})
    T = build_base_T(ring_spec(_RINGS[spec.variant], spec.l))
    table = dict(spec.assignment) if spec.assignment is not None else load_assignment(spec.variant)
    for key, val in list(table.items()):
        if isinstance(val, str):
            table[key] = (val, ("S1", "S3", "S2"))
    assign, kinds = _ring_assignment(T, table, k)
    G = replace_vertices(T, assign)
    return Family(spec, G, T, kinds)


def default_family(k: int, cubic: bool = True, l: int | None = None) -> FamilySpec:
    """The family used for ``k`` in tables: smallest cubic variant or the planar one."""
    if not cubic:
        return FamilySpec("planar-odd", k, l)
    variant = {5: "cubic-k5", 7: "cubic-k7", 9: "cubic-k9"}.get(k, "cubic-odd")
    return FamilySpec(variant, k, l if variant in _RINGS else None)


# -- fragment search ----------------------------------------------------------


def search_fragment(k: int, n_vertices: int, circumference: int | None = None) -> list:
    """All cubic fragments with ``n_vertices`` vertices, up to stub-preserving isomorphism.

    Candidates are 3-connected cubic plane graphs on ``n_vertices + 1``
    vertices with one vertex removed; its three neighbours become the stubs.
    A candidate is kept when its circumference equals ``circumference``
    (or, when that is ``None``, is below ``k``).

    Raises:
        NoneFound: no candidate qualifies.
    """
    from .generators import all_cubic_planar

    if k > 13:
        raise IncompatibleK("fragment search is limited to k <= 13")
    total = n_vertices + 1
    if total < 4 or total % 2:
        raise NoneFound(f"no cubic graph on {total} vertices")
    found = {}
    for G in all_cubic_planar(total):
        for x in range(G.n):
            colors = [1 if v == x else 0 for v in range(G.n)]
            key = canonical_code(G, colors)
            if key in found:
                continue
            frag = _fragment_from_vertex(G, x, k)
            spec = full_spectrum_oracle(frag.graph)
            circ = spec.lengths[-1] if spec.lengths else 0
            if circumference is None:
                ok = circ < k and circ > 0
            else:
                ok = circ == circumference
            if ok:
                found[key] = frag
    if not found:
        raise NoneFound(f"no fragment with {n_vertices} vertices and circumference {circumference}")
    return [found[key] for key in sorted(found)]


def _fragment_from_vertex(G: PlaneGraph, x: int, k: int) -> Fragment:
    # seen from the fragment the stubs run opposite to the rotation at x
    nb = list(reversed(G.neighbors(x)))
    stub = {w: s for w, s in zip(nb, STUBS)}
    rot = {}
    for v in range(G.n):
        if v == x:
            continue
        rot[f"v{v}"] = [stub[v] if w == x else f"v{w}" for w in G.neighbors(v)]
    return Fragment.from_rotation("search", k, rot, source="search")


def fragment_code(F: Fragment) -> tuple:
    """Isomorphism invariant of a fragment with its stubs (stub names ignored)."""
    rot = {}
    for v, toks in F.rotation:
        rot[v] = ["@" if t in STUBS else t for t in toks]
    order = ("S1", "S2", "S3") if F.mirrored else ("S1", "S3", "S2")
    rot["@"] = [F.stub_vertex(s) for s in order]
    G = build_from_rotation(rot)
    colors = [1 if G.label(v) == "@" else 0 for v in range(G.n)]
    return canonical_code(G, colors)


# -- data file generation -----------------------------------------------------


def write_data_files(directory, kmax: int = 15) -> list:
    """Write every generated fragment up to ``kmax`` plus ring patterns and assignments."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    written = []
    for kind in KINDS:
        for k in range(5, kmax + 1, 2):
            try:
                _check_kind(kind, k)
            except IncompatibleK:
                continue
            p = d / f"fragment-{kind}-k{k}.rot"
            write_rotation_file(p, fragment_rotation(kind, k),
                                f"{kind} fragment for k={k}\nvertex followed by neighbours counter-clockwise;"
                                f" S1 S2 S3 mark the stub edges")
            written.append(p)
    return written


def check_family(fam: Family) -> dict:
    """Cheap structural checks on a built family (degrees, genus, connectivity)."""
    G = fam.graph
    out = {"n": G.n, "m": G.m, "genus": G.genus(), "cubic": G.is_cubic(),
           "three_connected": is_k_connected(G, 3)}
    return out

