"""Interchange formats: planar_code, DOT and JSON reports.

planar_code stores, per graph, the vertex count followed by each vertex's
neighbours (1-based) in rotation order, each list closed by a zero.  Graphs
with more than 255 vertices start with a zero byte and use little-endian
16-bit entries throughout.  Rotations are written in the stored
(counter-clockwise) order; a reader following the clockwise convention
sees the mirror image, which has the same cycles and faces.
"""

from __future__ import annotations

import json
import struct
from dataclasses import dataclass, field

from .errors import BadHeader, InconsistentRotation, RotationInconsistent, TruncatedRecord
from .plane import PlaneGraph, build_from_rotation

__all__ = [
    "HEADER",
    "write_planar_code",
    "read_planar_code",
    "to_dot",
    "RunReport",
    "to_jsonable",
    "dumps",
]

HEADER = b">>planar_code<<"


def _encode(G: PlaneGraph) -> bytes:
    n = G.n
    if n > 0xFFFF:
        raise ValueError("planar_code holds at most 65535 vertices")
    rows = G.rotation_lists()
    if n <= 255:
        out = bytearray([n])
        for r in rows:
            out.extend(w + 1 for w in r)
            out.append(0)
        return bytes(out)
    words = [n]
    for r in rows:
        words.extend(w + 1 for w in r)
        words.append(0)
    return b"\x00" + struct.pack(f"<{len(words)}H", *words)


def write_planar_code(graphs, header: bool = True) -> bytes:
    """Serialize plane graphs; vertices are numbered by index."""
    if isinstance(graphs, PlaneGraph):
        graphs = [graphs]
    return (HEADER if header else b"") + b"".join(_encode(G) for G in graphs)


def read_planar_code(data: bytes) -> list:
    """Parse a planar_code byte string.

    Raises:
        BadHeader: the data does not start with ``>>planar_code<<``.
        TruncatedRecord: a graph ends early.
        RotationInconsistent: neighbour lists are not symmetric, contain
            loops or parallel edges, or index a missing vertex.
    """
    if not data.startswith(HEADER):
        raise BadHeader("missing >>planar_code<< header")
    pos = len(HEADER)
    graphs = []
    size = len(data)
    while pos < size:
        wide = data[pos] == 0
        if wide:
            pos += 1
            if pos + 2 > size:
                raise TruncatedRecord("vertex count cut off")
            n = struct.unpack_from("<H", data, pos)[0]
            pos += 2
        else:
            n = data[pos]
            pos += 1
        rows = []
        for v in range(n):
            r = []
            while True:
                if wide:
                    if pos + 2 > size:
                        raise TruncatedRecord(f"graph {len(graphs)} ends inside vertex {v + 1}")
                    x = struct.unpack_from("<H", data, pos)[0]
                    pos += 2
                else:
                    if pos >= size:
                        raise TruncatedRecord(f"graph {len(graphs)} ends inside vertex {v + 1}")
                    x = data[pos]
                    pos += 1
                if x == 0:
                    break
                if x > n:
                    raise RotationInconsistent(f"vertex {v + 1} lists {x} but n = {n}")
                r.append(x - 1)
            rows.append(r)
        try:
            graphs.append(build_from_rotation(rows))
        except InconsistentRotation as exc:
            if isinstance(exc, RotationInconsistent):
                raise
            raise RotationInconsistent(str(exc)) from exc
    return graphs


def _dot_id(label) -> str:
    return '"' + str(label).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(G: PlaneGraph, k: int | None = None, name: str = "G") -> str:
    """Undirected DOT text; faces are listed as comments, tagged short/long for ``k``."""
    lines = [f"graph {name} {{"]
    lines.append(f"  // n={G.n} m={G.m} faces={len(G.faces())}")
    for v in range(G.n):
        lines.append(f"  {v} [label={_dot_id(G.label(v))}];")
    fo = G.face_of
    for e in range(G.m):
        u, v = G.edge(e)
        a, b = fo(2 * e).id, fo(2 * e + 1).id
        lines.append(f"  {u} -- {v} [faces=\"{a},{b}\"];")
    for f in G.faces():
        tag = ""
        if k is not None:
            tag = " short" if f.length < k else " long"
        walk = " ".join(str(v) for v in f.vertices)
        lines.append(f"  // face {f.id} length {f.length}{tag}: {walk}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_jsonable(x):
    """Turn tuples, sets, dataclass reports and dict keys into JSON-ready data."""
    if hasattr(x, "to_dict"):
        return to_jsonable(x.to_dict())
    if isinstance(x, dict):
        return {str(k) if not isinstance(k, str) else k: to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted((to_jsonable(v) for v in x), key=repr)
    return x


FIELDS = ("family", "k", "l", "n", "m", "interval", "gap_end", "witness_length", "witness_vertices",
          "exhaustive", "seed", "elapsed_ms")


@dataclass
class RunReport:
    """One JSON report.  The fixed fields are always present (``None`` when
    they do not apply); command specific data goes to ``payload``."""

    command: str
    family: str | None = None
    k: int | None = None
    l: int | None = None
    n: int | None = None
    m: int | None = None
    interval: list | None = None
    gap_end: int | None = None
    witness_length: int | None = None
    witness_vertices: list | None = None
    exhaustive: bool | None = None
    seed: int | None = None
    elapsed_ms: float | None = None
    inputs: dict = field(default_factory=dict)
    stats: dict = field(default_factory=dict)
    payload: dict = field(default_factory=dict)
    status: str = "ok"

    def to_dict(self) -> dict:
        out = {"command": self.command}
        for name in FIELDS:
            out[name] = getattr(self, name)
        out["inputs"] = self.inputs
        out["stats"] = self.stats
        out["payload"] = self.payload
        out["status"] = self.status
        return to_jsonable(out)


def dumps(report) -> str:
    return json.dumps(to_jsonable(report), sort_keys=False)
