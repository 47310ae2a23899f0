import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given

from csl.errors import (
    AllDegreeTwo,
    BareCycle,
    DegreeTooSmall,
    InconsistentRotation,
    NonContiguousBlocks,
    NonPlanarEmbedding,
    OverlappingTriangles,
)
from csl.plane import (
    PlaneGraph,
    biconnected_components,
    build_from_coordinates,
    build_from_rotation,
    canonical_code,
    contract_edge,
    contract_triangles,
    dual,
    is_k_connected,
    resubdivide,
    split_vertex,
    subdivide_edges,
    subdivided_paths,
    suppress_degree_two,
    truncate,
)
from csl.polyhedra import NAMED, cube, cycle, diamond, dodecahedron, named, prism, tetrahedron, wheel

from helpers import biconnected, brute_connected_after_removal, cubic, isomorphic, planar_3conn, seeds, to_nx


def face_lengths(G):
    return Counter(f.length for f in G.faces())


@pytest.mark.parametrize(
    "name, n, m, faces",
    [
        ("tetrahedron", 4, 6, {3: 4}),
        ("cube", 8, 12, {4: 6}),
        ("prism", 6, 9, {3: 2, 4: 3}),
        ("octahedron", 6, 12, {3: 8}),
        ("dodecahedron", 20, 30, {5: 12}),
        ("icosahedron", 12, 30, {3: 20}),
        ("w4", 5, 8, {3: 4, 4: 1}),
        ("truncated-dodecahedron", 60, 90, {3: 20, 10: 12}),
        ("truncated-icosahedron", 60, 90, {5: 12, 6: 20}),
        ("truncated-tetrahedron", 12, 18, {3: 4, 6: 4}),
    ],
)
def test_named_polyhedra(name, n, m, faces):
    G = named(name)
    assert (G.n, G.m) == (n, m)
    assert dict(face_lengths(G)) == faces
    assert G.genus() == 0
    assert is_k_connected(G, 3)


def test_every_dart_in_one_face():
    G = dodecahedron()
    seen = [d for f in G.faces() for d in f.darts]
    assert sorted(seen) == list(range(2 * G.m))
    for f in G.faces():
        for d in f.darts:
            assert G.face_of(d).id == f.id


def test_face_walk_follows_rotation():
    G = tetrahedron()
    for f in G.faces():
        for a, b in zip(f.darts, f.darts[1:] + f.darts[:1]):
            assert G.face_next(a) == b
            assert G.head(a) == G.origin(b)


def test_rotation_round_trip():
    G = prism(5)
    assert build_from_rotation(G.rotation()).same_embedding(G)
    assert not G.mirror().same_embedding(G)
    assert G.mirror().mirror().same_embedding(G)


def test_coordinates_give_planar_rotation():
    G = build_from_coordinates({0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1), 4: (0.5, 0.5)},
                               [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])
    assert G.genus() == 0
    assert dict(face_lengths(G)) == {3: 4, 4: 1}


def test_asymmetric_lists_rejected():
    with pytest.raises(InconsistentRotation):
        build_from_rotation({0: [1, 2], 1: [0], 2: [1]})


def test_loop_and_parallel_edges_rejected():
    with pytest.raises(InconsistentRotation):
        build_from_rotation([[0, 1], [0]])
    with pytest.raises(InconsistentRotation):
        build_from_rotation([[1, 1], [0, 0]])


def test_unknown_neighbour_rejected():
    with pytest.raises(InconsistentRotation):
        build_from_rotation({0: [1], 1: [7]})


def test_k33_rotation_is_not_planar(registry):
    rot = {a: ["x", "y", "z"] for a in "abc"}
    rot.update({x: ["a", "b", "c"] for x in "xyz"})
    with registry.pause():
        with pytest.raises(NonPlanarEmbedding) as info:
            build_from_rotation(rot)
        assert info.value.genus >= 1
        assert build_from_rotation(rot, require_plane=False).genus() == 1


def test_twisted_rotation_of_planar_graph_has_positive_genus(registry):
    rot = cube().rotation()
    v = next(iter(rot))
    rot[v] = [rot[v][0], rot[v][2], rot[v][1]]
    with registry.pause():
        assert build_from_rotation(rot, require_plane=False).genus() > 0


def test_raw_constructor_validation(registry):
    with registry.pause():
        with pytest.raises(InconsistentRotation):
            PlaneGraph([0, 1], [[0], [0]])
        with pytest.raises(InconsistentRotation):
            PlaneGraph([0, 0], [[0], [1]])
        with pytest.raises(InconsistentRotation):
            PlaneGraph([0], [[0, 1]])


# -- connectivity -----------------------------------------------------------


@pytest.mark.parametrize("G, c", [(cycle(5), 2), (diamond(), 2), (cube(), 3), (wheel(6), 3), (tetrahedron(), 3)])
def test_connectivity_exact(G, c):
    assert is_k_connected(G, c)
    if c < 3:
        assert not is_k_connected(G, c + 1)


@given(seeds)
def test_connectivity_matches_brute_force(seed):
    G = biconnected(seed, max_n=11)
    for c in (1, 2, 3):
        assert is_k_connected(G, c) == brute_connected_after_removal(G, c)


@given(seeds)
def test_blocks_match_networkx(seed):
    G = biconnected(seed, max_n=12)
    # cut a vertex's edges to create blocks
    rng = random.Random(seed)
    drop = {rng.randrange(G.m) for _ in range(3)}
    from csl.plane import edge_subgraph
    H = edge_subgraph(G, [e for e in range(G.m) if e not in drop])
    ours = sorted(sorted(map(tuple, (sorted(H.edge(e)) for e in b))) for b in biconnected_components(H))
    ref = sorted(sorted(tuple(sorted(e)) for e in b) for b in nx.biconnected_component_edges(to_nx(H)))
    assert ours == ref


def test_k_out_of_range():
    with pytest.raises(ValueError):
        is_k_connected(cube(), 4)


# -- surgery ----------------------------------------------------------------


def test_split_labels_and_degrees():
    W = wheel(4)
    S = split_vertex(W, 0, [0, 1])
    assert S.n == 6 and S.m == 9
    assert S.degree(S.index((0, 1))) == 3 and S.degree(S.index((0, 2))) == 3
    assert S.genus() == 0
    assert sum(f.length for f in S.faces()) == sum(f.length for f in W.faces()) + 2


def test_split_errors():
    with pytest.raises(DegreeTooSmall):
        split_vertex(cube(), 0, [0])
    with pytest.raises(NonContiguousBlocks):
        split_vertex(wheel(6), 0, [0, 2])
    with pytest.raises(DegreeTooSmall):
        split_vertex(wheel(4), 0, [0])


@given(seeds)
def test_split_then_contract_is_identity(seed):
    G = planar_3conn(seed, 6, 14)
    rng = random.Random(seed)
    big = [v for v in range(G.n) if G.degree(v) >= 4]
    if not big:
        return
    v = rng.choice(big)
    d = G.degree(v)
    size = rng.randint(2, d - 2)
    s = rng.randrange(d)
    S = split_vertex(G, v, [(s + i) % d for i in range(size)])
    assert S.genus() == 0
    new_edge = S.tags.index(("split", G.label(v)))
    back = contract_edge(S, new_edge)
    assert back.same_embedding(G)


@given(seeds)
def test_subdivide_suppress_round_trip(seed):
    G = cubic(seed, 4, 16)
    rng = random.Random(seed)
    counts = {e: rng.randint(0, 3) for e in range(G.m)}
    S = subdivide_edges(G, counts)
    assert S.n == G.n + sum(counts.values())
    H, pm = suppress_degree_two(S)
    assert canonical_code(H) == canonical_code(G)
    assert sorted(p.length for p in pm.values()) == sorted(c + 1 for c in counts.values())
    R = resubdivide(H, pm, labels_from=S)
    assert R.same_embedding(S)


def test_suppress_keeps_face_correspondence():
    G = subdivide_edges(cube(), {0: 2, 5: 1})
    H, pm = suppress_degree_two(G)
    index = G.dart_index()
    for f in H.faces():
        g = G.face_of(index[H.dart_key(f.darts[0])])
        assert g.length == sum(pm[d >> 1].length for d in f.darts)


def test_cycle_has_no_subdivided_paths():
    with pytest.raises(BareCycle):
        subdivided_paths(cycle(6))
    with pytest.raises(AllDegreeTwo):
        suppress_degree_two(cycle(4))


def test_subdivided_paths_cover_edges():
    G = subdivide_edges(tetrahedron(), {0: 3, 2: 1})
    paths = subdivided_paths(G)
    assert len(paths) == 6
    assert sum(p.length for p in paths) == G.m


def test_truncation_and_triangle_contraction():
    for name in ("tetrahedron", "cube", "dodecahedron", "icosahedron"):
        G = named(name)
        T = truncate(G)
        assert T.is_cubic() and T.genus() == 0
        tris = [f for f in T.faces() if f.length == 3 and len({v[0] for v in T.face_labels(f)}) == 1]
        if G.is_cubic():
            back = contract_triangles(T, tris)
            assert canonical_code(back) == canonical_code(G)
            assert back.same_embedding(G)


def test_overlapping_triangles_rejected():
    with pytest.raises(OverlappingTriangles):
        contract_triangles(wheel(5), [f for f in wheel(5).faces() if f.length == 3][:2])


def test_dual_of_dual():
    for name in ("cube", "prism", "w4", "dodecahedron"):
        G = named(name)
        D = dual(G)
        assert D.genus() == 0
        assert D.n == len(G.faces()) and D.m == G.m
        assert canonical_code(dual(D)) == canonical_code(G)


# -- canonical codes --------------------------------------------------------


@given(seeds)
def test_canonical_code_invariant_under_relabelling(seed):
    G = planar_3conn(seed, 5, 12)
    perm = list(range(G.n))
    random.Random(seed).shuffle(perm)
    rot = {perm[v]: [perm[w] for w in G.neighbors(v)] for v in range(G.n)}
    H = build_from_rotation(dict(sorted(rot.items())))
    assert canonical_code(H) == canonical_code(G)
    assert canonical_code(G.mirror()) == canonical_code(G)
    assert isomorphic(G, H)


@given(seeds, seeds)
def test_canonical_code_agrees_with_isomorphism(s1, s2):
    G1, G2 = cubic(s1, 8, 12), cubic(s2, 8, 12)
    assert (canonical_code(G1) == canonical_code(G2)) == isomorphic(G1, G2)


def test_named_table_complete():
    for name in NAMED:
        G = named(name)
        assert G.genus() == 0
    with pytest.raises(KeyError):
        named("nope")
