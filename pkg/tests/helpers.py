"""Independent oracles and hypothesis strategies shared by the tests."""

import itertools
import random

import networkx as nx
from hypothesis import strategies as st

from csl.generators import random_2connected_planar, random_3connected_planar, random_cubic_planar

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def to_nx(G):
    H = nx.MultiGraph() if not G.is_simple() else nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def nx_cycle_lengths(G):
    return {len(c) for c in nx.simple_cycles(to_nx(G))}


def brute_connected_after_removal(G, c):
    """Connectivity by deleting every vertex set of size below ``c``."""
    H = to_nx(G)
    if G.n <= c:
        return False
    for r in range(c):
        for S in itertools.combinations(range(G.n), r):
            K = H.copy()
            K.remove_nodes_from(S)
            if not nx.is_connected(K):
                return False
    return True


def isomorphic(G1, G2):
    return nx.is_isomorphic(to_nx(G1), to_nx(G2))


def planar_3conn(seed, lo=5, hi=16):
    rng = random.Random(seed)
    return random_3connected_planar(rng.randint(lo, hi), rng)


def cubic(seed, lo=4, hi=20):
    rng = random.Random(seed)
    return random_cubic_planar(rng.randrange(lo, hi + 1, 2), rng)


def biconnected(seed, max_n=16):
    return random_2connected_planar(max_n, random.Random(seed))


def from_nx(H):
    """Plane graph from a planar networkx graph, embedding chosen by networkx."""
    from csl.plane import build_from_rotation

    ok, emb = nx.check_planarity(H)
    assert ok
    # networkx lists neighbours clockwise
    return build_from_rotation({v: list(reversed(list(emb.neighbors_cw_order(v)))) for v in sorted(H)})
