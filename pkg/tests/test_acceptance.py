"""Acceptance criteria 1 to 10.

Each test records its outcome in the ``acceptance`` table; the terminal
summary prints one PASS/FAIL line per criterion.  This module runs last so
that criterion 8 sees every graph built by the rest of the suite.
"""

import contextlib
import random
import time

import networkx as nx
import pytest

from csl.constructions import FamilySpec, build_family
from csl.errors import AllDegreeTwo
from csl.formats import read_planar_code, write_planar_code
from csl.generators import random_2connected_planar, random_3connected_planar, random_cubic_planar
from csl.plane import contract_edge, is_k_connected, resubdivide, split_vertex, subdivide_edges, suppress_degree_two
from csl.reduction import counting_report, discharge
from csl.spectrum import enumerate_cycle_lengths_upto, full_spectrum_oracle, gap_report
from csl.sweeps import POLYHEDRA, SweepConfig, run_sweep

from helpers import to_nx


@contextlib.contextmanager
def criterion(table, num, title):
    state = {"detail": ""}
    t0 = time.perf_counter()
    ok = False
    try:
        yield state
        ok = True
    finally:
        state["detail"] = f"{state['detail']}; {time.perf_counter() - t0:.1f}s".lstrip("; ")
        table[num] = (ok, title, state["detail"])


def nx_is_cycle(G, walk):
    H = to_nx(G)
    walk = [G.index(lab) for lab in walk]
    n = len(walk)
    return len(set(walk)) == n and all(H.has_edge(walk[i], walk[(i + 1) % n]) for i in range(n))


def certify(variant, k, l=None):
    fam = build_family(FamilySpec(variant, k, l))
    return fam.graph, gap_report(fam.graph, k)


def test_criterion_01_cubic_k5(acceptance):
    with criterion(acceptance, 1, "cubic k=5 family: no cycle in [5,9]") as st:
        G, cert = certify("cubic-k5", 5)
        assert G.n == 60 and G.is_cubic() and is_k_connected(G, 3)
        assert cert.exhaustive and cert.interval == (5, 9)
        assert cert.witness_length >= 10 and nx_is_cycle(G, cert.witness)
        # independent bounded enumeration
        assert not {len(c) for c in nx.simple_cycles(to_nx(G), length_bound=9)} & set(range(5, 10))
        st["detail"] = f"n={G.n} witness={cert.witness_length}"


def test_criterion_02_cubic_k7(acceptance):
    with criterion(acceptance, 2, "cubic k=7 family: no cycle in [7,14], a 15-cycle exists") as st:
        G, cert = certify("cubic-k7", 7)
        assert G.n == 140 and G.is_cubic()
        assert cert.exhaustive and cert.interval == (7, 14)
        assert cert.witness_length == 15 and nx_is_cycle(G, cert.witness)
        assert not {len(c) for c in nx.simple_cycles(to_nx(G), length_bound=14)} & set(range(7, 15))
        st["detail"] = f"n={G.n} witness={cert.witness_length}"


def test_criterion_03_cubic_k9(acceptance):
    with criterion(acceptance, 3, "cubic k=9 family (l=11): no cycle in [9,19], witness 20") as st:
        G, cert = certify("cubic-k9", 9, 11)
        assert G.n == 792 and G.is_cubic()
        assert cert.exhaustive and cert.interval == (9, 19)
        assert cert.witness_length == 20 and nx_is_cycle(G, cert.witness)
        st["detail"] = f"n={G.n} witness={cert.witness_length}"


def test_criterion_04_cubic_k11(acceptance):
    with criterion(acceptance, 4, "cubic k=11 family (l=13): no cycle in [11,24], face of length 25") as st:
        G, cert = certify("cubic-odd", 11, 13)
        assert G.n == 1716 and G.is_cubic()
        assert cert.exhaustive and cert.interval == (11, 24)
        assert 25 in {f.length for f in G.faces()}
        assert cert.witness_length == 25 and nx_is_cycle(G, cert.witness)
        st["detail"] = f"n={G.n} witness={cert.witness_length}"


def test_criterion_05_planar_odd(acceptance):
    with criterion(acceptance, 5, "planar-odd families k=5,7,9,11: no cycle in [k,2k+2]") as st:
        sizes = []
        for k in (5, 7, 9, 11):
            G, cert = certify("planar-odd", k)
            assert G.genus() == 0 and is_k_connected(G, 3)
            assert cert.exhaustive and cert.interval == (k, 2 * k + 2)
            assert cert.witness_length == 2 * k + 3 and nx_is_cycle(G, cert.witness)
            sizes.append(G.n)
        G = build_family(FamilySpec("planar-odd", 5)).graph
        assert nx.node_connectivity(to_nx(G)) >= 3
        st["detail"] = "n=" + ",".join(map(str, sizes))


def test_criterion_06_general_sweep(acceptance):
    with criterion(acceptance, 6, "general sweep: 500 graphs, cycle in [k,2k+3] / [4,10]") as st:
        res = run_sweep(SweepConfig(count=500, min_n=10, max_n=40, seed=42, kmax=8))
        assert res.samples == 500
        assert res.violations == []
        assert res.checks > 0
        st["detail"] = f"checks={res.checks} skipped={len(res.skipped)} violations=0"


def test_criterion_07_cubic_sweep(acceptance):
    with criterion(acceptance, 7, "cubic sweep: 100 graphs + polyhedra, cycle in [k,5(k-1)/2]") as st:
        res = run_sweep(SweepConfig(count=100, min_n=10, max_n=40, seed=42, cubic=True))
        assert res.samples == 100 + len(POLYHEDRA)
        assert res.violations == []
        assert res.checks > 0
        st["detail"] = f"checks={res.checks} skipped={len(res.skipped)} violations=0"


def test_criterion_08_identities(acceptance, registry):
    with criterion(acceptance, 8, "identities on every graph built in this run") as st:
        # cubic samples to make sure the 3-connected check has material
        rng = random.Random(8)
        for _ in range(30):
            random_cubic_planar(rng.randrange(4, 41, 2), rng)
        graphs = list(registry.graphs.values())
        euler = two_conn = three_conn = 0
        for G in graphs:
            if G.is_connected():
                assert G.n - G.m + len(G.faces()) == 2, G
                euler += 1
            if not G.is_cubic():
                continue
            if not is_k_connected(G, 2):
                continue
            rep = counting_report(G, 5)
            assert 2 * (rep.x + rep.y) == rep.n + 4
            two_conn += 1
            if G.n <= 400 and is_k_connected(G, 3):
                ledger = discharge(G, 5)
                assert ledger.conserved and ledger.euler_sum == -12
                three_conn += 1
            else:
                assert sum(f.length - 6 for f in G.faces()) == -12
        assert three_conn > 0
        st["detail"] = f"graphs={len(graphs)} euler={euler} cubic2c={two_conn} cubic3c={three_conn}"


def test_criterion_09_oracle_equivalence(acceptance):
    with criterion(acceptance, 9, "bounded search equals full oracle on 200 graphs") as st:
        big = 0
        for i in range(200):
            G = random_2connected_planar(24, random.Random(f"oracle/{i}"))
            assert G.n <= 24 and is_k_connected(G, 2)
            ours = enumerate_cycle_lengths_upto(G, G.n)
            assert ours.exhaustive
            assert ours.lengths == full_spectrum_oracle(G).lengths, i
            if G.n <= 16:
                assert set(ours.lengths) == {len(c) for c in nx.simple_cycles(to_nx(G))}
            big += G.n >= 20
        st["detail"] = f"graphs=200 with_n>=20={big}"


def test_criterion_10_round_trips(acceptance):
    with criterion(acceptance, 10, "planar_code and surgery round trips") as st:
        specs = [("cubic-k5", 5, None), ("cubic-k7", 7, None), ("cubic-k9", 9, 11), ("cubic-odd", 11, 13),
                 ("planar-odd", 5, 7), ("planar-odd", 7, 9), ("planar-odd", 9, 11), ("planar-odd", 11, 13)]
        wide = 0
        for variant, k, l in specs:
            G = build_family(FamilySpec(variant, k, l)).graph
            data = write_planar_code(G)
            (back,) = read_planar_code(data)
            assert write_planar_code(back) == data
            assert back.n == G.n and back.rotation_lists() == G.rotation_lists()
            wide += G.n > 255
        assert wide >= 1
        cases = 0
        for i in range(50):
            rng = random.Random(f"split/{i}")
            G = random_3connected_planar(rng.randint(6, 20), rng)
            big = [v for v in range(G.n) if G.degree(v) >= 4]
            if not big:
                G = random_3connected_planar(12, rng, extra_edges=0.9)
                big = [v for v in range(G.n) if G.degree(v) >= 4]
            v = rng.choice(big)
            d = G.degree(v)
            s = rng.randrange(d)
            S = split_vertex(G, v, [(s + j) % d for j in range(rng.randint(2, d - 2))])
            back = contract_edge(S, S.tags.index(("split", G.label(v))))
            assert nx.is_isomorphic(to_nx(back), to_nx(G)) and back.same_embedding(G)
            cases += 1
        for i in range(50):
            rng = random.Random(f"suppress/{i}")
            G = random_cubic_planar(rng.randrange(4, 31, 2), rng)
            S = subdivide_edges(G, {e: rng.randint(0, 3) for e in range(G.m)})
            try:
                H, pm = suppress_degree_two(S)
            except AllDegreeTwo:
                continue
            assert nx.is_isomorphic(to_nx(H), to_nx(G))
            R = resubdivide(H, pm, labels_from=S)
            assert nx.is_isomorphic(to_nx(R), to_nx(S)) and R.same_embedding(S)
            cases += 1
        assert cases == 100
        st["detail"] = f"families=8 wide={wide} surgery=100"
