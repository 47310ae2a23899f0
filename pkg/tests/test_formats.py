import json

import pytest
from hypothesis import given

from csl.constructions import FamilySpec, build_family
from csl.errors import BadHeader, RotationInconsistent, TruncatedRecord
from csl.formats import FIELDS, HEADER, RunReport, dumps, read_planar_code, to_dot, to_jsonable, write_planar_code
from csl.plane import canonical_code
from csl.polyhedra import cube, prism, tetrahedron

from helpers import planar_3conn, seeds

K4_BYTES = bytes([4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0])


def test_k4_bytes():
    assert write_planar_code(tetrahedron()) == HEADER + K4_BYTES
    (G,) = read_planar_code(HEADER + K4_BYTES)
    assert G.same_embedding(tetrahedron())


def test_empty_payload():
    assert read_planar_code(HEADER) == []
    assert write_planar_code([]) == HEADER


def test_bad_header():
    with pytest.raises(BadHeader):
        read_planar_code(K4_BYTES)
    with pytest.raises(BadHeader):
        read_planar_code(b">>planar_code le<<" + K4_BYTES)


def test_truncated():
    with pytest.raises(TruncatedRecord):
        read_planar_code(HEADER + K4_BYTES[:-1])
    with pytest.raises(TruncatedRecord):
        read_planar_code(HEADER + b"\x00\x05")


def test_inconsistent_rotation():
    bad = bytearray(K4_BYTES)
    bad[1] = 3  # vertex 1 lists 3 twice, never 2
    with pytest.raises(RotationInconsistent):
        read_planar_code(HEADER + bytes(bad))
    with pytest.raises(RotationInconsistent):
        read_planar_code(HEADER + bytes([2, 3, 0, 1, 0]))


def test_several_graphs_in_one_stream():
    gs = [tetrahedron(), cube(), prism(5)]
    back = read_planar_code(write_planar_code(gs))
    assert len(back) == 3
    for a, b in zip(gs, back):
        assert a.same_embedding(b)


def test_without_header():
    data = write_planar_code(cube(), header=False)
    assert not data.startswith(HEADER)
    assert read_planar_code(HEADER + data)[0].same_embedding(cube())


def test_wide_entries_round_trip():
    G = build_family(FamilySpec("cubic-odd", 11)).graph.relabel(range(1716))
    data = write_planar_code(G)
    assert data[len(HEADER)] == 0
    assert int.from_bytes(data[len(HEADER) + 1:len(HEADER) + 3], "little") == 1716
    assert len(data) == len(HEADER) + 1 + 2 * (1 + 2 * G.m + G.n)
    (back,) = read_planar_code(data)
    assert back.same_embedding(G)
    assert write_planar_code(back) == data


@given(seeds)
def test_round_trip_is_bit_exact(seed):
    G = planar_3conn(seed, 4, 30)
    data = write_planar_code(G)
    (back,) = read_planar_code(data)
    assert write_planar_code(back) == data
    assert canonical_code(back) == canonical_code(G)


def test_dot_output():
    text = to_dot(prism(3), k=4, name="P")
    assert text.startswith("graph P {") and text.rstrip().endswith("}")
    assert text.count(" -- ") == 9
    assert text.count("short:") == 2 and text.count("long:") == 3
    assert '"' in text


def test_dot_quotes_labels():
    G = cube().relabel(['a"b', "c\\d", 2, 3, 4, 5, 6, 7])
    text = to_dot(G)
    assert '"a\\"b"' in text and '"c\\\\d"' in text


def test_report_schema():
    rep = RunReport("certify", family="cubic-k5", k=5, n=60, m=90, interval=(5, 9), gap_end=9,
                    witness_length=10, witness_vertices=[(0, 1)], exhaustive=True, seed=0, elapsed_ms=1.5)
    d = json.loads(dumps(rep))
    for name in FIELDS:
        assert name in d
    assert d["interval"] == [5, 9] and d["witness_vertices"] == [[0, 1]]
    assert d["status"] == "ok"


def test_to_jsonable():
    assert to_jsonable({1: {2, 1}, "a": (1, (2,))}) == {"1": [1, 2], "a": [1, [2]]}
