import json
import subprocess
import sys

import pytest

from csl.cli import main
from csl.formats import FIELDS, read_planar_code, write_planar_code
from csl.polyhedra import cube, named


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line.startswith("{")], out


def test_build_writes_planar_code(tmp_path, capsys):
    out = tmp_path / "g.pc"
    code, (rep,), _ = run(capsys, "build", "--family", "cubic-k5", "--k", "5", "--out", str(out), "--check")
    assert code == 0
    assert rep["n"] == 60 and rep["family"] == "cubic-k5"
    assert rep["stats"]["three_connected"] and rep["stats"]["cubic"]
    for name in FIELDS:
        assert name in rep
    (G,) = read_planar_code(out.read_bytes())
    assert G.n == 60


def test_build_bad_k_is_structural(tmp_path, capsys):
    code, _, _ = run(capsys, "build", "--family", "cubic-odd", "--k", "10", "--out", str(tmp_path / "x.pc"))
    assert code == 3


def test_certify_family(capsys):
    code, (rep,), _ = run(capsys, "certify", "--family", "cubic-k5", "--k", "5", "--seed", "4")
    assert code == 0
    assert rep["interval"] == [5, 9] and rep["gap_end"] == 9
    assert rep["witness_length"] == 10 and len(rep["witness_vertices"]) == 10
    assert rep["exhaustive"] is True and rep["seed"] == 4


def test_certify_named_and_file(tmp_path, capsys):
    code, (rep,), _ = run(capsys, "certify", "cube", "--k", "4")
    assert code == 0 and rep["gap_end"] == 3 and rep["interval"] is None
    p = tmp_path / "t.pc"
    p.write_bytes(write_planar_code([named("truncated-dodecahedron"), cube()]))
    code, reps, _ = run(capsys, "certify", str(p), "--k", "5")
    assert code == 0 and [r["gap_end"] for r in reps] == [9, 5]


def test_certify_rotation_text_file(tmp_path, capsys):
    p = tmp_path / "k4.rot"
    p.write_text("a b c d\nb a d c\nc a b d\nd a c b\n")
    code, (rep,), _ = run(capsys, "certify", str(p), "--k", "3")
    assert code == 0 and rep["gap_end"] == 2 and rep["witness_length"] == 3


def test_certify_expectation_mismatch(capsys):
    code, (rep,), _ = run(capsys, "certify", "cube", "--k", "4", "--expect-gap-end", "5")
    assert code == 1 and rep["status"] == "mismatch"


def test_certify_budget(capsys):
    code, (rep,), _ = run(capsys, "certify", "--family", "planar-odd", "--k", "11", "--budget-ms", "1")
    assert code == 2
    assert rep["status"] == "budget" and rep["exhaustive"] is False


def test_certify_circumference_too_small(capsys):
    assert run(capsys, "certify", "cube", "--k", "9")[0] == 3


def test_reduce(tmp_path, capsys):
    out = tmp_path / "trace.json"
    code, (rep,), _ = run(capsys, "reduce", "--family", "cubic-k5", "--k", "5", "--out", str(out))
    assert code == 0
    assert rep["payload"]["lemma"]["A"]["holds"]
    assert rep["payload"]["contradiction"] is False
    trace = json.loads(out.read_text())
    assert set(trace) >= {"trace", "split", "counting", "discharge"}


def test_reduce_without_long_face(capsys):
    assert run(capsys, "reduce", "tetrahedron", "--k", "4")[0] == 3


def test_sweep(tmp_path, capsys):
    code, (rep,), _ = run(capsys, "sweep", "--count", "5", "--seed", "1", "--max-n", "14", "--kmax", "6",
                          "--out", str(tmp_path / "cx.pc"))
    assert code == 0 and rep["status"] == "ok"
    assert rep["payload"]["violations"] == []


def test_sweep_is_deterministic(capsys):
    a = run(capsys, "sweep", "--count", "4", "--seed", "3", "--max-n", "14", "--no-polyhedra")[1][0]
    b = run(capsys, "sweep", "--count", "4", "--seed", "3", "--max-n", "14", "--no-polyhedra")[1][0]
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_table(tmp_path, capsys):
    out = tmp_path / "t.json"
    code, (rep,), _ = run(capsys, "table", "--ks", "5", "--json", "--out", str(out))
    assert code == 0
    rows = rep["payload"]["rows"]
    assert [(r["family"], r["gap_end"], r["expected"]) for r in rows] == [("cubic-k5", 9, 9), ("planar-odd", 12, 12)]
    assert json.loads(out.read_text())["command"] == "table"


def test_export_dot(tmp_path, capsys):
    code, _, text = run(capsys, "export-dot", "prism", "--k", "4")
    assert code == 0 and text.startswith("graph G0 {") and "short" in text
    out = tmp_path / "g.dot"
    assert run(capsys, "export-dot", "cube", "--out", str(out))[0] == 0
    assert out.read_text().count(" -- ") == 12


def test_usage_errors_exit_1(capsys):
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "certify", "cube")[0] == 1
    assert run(capsys, "build", "--k", "5")[0] == 1
    assert run(capsys, "certify", "--k", "5")[0] == 1
    assert run(capsys, "certify", "no-such-graph", "--k", "5")[0] == 1
    assert run(capsys, "build", "--family", "nope", "--k", "5")[0] == 1


def test_data_dir_env(tmp_path, capsys, monkeypatch):
    (tmp_path / "fragment-triangle-k5.rot").write_text("A B S1\nB A S2\n")
    monkeypatch.setenv("CSL_DATA_DIR", str(tmp_path))
    code, _, _ = run(capsys, "build", "--family", "cubic-k5", "--k", "5", "--out", str(tmp_path / "x.pc"))
    assert code != 0


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "csl.cli", "certify", "cube", "--k", "4"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["gap_end"] == 3
