import json

import pytest

from circtw.cli import main
from circtw.formats import emit_graph
from circtw.graph import Graph, cycle_graph, path_graph
from circtw.treewidth import RootedPartialKTree


@pytest.fixture
def files(tmp_path):
    c5 = tmp_path / "c5.txt"
    c5.write_text(emit_graph(cycle_graph(5)))
    path = tmp_path / "path.txt"
    path.write_text(emit_graph(RootedPartialKTree(path_graph(3), 1, (0, 2), None)))
    edge = tmp_path / "edge.txt"
    edge.write_text(emit_graph(RootedPartialKTree(Graph.from_edges(2, [(0, 1)]), 1, (0, 1), ())))
    bad = tmp_path / "bad.txt"
    bad.write_text("p 2 1\ne 1 9\n")
    return {"c5": str(c5), "path": str(path), "edge": str(edge), "bad": str(bad), "dir": tmp_path}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_oddgirth(capsys, files):
    code, res = run(capsys, "oddgirth", "--graph", files["c5"])
    assert code == 0 and res["odd_girth"] == 5 and sorted(res["odd_cycle_witness"]) == [1, 2, 3, 4, 5]


def test_chi_c(capsys, files):
    code, res = run(capsys, "chi-c", "--graph", files["c5"])
    assert code == 0 and res["chi_c"] == "5/2"


def test_pq_color(capsys, files):
    code, res = run(capsys, "pq-color", "--graph", files["c5"], "--p", "5", "--q", "2", "--precolor", "1:3")
    assert code == 0 and res["colorable"] and res["coloring"][0] == 3
    code, res = run(capsys, "pq-color", "--graph", files["c5"], "--p", "2", "--q", "1")
    assert code == 0 and not res["colorable"]
    assert main(["pq-color", "--graph", files["c5"], "--p", "5", "--q", "2", "--precolor", "9:1"]) == 2


def test_fset_and_type(capsys, files):
    code, res = run(capsys, "fset", "--graph", files["edge"], "--p", "5", "--q", "2", "--members")
    assert code == 0 and res["size"] == 10 and res["of"] == 25 and len(res["members"]) == 10
    code, res = run(capsys, "fset", "--graph", files["path"], "--p", "5", "--q", "2")
    assert res["size"] == 15
    code, res = run(capsys, "type", "--graph", files["path"])
    assert res["type"] == [[0, 2], [2, 0]] and res["bipartite_type"] and not res["certified"]
    assert main(["type", "--graph", files["c5"]]) == 2


def test_reduce(capsys, files):
    out = files["dir"] / "reduced.txt"
    code, res = run(capsys, "reduce", "--graph", files["path"], "--p", "5", "--q", "2", "--d", "1",
                    "--trace", "--verify-inclusion", "--out", str(out))
    assert code in (0, 1) and res["structural_only"] and "trace" in res and out.exists()


def test_gadgets(capsys, files):
    table = files["dir"] / "table.json"
    code, res = run(capsys, "gadgets", "--k", "1", "--p", "5", "--q", "2", "--d", "1", "--type-bound", "2",
                    "--vertex-cap", "6", "--out", str(table), "--spot-check", "3")
    assert code == 0 and res["types"] == 3 and res["spot_check"]["violations"] == 0
    assert json.loads(table.read_text())["schema"] == "circtw.gadgets/1"


def test_bound(capsys):
    code, res = run(capsys, "bound", "--k", "1", "--p", "3", "--d", "1", "--value")
    assert code == 0 and res["exponent"] == 131584 and len(res["value"]) == res["digits"]
    code, res = run(capsys, "bound", "--k", "1", "--p", "5", "--d", "3")
    assert not res["materialized"] and "value" not in res


def test_probe_d(capsys, files):
    code, res = run(capsys, "probe-d", "--p", "5", "--q", "2", "--corpus", "paths", "--max-length", "8")
    assert code == 0 and res["d"] == 4 and res["instances"] == 8
    code, res = run(capsys, "probe-d", "--p", "5", "--q", "2", "--graph", files["path"])
    assert code == 0 and res["instances"] == 1


def test_verify_glue_command(capsys):
    code, res = run(capsys, "verify-lemma4", "--count", "20", "--k", "1,2")
    assert code == 0 and res["instances"] == 20 and res["violations"] == 0


def test_verify_theorem(capsys, files):
    out = files["dir"] / "report.json"
    code, res = run(capsys, "verify-theorem", "--k", "2", "--p", "5", "--q", "2", "--exhaustive-cap", "6",
                    "--out", str(out))
    assert code == 0 and res["g_hat"] == 4 and "runtime_seconds" in res
    assert json.loads(out.read_bytes())["summary"]["g_hat"] == 4
    assert main(["verify-theorem", "--k", "2", "--p", "5", "--q", "2"]) == 2


def test_usage_errors(capsys, files):
    assert main(["oddgirth", "--graph", files["bad"]]) == 2
    assert main(["oddgirth", "--graph", str(files["dir"] / "missing.txt")]) == 2
    assert main(["bound", "--k", "0", "--p", "3", "--d", "1"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    assert "line 2" in capsys.readouterr().err
