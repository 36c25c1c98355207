import json
import subprocess
import sys

import pytest

from mpgc import cli, enumeration
from mpgc.families import cycle_graph, petersen_graph
from mpgc.formats import decode_graph6, encode_graph6
from mpgc.mpg import duplicate_vertex
from oracles import cycle_edges, edge_set

C5 = encode_graph6(cycle_graph(5))
C4 = encode_graph6(cycle_graph(4))
C6 = encode_graph6(cycle_graph(6))
PETERSEN = encode_graph6(petersen_graph())


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    doc = json.loads(captured.out) if captured.out.startswith("{") else captured.out
    return code, doc, captured.err


def assert_witnesses_valid(doc):
    """Re-validate every cycle, triangle and colouring against the embedded graph."""
    g = decode_graph6(doc["graph"]["graph6"])
    edges = edge_set(g)
    assert sorted(map(tuple, doc["graph"]["edges"])) == sorted(edges)
    verdict = doc.get("verdict")
    checked = decode_graph6(doc["checked_complement"]["graph6"]) if "checked_complement" in doc else g
    checked_edges = edge_set(checked)
    if verdict:
        if verdict["triangle"]:
            a, b, c = verdict["triangle"]
            assert {(a, b), (a, c), (b, c)} <= checked_edges
        if verdict["coloring"]:
            col = verdict["coloring"]
            assert all(col[u] != col[v] for u, v in checked_edges)
        if verdict["violating_pair"]:
            assert tuple(verdict["violating_pair"]) not in checked_edges
    for row in doc.get("cover", {}).get("table", []):
        if row["five_cycle"]:
            cyc = row["five_cycle"]
            assert len(set(cyc)) == 5 and cycle_edges(cyc) <= edges
            assert tuple(row["edge"]) in cycle_edges(cyc)


class TestCheck:
    def test_c5(self, capsys):
        code, doc, _ = run(capsys, "check", C5)
        assert code == 0 and doc["verdict"]["is_mpgc"] is True
        assert_witnesses_valid(doc)

    def test_c4(self, capsys):
        code, doc, _ = run(capsys, "check", C4)
        assert code == 1
        assert doc["verdict"]["complement_connected"] is False
        assert_witnesses_valid(doc)

    def test_as_mpg(self, capsys):
        code, doc, _ = run(capsys, "check", "--as-mpg", C5)
        assert code == 0 and doc["verdict"]["role"] == "mpg"
        assert_witnesses_valid(doc)

    def test_from_file_and_stdin(self, capsys, tmp_path, monkeypatch):
        path = tmp_path / "g.g6"
        path.write_text(">>graph6<<" + PETERSEN + "\n")
        assert run(capsys, "check", str(path))[0] == 0
        monkeypatch.setattr(sys, "stdin", __import__("io").StringIO(C4 + "\n"))
        assert run(capsys, "check", "-")[0] == 1

    @pytest.mark.parametrize("bad", ["D h", "A", "~~~"])
    def test_malformed(self, capsys, bad):
        code, _, err = run(capsys, "check", bad)
        assert code == 2 and "error" in err


class TestCover:
    def test_petersen(self, capsys):
        code, doc, _ = run(capsys, "cover", "--all", PETERSEN)
        assert code == 0 and doc["cover"]["uncovered"] == []
        assert all(len(r["all_five_cycles"]) == 4 for r in doc["cover"]["table"])
        assert_witnesses_valid(doc)

    def test_c4(self, capsys):
        code, doc, _ = run(capsys, "cover", C4)
        assert code == 1 and len(doc["cover"]["uncovered"]) == 4

    def test_malformed(self, capsys):
        assert run(capsys, "cover", "zz")[0] == 2


class TestEnumerateVerify:
    def test_enumerate(self, capsys, tmp_path):
        code, doc, _ = run(capsys, "enumerate", "--max-n", "6", "--out", str(tmp_path))
        assert code == 0
        assert doc["enumeration"]["total_mpgcs"] == 2
        assert (tmp_path / "mpgc_n5.g6").read_text().split() == doc["enumeration"]["mpgcs_by_order"]["5"]
        assert json.loads((tmp_path / "summary.json").read_text())["total_mpgcs"] == 2

    def test_verify(self, capsys):
        code, doc, _ = run(capsys, "verify", "--max-n", "7")
        assert code == 0 and doc["verification"]["total_violations"] == 0

    @pytest.mark.parametrize("cmd", ["enumerate", "verify"])
    @pytest.mark.parametrize("n", ["0", "11", "x"])
    def test_bad_bound(self, capsys, cmd, n):
        assert run(capsys, cmd, "--max-n", n)[0] == 2

    def test_violation_exit_and_artifacts(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setattr(enumeration, "theorem_violations", lambda h, dup=7: [("five_cycle_cover", "injected")])
        code, doc, _ = run(capsys, "verify", "--max-n", "6", "--out", str(tmp_path))
        assert code == 1
        assert doc["verification"]["total_violations"] == 2
        failures = (tmp_path / "failures.g6").read_text().split()
        assert len(failures) == 2
        assert all(decode_graph6(f).order in (5, 6) for f in failures)
        assert "five_cycle_cover" in json.loads((tmp_path / "failures.json").read_text())


class TestGamma:
    def test_check(self, capsys):
        code, doc, _ = run(capsys, "gamma", "--params", "1,1,1,1,1,1", "--check", "--dot")
        assert code == 0
        assert doc["check"]["bipartite"] is True and doc["check"]["is_mpgc"] is False
        assert '"a_1"' in doc["dot"]

    def test_embed_cover_failure(self, capsys):
        # the path e-a-b-f embeds in C6, which has no 5-cycles at all
        code, doc, _ = run(capsys, "gamma", "--params", "1,1,0,0,1,1", "--embed", C6)
        assert code == 1 and doc["embedding_cover"]["ok"] is False

    def test_embed_cover_success(self, capsys):
        code, doc, _ = run(capsys, "gamma", "--params", "1,1,1,1,1,1", "--embed", PETERSEN)
        assert code == 0 and doc["embedding"] is not None

    @pytest.mark.parametrize("params", ["0,1,1,1,1,1", "1,1,1", "a,b,c,d,e,f"])
    def test_bad_params(self, capsys, params):
        assert run(capsys, "gamma", "--params", params)[0] == 2


class TestDuplicate:
    def test_c5(self, capsys):
        code, doc, _ = run(capsys, "duplicate", C5, "--vertex", "0", "--check")
        assert code == 0
        assert decode_graph6(doc["result"]["graph6"]) == duplicate_vertex(cycle_graph(5), 0)

    def test_check_fails_off_class(self, capsys):
        assert run(capsys, "duplicate", C4, "--vertex", "0", "--check")[0] == 1

    def test_bad_vertex(self, capsys):
        assert run(capsys, "duplicate", C5, "--vertex", "9")[0] == 2


class TestExportDot:
    def test_json_and_raw(self, capsys):
        code, doc, _ = run(capsys, "export-dot", C5, "--color")
        assert code == 0 and "fillcolor" in doc["dot"]
        code, text, _ = run(capsys, "export-dot", C5, "--raw")
        assert code == 0 and text.startswith("graph G {")

    def test_uncolourable(self, capsys):
        k4 = encode_graph6(decode_graph6("C~"))
        assert run(capsys, "export-dot", k4, "--color")[0] == 2


class TestPetersen:
    def test_petersen(self, capsys):
        code, doc, _ = run(capsys, "petersen", "--n", "5", "--k", "2")
        assert code == 0 and doc["triangle_free"] and doc["verdict"]["is_mpgc"]
        assert_witnesses_valid(doc)

    def test_p62_has_triangles(self, capsys):
        code, doc, _ = run(capsys, "petersen", "--n", "6")
        assert code == 1 and doc["triangle_free"] is False
        assert_witnesses_valid(doc)

    def test_bad_parameters(self, capsys):
        assert run(capsys, "petersen", "--n", "4", "--k", "2")[0] == 2


def test_usage_errors(capsys):
    for argv in (["bogus"], ["check"], ["check", C5, "--frobnicate"], []):
        assert cli.main(argv) == 2
        assert "usage" in capsys.readouterr().err


def test_seedless_reports_are_byte_identical(capsys):
    outputs = []
    for _ in range(2):
        cli.main(["--seedless", "verify", "--max-n", "6"])
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    assert json.loads(outputs[0])["timing"] == {"seconds": 0.0}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mpgc", "check", C5], capture_output=True, text=True)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["schema_version"] == "1.0" and doc["tool"] == "mpgc"
