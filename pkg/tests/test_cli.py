"""Command-line interface: JSON output, input resolution, exit codes."""

import json

import pytest

from superflats.cli import main
from superflats.graphs import emit_edge_list, emit_graph6
from superflats.catalog import cycle, petersen


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


class TestCommands:
    def test_crank(self, capsys):
        code, data = run(capsys, "crank", "petersen")
        assert code == 0
        assert data == {"schema": 1, "c_rank": 3}

    def test_analyze(self, capsys):
        code, data = run(capsys, "analyze", "coimbra")
        assert code == 0
        assert data["c_rank"] == 3 and data["flats"] == 16
        assert data["metrics"]["sober"] is True
        assert data["graph"]["n"] == 7

    def test_flats(self, capsys):
        code, data = run(capsys, "flats", "k3")
        assert code == 0
        assert data["lattice"]["height"] == 3

    def test_independents_count(self, capsys):
        code, data = run(capsys, "independents", "--count", "c5")
        assert code == 0
        assert data["count"] == 26

    def test_independents_listing(self, capsys):
        code, data = run(capsys, "independents", "c4")
        assert code == 0
        assert [] in data["independent_sets"]
        assert [0, 1] in data["independent_sets"]
        # opposite vertices of the four-cycle share a star: dependent
        assert [0, 2] not in data["independent_sets"]

    def test_geo(self, capsys):
        code, data = run(capsys, "geo", "petersen")
        assert code == 0
        assert data["configuration"] == {
            "points": 10, "lines": 10, "point_degree": 3, "line_size": 3}

    def test_levi(self, capsys):
        code, data = run(capsys, "levi", "c4")
        assert code == 0
        assert data["levi"]["n"] == 8

    def test_cmrank(self, capsys):
        code, data = run(capsys, "cmrank", "c4")
        assert code == 0
        assert data["cm_rank"] == 3

    def test_complement(self, capsys):
        code, data = run(capsys, "complement", "petersen")
        assert code == 0
        assert data["complement_c_rank"] == 5

    def test_forbidden(self, capsys):
        code, data = run(capsys, "forbidden", "1")
        assert code == 0
        assert len(data["family"]) == 1
        assert data["family"][0]["edges"] == [[0, 1]]

    def test_verify_theorems(self, capsys):
        code, data = run(capsys, "verify-theorems", "--max-n", "3",
                         "--seed", "7")
        assert code == 0
        assert data["passed"] is True
        assert all(c["passed"] for c in data["checks"])


class TestInputResolution:
    def test_graph6_literal(self, capsys):
        code, data = run(capsys, "crank", emit_graph6(cycle(5)))
        assert code == 0 and data["c_rank"] == 3

    def test_edge_list_file(self, tmp_path, capsys):
        f = tmp_path / "graph.txt"
        f.write_text(emit_edge_list(petersen()))
        code, data = run(capsys, "crank", str(f))
        assert code == 0 and data["c_rank"] == 3

    def test_graph6_file(self, tmp_path, capsys):
        f = tmp_path / "graph.g6"
        f.write_text(emit_graph6(cycle(4)) + "\n")
        code, data = run(capsys, "crank", "--format", "graph6", str(f))
        assert code == 0 and data["c_rank"] == 2

    def test_dot_output(self, tmp_path, capsys):
        dot = tmp_path / "out.dot"
        code, _ = run(capsys, "analyze", "c4", "--dot", str(dot))
        assert code == 0
        assert dot.read_text().startswith("graph {")

    def test_json_sorted_and_deterministic(self, capsys):
        main(["analyze", "petersen"])
        first = capsys.readouterr().out
        main(["analyze", "petersen"])
        second = capsys.readouterr().out
        assert first == second
        keys = list(json.loads(first))
        assert keys == sorted(keys)


class TestExitCodes:
    def test_parse_error(self, capsys):
        assert main(["crank", "no such graph //"]) == 2

    def test_size_limit(self, capsys):
        assert main(["cmrank", "petersen"]) == 3  # over the cm-rank ceiling

    def test_precondition_violation(self, capsys):
        assert main(["geo", "k4"]) == 4  # rank 4, not a rank-3 geometry

    def test_axiom_violation(self, tmp_path, capsys):
        f = tmp_path / "bad.peg"
        f.write_text("points 2\n0\n0 1\n")
        assert main(["levi", "--format", "peg", str(f)]) == 5

    def test_error_message_names_cause(self, capsys):
        main(["geo", "k4"])
        err = capsys.readouterr().err
        assert "rank" in err
