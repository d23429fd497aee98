import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from jacoirr.arclist import ArcListError, format_arc_list, parse_arc_list
from jacoirr.cli import EXIT_IO, EXIT_USAGE, main
from jacoirr.graph import build_cycle, build_path, build_wheel, make_digraph

from .conftest import digraphs


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def graph_file(tmp_path):
    def write(g_or_text, name="g.txt"):
        path = tmp_path / name
        text = g_or_text if isinstance(g_or_text, str) else format_arc_list(g_or_text)
        path.write_text(text)
        return str(path)

    return write


class TestArcList:
    def test_parse_with_comments(self):
        g = parse_arc_list("# a path\n1 2  # first\n\n2 3\n")
        assert g == build_path(3)

    def test_header_adds_isolated_vertices(self):
        assert parse_arc_list("vertices 4\n1 2\n").n == 4
        assert parse_arc_list("vertices 1\n") == make_digraph(1, [])

    @pytest.mark.parametrize(
        "text, line",
        [
            ("1 2\n2 2\n", 2),
            ("1 2\n\n1 2\n", 3),
            ("1 2\nvertices 3\n", 2),
            ("1 x\n", 1),
            ("1 2 3\n", 1),
            ("vertices 2\n1 3\n", 2),
            ("# nothing\n", None),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(ArcListError) as info:
            parse_arc_list(text)
        assert info.value.line == line

    @settings(max_examples=100, deadline=None)
    @given(digraphs(max_n=10))
    def test_round_trip(self, g):
        assert parse_arc_list(format_arc_list(g)) == g


class TestJaco:
    def test_csv(self):
        code, text = run("jaco", "--n", "5", "--format", "csv")
        lines = text.splitlines()
        assert code == 0
        assert lines[0] == "i,d_minus,d_plus,degree,weight"
        assert lines[5] == "5,2,3,2,1"
        assert "# jaconian: 3" in lines
        assert lines[-1] == "# arcs: 1 2; 2 3; 3 4; 3 5; 4 5"

    def test_json(self):
        _, text = run("jaco", "--n", "12", "--format", "json")
        data = json.loads(text)
        assert data["jaconian"] == [7, 8]
        assert [row["weight"] for row in data["rows"]][-3:] == [8, -5, 3]

    def test_markdown(self):
        _, text = run("jaco", "--n", "1")
        assert "| 1 | 0 | 1 | 0 | 0 |" in text
        assert "Arcs: none" in text

    def test_rejects_zero(self, capsys):
        assert run("jaco", "--n", "0")[0] == EXIT_USAGE
        assert "--n" in capsys.readouterr().err


class TestIndices:
    def test_fzagreb_of_jaco_6(self, graph_file):
        code, text = run("jaco", "--n", "6", "--format", "json")
        arcs = json.loads(text)["arcs"]
        path = graph_file("".join(f"{t} {h}\n" for t, h in arcs))
        code, text = run("indices", "--input", path, "--family", "fzagreb")
        assert code == 0
        assert json.loads(text) == {"z1": 15, "z2": 5, "z3": 11, "z4": 25}

    def test_both_families(self, graph_file):
        _, text = run("indices", "--input", graph_file(build_path(3)))
        assert json.loads(text) == {"m1": 6, "m2": 4, "m3": 2, "m4": 2, "z1": 3, "z2": -2, "z3": 4, "z4": 4}


class TestIrrK:
    def test_path(self, graph_file):
        code, text = run("irrk", "--input", graph_file(build_path(4)), "--slope", "2", "--intercept", "1")
        assert code == 0
        assert text.splitlines()[0] == "10"

    @pytest.mark.parametrize("conv, total", [("aggregate", "25/2"), ("per-term", "85/2")])
    def test_wheel_conventions(self, graph_file, conv, total):
        path = graph_file(build_wheel(6))
        _, text = run("irrk", "--input", path, "--slope", "1", "--intercept", "0", "--convention", conv)
        lines = text.splitlines()
        assert lines[0] == total
        assert lines[1] == f"convention: {conv}"
        assert lines[3].split("\t") == ["1", "8", "3", "-55/2", "-5", "-55/2"]

    def test_rational_parameters(self, graph_file):
        path = graph_file(build_cycle(3))
        _, text = run("irrk", "--input", path, "--slope", "1/3", "--intercept", "−2")
        # 3 * |3/2 * 1/3 - 2|
        assert text.splitlines()[0] == "9/2"

    def test_bad_rational(self, graph_file, capsys):
        with pytest.raises(SystemExit) as info:
            run("irrk", "--input", graph_file(build_path(2)), "--slope", "x", "--intercept", "0")
        assert info.value.code == EXIT_USAGE


class TestIrrKc:
    @pytest.mark.parametrize(
        "g, total",
        [(build_path(3), "5.05481560857"), (build_cycle(3), "3.68510909583"), (build_wheel(3), "50.3537036044")],
    )
    def test_totals(self, graph_file, g, total):
        code, text = run("irrkc", "--input", graph_file(g))
        assert code == 0
        assert text.splitlines()[0] == total

    def test_radius_override(self, graph_file):
        _, text = run("irrkc", "--input", graph_file(build_cycle(3)), "--radius", "4")
        assert text.splitlines()[1] == "radius: 4"

    def test_radius_too_small(self, graph_file, capsys):
        assert run("irrkc", "--input", graph_file(build_wheel(6)), "--radius", "2")[0] == EXIT_USAGE
        assert "error" in capsys.readouterr().err

    def test_arcless_graph(self, graph_file):
        assert run("irrkc", "--input", graph_file("vertices 3\n"))[0] == EXIT_USAGE


class TestJoin:
    def test_text(self, graph_file):
        left, right = graph_file(build_path(2), "l.txt"), graph_file(build_path(2), "r.txt")
        code, text = run("join", "--left", left, "--right", right, "--slope", "1", "--intercept", "0")
        assert code == 0
        assert text.startswith("vertices 4\n1 2\n")
        assert "# irr_k aggregate: 15/2" in text
        assert "# theorem rhs: 13/2" in text
        assert text.rstrip().endswith("# verdict: mismatch")

    def test_json(self, graph_file):
        left, right = graph_file(build_cycle(4), "l.txt"), graph_file("vertices 1\n", "r.txt")
        _, text = run("join", "--left", left, "--right", right, "--slope", "1", "--intercept", "0",
                      "--format", "json")
        data = json.loads(text)
        assert data["vertices"] == 5 and data["rhs"] == "24"
        assert data["verdict"] == "match"


class TestVerify:
    def test_tables_json(self):
        code, text = run("verify", "--claims", "table1", "--max-n", "12", "--format", "json")
        assert code == 0
        assert json.loads(text)["summary"] == {
            "total": 12, "match": 12, "mismatch": 0, "not_applicable": 0, "unexpected": 0,
        }

    def test_markdown(self):
        code, text = run("verify", "--claims", "prop3.5", "--max-n", "4")
        assert code == 0
        assert text.rstrip().endswith("2 records: 0 match, 2 mismatch, 0 not applicable, 0 unexpected")


def test_errors(graph_file, tmp_path, capsys):
    assert run("indices", "--input", str(tmp_path / "missing.txt"))[0] == EXIT_IO
    assert run("indices", "--input", graph_file("1 2\n2 2\n"))[0] == EXIT_USAGE
    assert "line 2" in capsys.readouterr().err
    assert run("verify", "--claims", "prop9.9")[0] == EXIT_USAGE


def test_console_entry_point(tmp_path):
    # black-box: exit codes and stdout through a real interpreter
    missing = str(tmp_path / "nope.txt")
    cases = [
        (["jaco", "--n", "0"], EXIT_USAGE),
        (["indices", "--input", missing], EXIT_IO),
        (["verify", "--claims", "table1,table2", "--max-n", "12"], 0),
    ]
    script = "; ".join(
        f"print(main({argv!r}, out=open(__import__('os').devnull, 'w')))" for argv, _ in cases
    )
    proc = subprocess.run(
        [sys.executable, "-c", f"from jacoirr.cli import main; {script}"],
        capture_output=True, text=True, check=True,
    )
    assert [int(x) for x in proc.stdout.split()] == [code for _, code in cases]
    proc = subprocess.run([sys.executable, "-m", "jacoirr", "jaco", "--n", "3", "--format", "csv"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.splitlines()[3] == "3,1,2,1,-1"
