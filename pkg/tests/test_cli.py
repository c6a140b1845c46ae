import json
import subprocess
import sys

import pytest

from rainbowcolor.cli import main
from rainbowcolor.graph import format_edge_list

from conftest import BOWTIE, PAW, complete, cycle


@pytest.fixture
def write(tmp_path):
    def _write(name, content):
        p = tmp_path / name
        p.write_text(content if isinstance(content, str) else json.dumps(content))
        return str(p)

    return _write


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def c4_coloring(colors):
    edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
    return {"edges": [{"u": u, "v": v, "color": c} for (u, v), c in zip(edges, colors)]}


class TestColor:
    def test_bowtie(self, capsys, write):
        code, out, _ = run(capsys, "color", write("g.txt", format_edge_list(BOWTIE)))
        report = json.loads(out)
        assert code == 0
        assert report["bound"] == 2 and report["verified"] is True
        assert report["result"]["coloring"]["k"] <= 2
        assert report["input"] == {"n": 5, "m": 6, "class": "two-edge-connected-not-two-connected"}
        assert report["result"]["theorem2_bound"] == 2

    def test_c5(self, capsys, write):
        code, out, _ = run(capsys, "color", write("g.txt", format_edge_list(cycle(5))))
        report = json.loads(out)
        assert code == 0 and report["bound"] == 3
        assert report["result"]["coloring"]["k"] <= 3
        assert report["result"]["coloring"]["bound_kind"] == "two_connected"

    def test_disconnected(self, capsys, write):
        code, out, err = run(capsys, "color", write("g.txt", "0 1\n2 3\n"))
        assert code == 2 and out == "" and "disconnected" in err

    def test_parse_error(self, capsys, write):
        code, _, err = run(capsys, "color", write("g.txt", "0 1\n1 x\n"))
        assert code == 2 and "line 2" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "color", tmp_path / "nope.txt")
        assert code == 2

    def test_strategy_mismatch(self, capsys, write):
        code, _, _ = run(capsys, "color", write("g.txt", format_edge_list(cycle(5))), "--strategy", "theorem1")
        assert code == 2

    def test_byte_stable(self, capsys, write):
        path = write("g.txt", format_edge_list(PAW))
        first = run(capsys, "color", path)[1]
        assert run(capsys, "color", path)[1] == first

    def test_json_and_out_files(self, capsys, write, tmp_path):
        path = write("g.txt", format_edge_list(PAW))
        code, out, _ = run(capsys, "color", path, "--json", tmp_path / "r.json", "--out", tmp_path / "c.json")
        assert code == 0
        assert (tmp_path / "r.json").read_text() == out
        assert json.loads((tmp_path / "c.json").read_text()) == json.loads(out)["result"]["coloring"]

    def test_timing_flag(self, capsys, write):
        path = write("g.txt", format_edge_list(PAW))
        assert "elapsed_ms" not in json.loads(run(capsys, "color", path)[1])
        assert "elapsed_ms" in json.loads(run(capsys, "color", path, "--timing")[1])


class TestVerify:
    def test_monochromatic_c4(self, capsys, write):
        g = write("g.txt", format_edge_list(cycle(4)))
        code, out, _ = run(capsys, "verify", g, write("c.json", c4_coloring([0, 0, 0, 0])))
        report = json.loads(out)
        assert code == 1 and report["verified"] is False
        assert report["result"]["witness"] in ([0, 2], [1, 3])

    def test_distinct_c4(self, capsys, write):
        g = write("g.txt", format_edge_list(cycle(4)))
        code, _, _ = run(capsys, "verify", g, write("c.json", c4_coloring([0, 1, 2, 3])))
        assert code == 0

    def test_c5_odd_cycle_pattern(self, capsys, write):
        g = write("g.txt", format_edge_list(cycle(5)))
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
        doc = {"edges": [{"u": u, "v": v, "color": c} for (u, v), c in zip(edges, [0, 1, 2, 0, 1])]}
        assert run(capsys, "verify", g, write("c.json", doc))[0] == 0

    def test_accepts_color_report(self, capsys, write):
        g = write("g.txt", format_edge_list(BOWTIE))
        report = run(capsys, "color", g)[1]
        assert run(capsys, "verify", g, write("r.json", report))[0] == 0

    def test_bad_documents(self, capsys, write):
        g = write("g.txt", format_edge_list(cycle(4)))
        assert run(capsys, "verify", g, write("c.json", "not json"))[0] == 2
        assert run(capsys, "verify", g, write("c.json", [1, 2]))[0] == 2
        missing_edge = {"edges": c4_coloring([0, 1, 0, 1])["edges"][:3]}
        assert run(capsys, "verify", g, write("c.json", missing_edge))[0] == 2


class TestExactAndDecompose:
    @pytest.mark.parametrize("g, rc", [(complete(4), 1), (cycle(5), 3), (PAW, 2)])
    def test_exact(self, capsys, write, g, rc):
        code, out, _ = run(capsys, "exact", write("g.txt", format_edge_list(g)))
        assert code == 0 and json.loads(out)["result"]["rc"] == rc

    def test_exact_too_large(self, capsys, write):
        code, _, err = run(capsys, "exact", write("g.txt", format_edge_list(complete(7))))
        assert code == 2 and "limit" in err

    def test_decompose_paw(self, capsys, write):
        result = json.loads(run(capsys, "decompose", write("g.txt", format_edge_list(PAW)))[1])["result"]
        assert (result["q"], result["r"], len(result["cut_vertices"])) == (2, 1, 1)

    def test_decompose_c5(self, capsys, write):
        result = json.loads(run(capsys, "decompose", write("g.txt", format_edge_list(cycle(5))))[1])["result"]
        assert result["q"] == 1
        assert result["ear_decomposition"]["ears"] == []

    def test_decompose_figure1(self, capsys, tmp_path):
        path = tmp_path / "f.txt"
        run(capsys, "generate", "figure1", "--q", 3, "--r", 1, "--n", 8, "--out", path)
        result = json.loads(run(capsys, "decompose", path)[1])["result"]
        assert sorted(len(b) for b in result["blocks"]) == [2, 3, 5]


class TestGenerate:
    def test_figure1(self, capsys, tmp_path):
        path = tmp_path / "f.txt"
        code, out, _ = run(capsys, "generate", "figure1", "--q", 3, "--r", 1, "--n", 8, "--out", path)
        report = json.loads(out)
        assert code == 0 and report["result"]["order"] == 8 and report["result"]["diameter"] == 4

    def test_figure2(self, capsys):
        code, out, err = run(capsys, "generate", "figure2", "--k", 2, "--variant", 3)
        assert code == 0 and out.startswith("#")
        assert json.loads(err[err.index("{"):])["result"]["diameter"] == 5

    def test_chain(self, capsys, tmp_path):
        path = tmp_path / "c.txt"
        run(capsys, "generate", "chain", "--blocks", "k2,cycle3", "--out", path)
        result = json.loads(run(capsys, "decompose", path)[1])["result"]
        assert (result["q"], result["r"]) == (2, 1)

    def test_missing_params(self, capsys):
        code, _, err = run(capsys, "generate", "figure1", "--q", 3)
        assert code == 2 and "--r" in err

    def test_invalid_params(self, capsys):
        assert run(capsys, "generate", "figure1", "--q", 2, "--r", 0, "--n", 6)[0] == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["color"])
    assert exc.value.code == 2


@pytest.mark.parametrize("family", [
    ["figure1", "--q", "4", "--r", "1", "--n", "10"],
    ["figure2", "--k", "2", "--variant", "2"],
    ["random2c", "--n", "9", "--ears", "3", "--seed", "5"],
    ["chain", "--blocks", "k2,c4,k4,c5"],
])
def test_generate_color_verify_pipeline(tmp_path, family):
    cli = [sys.executable, "-m", "rainbowcolor.cli"]
    gen = subprocess.run(cli + ["generate", *family], capture_output=True, text=True, check=True)
    colored = subprocess.run(cli + ["color", "-"], input=gen.stdout, capture_output=True, text=True)
    assert colored.returncode == 0, colored.stderr
    graph = tmp_path / "g.txt"
    graph.write_text(gen.stdout)
    report = tmp_path / "r.json"
    report.write_text(colored.stdout)
    checked = subprocess.run(cli + ["verify", str(graph), str(report)], capture_output=True, text=True)
    assert checked.returncode == 0, checked.stderr
