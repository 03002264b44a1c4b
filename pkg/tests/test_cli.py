import json
import subprocess
import sys
from pathlib import Path

import pytest

from maxmatch.cli import detect_format, main
from maxmatch.graph import cycle_graph, parse_graph6

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", _Stdin(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class _Stdin:
    def __init__(self, text: str):
        import io

        self.buffer = io.BytesIO(text.encode())


@pytest.mark.parametrize("name", ["k4", "k5", "c6", "k1_4"])
def test_analyze_golden(capsys, name):
    code, out, _ = run(capsys, "analyze", str(GOLDEN / f"{name}.g6"))
    assert code == 0
    assert out == (GOLDEN / f"analyze_{name}.json").read_text()


def test_analyze_is_consistent(capsys):
    for name in ["k4", "k5", "c6", "k1_4"]:
        data = json.loads((GOLDEN / f"analyze_{name}.json").read_text())
        assert data["friendly"] == (data["m"] == data["chi_prime"] * data["nu"])
        assert ("partition" in data) == data["friendly"]
    k5 = json.loads((GOLDEN / "analyze_k5.json").read_text())
    assert (k5["chi_prime"], k5["vizing_class"], k5["friendly"]) == (5, "II", True)
    assert k5["class2"]["status"] == "pass"


def test_analyze_edge_list_from_stdin(capsys, monkeypatch):
    code, out, err = run(capsys, "analyze", stdin="0 1\n1 2\n2 3\n", monkeypatch=monkeypatch)
    data = json.loads(out)
    assert code == 0
    assert data["friendly"] is False
    assert data["witness"] == {"m": 3, "chi": 2, "nu": 2, "chi_nu": 4}
    assert "friendly=no" in err


def test_isolated_vertices_need_flag(capsys, monkeypatch):
    code, _, _ = run(capsys, "analyze", stdin="n 5\n0 1\n1 2\n2 0\n", monkeypatch=monkeypatch)
    assert code == 2
    code, out, err = run(capsys, "analyze", "--allow-isolated", stdin="n 5\n0 3\n3 4\n4 0\n", monkeypatch=monkeypatch)
    assert code == 0 and "warning" in err
    data = json.loads(out)
    assert data["n"] == 5 and data["friendly"]
    # certificates use the input's vertex ids
    used = {v for cls in data["partition"] for e in cls for v in e}
    assert used == {0, 3, 4}


def test_parse_error_exit_code(capsys, monkeypatch):
    code, out, err = run(capsys, "analyze", stdin="0 1\nbanana\n", monkeypatch=monkeypatch)
    assert code == 2 and out == "" and "line 2" in err
    code, _, _ = run(capsys, "analyze", "--format", "graph6", stdin="C~~~", monkeypatch=monkeypatch)
    assert code == 2


def test_edgeless_input(capsys, monkeypatch):
    code, _, _ = run(capsys, "analyze", stdin="n 3\n", monkeypatch=monkeypatch)
    assert code == 2


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "analyze", str(tmp_path / "nope"))
    assert code == 2


def test_undecided_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("MAXMATCH_BUDGET", "5")
    code, out, err = run(capsys, "analyze", stdin="IheA@GUAo\n", monkeypatch=monkeypatch)
    assert code == 3 and out == "" and "undecided" in err
    monkeypatch.delenv("MAXMATCH_BUDGET")
    code, _, _ = run(capsys, "--budget", "5", "analyze", stdin="IheA@GUAo\n", monkeypatch=monkeypatch)
    assert code == 3


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "construct", "c")[0] == 1
    assert run(capsys, "construct", "attaining", "--delta", "3")[0] == 1
    assert run(capsys, "verify", "--suite", "uniqueness", "--delta", "3")[0] == 1
    assert run(capsys, "verify", "--suite", "bound", "--jobs", "0")[0] == 1


def test_detect_format():
    assert detect_format(b">>graph6<<C~\n") == "graph6"
    assert detect_format(b"D~{\n") == "graph6"
    assert detect_format(b"0 1\n1 2\n") == "edgelist"
    assert detect_format(b"n 3\n") == "edgelist"


def test_construct_c(capsys):
    code, out, _ = run(capsys, "construct", "c", "--delta", "3")
    g = parse_graph6(out)
    assert code == 0 and (g.n, g.m) == (5, 7)


def test_construct_attaining_triangles(capsys):
    code, out, _ = run(capsys, "construct", "attaining", "--delta", "2", "--nu", "3", "--format", "edgelist")
    assert code == 0
    assert out.splitlines() == ["n 9", "0 1", "0 2", "1 2", "3 4", "3 5", "4 5", "6 7", "6 8", "7 8"]


def test_construct_alternative_refused(capsys):
    code, out, err = run(capsys, "construct", "alternative", "--delta", "4", "--nu", "2")
    assert code == 1 and out == "" and "unique" in err


def test_construct_alternative(capsys):
    code, out, _ = run(capsys, "construct", "alternative", "--delta", "3", "--nu", "3")
    assert code == 0 and parse_graph6(out.strip()).m == 10


def test_decompose(capsys, monkeypatch):
    code, out, _ = run(capsys, "decompose", str(GOLDEN / "k4.g6"))
    data = json.loads(out)
    assert code == 0
    assert [p["kind"] for p in data["parts"]] == ["star", "factor_critical"]
    assert data["parts"][0] == {"kind": "star", "center": 0, "leaves": [1, 2, 3]}
    code, out, _ = run(capsys, "decompose", str(GOLDEN / "c6.g6"))
    assert [p["kind"] for p in json.loads(out)["parts"]] == ["star"] * 3


def test_decompose_class2_points_to_analyze(capsys):
    code, out, err = run(capsys, "decompose", str(GOLDEN / "k5.g6"))
    assert code == 1 and out == "" and "analyze" in err


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bound", "--max-vertices", "5")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "verify", "--suite", "bound", "--max-vertices", "5", "--tighten", "1")
    assert code == 4 and json.loads(out)["violations"]
    code, out, _ = run(capsys, "verify", "--suite", "uniqueness", "--delta", "6", "--nu", "5")
    assert code == 3 and json.loads(out)["partial"]
    code, out, _ = run(capsys, "verify", "--suite", "uniqueness", "--delta", "3", "--nu", "3")
    assert code == 0 and json.loads(out)["details"]["classes"] >= 2


def test_verify_timing_flag(capsys):
    _, out, _ = run(capsys, "verify", "--suite", "class2", "--max-vertices", "4")
    assert "elapsed_seconds" not in json.loads(out)
    _, out, _ = run(capsys, "verify", "--suite", "class2", "--max-vertices", "4", "--timing")
    assert "elapsed_seconds" in json.loads(out)


def test_module_entry_point(tmp_path):
    src = tmp_path / "c5.txt"
    src.write_text("".join(f"{u} {v}\n" for u, v in cycle_graph(5).sorted_edges))
    proc = subprocess.run(
        [sys.executable, "-m", "maxmatch", "analyze", str(src)], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert (data["chi_prime"], data["friendly"]) == (3, False)
