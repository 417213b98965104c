import json
import subprocess
import sys

import pytest

from cordial.cli import EXIT_CAP, EXIT_INPUT, EXIT_NO, EXIT_YES, main
from cordial.decide import T43, is_23_cordial, is_23_orientable
from cordial.graphs import Digraph, gen_parallel_edges_graph, gen_wheel
from cordial.io import format_graph_text


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_cordial_digraph(write, capsys, sample5):
    d, _ = sample5
    code, out, _ = run(["check", write("t5.txt", format_graph_text(d))], capsys)
    assert code == EXIT_YES
    assert out.startswith("(2,3)-cordial: yes")


def test_check_noncordial(write, capsys):
    code, out, _ = run(["check", write("t43.txt", format_graph_text(T43))], capsys)
    assert code == EXIT_NO and "no" in out.splitlines()[0]


def test_check_graph_routes_to_orientability(write, capsys):
    code, out, _ = run(["check", write("w10.txt", format_graph_text(gen_wheel(10)))], capsys)
    assert code == EXIT_NO and out.startswith("(2,3)-orientable: no")


@pytest.mark.parametrize("scope, code", [("nonisolated", EXIT_NO), ("all", EXIT_YES)])
def test_scope_flag_positions(write, capsys, scope, code):
    path = write("x7.txt", format_graph_text(gen_parallel_edges_graph(7)))
    assert run(["--scope", scope, "orientable", path], capsys)[0] == code
    assert run(["orientable", path, "--scope", scope], capsys)[0] == code


def test_orientable_accepts_digraph(write, capsys):
    d = gen_wheel(6).as_symmetric_digraph()
    code, _, _ = run(["orientable", write("w6.txt", format_graph_text(d))], capsys)
    assert code == EXIT_YES


def test_json_matches_library(write, capsys):
    g = gen_wheel(9)
    code, out, _ = run(["--json", "check", write("w9.txt", format_graph_text(g))], capsys)
    payload = json.loads(out)
    expected = is_23_orientable(g).to_dict()
    assert code == EXIT_YES
    assert payload["decision"] == expected["decision"]
    assert payload["witness"] == expected["witness"]
    assert payload["search_space"] == expected["search_space"]


def test_json_digraph_matches_library(write, capsys):
    code, out, _ = run(["check", write("t43.txt", format_graph_text(T43)), "--json"], capsys)
    payload = json.loads(out)
    assert payload["decision"] is False and payload["witness"] is None
    assert payload["search_space"] == is_23_cordial(T43).search_space


def test_output_is_deterministic(write, capsys):
    path = write("w7.txt", format_graph_text(gen_wheel(7)))
    assert run(["--json", "check", path], capsys) == run(["--json", "check", path], capsys)


@pytest.mark.parametrize(
    "text", ["D 2 1\n0 7\n", "nonsense\n", "D 2 3\n0 1\n"]
)
def test_bad_input(write, capsys, text):
    code, _, err = run(["check", write("bad.txt", text)], capsys)
    assert code == EXIT_INPUT and err.startswith("error:")


def test_missing_file(capsys, tmp_path):
    assert run(["check", str(tmp_path / "absent.txt")], capsys)[0] == EXIT_INPUT


def test_cap_exceeded(write, capsys):
    d = Digraph(40, frozenset((i, i + 1) for i in range(39)))
    code, _, err = run(["check", write("big.txt", format_graph_text(d))], capsys)
    assert code == EXIT_CAP and "cap" in err


def test_gen_text_round_trips(capsys):
    code, out, _ = run(["gen", "wheel", "6"], capsys)
    assert code == EXIT_YES and out == format_graph_text(gen_wheel(6))


def test_gen_dot(capsys):
    code, out, _ = run(["gen", "cycle-out-wheel", "5", "--dot"], capsys)
    assert code == EXIT_YES and out.startswith("digraph cycle_out_wheel {")


def test_gen_bad_size(capsys):
    assert run(["gen", "fan", "2"], capsys)[0] == EXIT_INPUT


def test_census_text_and_json(capsys):
    code, out, _ = run(["census", "4"], capsys)
    assert code == EXIT_YES and "48 cordial" in out
    code, out, _ = run(["--json", "census", "4"], capsys)
    rows = json.loads(out)
    assert sum(r["class_size"] for r in rows) == 64
    assert sum(r["class_size"] for r in rows if r["cordial"]) == 48


def test_census_out_of_range(capsys):
    assert run(["census", "9"], capsys)[0] == EXIT_INPUT


def test_extremal(capsys):
    code, out, _ = run(["extremal", "100"], capsys)
    assert code == EXIT_YES and out.strip() == "n=100 Z=2450 max_arcs=3750"
    code, out, _ = run(["--json", "extremal", "8"], capsys)
    assert json.loads(out) == {"n": 8, "Z": 12, "max_arcs": 24}


def test_extremal_verify_n6(capsys):
    code, out, _ = run(["extremal", "6", "--verify"], capsys)
    assert code == EXIT_YES and "bound confirmed: yes" in out


def test_verify_subset(capsys):
    code, out, _ = run(["verify", "--claims", "quasigroup,lab", "--threads", "2"], capsys)
    lines = [line for line in out.splitlines() if line.startswith("[")]
    assert code == EXIT_YES
    assert [line.split()[1] for line in lines] == ["lab", "quasigroup"]


def test_verify_json(capsys):
    code, out, _ = run(["--json", "verify", "--claims", "rimarcs"], capsys)
    payload = json.loads(out)
    assert payload["passed"] and payload["claims"][0]["claim"] == "rimarcs"


def test_verify_failing_claim(capsys):
    code, out, _ = run(["verify", "--claims", "cyclic-out"], capsys)
    assert code == EXIT_NO and "overall: FAIL" in out


def test_unknown_claim(capsys):
    assert run(["verify", "--claims", "nope"], capsys)[0] == EXIT_INPUT


def test_usage_error_exits_2():
    proc = subprocess.run([sys.executable, "-m", "cordial", "frobnicate"], capture_output=True, text=True)
    assert proc.returncode == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "x6.txt"
    path.write_text(format_graph_text(gen_parallel_edges_graph(6)))
    proc = subprocess.run([sys.executable, "-m", "cordial", "orientable", str(path)], capture_output=True, text=True)
    assert proc.returncode == EXIT_NO and proc.stdout.startswith("(2,3)-orientable: no")
