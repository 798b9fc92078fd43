import io
import json

import pytest

from qmeta.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_reflect_classical(capsys):
    code, out, _ = run(["reflect", "|- p0 and |- p1"], capsys)
    assert code == 0
    d = json.loads(out)
    assert d["result"] == "|- p0 & p1" and d["direction"] == "down"
    assert d["ast"]["type"] == "Assertion"


def test_reflect_up(capsys):
    code, out, _ = run(["reflect", "|- p{0.3} (0.3 &_ 0.4) p{0.4}"], capsys)
    assert code == 0
    assert json.loads(out)["result"] == "|-^{0.3} p{0.3} and |-^{0.4} p{0.4}"


def test_reflect_mixed_is_domain_error(capsys):
    code, out, err = run(["reflect", "|-^{0.3} p{0.3} and |- p1"], capsys)
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "E_LEVEL_MIXED"


def test_check_amplitudes_from_nowhere(capsys):
    code, out, err = run(["check", "|- p0 and |- p1", "|- p{0.3} (0.3 &_ 0.4) p{0.4}"], capsys)
    assert code == 1
    assert json.loads(err)["error"] == "E_LEVEL_52"
    assert json.loads(out)["ok"] is False


def test_check_ok(capsys):
    code, out, _ = run(["check", "|-^{0.3} p{0.3} and |-^{0.4} p{0.4}",
                        "|- p{0.3} (0.3 &_ 0.4) p{0.4}"], capsys)
    assert code == 0 and json.loads(out)["ok"] is True


def test_qubit_antipodal(capsys):
    code, out, _ = run(["qubit", "1.17741", "-1.17741"], capsys)
    assert code == 0
    q = json.loads(out)["qubit"]
    assert q["lambda0"][0] == pytest.approx(1, abs=1e-5) and abs(q["lambda1"][0]) <= 1e-5
    assert q["residual"] <= 1e-5


def test_qubit_renormalize(capsys):
    code, out, _ = run(["qubit", "0", "0", "--renormalize"], capsys)
    d = json.loads(out)
    assert code == 0 and d["admissible"] and d["qubit"]["lambda0"] == [1.0, 0.0]


def test_truth_echoes_fock_n(capsys):
    code, out, _ = run(["truth", "0.6+0.8i"], capsys)
    d = json.loads(out)
    assert code == 0 and d["fock_n"] == 64 and d["v"] == pytest.approx(1, abs=1e-12)
    code, _, err = run(["truth", "2"], capsys)
    assert code == 1 and json.loads(err)["error"] == "E_DEGREE_RANGE"


def test_overlap(capsys):
    code, out, _ = run(["overlap", "1", "0", "--fock-n", "32"], capsys)
    d = json.loads(out)
    assert code == 0 and d["fock_n"] == 32
    assert d["analytic"][0] == pytest.approx(0.6065306597126334, abs=1e-15)
    assert d["abs_difference"] <= 1e-10


def test_solve_meta(capsys):
    code, out, _ = run(["solve-meta", "equal", "--tol", "1e-12"], capsys)
    d = json.loads(out)
    assert code == 0 and d["tol"] == 1e-12
    assert d["root"] == pytest.approx(1.6409249004417283, abs=1e-11)


def test_parse_stdin_error_span(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("|- p0 &"))
    code, out, err = run(["parse", "-"], capsys)
    assert code == 1 and out == ""
    d = json.loads(err)
    assert d["error"] == "E_PARSE" and d["span"] == [7, 7]


def test_parse_file(capsys, tmp_path):
    f = tmp_path / "doc.qml"
    f.write_text("|-((p0)) & p1 and |- p1\n", encoding="utf-8")
    code, out, _ = run(["parse", str(f)], capsys)
    d = json.loads(out)
    assert code == 0 and d["canonical"] == "|- p0 & p1 and |- p1"
    assert d["ast"]["schema"] == 1


def test_sim(capsys, tmp_path):
    f = tmp_path / "task.json"
    f.write_text(json.dumps({"schema": 1, "phases": [{"op": "compute", "gate": "H", "qubit": 0},
                                                     {"op": "act", "qubit": 0}]}))
    code, out, _ = run(["sim", str(f), "--lattice", "2", "--width", "1", "--seed", "7"], capsys)
    d = json.loads(out)
    assert code == 0 and d["seed"] == 7
    assert d["position_marginals"][-1] == pytest.approx([0.5, 0.5], abs=1e-15)


def test_sim_bad_document(capsys, tmp_path):
    f = tmp_path / "task.json"
    f.write_text(json.dumps({"schema": 2, "phases": []}))
    code, _, err = run(["sim", str(f), "--lattice", "2", "--width", "1"], capsys)
    assert code == 1 and json.loads(err)["error"] == "E_SCHEMA"
    code, _, err = run(["sim", str(tmp_path / "missing.json"), "--lattice", "2", "--width", "1"], capsys)
    assert code == 1 and json.loads(err)["error"] == "E_INPUT"


@pytest.mark.parametrize("argv", [[], ["bogus"], ["truth"], ["truth", "0.1", "--fock-n", "x"],
                                  ["sim", "t.json", "--lattice", "2"], ["solve-meta", "skew"]])
def test_usage_errors_exit_2(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 2 and out == ""


def test_env_defaults(capsys, monkeypatch):
    monkeypatch.setenv("QML_FOCK_N", "16")
    code, out, _ = run(["truth", "0.1"], capsys)
    assert code == 0 and json.loads(out)["fock_n"] == 16
    monkeypatch.setenv("QML_FOCK_N", "many")
    code, _, _ = run(["truth", "0.1"], capsys)
    assert code == 2
