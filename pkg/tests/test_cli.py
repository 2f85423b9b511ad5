import io
import json

import pytest

from parabolic.cli import main
from parabolic.core import Wall


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    text = out.getvalue()
    return code, (json.loads(text) if text else None), err.getvalue(), text


def weight_file(tmp_path, name, r, rows):
    p = tmp_path / name
    p.write_text(json.dumps({"r": r, "n": len(rows), "weights": rows}))
    return str(p)


@pytest.fixture
def w25(tmp_path):
    return lambda x, name="w.json": weight_file(tmp_path, name, 2, [[x]] * 5)


def test_dim():
    code, rec, err, _ = run("dim", "-r", "3", "-n", "6")
    assert code == 0 and rec["dimension"] == 10 and rec["ok"] and rec["schema_version"] == 1
    assert "dim M = 10" in err


def test_lr_and_gw():
    assert run("lr", "--lam", "2,1", "--mu", "2,1", "--nu", "3,2,1")[1]["coefficient"] == 2
    code, rec, _, _ = run("gw", "--grassmannian", "1,2", "--classes", "(1);(1);(1)", "--degree", "1")
    assert code == 0 and rec["invariant"] == 1
    assert run("gw", "--grassmannian", "2,4", "--classes", "(1);(1);(1);(1)", "--degree", "0")[1]["invariant"] == 2


def test_scaling(w25):
    code, rec, _, _ = run("scaling", "--weights", w25("1"), "--cmax", "1")
    assert code == 0
    got = [(g["c"], g["simple"], g.get("kind")) for g in rec["crossings"]]
    assert got == [("2/5", True, "blow-up"), ("2/3", False, None), ("4/5", True, "boundary")]
    code, rec, _, _ = run("scaling", "--weights", w25("1"), "--cmax", "1/2")
    assert [g["c"] for g in rec["crossings"]] == ["2/5"]
    assert not rec["bounded_search"]


def test_first_wall(w25):
    code, rec, err, _ = run("first-wall", "--weights", w25("1"), "--cmax", "1")
    assert code == 0 and rec["c"] == "2/5" and rec["report"]["kind"] == "blow-up"
    assert Wall.from_record(rec["wall"]) == Wall.uniform(2, 5, 1, -1, (1,))


def test_walls(w25):
    code, rec, _, _ = run("walls", "--from", w25("1/5", "a.json"), "--to", w25("7/10", "b.json"))
    assert code == 0 and [g["t"] for g in rec["crossings"]] == ["2/5", "14/15"]


def test_classify(w25):
    wall = json.dumps({"s": 1, "d": -1, "J": [[1]] * 5})
    code, rec, _, _ = run("classify", "--weights", w25("2/5"), "--wall", wall)
    assert code == 0 and rec["kind"] == "blow-up" and rec["dim_Y_plus"] == 1
    other = json.dumps({"s": 1, "d": -1, "J": [[1]] * 4 + [[2]]})
    assert run("classify", "--weights", w25("2/3"), "--wall", other)[0] == 1
    code, rec, _, _ = run("classify", "--weights", w25("2/3"), "--wall", other, "--skip-simple-check")
    assert code == 0 and rec["kind"] == "blow-down"


def test_effective(w25):
    code, rec, _, _ = run("effective", "--weights", w25("4/5"))
    assert code == 0 and rec["effective"] and rec["certificate"] is None
    code, rec, _, _ = run("effective", "--weights", w25("9/10"))
    cert = rec["certificate"]
    assert not rec["effective"] and cert["label"] == "Delta(1,-2,5[1])"
    assert (cert["gw_value"], cert["slope_sub"], cert["slope_total"]) == (1, "5/2", "9/4")
    assert not run("effective", "--weights", w25("4/5"), "--strict")[1]["effective"]


def test_dominant(tmp_path):
    rows = [["1/2"], ["5/9"], ["4/7"], ["6/11"], ["7/13"]]
    code, rec, _, _ = run("dominant", "--weights", weight_file(tmp_path, "d.json", 2, rows))
    assert code == 0 and rec["dominant"] and rec["rho_final"] == 6


def test_cone_commands(tmp_path):
    code, rec, _, _ = run("effcone", "-r", "2", "-n", "5")
    assert code == 0 and rec["counts"] == {"ordering": 5, "level": 5, "gw": 16}
    assert run("--dmax", "1", "effcone", "-r", "2", "-n", "5")[1]["bounded_search"]
    div = tmp_path / "D.json"
    div.write_text(json.dumps({"r": 3, "n": 7, "level": 3, "lambdas": [[2, 1]] * 7}))
    code, rec, _, _ = run("model", "--divisor", str(div))
    assert code == 0 and rec["type"] == "interior" and rec["on_wall"]
    code, rec, _, _ = run("anticanonical", "-r", "3", "-n", "7")
    assert rec["level"] == 6 and rec["pauly_weight"][0] == ["2/3", "1/3"]
    code, rec, _, _ = run("fano-report", "-r", "2", "-n", "5")
    assert code == 0 and rec["weak_fano"] and rec["rho_final"] == 6


def test_exit_codes(tmp_path, w25):
    assert run("bogus")[0] == 2
    assert run("dim", "-r", "3")[0] == 2
    assert run("scaling", "--weights", str(tmp_path / "missing.json"), "--cmax", "1")[0] == 2
    code, rec, err, _ = run("fano-report", "-r", "2", "-n", "4")
    assert code == 1 and not rec["ok"] and rec["error"]["type"] == "PreconditionError"
    float_file = tmp_path / "f.json"
    float_file.write_text(json.dumps({"r": 2, "n": 5, "weights": [[0.4]] * 5}))
    code, rec, _, _ = run("effective", "--weights", str(float_file))
    assert code == 1 and rec["error"]["type"] == "FloatRejected"
    assert run("effective", "--weights", w25("0.4"))[0] == 1
    div = tmp_path / "D.json"
    div.write_text(json.dumps({"r": 3, "n": 7, "level": 3.0, "lambdas": [[2, 1]] * 7}))
    assert run("model", "--divisor", str(div))[0] == 1


def test_byte_identical_repeats(w25):
    path = w25("1")
    first = run("scaling", "--weights", path, "--cmax", "1")[3]
    assert first == run("scaling", "--weights", path, "--cmax", "1")[3]
    assert first == json.dumps(json.loads(first), indent=2, sort_keys=True) + "\n"
