import json

import pytest

from poset_ramsey.cli import main
from poset_ramsey.lattice import ColoredLattice
from poset_ramsey.witnesses import thm4_witness


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def ok(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    assert err == ""
    return json.loads(out)


def failure(capsys, expected_code, *argv):
    code, out, err = run(capsys, *argv)
    assert code == expected_code
    assert out == ""
    payload = json.loads(err)
    assert set(payload) >= {"error", "message"}
    return payload


def test_poset_info(capsys):
    info = ok(capsys, "poset", "info", "CC(2,1)")
    assert (info["size"], info["height"], info["width"], info["trivial"], info["dim2"]) == (3, 2, 2, True, 3)
    assert info["relations"] == [[0, 1]]
    assert ok(capsys, "poset", "info", "V")["trivial"] is False


def test_parse_error_reports_offset(capsys):
    payload = failure(capsys, 2, "poset", "info", "C(0")
    assert payload["error"] == "ParseError" and payload["offset"] == 3


def test_usage_errors_exit_two(capsys):
    failure(capsys, 2, "poset")
    failure(capsys, 2, "ramsey", "decide", "C(2)", "--n", "1")
    failure(capsys, 2, "nonsense")


def test_decide_saves_counterexample_and_cnf(capsys, tmp_path):
    cx, cnf = tmp_path / "cx.json", tmp_path / "f.cnf"
    res = ok(capsys, "ramsey", "decide", "C(2)", "--n", "1", "--dim", "1", "--save", str(cx), "--cnf", str(cnf))
    assert res["outcome"] == "counterexample"
    saved = json.loads(cx.read_text())
    assert saved == res["coloring"] == {"n_ground": 1, "blue_bits": "01"}
    assert ColoredLattice.from_json_obj(saved).is_blue(0)
    assert cnf.read_text() == "p cnf 2 2\n-1 -2 0\n1 2 0\n"


def test_decide_holds_and_thread_echo(capsys, monkeypatch):
    monkeypatch.setenv("POSET_RAMSEY_THREADS", "3")
    res = ok(capsys, "ramsey", "decide", "CC(2,2)", "--n", "1", "--dim", "4", "--symmetry")
    assert res["outcome"] == "holds" and res["threads"] == 3


def test_exact_and_budget(capsys):
    assert ok(capsys, "ramsey", "exact", "CC(2,1)", "--n", "1")["value"] == 4
    assert failure(capsys, 3, "ramsey", "exact", "C(2)", "--n", "1", "--max", "7")["error"] == "BudgetError"
    failure(capsys, 3, "ramsey", "decide", "C(2)", "--n", "1", "--dim", "9")


def test_witness_verification(capsys):
    res = ok(capsys, "witness", "thm4", "2", "2", "--verify")
    assert res["verification"]["valid"] and res["N"] == 4
    assert ColoredLattice.from_json_obj(res["coloring"]) == thm4_witness(2, 2)
    res = ok(capsys, "witness", "thm5", "1", "2", "1", "--verify")
    assert res["verification"]["expression"] == "CC(2,1,1)" and res["verification"]["valid"]
    code, out, _ = run(capsys, "witness", "thm4", "2", "2", "--verify", "C(1)")
    assert code == 4 and json.loads(out)["verification"]["has_blue_copy_of_p"]
    failure(capsys, 2, "witness", "thm4", "2")


def test_chainlemma_round_trip(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps(ColoredLattice(4, 0).to_json_obj()))
    res = ok(capsys, "chainlemma", "--coloring", str(path), "--x", "0b0011", "--tau", "4,3")
    assert res["certificate"]["kind"] == "red_cube" and res["verified"]
    path.write_text('{"n_ground": 4}')
    failure(capsys, 2, "chainlemma", "--coloring", str(path), "--x", "3", "--tau", "4,3")


def test_perm_subcommands(capsys):
    res = ok(capsys, "perm", "check", "6,1,3,4,5,2", "--r", "2")
    assert res["profile"] == [1, 2, 2, 3, 3, 2] and res["min_r"] == 3 and res["r_proper"] is False
    assert ok(capsys, "perm", "count", "--k", "4", "--r", "2")["count"] == 18
    assert ok(capsys, "perm", "count", "--k", "4", "--r", "2", "--bruteforce")["count"] == 18
    enc = ok(capsys, "perm", "encode", "6,1,3,4,5,2", "--r", "3")
    assert enc["vectors"] == ["111111", "001010", "000100"]
    dec = ok(capsys, "perm", "decode", *enc["vectors"])
    assert dec["restriction"] == {"1": 6, "3": 3, "4": 4, "5": 5}
    failure(capsys, 2, "perm", "encode", "6,1,3,4,5,2", "--r", "2")
    failure(capsys, 2, "perm", "decode", "0110", "0110")


def test_sd_search(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps(ColoredLattice.monochromatic(7, "blue").to_json_obj()))
    res = ok(capsys, "sd", "search", "--coloring", str(path), "--n", "1", "--k", "6", "--t", "2")
    assert res["kind"] == "blue_sd" and len(res["vertices"]) == 8


def test_estimate(capsys):
    res = ok(capsys, "estimate", "--n", "1048576", "--c", "4", "--log2-of", "6")
    assert res["verdict"] == "fails"
    scan = ok(capsys, "estimate", "--c", "4", "--log2-of", "6", "--scan", "30:36")
    verdicts = [row["verdict"] for row in scan["scan"]]
    assert verdicts[0] == "fails" and verdicts[-1] == "holds"
    assert scan["first_holds_exponent"] == 33
    failure(capsys, 2, "estimate", "--n", "1", "--c", "1")


def test_bounds_and_table(capsys):
    res = ok(capsys, "bounds", "CC(3,1)", "--n", "10")
    assert res["exact"] == 14 and res["provenance"] == ["THM4_TWO_CHAINS"]
    rows = ok(capsys, "table", "--n", "1", "--compute", "--max", "5")["rows"]
    assert [r["value"] for r in rows] == [1, 2, 3, 4, 4, 4, 5, 5]
    assert all(r["computed"] == r["value"] for r in rows)


@pytest.mark.parametrize("flag", [[], ["--pretty"]])
def test_pretty_flag_keeps_json(capsys, flag):
    code, out, _ = run(capsys, *flag, "poset", "info", "C(2)")
    assert code == 0 and json.loads(out)["size"] == 2
    assert ("\n  " in out) == bool(flag)
