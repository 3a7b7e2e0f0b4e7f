import json
import subprocess
import sys
from fractions import Fraction

import pytest

from invorder.cli import main, run
from invorder.config import DEPTH_ENV, OrderConfig

THETA = '["x2","x3","x1*x2^3"]'
KNOT = "-x^3-3x^2+x+7+x^-1-3x^-2-x^-3"


def cli_json(capsys, *argv):
    code = main(["--json", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_special_sextic(capsys):
    code, rep = cli_json(capsys, "special", "x^6+3x^5-x^4-7x^3-x^2+3x+1")
    assert code == 0
    assert rep["result"]["special"] is True
    assert [(f["factor"], f["degree"], f["condition"]) for f in rep["result"]["factors"]] == [
        ("x^3+x^2-2x-1", 3, "i"),
        ("x^3+2x^2-x-1", 3, "i"),
    ]


def test_special_negative(capsys):
    code, rep = cli_json(capsys, "special", "x^2+1")
    assert code == 1 and rep["evidence"]["failing"] == ["x^2+1"]


def test_abelian_check_rotation(capsys, tmp_path):
    path = tmp_path / "rot.json"
    path.write_text("[[0,-1],[1,0]]")
    code, rep = cli_json(capsys, "abelian", "check", str(path))
    assert code == 1
    assert "x^2+1 has no positive real root" in rep["evidence"]["reasons"]


def test_abelian_check_positive_and_invalid(capsys):
    assert cli_json(capsys, "abelian", "check", "[[1,1],[1,0]]")[0] == 0
    code, rep = cli_json(capsys, "abelian", "check", "[[2,0],[0,1]]")
    assert code == 2 and rep["error"]["kind"] == "NotAutomorphism"
    code, rep = cli_json(capsys, "abelian", "check", "missing.json")
    assert code == 2


def test_abelian_sign(capsys):
    code, rep = cli_json(capsys, "abelian", "sign", "[[1,1],[1,0]]", "1,0")
    assert code == 0 and rep["result"]["sign"] in (-1, 1)
    rho = rep["evidence"]["flag"][0]["rho"]
    assert rho["minpoly"] == "x^2-x-1" and rho["approximate"].startswith("1.618")
    code, rep = cli_json(capsys, "abelian", "sign", "[[0,-1],[1,0]]", "1,0")
    assert code == 1 and rep["error"]["kind"] == "NoInvariantOrder"
    code, _ = cli_json(capsys, "abelian", "sign", "[[1,1],[1,0]]", "1,0,0")
    assert code == 2


def test_factor(capsys):
    code, rep = cli_json(capsys, "factor", "x^2-1")
    assert code == 0 and rep["result"]["text"] == "(x-1)*(x+1)"
    code, rep = cli_json(capsys, "factor", "x^2+3y")
    assert code == 2 and rep["error"]["token"] == "y"


def test_roots_with_range(capsys):
    code, rep = cli_json(capsys, "roots", "x^3-3x-1", "--range", "0,inf")
    assert code == 0 and rep["result"]["count"] == 1
    root = rep["result"]["roots"][0]
    lo, hi = (Fraction(t) for t in root["interval"])
    assert root["minpoly"] == "x^3-3x-1" and lo < Fraction(1879, 1000) < hi
    code, rep = cli_json(capsys, "roots", "x^2-2", "--range", "-1/2,1/2")
    assert code == 0 and rep["result"]["count"] == 0
    code, rep = cli_json(capsys, "roots", "x^2-2", "--range", "1,0")
    assert code == 2


def test_knot_conway(capsys):
    code, rep = cli_json(capsys, "knot", "conway", KNOT)
    assert code == 0 and rep["result"]["conway"] == "1-20z^2-9z^4-z^6"
    assert rep["evidence"]["round_trip"] is True
    code, rep = cli_json(capsys, "knot", "conway", "x-1+x^-1", "--convention", "paper")
    assert code == 0 and rep["result"]["conway"] == "-3+z^2"
    code, _ = cli_json(capsys, "knot", "conway", "x+2")
    assert code == 2


def test_knot_verdicts(capsys):
    code, rep = cli_json(capsys, "knot", "verdict", KNOT)
    assert code == 0 and rep["result"]["verdict"] == "OrderableSpecial"
    assert rep["evidence"]["tpr"] is False
    assert cli_json(capsys, "knot", "verdict", "-x+3-x^-1")[1]["result"]["verdict"] == "OrderableTPR"
    code, rep = cli_json(capsys, "knot", "verdict", "x-1+x^-1")
    assert code == 1 and rep["result"]["verdict"] == "Inconclusive"
    code, rep = cli_json(capsys, "knot", "verdict", "2x-3+2x^-1")
    assert code == 2 and rep["result"]["verdict"] == "InvalidInput"


def test_free_companion(capsys):
    code, rep = cli_json(capsys, "free", "companion", "x^3-3x-1")
    assert code == 0 and rep["result"]["images"] == ["x2", "x3", "x1*x2^3"]
    assert cli_json(capsys, "free", "companion", "x^3-3x+1")[0] == 2


def test_free_compare_exit_codes(capsys):
    code, rep = cli_json(capsys, "free", "compare", THETA, "1", "x1*x2*x1^-1*x2^-1")
    assert code == 0 and rep["evidence"]["depth"] == 2
    code, rep = cli_json(capsys, "free", "compare", THETA, "1", "x1*x2*x1^-1*x2^-1", "--depth", "1")
    assert code == 3 and rep["error"]["kind"] == "DepthExceeded"
    code, rep = cli_json(capsys, "free", "compare", '["x2","x1^-1"]', "1", "x1")
    assert code == 1
    code, rep = cli_json(capsys, "free", "compare", THETA, "1", "x7")
    assert code == 2
    code, rep = cli_json(capsys, "free", "compare", THETA, "1", "x1^")
    assert code == 2 and rep["error"]["kind"] == "ParseError"


def test_depth_cap_from_environment(monkeypatch, capsys):
    monkeypatch.setenv(DEPTH_ENV, "1")
    code, rep = cli_json(capsys, "free", "compare", THETA, "1", "x1*x2*x1^-1*x2^-1")
    assert code == 3
    monkeypatch.setenv(DEPTH_ENV, "zero")
    assert cli_json(capsys, "factor", "x")[0] == 2
    assert OrderConfig.from_env({DEPTH_ENV: "6"}).depth_cap == 6
    assert OrderConfig.from_env({}).depth_cap == 4


def test_verify_products(capsys):
    code, rep = cli_json(capsys, "free", "verify-products", "[[0,0,1],[1,0,3],[0,1,0]]", "2")
    assert code == 0 and rep["result"]["match"] is True
    assert cli_json(capsys, "free", "verify-products", "[[0,0,1],[1,0,3],[0,1,0]]", "9")[0] == 2


def test_usage_errors_are_json(capsys):
    for argv in (["nope"], [], ["factor"], ["abelian"], ["knot", "conway", "x", "--convention", "odd"]):
        code, rep = cli_json(capsys, *argv)
        assert code == 2 and "error" in rep


def test_human_readable_output(capsys):
    code = main(["factor", "x^2-1"])
    out = capsys.readouterr().out
    assert code == 0 and "text: (x-1)*(x+1)" in out
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)


def test_batch_preserves_order(tmp_path, capsys):
    lines = [
        'factor "x^2-1"',
        'special "x^2+1"',
        f"knot conway '{KNOT}'",
        f"free compare '{THETA}' 1 x1 --depth 2",
        'factor "x^2+"',
    ]
    path = tmp_path / "batch.txt"
    path.write_text("\n".join(lines) + "\n# comment\n")
    code = main(["--batch", str(path)])
    serial = capsys.readouterr().out.splitlines()
    assert code == 2
    reports = [json.loads(s) for s in serial]
    assert [r["exit_code"] for r in reports] == [0, 1, 0, 0, 2]
    assert [r["command"] for r in reports] == ["factor", "special", "knot conway", "free compare", "factor"]
    main(["--batch", str(path), "--jobs", "2"])
    assert capsys.readouterr().out.splitlines() == serial


def test_run_returns_report():
    code, report, as_json = run(["factor", "x^3-x"])
    assert code == 0 and not as_json
    assert report["result"]["text"] == "(x-1)*(x)*(x+1)"


def test_subprocess_output_is_byte_identical():
    cmd = [sys.executable, "-m", "invorder", "--json", "knot", "verdict", KNOT]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    assert a.returncode == 0 and a.stdout == b.stdout
    json.loads(a.stdout)
