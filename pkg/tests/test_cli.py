import json
import subprocess
import sys
from fractions import Fraction

import pytest

from a1deg import cli
from a1deg.bezout import bezoutian_matrix, unstable_degree
from a1deg.field import GF, QQ, Field
from a1deg.parse import parse_rational_function
from a1deg.poly import normalize_pointed


def run_json(capsys, *argv):
    code = cli.main(list(argv) + ["--json"])
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out else None), err


def test_degree_example(capsys):
    code, doc, _ = run_json(capsys, "degree", "--field", "Q", "(x^2-1)/x")
    assert code == 0
    c = doc["result"]["class"]
    assert c["positive"] == ["1", "1"] and c["negative"] == [] and c["unit"] == "1"
    assert c["rank"] == 2 and c["signature"] == 2 and c["discriminant"] == "1"


def test_duplicant_example(capsys):
    code, doc, _ = run_json(capsys, "duplicant", "--field", "Q", "--roots", "2:1,0:2")
    assert code == 0
    r = doc["result"]
    assert r["duplicant"] == "16" and r["closed_form"] == "16"
    assert r["sigma_blocks"][0] == [["0", "0", "1"]]
    assert r["sigma_blocks"][1] == [["0", "-2", "1"], ["-2", "1", "0"]]
    assert doc["verification"] == {"closed_form": True, "sigma_matches_expansion": True}


def test_verify_ltg_example(capsys):
    code, doc, _ = run_json(capsys, "verify-ltg", "--field", "Q", "--random", "100", "--seed", "7")
    assert code == 0
    assert doc["result"]["passed"] == doc["result"]["total"] == 100


def test_text_mode(capsys):
    assert cli.main(["verify-ltg", "--random", "5", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert out.rstrip().endswith("check all_pass: pass") and "5/5 pass" in out
    assert cli.main(["selftest", "duplicant"]) == 0
    out = capsys.readouterr().out
    assert "Sigma_1:" in out and "duplicant 16" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["degree", "x^-1"],
        ["degree", "--field", "Fp:2", "x"],
        ["degree", "--field", "Fp:9", "x"],
        ["degree", "x/(x^2)"],
        ["degree", "x^2/x"],
        ["local", "x^2+1"],
        ["local", "(x^2+1)*(x-1)", "--at", "x^2+1"],
        ["duplicant", "--roots", "1:1,1:2"],
        ["dsum", "--entry", "0:1", "--entry", "0:2"],
        ["dsum", "--entry", "0:2@1"],
        ["verify-ltg"],
        ["nsum", "x", "--field", "Fp:5", "x+1/5"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    assert cli.main(argv) == 2
    out, err = capsys.readouterr()
    assert out == "" and err.startswith("a1deg ") and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["verify-ltg", "--seed", str(2**64)])
    assert info.value.code == 2


def test_verification_failure_exit_1(capsys, monkeypatch):
    real = cli.verify_local_to_global

    def broken(F):
        rep = real(F)
        return type(rep)(F, rep.global_degree, rep.local_reports, rep.dsum_degree, False, True)

    monkeypatch.setattr(cli, "verify_local_to_global", broken)
    code, doc, _ = run_json(capsys, "verify-ltg", "(x^2-1)/x")
    assert code == 1 and doc["ok"] is False and doc["verification"]["all_pass"] is False


@pytest.mark.parametrize("field", ["Q", "Fp:7"])
def test_json_round_trip(capsys, field):
    k = Field.parse(field)
    expr = "(x-2)^2*(x+1)/(3*x-1/2)" if k.is_rational else "(x-2)^2*(x+1)/(3*x-1)"
    code, doc, _ = run_json(capsys, "degree", "--field", field, expr)
    assert code == 0
    F = normalize_pointed(*parse_rational_function(expr, k))
    d = unstable_degree(F)
    c = doc["result"]["class"]
    assert [k(a) for a in c["positive"]] == list(d.form.positive)
    assert k(c["unit"]) == d.unit
    assert [[k(a) for a in row] for row in doc["result"]["bezoutian"]] == bezoutian_matrix(F).rows()
    assert [k(a) for a in doc["result"]["function"]["numerator"]["coefficients"]] == list(F.numerator.coeffs)


def test_deterministic_bytes_and_workers(capsys, tmp_path):
    args = ["verify-ltg", "--field", "Fp:5", "--random", "30", "--seed", "11", "--json"]
    cli.main(args)
    first = capsys.readouterr().out
    cli.main(args)
    assert capsys.readouterr().out == first
    out_path = tmp_path / "doc.json"
    cli.main(args + ["--workers", "3", "--out", str(out_path)])
    assert capsys.readouterr().out == first
    assert out_path.read_text() == first


def test_timing_is_opt_in(capsys):
    code, doc, _ = run_json(capsys, "degree", "x^3")
    assert "timing" not in doc
    cli.main(["degree", "x^3", "--json", "--timing"])
    assert "seconds" in json.loads(capsys.readouterr().out)["timing"]


def test_other_commands(capsys):
    code, doc, _ = run_json(capsys, "dsum", "--entry", "1:1/2", "--entry=-1:1/2")
    assert code == 0 and doc["result"]["dsum"]["unit"] == "1"
    code, doc, _ = run_json(capsys, "dsum", "--roots", "1:1,-1:1", "--denominator", "x")
    assert code == 0 and doc["verification"]["classes_equal"]
    code, doc, _ = run_json(capsys, "nsum", "x", "x")
    assert code == 0 and doc["result"]["sum"]["text"] == "(x^2 - 1) / (x)"
    code, doc, _ = run_json(capsys, "local", "(x-2)^3/5")
    assert code == 0 and doc["result"]["locals"][0]["newton_matrix"][0] == ["0", "0", "5"]
    code, doc, _ = run_json(capsys, "duplicant", "3*(x-1)*(x-4)^2", "--field", "Fp:11")
    assert code == 0 and doc["verification"]["newton_basis"]
    code, doc, _ = run_json(capsys, "selftest", "all", "--field", "Fp:7")
    assert code == 0 and all(doc["verification"].values())


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "a1deg", "duplicant", "--roots", "2:1,0:2", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["result"]["duplicant"] == "16"
