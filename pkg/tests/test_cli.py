import io
import json
import subprocess
import sys

import pytest

from okcas.cli import run
from okcas.exactpoly import MPoly
from okcas.expansion import expand
from okcas.okounkov import OkounkovParams, SpecializationParams, okounkov_poly
from okcas.symfunc import coeffs_from_json_obj
from fractions import Fraction


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_expand_json_example():
    code, out, _ = call("expand", "--lambda", "1", "--n", "2", "--r", "1", "--s", "1/2", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["coeffs"] == {"[1]": "1/2", "[]": "1/4"}
    assert obj["residual_zero"] is True


def test_expand_text():
    code, out, _ = call("expand", "--lambda", "1", "--n", "2", "--r", "1", "--s", "1/2")
    assert code == 0
    assert out.splitlines() == ["lambda=[1] n=2 r=1 s=1/2", "b[1] = 1/2", "b[] = 1/4", "residual_zero=true"]


def test_casimir_both():
    code, out, _ = call("casimir", "--weight", "1,0", "--k", "2", "--method", "both")
    assert code == 0 and out == "2\n2\n"


def test_casimir_singular_scheunert():
    code, _, err = call("casimir", "--weight", "0,1", "--k", "2", "--method", "scheunert")
    assert code == 2 and "singular" in err


@pytest.mark.parametrize("lam", ["", "0"])
def test_okounkov_empty(lam):
    code, out, _ = call("okounkov", "--lambda", lam, "--r", "3", "--tau", "1", "--alpha", "0")
    assert code == 0 and out == "1\n"


def test_okounkov_eval_and_json():
    code, out, _ = call("okounkov", "--lambda", "1", "--r", "2", "--alpha", "1/3", "--eval", "4/3,1/3")
    assert code == 0 and out == "0\n"
    code, out, _ = call("okounkov", "--lambda", "2,1", "--r", "2", "--tau", "2", "--alpha", "1/2", "--json")
    P = MPoly.from_json_obj(2, json.loads(out))
    assert P == okounkov_poly((2, 1), OkounkovParams(2, 2, Fraction(1, 2)))


def test_okounkov_too_many_parts_warns():
    code, out, err = call("okounkov", "--lambda", "1,1,1", "--r", "2")
    assert code == 0 and out == "0\n" and "warning" in err


def test_restricted():
    code, out, _ = call("restricted", "--k", "2", "--n", "2", "--r", "1")
    assert code == 0 and out == "2*x1^2 + 2*x1\n"
    code, out, _ = call("restricted", "--k", "2", "--n", "2", "--r", "1", "--json")
    assert json.loads(out) == [{"coeff": "2", "exps": [2]}, {"coeff": "2", "exps": [1]}]


def test_ylambda():
    assert call("ylambda", "--lambda", "2,1")[1] == "-64/3\n"
    assert call("ylambda", "--lambda", "")[1] == "1\n"


@pytest.mark.parametrize("argv", [
    ["expand", "--lambda", "1,2", "--n", "4", "--r", "2"],
    ["expand", "--lambda", "x", "--n", "4", "--r", "2"],
    ["expand", "--lambda", "1", "--n", "3", "--r", "2"],
    ["expand", "--lambda", "1,1,1", "--n", "4", "--r", "2"],
    ["expand", "--lambda", "1", "--n", "4", "--r", "2", "--s", "0.5"],
    ["casimir", "--weight", "1,0", "--k", "2", "--bogus"],
    ["restricted", "--k", "-1", "--n", "4", "--r", "2"],
    ["okounkov", "--lambda", "1", "--r", "2", "--eval", "1"],
    ["nosuchcommand"],
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and err.startswith("okcas: error")


def test_threads_env_validated(monkeypatch):
    monkeypatch.setenv("OKCAS_THREADS", "zero")
    assert call("ylambda", "--lambda", "1")[0] == 2
    monkeypatch.setenv("OKCAS_THREADS", "2")
    assert call("ylambda", "--lambda", "1")[0] == 0


def test_verify_small_suite():
    code, out, _ = call("verify", "--suite", "theorem", "--max-weight", "2", "--max-rank", "2")
    assert code == 0
    assert out.strip().splitlines()[-1].endswith("checks passed")
    assert "FAIL" not in out


def test_verify_failure_exit_code(monkeypatch):
    import okcas.suites as suites
    monkeypatch.setitem(suites.SUITES, "oracle", lambda **kw: iter([("forced", False, "")]))
    code, out, _ = call("verify", "--suite", "oracle")
    assert code == 1 and "FAIL [oracle] forced" in out


def test_json_round_trip_expand():
    code, out, _ = call("expand", "--lambda", "2,1", "--n", "5", "--r", "2", "--s=-2/3", "--json")
    obj = json.loads(out)
    assert coeffs_from_json_obj(obj["coeffs"]) == expand((2, 1), SpecializationParams(5, 2, Fraction(-2, 3))).coeffs


def test_byte_identical_subprocess_runs():
    argv = [sys.executable, "-m", "okcas.cli", "expand", "--lambda", "2,1", "--n", "5", "--r", "2", "--s", "1/3", "--json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first


@pytest.mark.parametrize("script, args", [
    ("expansion_table.py", ["--max-weight", "2", "--n", "4", "--r", "2", "--s", "1/2"]),
    ("rank_stability.py", ["--max-weight", "2", "--max-rank", "2"]),
])
def test_scripts_run(script, args):
    from pathlib import Path
    path = Path(__file__).resolve().parent.parent / "scripts" / script
    proc = subprocess.run([sys.executable, str(path), *args], capture_output=True, text=True, check=True)
    assert proc.stdout and "FAIL" not in proc.stdout
