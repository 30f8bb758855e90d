import json
import subprocess
import sys

import pytest

from qzeta.cli import main
from qzeta.fraction import equal
from qzeta.render import ff_from_json
from qzeta.cfrac import closed_form_coeffs


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_gpoly_text(capsys):
    assert run(capsys, "gpoly", "--r", "1", "--n", "2", "--format", "text")[:2] == (0, "1 + Z*q")
    assert run(capsys, "gpoly", "--r", "2", "--n", "1", "--format", "text")[:2] == (0, "1 + Z*q")
    assert run(capsys, "gpoly", "--r", "1", "--n", "1")[:2] == (0, "1")


def test_gpoly_budget(capsys):
    code, out, err = run(capsys, "gpoly", "--r", "3", "--n", "6", "--budget", "100")
    assert code == 2 and out == "" and "BudgetExceeded" in err


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("QZETA_BUDGET", "10")
    assert run(capsys, "gpoly", "--r", "2", "--n", "3")[0] == 2


def test_lvalue_latex(capsys):
    assert run(capsys, "lvalue", "--n", "0", "--c", "1", "--r", "1", "--format", "latex")[:2] == (0, r"\frac{z}{1-z}")


def test_moments_text(capsys):
    assert run(capsys, "moments", "--n", "1", "--r", "1", "--c", "1", "--format", "text")[:2] == (0, "1/(1 - Z*q)")


def test_cfrac_json_roundtrips(capsys):
    code, out, _ = run(capsys, "cfrac", "--r", "1", "--c", "1", "--upto", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    J = closed_form_coeffs(1, 1, 2)
    assert len(data["b"]) == len(data["lambda"]) == 3
    assert all(equal(ff_from_json(x), y) for x, y in zip(data["b"], J.b))
    assert all(equal(ff_from_json(x), y) for x, y in zip(data["lambda"], J.lam))


def test_cfrac_from_moments_json(capsys):
    code, out, _ = run(capsys, "cfrac", "--r", "2", "--c", "1", "--upto", "1", "--format", "json", "--from-moments")
    data = json.loads(out)
    J = closed_form_coeffs(2, 1, 1)
    assert code == 0 and data["provenance"] == "from-moments"
    assert all(equal(ff_from_json(x), y) for x, y in zip(data["b"], J.b))


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["gpoly", "--r", "0", "--n", "2"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["verify", "--suite", "everything"])
    assert info.value.code == 2


def test_verify_carlitz_example(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "carlitz", "--rmax", "3", "--nmax", "5", "--order", "8")
    report = json.loads(out)
    assert code == 0 and len(report) == 15
    assert all(set(row) == {"check", "params", "pass", "millis"} and row["pass"] for row in report)


def test_verify_zeta_example(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "zeta", "--nmax", "4", "--rmax", "2")
    assert code == 0 and all(row["pass"] for row in json.loads(out))


def test_verify_failure_exit_code(capsys, monkeypatch):
    import qzeta.verify as verify

    monkeypatch.setattr(verify, "_evaluate", lambda check, p: p.get("r") != 2)
    code, out, err = run(capsys, "verify", "--suite", "carlitz", "--rmax", "2", "--nmax", "1", "--threads", "1")
    assert code == 1 and "FAIL carlitz" in err
    assert [row["pass"] for row in json.loads(out)] == [True, False]


def test_verify_budget_exit_code(capsys):
    assert run(capsys, "verify", "--suite", "carlitz", "--budget", "1000")[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qzeta", "gpoly", "--r", "2", "--n", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip().startswith("1 + ")
