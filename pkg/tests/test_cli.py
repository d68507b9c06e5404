import json
import subprocess
import sys

import pytest

from artin_bn.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "-n", "3", "@Delta", "--json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == "artin-bn/1"
    assert data["nf"] == {"rank": 3, "inf": 1, "factors": []}
    code, out, _ = run(capsys, "nf", "-n", "5", "")
    assert out.startswith("inf=0\nfactors=0")
    code, out, _ = run(capsys, "nf", "-n", "5", "s1 s2 s1")
    assert "factors=1" in out


def test_eq(capsys):
    words = ("@delta r5 r4^-1 @delta r5 r4^-1", "r4^-1 @delta r5 r4^-1 @delta r5")
    assert run(capsys, "eq", "-n", "5", "--type", "B", *words)[0] == 0
    assert run(capsys, "eq", "-n", "5", "--type", "B", "--mod-center", "@DeltaB", "")[0] == 0
    assert run(capsys, "eq", "-n", "5", "--type", "B", "r1", "r2")[:2] == (1, "false\n")
    assert run(capsys, "eq", "-n", "5", "--type", "affine", "t0 t1 t0", "t1 t0 t1")[0] == 0
    assert run(capsys, "eq", "-n", "5", "--type", "B", "--oracle", "handle", "@DeltaB r1", "r1 @DeltaB")[0] == 0


def test_exit_codes(capsys):
    assert run(capsys, "eq", "-n", "5", "--type", "B", "r9", "r1")[0] == 2
    assert run(capsys, "nf", "-n", "5", "s1 s2^x")[0] == 2
    assert run(capsys, "frobnicate", "-n", "5")[0] == 2
    assert run(capsys, "nf", "-n", "1", "")[0] == 2
    code, _, err = run(capsys, "eq", "-n", "6", "--oracle", "handle", "--budget", "2",
                       "@Delta^2 s1 @Delta^-2", "s1")
    assert code == 3 and "inconclusive" in err
    assert run(capsys, "verify", "-n", "4", "Tau")[0] == 2


def test_perm_and_delta_power(capsys):
    code, out, _ = run(capsys, "perm", "-n", "4", "s1", "--json")
    assert json.loads(out)["perm"] == [2, 1, 3, 4, 5]
    assert run(capsys, "delta-power", "-n", "5", "@Delta^2")[1] == "2\n"
    assert run(capsys, "delta-power", "-n", "5", "s1")[0] == 1


def test_apply(capsys):
    code, out, _ = run(capsys, "apply", "-n", "5", '{"variant":"T","power":1}', "r1")
    from artin_bn.bn import bn_equal, parse
    from artin_bn.words import B

    assert code == 0 and bn_equal(parse(out.strip(), B(5)), parse("r1 @DeltaB", B(5)))
    code, out, _ = run(capsys, "apply", "-n", "5", "Mu", "@rhoB")
    assert bn_equal(parse(out.strip(), B(5)), parse("@rhoB", B(5)))
    code, out, _ = run(capsys, "apply", "-n", "5", '{"variant":"Type2a","eps":1,"p":0,"q":0}', "r2 r3^-1")
    assert out.strip() == "r2 r3^-1"


def test_verify_and_classify(capsys, tmp_path):
    raw = {"variant": "Raw", "images": {"r1": "r1", "r2": "r2", "r3": "r3", "r4": "r4", "r5": "r1"}}
    assert run(capsys, "verify", "-n", "5", json.dumps(raw))[0] == 1
    path = tmp_path / "spec.json"
    path.write_text(json.dumps({"n": 5, "variant": "Type3", "eps": -1, "k": 0, "p": 1, "q": 0, "r": 0, "s": 2}))
    assert run(capsys, "verify", "-n", "5", str(path))[0] == 0
    code, out, _ = run(capsys, "classify", "-n", "5", str(path), "--json")
    assert json.loads(out)["result"] == {"verdict": "Type3", "eps": -1, "k": 0, "p": 1, "q": 0, "r": 0, "s": 2}
    code, out, _ = run(capsys, "classify", "-n", "5", '{"variant":"BarType1","kappa":3,"g":"rho^3"}')
    assert (code, out.strip()) == (0, "BarType1{kappa=3}")
    assert run(capsys, "classify", "-n", "5", json.dumps(raw))[0] == 1


@pytest.mark.parametrize("suite,n", [("lemma42", 5), ("section6", 6), ("autrel", 5), ("centralizer", 8)])
def test_identities(capsys, suite, n):
    code, out, _ = run(capsys, "identities", "-n", str(n), "--suite", suite)
    assert code == 0 and "FAIL" not in out and "PASS" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "artin_bn", "identities", "-n", "5", "--suite", "lemma42", "--json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["ok"] and data["schema"] == "artin-bn/1"
