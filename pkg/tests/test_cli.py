import json
import subprocess
import sys

import pytest

from frobkernel.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "--p", "3")
    data = json.loads(out)
    assert code == 0
    assert data["K[G_r]"] == 36 and data["Dist(T_r)"] == 9
    assert data["shape"] == {"m": 1, "n": 1, "p": 3, "r": 1}


def test_dims_gl21(capsys):
    code, out, _ = run(capsys, "dims", "--m", "2", "--p", "2")
    assert code == 0 and json.loads(out)["K[G_r]"] == 512


def test_center_and_integral(capsys):
    code, out, _ = run(capsys, "center", "--p", "2")
    assert code == 0 and json.loads(out)["dim"] == 5
    code, out, _ = run(capsys, "integral", "--p", "3")
    assert code == 0 and json.loads(out)["dim"] == 1
    code, out, _ = run(capsys, "center", "--p", "2", "--output", "text")
    assert out.strip() == "dim 5"


def test_coordinv_and_hc(capsys):
    code, out, _ = run(capsys, "coordinv", "--p", "2", "--r", "2")
    assert code == 0 and json.loads(out)["dim"] == 18
    code, out, _ = run(capsys, "hc", "--p", "2")
    data = json.loads(out)
    assert code == 0 and data["I_r"]["dim"] == 3
    assert len(data["weights"]) == 4
    assert all(len(g["eigenvalues"]) == 4 for g in data["generators"])


def test_blocks(capsys):
    code, out, _ = run(capsys, "blocks", "--p", "2", "--window", "4")
    data = json.loads(out)
    assert code == 0 and all(data["flags"].values())
    code, out, _ = run(capsys, "blocks", "--p", "3", "--window", "3", "--output", "text")
    assert code == 0 and "HC classes" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--p", "2")
    data = json.loads(out)
    assert code == 0
    statuses = {r["key"]: r["status"] for r in data["results"]}
    assert "fail" not in statuses.values()
    assert statuses["lemma:condemnedlemma"] == "pass"
    code, out, _ = run(capsys, "verify", "--p", "2", "--output", "text")
    assert "lemma:basis: pass" in out


@pytest.mark.parametrize("argv", [
    ("dims", "--p", "4"),
    ("dims", "--p", "2", "--r", "0"),
    ("dims", "--m", "0", "--n", "0"),
    ("coordinv", "--m", "2", "--p", "2"),
    ("hc", "--m", "2", "--p", "2"),
    ("center", "--m", "3", "--p", "3"),
    ("dims", "--p", "2", "--r", "8"),
    ("dims", "--m", "2", "--p", "2", "--dim-guard", "100"),
    ("blocks", "--p", "2", "--window", "-1"),
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "usage error" in err


def test_unknown_command_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_deterministic_output():
    cmd = [sys.executable, "-m", "frobkernel", "center", "--p", "3", "--seed", "5"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["dim"] == 10
