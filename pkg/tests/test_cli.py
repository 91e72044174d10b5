import json
import subprocess
import sys
from pathlib import Path

import pytest

from bexponents.cli import CSV_FIELDS, run

FAMILIES = Path(__file__).resolve().parent.parent / "families"


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


CS = ["--n1", "4", "--m", "5", "--n2", "2", "--q", "7"]


def test_invariants_json(capsys):
    code, out, _ = call(capsys, "invariants", *CS, "--json")
    data = json.loads(out)
    assert code == 0
    assert data["mu"] == 70 and data["B12"] == ["11/40"]
    assert data["B22"] == ["27/94", "29/94", "31/94", "37/94", "39/94"]
    assert (data["dim_lower"], data["dim_upper"]) == (12, 18)
    assert data["tjurina_at_dim_lower"] == 58
    assert data["input"]["sequence"] == [8, 10, 47]


def test_output_is_deterministic(capsys):
    first = call(capsys, "invariants", *CS, "--json")[1]
    second = call(capsys, "invariants", *CS, "--json")[1]
    assert first == second
    assert "timing_s" not in json.loads(first)
    assert "timing_s" in json.loads(call(capsys, "invariants", *CS, "--json", "--timing")[1])


def test_text_output(capsys):
    code, out, _ = call(capsys, "split", "--n1", "2", "--m", "3", "--n2", "2", "--q", "1")
    assert code == 0
    assert "B11: {5/12, 7/12, 11/12, 13/12}" in out
    assert "B12: {}" in out


@pytest.mark.parametrize("cmd", ["spectrum", "yano", "common-roots", "bounds"])
def test_simple_commands(capsys, cmd):
    code, out, _ = call(capsys, cmd, *CS, "--json")
    assert code == 0 and json.loads(out)["input"]["q"] == 7


def test_exit_codes(capsys):
    assert call(capsys, "invariants", "--n1", "2", "--m", "4", "--n2", "2", "--q", "1")[0] == 2
    code, _, err = call(capsys, "certify", *CS, "--beta", "11/40")
    assert code == 3 and "NotInB11orB21" in err
    assert call(capsys, "common-roots", "--n1", "2", "--m", "3", "--n2", "5", "--q", "6")[0] == 3
    with pytest.raises(SystemExit):
        run(["invariants", "--n1", "2"])


def test_certify(capsys):
    code, out, _ = call(capsys, "certify", *CS, "--all", "--json")
    data = json.loads(out)
    assert code == 0 and data["all_valid"] and data["certificates"]


def test_residue_and_solve(capsys):
    spec = str(FAMILIES / "minus_4527.json")
    code, out, _ = call(capsys, "residue", "--family", "minus", "--spec", spec,
                        "--beta1", "1", "--beta2", "1", "--alpha=-39/94")
    assert code == 0 and out.strip() == "(136*t - 63)/447440 * B(-4/47, 1/2)"
    code, out, _ = call(capsys, "solve-t", "--spec", spec, "--beta", "39/94")
    assert code == 0 and json.loads(out)["solution"] == {"t": "63/136"}
    spec1 = str(FAMILIES / "minus_4527_t1.json")
    code, out, _ = call(capsys, "residue", "--family", "minus", "--spec", spec1, "--beta1", "1",
                        "--beta2", "1", "--alpha=-39/94", "--numeric", "--json")
    num = json.loads(out)["numeric"]
    assert num["combo"] == pytest.approx(num["quadrature"], rel=1e-10)
    code, _, _ = call(capsys, "residue", "--family", "plus", "--spec", spec, "--beta1", "1",
                      "--beta2", "1", "--alpha=-39/94")
    assert code == 2


def test_plus_residue(capsys):
    spec = str(FAMILIES / "plus_4527.json")
    code, out, _ = call(capsys, "residue", "--family", "plus", "--spec", spec, "--beta1", "3",
                        "--beta2", "9", "--alpha=-51/40", "--json")
    data = json.loads(out)
    assert data["combo"] == "-2/8525 * B(-1/5, 3/4)" and data["transcendence_witness"]


def test_sweep_csv(capsys):
    code, out, _ = call(capsys, "sweep", "--max-n1n2m", "24", "--csv", "--jobs", "1")
    lines = out.splitlines()
    assert code == 0 and lines[0] == ",".join(CSV_FIELDS)
    assert lines[1].startswith("2,3,2,1,16,2,2,2,")
    code, out2, _ = call(capsys, "sweep", "--max-n1n2m", "24", "--csv", "--jobs", "2")
    assert out2 == out


def test_verify(capsys):
    code, out, _ = call(capsys, "verify")
    assert code == 0 and out.rstrip().endswith("checks passed")
    assert "FAIL" not in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bexponents", "bounds", *CS, "--json"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["tjurina_at_dim_lower"] == 58
