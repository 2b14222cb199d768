import csv
import io
import json
import subprocess
import sys

import pytest

from farey_surgery import verify
from farey_surgery.cli import main
from farey_surgery.rationals import SurgeryCoefficient
from farey_surgery.surgery import omega


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_omega_plain(capsys):
    assert run(capsys, "omega", "5") == (0, "omega(5/1) = 9; complexity = 9 (omega <= 12)\n", "")
    assert run(capsys, "omega", "0")[1] == "omega(0/1) = 7; complexity = 7\n"
    assert run(capsys, "omega", "9")[1] == "omega(9/1) = 13; upper bound only (omega > 12)\n"


@pytest.mark.parametrize("bad", ["inf", "1/0"])
def test_omega_infinite(capsys, bad):
    code, out, err = run(capsys, "omega", bad)
    assert code == 2
    assert "infinite" in err


@pytest.mark.parametrize("bad", ["x", "1/2/3", "2000000000"])
def test_omega_parse_errors(capsys, bad):
    assert run(capsys, "omega", bad)[0] == 2


def test_omega_negative_uses_mirror(capsys):
    assert run(capsys, "omega", "--", "-5")[1].startswith("omega(5/1) = 9")


def test_omega_explain(capsys):
    code, out, _ = run(capsys, "omega", "13/3", "--explain")
    assert code == 0
    assert "triangle_V = {4,9/2,5}" in out
    assert "+10  E(4_1)[3]" in out
    assert "net = 12" in out


def test_omega_csv_refused(capsys):
    assert run(capsys, "omega", "5", "--format", "csv")[0] == 2


@pytest.mark.parametrize("slope", ["5", "13/3", "0", "100/7", "2/5"])
def test_omega_json_round_trip(capsys, slope):
    code, out, _ = run(capsys, "omega", slope, "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert omega(SurgeryCoefficient(d["p"], d["q"])) == d["omega"]


@pytest.mark.parametrize(
    "t1,t2,d",
    [("0,1,inf", "3,4,inf", "3"), ("0,1,inf", "0,1,inf", "0"), ("0,1,inf", "0,1/2,1", "1")],
)
def test_distance(capsys, t1, t2, d):
    assert run(capsys, "distance", t1, t2) == (0, d + "\n", "")


def test_distance_rejects_non_farey(capsys):
    assert run(capsys, "distance", "0,1/3,1", "0,1,inf")[0] == 2


def test_distance_path_and_flip_path(capsys):
    _, out, _ = run(capsys, "distance", "0,1,inf", "2,3,inf", "--path")
    assert out.split() == ["0,1,inf", "1,2,inf", "2,3,inf"]
    _, out, _ = run(capsys, "flip-path", "0,1,inf", "2,3,inf", "--format", "json")
    assert json.loads(out)["distance"] == 2


def test_cf(capsys):
    assert run(capsys, "cf", "13/3")[1] == "13/3 = [4; 3]  S = 7\n"
    d = json.loads(run(capsys, "cf", "3/5", "--format", "json")[1])
    assert d == {"p": 3, "q": 5, "quotients": [0, 1, 1, 2], "S": 4}


def test_enumerate_seven(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-omega", "7")
    rows = [l for l in out.splitlines()[1:] if "exceptional" in l]
    assert code == 0 and len(rows) == 5
    assert "hyperbolic count = 0 (paper claims 46 for max_omega = 12)" in out


def test_enumerate_csv(capsys):
    code, out, err = run(capsys, "enumerate", "--max-omega", "9", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 6
    assert rows[-1]["p"] == "5" and rows[-1]["hyperbolic"] == "1"
    assert rows[-1]["pipeline_vertices"] == "10"
    assert "hyperbolic count = 1" in err


def test_enumerate_json(capsys):
    d = json.loads(run(capsys, "enumerate", "--max-omega", "12", "--format", "json")[1])
    assert d["paper_claim"] == 46
    assert d["hyperbolic_count"] == len([s for s in d["slopes"] if s["hyperbolicity"] == "hyperbolic"])
    assert d["matches_paper"] == (d["hyperbolic_count"] == 46)
    assert all(s["omega"] <= 12 for s in d["slopes"])


def test_enumerate_rejects_small(capsys):
    assert run(capsys, "enumerate", "--max-omega", "6")[0] == 2


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--radius", "6", "--pairs", "200")
    assert code == 0 and out.splitlines()[-1].startswith("PASS")


def test_verify_radius_one(capsys):
    assert run(capsys, "verify", "--radius", "1", "--pairs", "50")[0] == 0


def test_verify_injected_fault(capsys):
    code, out, _ = run(capsys, "verify", "--radius", "3", "--pairs", "20", "--inject-fault")
    assert code == 1 and "mismatch" in out


def test_verify_fault_detected_in_identity_sweep():
    assert not verify.check_slope_identities(6, fault=True).passed
    assert not verify.check_random_pairs(20, 4, seed=1, fault=True).passed


def test_threads_env(monkeypatch):
    monkeypatch.setenv("FAREY_SURGERY_THREADS", "1")
    assert verify.max_workers() == 1
    serial = verify.check_slope_identities(9)
    monkeypatch.setenv("FAREY_SURGERY_THREADS", "4")
    assert verify.max_workers() == 4
    parallel = verify.check_slope_identities(9)
    assert serial.checks == parallel.checks and serial.passed and parallel.passed


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "farey_surgery", "omega", "5"], capture_output=True, text=True
    )
    assert res.returncode == 0 and res.stdout.startswith("omega(5/1) = 9")
