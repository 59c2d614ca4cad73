import json
import os
import subprocess
import sys

import pytest

DATA = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data")


def run(*args):
    cmd = [sys.executable, "-m", "tiltroll.cli", *args]
    return subprocess.run(cmd, capture_output=True, text=True, cwd=DATA)


@pytest.mark.parametrize("args,code", [
    (("check", "a3rel.pres"), 0),
    (("check", "bad.pres"), 1),
    (("verify-iff", "a3rel.pres"), 0),
    (("verify-iff", "pentagon.pres"), 2),
    (("cut", "--enumerate", "nocut.pres"), 2),
    (("cut", "--enumerate", "three_cycle.pres"), 0),
])
def test_exit_codes(args, code):
    assert run(*args).returncode == code


def test_parse_error_has_location():
    res = run("check", "bad.pres")
    err = json.loads(res.stderr)
    assert err["error"] == "ParseError" and err["line"] == 6


def test_check_reports_gldim():
    out = json.loads(run("check", "a3rel.pres").stdout)
    assert out["gldim"] == 2 and out["dim"] == 5 and out["associativity_spot_check"]


def test_synth_text():
    res = run("synth", "three_cycle.pres", "--format", "text")
    rels = res.stdout.split("relations")[1].split()
    assert sorted(rels) == ["a*c", "b*a", "c*b"]


def test_form_positive_definite():
    out = json.loads(run("form", "a3rel.pres").stdout)
    assert out["quasi_cartan"] == [[2, -1, 1], [-1, 2, -1], [1, -1, 2]]
    assert out["leading_minors"] == [2, 3, 4] and out["positive_definite"]


def test_cut_apply():
    out = json.loads(run("cut", "--apply", "c", "three_cycle.pres").stdout)
    assert out["cut"] == ["c"]
    assert [a["id"] for a in out["presentation"]["quiver"]["arrows"]] == ["a", "b"]


def test_roll_to_tilted(tmp_path):
    res = run("roll", "d8.cplx", "--to-tilted", "--dot-dir", str(tmp_path))
    out = json.loads(res.stdout)
    assert res.returncode == 0
    assert out["first_tilted"] == 3 and len(out["steps"]) == 4
    assert sorted(os.listdir(tmp_path)) == ["B0.dot", "B1.dot", "B2.dot", "B3.dot"]


def test_output_is_deterministic():
    a = run("roll", "d8.cplx", "--steps", "2")
    b = run("roll", "d8.cplx", "--steps", "2")
    assert a.stdout == b.stdout and a.returncode == b.returncode == 0
