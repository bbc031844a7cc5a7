import json
import subprocess
import sys
from pathlib import Path

import pytest

from k3lat.cli import main
from oracles import matpow

ROOT = Path(__file__).resolve().parents[1]
CONFIGS = ROOT / "configs"
GOLDEN = ROOT / "docs" / "golden"


def run_json(capsys, *args):
    code = main([*args, "--json"])
    return code, json.loads(capsys.readouterr().out)


def test_verify_paper_passes(capsys):
    code, rep = run_json(capsys, "verify-paper", str(CONFIGS / "lambda.json"))
    assert code == 0
    assert all(c["status"] == "pass" for c in rep["checks"])
    assert rep["checks"][-1]["id"] == "headline"


def test_perturbed_fails_on_discriminant_first(capsys):
    code, rep = run_json(capsys, "verify-paper", str(CONFIGS / "perturbed.json"))
    assert code == 1
    first_fail = next(c for c in rep["checks"] if c["status"] == "fail")
    assert first_fail["id"] == "discriminant"
    assert first_fail["data"]["abs_det"] == 41
    assert not any(c["status"] == "pass" and c["id"] == "headline" for c in rep["checks"])


def test_no_polarizations_skips(capsys):
    code, rep = run_json(capsys, "verify-paper", str(CONFIGS / "no_polarizations.json"))
    statuses = {c["id"]: c["status"] for c in rep["checks"]}
    assert statuses["very-ample"] == "skipped" and statuses["infinite-order"] == "skipped"
    assert statuses["rational-curves"] == "pass"
    assert code == 0


def test_curves_rows(capsys):
    code, rep = run_json(capsys, "curves", str(CONFIGS / "lambda.json"))
    rows = rep["checks"][0]["data"]["rows"]
    assert code == 0
    assert [(r[0], r[2]) for r in rows] == [([-1, 2], 8), ([9, -2], 8)]


def test_dynamics_power(capsys):
    code, rep = run_json(capsys, "dynamics", str(CONFIGS / "lambda.json"), "--power", "3")
    data = rep["checks"][0]["data"]
    assert data["matrix_power"] == matpow([[360, 19, 36], [-19, -1, -2], [0, 0, 1]], 3)


@pytest.mark.parametrize("command", ["info", "curves", "cones", "involution", "dynamics", "product", "verify-paper"])
def test_golden(capsys, command):
    code, rep = run_json(capsys, command, str(CONFIGS / "lambda.json"))
    assert code == 0
    assert rep == json.loads((GOLDEN / f"{command}.json").read_text())


def test_text_output(capsys):
    assert main(["cones", str(CONFIGS / "lambda.json")]) == 0
    out = capsys.readouterr().out
    assert "37L-8H" in out and "PASS" in out


def test_usage_errors(capsys):
    assert main(["bogus", "x.json"]) == 64
    assert main(["info", str(CONFIGS / "lambda.json"), "--frobnicate"]) == 64
    assert main(["dynamics", str(CONFIGS / "lambda.json"), "--power", "0"]) == 64
    assert main([]) == 64


def test_config_errors(tmp_path, capsys):
    empty = tmp_path / "empty.json"
    empty.write_text("")
    assert main(["info", str(empty)]) == 65
    rank3 = tmp_path / "rank3.json"
    rank3.write_text(json.dumps({"gram": [[2, 0, 0], [0, -2, 0], [0, 0, -2]], "basis_names": ["a", "b", "c"],
                                 "ample": "a"}))
    assert main(["info", str(rank3)]) == 65
    assert "rank" in capsys.readouterr().err
    odd = tmp_path / "odd.json"
    odd.write_text(json.dumps({"gram": [[2, 5], [5, 3]], "basis_names": ["L", "H"], "ample": "L"}))
    assert main(["verify-paper", str(odd)]) == 65
    assert main(["info", str(tmp_path / "missing.json")]) == 65


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "k3lat.cli", "info", str(CONFIGS / "lambda.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "abs_det: 17" in proc.stdout


@pytest.mark.parametrize("config", ["lambda.json", "perturbed.json", "no_polarizations.json"])
def test_reports_match_schema(capsys, config):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads((ROOT / "docs" / "report.schema.json").read_text())
    _, rep = run_json(capsys, "verify-paper", str(CONFIGS / config))
    jsonschema.validate(rep, schema)


@pytest.mark.parametrize("script,args", [("orbit_growth.py", ["-n", "4"]),
                                         ("symbolic_family.py", ["--m-max", "8"]),
                                         ("replay.py", [])])
def test_scripts_run(script, args):
    proc = subprocess.run([sys.executable, str(ROOT / "scripts" / script), *args], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert "MISMATCH" not in proc.stdout
