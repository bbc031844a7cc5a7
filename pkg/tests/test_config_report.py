import json

import pytest

from k3lat.config import InvalidGram, MalformedConfig, NameMismatch, load_config, parse_class, parse_config
from k3lat.report import Check, Report

LAMBDA = {"schema": 1, "gram": [[2, 5], [5, 4]], "basis_names": ["L", "H"], "ample": "L",
          "polarizations": ["H", "5L-H"]}


def test_parse_class():
    assert parse_class("5L-H", ["L", "H"]) == (5, -1)
    assert parse_class("-L + 2H", ["L", "H"]) == (-1, 2)
    assert parse_class("L+L", ["L", "H"]) == (2, 0)
    for bad in ("", "5X", "L H", "2*"):
        with pytest.raises(NameMismatch):
            parse_class(bad, ["L", "H"])


def test_bundled_config():
    from importlib.resources import files

    cfg = load_config(files("k3lat") / "data" / "lambda.json")
    assert cfg.gram == [[2, 5], [5, 4]]
    assert cfg.ample == (1, 0) and cfg.polarizations == [(0, 1), (5, -1)]


def test_coordinate_lists():
    cfg = parse_config(json.dumps(dict(LAMBDA, ample=[1, 0], polarizations=[[0, 1]])))
    assert cfg.ample == (1, 0) and cfg.polarizations == [(0, 1)]


@pytest.mark.parametrize(
    "text,exc",
    [
        ("", MalformedConfig),
        ("[]", MalformedConfig),
        (json.dumps(dict(LAMBDA, extra=1)), MalformedConfig),
        (json.dumps(dict(LAMBDA, schema=2)), MalformedConfig),
        (json.dumps({k: v for k, v in LAMBDA.items() if k != "gram"}), MalformedConfig),
        (json.dumps(dict(LAMBDA, gram=[[2, 5], [4, 4]])), InvalidGram),
        (json.dumps(dict(LAMBDA, gram=[[2, 5]])), InvalidGram),
        (json.dumps(dict(LAMBDA, basis_names=["L"])), NameMismatch),
        (json.dumps(dict(LAMBDA, ample="Q")), NameMismatch),
        (json.dumps(dict(LAMBDA, ample=[1, 0, 0])), NameMismatch),
        (json.dumps(dict(LAMBDA, orbit_count=0)), MalformedConfig),
    ],
)
def test_config_errors(text, exc):
    with pytest.raises(exc):
        parse_config(text)
    assert exc.exit_code == 65


def test_report_roundtrip_and_exit():
    r = Report("x")
    r.add(Check("a", "first", "pass", "claim:a", {"v": [1, 2]}))
    assert r.exit_code == 0
    r.add(Check("b", "second", "skipped"))
    assert r.exit_code == 0
    r.add(Check("c", "third", "inconclusive"))
    assert r.exit_code == 2
    r.add(Check("d", "fourth", "fail"))
    assert r.exit_code == 1
    assert Report.from_json(r.to_json()) == r
    with pytest.raises(ValueError):
        r.add(Check("a", "dup", "pass"))
    with pytest.raises(ValueError):
        Check("z", "bad", "maybe")
