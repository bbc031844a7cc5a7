"""JSON configuration: a rank-2 Gram matrix, basis names and named classes."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

SCHEMA_VERSION = 1
KNOWN_KEYS = {"schema", "gram", "basis_names", "ample", "polarizations", "search_degree_max", "orbit_count"}


class ConfigError(ValueError):
    exit_code = 65


class MalformedConfig(ConfigError):
    pass


class InvalidGram(ConfigError):
    pass


class NameMismatch(ConfigError):
    pass


_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*\*?\s*([A-Za-z_][A-Za-z0-9_']*)\s*")


def parse_class(expr: str, names: list[str]) -> tuple[int, ...]:
    """Parse an integer combination such as ``5L-H`` or ``-L + 2H``."""
    text = expr.strip()
    if not text:
        raise NameMismatch("empty class expression")
    coords = [0] * len(names)
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (not first and not m.group(1)):
            raise NameMismatch(f"cannot parse class expression {expr!r}")
        sign, num, name = m.groups()
        if name not in names:
            raise NameMismatch(f"unknown basis name {name!r} in {expr!r}")
        coeff = int(num) if num else 1
        coords[names.index(name)] += -coeff if sign == "-" else coeff
        pos = m.end()
        first = False
    return tuple(coords)


@dataclass
class Config:
    gram: list[list[int]]
    basis_names: list[str]
    ample: tuple[int, ...]
    polarizations: list[tuple[int, ...]] = field(default_factory=list)
    search_degree_max: int = 50
    orbit_count: int = 10
    ample_label: str = ""
    polarization_labels: list[str] = field(default_factory=list)


def _class(value, names, what):
    if isinstance(value, str):
        return parse_class(value, names), value.replace(" ", "")
    if isinstance(value, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        if len(value) != len(names):
            raise NameMismatch(f"{what} has {len(value)} coordinates, expected {len(names)}")
        return tuple(value), str(value)
    raise NameMismatch(f"{what} must be a class expression or a coordinate list")


def parse_config(text: str) -> Config:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedConfig(f"invalid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise MalformedConfig("config must be a JSON object")
    unknown = set(raw) - KNOWN_KEYS
    if unknown:
        raise MalformedConfig(f"unknown keys: {sorted(unknown)}")
    if raw.get("schema", SCHEMA_VERSION) != SCHEMA_VERSION:
        raise MalformedConfig(f"unsupported schema version {raw.get('schema')}")
    for key in ("gram", "basis_names", "ample"):
        if key not in raw:
            raise MalformedConfig(f"missing required key {key!r}")
    gram = raw["gram"]
    if (
        not isinstance(gram, list)
        or not gram
        or not all(isinstance(r, list) and len(r) == len(gram) for r in gram)
        or not all(isinstance(v, int) and not isinstance(v, bool) for r in gram for v in r)
    ):
        raise InvalidGram("gram must be a nonempty square integer matrix")
    n = len(gram)
    if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(n)):
        raise InvalidGram("gram must be symmetric")
    names = raw["basis_names"]
    if not isinstance(names, list) or not all(isinstance(s, str) and s for s in names):
        raise NameMismatch("basis_names must be a list of strings")
    if len(names) != n or len(set(names)) != n:
        raise NameMismatch("basis_names must be distinct and match the gram size")
    ample, ample_label = _class(raw["ample"], names, "ample")
    pols = raw.get("polarizations", [])
    if not isinstance(pols, list):
        raise MalformedConfig("polarizations must be a list")
    parsed = [_class(p, names, "polarization") for p in pols]
    sdm = raw.get("search_degree_max", 50)
    orb = raw.get("orbit_count", 10)
    for key, val in (("search_degree_max", sdm), ("orbit_count", orb)):
        if not isinstance(val, int) or isinstance(val, bool) or val < 1:
            raise MalformedConfig(f"{key} must be a positive integer")
    return Config(
        gram=[list(r) for r in gram],
        basis_names=list(names),
        ample=ample,
        polarizations=[p for p, _ in parsed],
        search_degree_max=sdm,
        orbit_count=orb,
        ample_label=ample_label,
        polarization_labels=[s for _, s in parsed],
    )


def load_config(path) -> Config:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MalformedConfig(f"cannot read {path}: {exc}") from None
    except UnicodeDecodeError:
        raise MalformedConfig(f"{path} is not UTF-8") from None
    return parse_config(text)
