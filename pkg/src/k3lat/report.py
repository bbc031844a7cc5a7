"""Check reports and their JSON form."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

STATUSES = ("pass", "fail", "inconclusive", "skipped")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_CONFIG = 65


@dataclass
class Check:
    id: str
    description: str
    status: str
    anchor: str = ""
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass
class Report:
    command: str
    checks: list[Check] = field(default_factory=list)

    def add(self, check: Check) -> Check:
        if any(c.id == check.id for c in self.checks):
            raise ValueError(f"duplicate check id {check.id!r}")
        self.checks.append(check)
        return check

    @property
    def summary(self) -> dict:
        return {s: sum(1 for c in self.checks if c.status == s) for s in STATUSES}

    @property
    def exit_code(self) -> int:
        s = self.summary
        if s["fail"]:
            return EXIT_FAIL
        if s["inconclusive"]:
            return EXIT_INCONCLUSIVE
        return EXIT_PASS

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "command": self.command,
            "checks": [asdict(c) for c in self.checks],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, default=_jsonable)

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        return cls(d["command"], [Check(**c) for c in d["checks"]])

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def plain(obj):
    """Convert nested tuples and Fractions into JSON-native values."""
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else str(obj)
    if isinstance(obj, (list, tuple)):
        return [plain(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    return obj
