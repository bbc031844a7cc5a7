"""Command line entry point: ``k3lat <command> <config.json> [options]``."""

from __future__ import annotations

import argparse
import json
import sys

from . import pipeline
from .config import ConfigError, load_config
from .lattice import LatticeError
from .report import EXIT_CONFIG, EXIT_USAGE, Report

COMMANDS = ("verify-paper",) + tuple(pipeline.COMMANDS)

_MARK = {"pass": "PASS", "fail": "FAIL", "inconclusive": "INCONCLUSIVE", "skipped": "SKIP"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="k3lat", description="Exact lattice checks for K3 surfaces of Picard rank 2.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("config", help="path to a JSON config")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--power", type=int, default=1, help="dynamics: report the N-th power of the composite")
    p.add_argument("--degree-max", type=int, default=None, help="root search degree bound")
    p.add_argument("--orbit", type=int, default=None, help="number of orbit classes")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    return p


def _fmt_value(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(", ", ": "))
    return str(v)


def render_text(report: Report) -> str:
    lines = [f"k3lat {report.command}"]
    width = max((len(c.id) for c in report.checks), default=0)
    for c in report.checks:
        anchor = f"  [{c.anchor}]" if c.anchor else ""
        lines.append(f"{_MARK[c.status]:<12} {c.id:<{width}}  {c.description}{anchor}")
        data = dict(c.data)
        rows = data.pop("rows", None)
        cols = data.pop("columns", None)
        if rows is not None:
            table = [[str(x) for x in cols]] + [[_fmt_value(x) for x in r] for r in rows]
            widths = [max(len(r[i]) for r in table) for i in range(len(table[0]))]
            for r in table:
                lines.append("    " + "  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
        for key, val in data.items():
            lines.append(f"    {key}: {_fmt_value(val)}")
    s = report.summary
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in s.items()))
    return "\n".join(lines)


def run(args: argparse.Namespace) -> Report:
    config = load_config(args.config)
    if args.degree_max is not None:
        config.search_degree_max = args.degree_max
    if args.orbit is not None:
        config.orbit_count = args.orbit
    if args.command == "verify-paper":
        return pipeline.verify_paper(config, seed=args.seed)
    return pipeline.COMMANDS[args.command](
        config, power=args.power, orbit=args.orbit, degree_max=args.degree_max
    )


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        for name in ("power", "degree_max", "orbit"):
            val = getattr(args, name)
            if val is not None and val < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")
    except UsageError as exc:
        print(f"k3lat: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = run(args)
    except (ConfigError, LatticeError) as exc:
        print(f"k3lat: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    print(report.to_json() if args.json else render_text(report))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
