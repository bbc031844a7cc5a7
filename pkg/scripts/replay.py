"""Run the full check pipeline on a config and print the report.

    python3 scripts/replay.py [configs/lambda.json] [--json]
"""

import sys
from pathlib import Path

from k3lat.cli import main

ROOT = Path(__file__).resolve().parents[1]

if __name__ == "__main__":
    args = sys.argv[1:]
    config = next((a for a in args if not a.startswith("--")), str(ROOT / "configs" / "lambda.json"))
    flags = [a for a in args if a.startswith("--")]
    sys.exit(main(["verify-paper", config, *flags]))
