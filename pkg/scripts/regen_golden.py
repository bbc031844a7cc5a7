"""Regenerate docs/golden/<command>.json from configs/lambda.json."""

import contextlib
import io
import json
from pathlib import Path

from k3lat.cli import COMMANDS, main

ROOT = Path(__file__).resolve().parents[1]

for command in COMMANDS:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main([command, str(ROOT / "configs" / "lambda.json"), "--json"])
    out = ROOT / "docs" / "golden" / f"{command}.json"
    out.write_text(json.dumps(json.loads(buf.getvalue()), indent=2) + "\n")
    print(f"{command:<14} exit {code} -> {out.relative_to(ROOT)}")
