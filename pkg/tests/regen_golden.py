"""Rewrite tests/golden from the current CLI.  Review the diff before committing."""

import os

from cli_cases import CASES, golden_path, golden_text, run

if __name__ == "__main__":
    os.makedirs(os.path.dirname(golden_path("x")), exist_ok=True)
    for name, argv, expected in CASES:
        code, out, err = run(argv)
        if code != expected:
            raise SystemExit(f"{name}: exit {code}, expected {expected}\n{err}")
        with open(golden_path(name), "w", encoding="utf-8", newline="") as fh:
            fh.write(golden_text(code, out, err))
        print(f"{name}: exit {code}")
