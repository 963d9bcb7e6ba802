"""Regenerate the golden transcript used by the CLI determinism test.

Usage: python3 scripts/make_cli_golden.py
Writes tests/golden/cli_session.jsonl from the scripted session defined in
tests/test_acceptance.py. Rerun after any deliberate change to CLI output.
"""

import os
import sys
import tempfile

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(HERE)
sys.path.insert(0, os.path.join(ROOT, "tests"))

import pathlib

from test_acceptance import _run_scripted_session  # noqa: E402


def main():
    golden_dir = os.path.join(ROOT, "tests", "golden")
    os.makedirs(golden_dir, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        text = _run_scripted_session(pathlib.Path(tmp))
    path = os.path.join(golden_dir, "cli_session.jsonl")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {path} ({len(text)} bytes)")


if __name__ == "__main__":
    main()
