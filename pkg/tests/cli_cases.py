"""Golden-file cases for the command-line interface."""

import shlex
import subprocess
import sys
from pathlib import Path

TESTS = Path(__file__).resolve().parent
GOLDEN = TESTS / "golden"


def load_cases():
    cases = []
    for line in (GOLDEN / "cases.txt").read_text(encoding="utf-8").splitlines():
        if line.strip() and not line.startswith("#"):
            name, args = (part.strip() for part in line.split("|", 1))
            cases.append((name, shlex.split(args)))
    return cases


def run_case(args):
    """Run the CLI in a fresh interpreter; returns the transcript as bytes."""
    proc = subprocess.run([sys.executable, "-m", "symnash", *args], cwd=TESTS,
                          capture_output=True)
    return (b"exit: %d\n--- stdout\n" % proc.returncode + proc.stdout
            + b"--- stderr\n" + proc.stderr)


def golden_path(name):
    return GOLDEN / f"{name}.out"


if __name__ == "__main__":
    # regenerate every golden file; review the diff before committing
    for name, args in load_cases():
        golden_path(name).write_bytes(run_case(args))
        print("wrote", golden_path(name).name)
