"""Driving the command line: fixtures, parsing, evaluation, reports.

Runs the installed entry point as a subprocess against a temporary
directory of model files, the same way a shell user would.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

CLI = [sys.executable, "-m", "qlprop"]


def run(*args, expect=0):
    cmd = CLI + list(args)
    print("$ qlprop " + " ".join(args))
    proc = subprocess.run(cmd, capture_output=True, text=True)
    out = (proc.stdout + proc.stderr).rstrip()
    for line in out.splitlines():
        print("  " + line)
    if proc.returncode != expect:
        raise SystemExit(f"expected exit {expect}, got {proc.returncode}")
    print()


with tempfile.TemporaryDirectory() as tmp:
    models = Path(tmp)
    run("fixtures", "--out", str(models))
    qbit = str(models / "m_qbit.json")
    sr = str(models / "m_sr.json")

    run("parse", "--lang", "ltq", "Ez+(x) |q Ez-(x)")
    run("parse", "--lang", "lx", "E(x) &", expect=1)

    run("eval", "--model", sr, "--state", "S1", "--object", "u2", "E(x)")
    run("eval", "--model", qbit, "--lang", "ltq", "--state", "Sx+",
        "--qtruth", "Ez+(x)")
    run("eval", "--model", qbit, "--lang", "prag", "--state", "Sz+",
        "|- Ez+(x)")

    run("props", "--model", sr, "--physical", "E(x) | F(x)")
    run("props", "--model", qbit, "--lang", "ltq", "--physical",
        "Ez+(x) |q Ez-(x)")

    run("check", "--model", qbit, "--suite", "qm", "--depth", "2")
    run("lattice", "--model", qbit, "--which", "LS",
        "--dot", str(models / "ls.dot"))
    dot = (models / "ls.dot").read_text()
    print(f"ls.dot written, {len(dot.splitlines())} lines")
