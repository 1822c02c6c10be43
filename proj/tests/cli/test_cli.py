#!/usr/bin/env python3
"""End-to-end checks of the qrac command line: output values and exit codes."""

import json
import math
import subprocess
import sys
import tempfile
from pathlib import Path

QRAC = str(Path(sys.argv[1]).resolve())
FAILURES = []


def run(*args, cwd=None):
    return subprocess.run([QRAC, *args], capture_output=True, text=True, cwd=cwd)


def check(name, condition, extra=""):
    if condition:
        print(f"ok   {name}")
    else:
        FAILURES.append(name)
        print(f"FAIL {name} {extra}")


def main():
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)

        # eval on builtins
        r = run("eval", "--builtin", "chuang3")
        doc = json.loads(r.stdout)
        check("eval chuang3 exit", r.returncode == 0)
        check("eval chuang3 value", abs(doc["worst_case_p"] - 0.788675135) < 1e-8)

        r = run("eval", "--builtin", "ambainis2", "--csv", str(tmp / "cells.csv"))
        doc = json.loads(r.stdout)
        check("eval ambainis2 value", abs(doc["worst_case_p"] - 0.853553391) < 1e-8)
        lines = (tmp / "cells.csv").read_text().strip().splitlines()
        check("eval csv table", lines[0] == "x,bit,probability" and len(lines) == 9)

        r = run("eval", "--builtin", "example3")
        doc = json.loads(r.stdout)
        check("eval example3 capped", doc["worst_case_p"] <= 0.5 + 1e-9)

        r = run("eval", "--builtin", "hinry7")
        doc = json.loads(r.stdout)
        check("eval hinry7 value", abs(doc["worst_case_p"] - (9 + 2 * math.sqrt(3)) / 23) < 1e-6)

        # full precision flag
        r = run("--full-precision", "eval", "--builtin", "ambainis2")
        doc = json.loads(r.stdout)
        check("full precision digits", abs(doc["worst_case_p"] - 0.8535533905932737) < 1e-15)

        # eval error paths
        r = run("eval", "--file", str(tmp / "missing.json"))
        check("eval missing file exit 2", r.returncode == 2)

        r = run("eval", "--builtin", "unknown-name")
        check("eval unknown builtin exit 2", r.returncode == 2)

        # structurally fine but invariant-violating scheme file -> exit 3
        bad = tmp / "bad.json"
        r = run("optimize", "--n", "2", "--m", "1", "--restarts", "2", "--max-iters", "50",
                "--reweight-rounds", "2", "--seed", "1", "--out", str(tmp / "opt2"), cwd=tmp)
        check("optimize exit", r.returncode == 0)
        with open(tmp / "opt2.scheme.json") as f:
            doc = json.load(f)
        doc["states"]["00"]["amplitudes"][0] = [0.5, 0.0]
        doc["states"]["00"]["amplitudes"][1] = [0.5, 0.0]
        bad.write_text(json.dumps(doc))
        r = run("eval", "--file", str(bad))
        check("eval invariant violation exit 3", r.returncode == 3, r.stderr)

        malformed = tmp / "malformed.json"
        malformed.write_text("{ not json")
        r = run("eval", "--file", str(malformed))
        check("eval malformed exit 2", r.returncode == 2)

        # nogo
        r = run("nogo", "--builtin", "example3", "--claimed-p", "0.55")
        doc = json.loads(r.stdout)
        check("nogo exit", r.returncode == 0)
        check("nogo refuted", doc["status"] == "refuted" and doc["violated"] is not None)
        check("nogo slack", doc["violated"]["slack"] <= 1e-12)
        check("nogo counting", doc["counting"]["max_regions"] == 15
              and doc["counting"]["required_regions"] == 16
              and doc["counting"]["impossible"] is True)

        r = run("nogo", "--builtin", "example3", "--claimed-p", "0.4")
        check("nogo claimed-p too small exit 2", r.returncode == 2)

        # regions
        r = run("regions", "--k", "4", "--d", "3")
        check("regions 4 3", json.loads(r.stdout)["max_regions"] == 15)
        r = run("regions", "--k", "16", "--d", "15")
        check("regions 16 15", json.loads(r.stdout)["max_regions"] == 65535)
        r = run("regions", "--k", "200", "--d", "100")
        check("regions overflow exit 2", r.returncode == 2)
        r = run("regions", "--from-scheme", "chuang3")
        doc = json.loads(r.stdout)
        check("regions chuang3 realized", doc["realized"] == 8 and doc["max_regions"] == 8)

        # optimize determinism: same seed twice -> byte-identical outputs
        for tag in ("a", "b"):
            r = run("optimize", "--n", "3", "--m", "1", "--seed", "7", "--restarts", "3",
                    "--max-iters", "80", "--reweight-rounds", "3",
                    "--out", str(tmp / f"det_{tag}"), cwd=tmp)
            check(f"optimize det {tag} exit", r.returncode == 0)
        for ext in (".scheme.json", ".report.json", ".trace.csv"):
            check(f"optimize deterministic {ext}",
                  (tmp / f"det_a{ext}").read_bytes() == (tmp / f"det_b{ext}").read_bytes())

        # optimize output is loadable and its report matches
        r = run("eval", "--file", str(tmp / "det_a.scheme.json"))
        doc = json.loads(r.stdout)
        with open(tmp / "det_a.report.json") as f:
            saved = json.load(f)
        check("optimize report round-trip",
              abs(doc["worst_case_p"] - saved["worst_case_p"]) < 1e-9)

        # demos
        r = run("demo", "hinry7")
        check("demo hinry7", r.returncode == 0 and "0.541917462" in r.stdout)
        r = run("demo", "nayak")
        check("demo nayak", r.returncode == 0 and "qubits_per_bit" in r.stdout)
        r = run("demo", "example3")
        check("demo example3 exit", r.returncode == 0)
        check("demo example3 naive vs truth",
              "naive claim" in r.stdout and "worst_case_p" in r.stdout)
        r = run("demo", "unknown")
        check("demo unknown exit 2", r.returncode == 2)

        # usage
        r = run("frobnicate")
        check("unknown subcommand exit 2", r.returncode == 2)
        r = run("--help")
        check("help exit 0", r.returncode == 0)

    print(f"{len(FAILURES)} failures")
    return 1 if FAILURES else 0


if __name__ == "__main__":
    sys.exit(main())
