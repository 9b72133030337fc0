#!/usr/bin/env python3
"""Exit-code and output contract tests for the shiftcurves CLI.

Exit codes: 0 pass, 1 verification refuted, 2 bad input.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1]

failures = []


def run(*args, expect):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        failures.append(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
    return proc


def main():
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        fam4 = tmp / "m4.json"
        fam3 = tmp / "m3_stretched.json"

        run("generate", "--m", "4", "--segments", "4", "--out", str(fam4), expect=0)
        run("generate", "--m", "3", "--segments", "3", "--out", str(fam3), expect=0)
        run("generate", "--m", "1", "--segments", "4", "--out", str(tmp / "x.json"), expect=2)
        run("generate", "--m", "4", "--segments", "5", "--out", str(tmp / "x.json"), expect=2)
        # K below the 12 N^2 bound is a constraint violation, not a refutation.
        run("generate", "--m", "3", "--segments", "3", "--K", "10", "--out",
            str(tmp / "x.json"), expect=2)

        data = json.loads(fam3.read_text())
        if data["K"] != "109":
            failures.append(f"default stretch base is {data['K']}, expected 109 (12*9+1)")

        run("verify", "--in", str(fam4), expect=0)
        run("verify", "--m", "4", "--segments", "4", "--profile", "figure", expect=0)
        run("verify", "--m", "5", "--segments", "3", expect=0)
        run("verify", "--m", "4", "--segments", "4", "--chi", expect=0)

        # One corrupted coordinate must refute, not error out.
        broken = json.loads(fam4.read_text())
        broken["curves"][0]["vertices"][2][0] = "19"
        bad = tmp / "corrupted.json"
        bad.write_text(json.dumps(broken))
        run("verify", "--in", str(bad), expect=1)

        truncated = tmp / "truncated.json"
        truncated.write_text(fam4.read_text()[: len(fam4.read_text()) // 2])
        run("verify", "--in", str(truncated), expect=2)
        run("verify", expect=2)

        svg = tmp / "m4.svg"
        run("render", "--in", str(fam4), "--out", str(svg), expect=0)
        if "<svg" not in svg.read_text():
            failures.append("render did not produce an SVG")
        run("render", "--in", str(fam3), "--out", str(tmp / "m3.svg"),
            "--x-compress", "signed-log", expect=0)
        run("render", "--in", str(fam4), "--out", str(tmp / "y.svg"),
            "--x-compress", "nonsense", expect=2)

        dot = run("graph", "--m", "3", "--format", "dot", expect=0)
        if '"(1,2)" -- "(2,3)"' not in dot.stdout:
            failures.append("dot export is missing the H_3 edge")
        gj = run("graph", "--m", "5", "--format", "json", expect=0)
        if len(json.loads(gj.stdout)["edges"]) != 10:
            failures.append("H_5 JSON export should have C(5,3) = 10 edges")
        run("graph", "--m", "1", "--format", "dot", expect=2)

        chi = run("chi", "--m", "5", expect=0)
        if "= 3" not in chi.stdout:
            failures.append(f"chi(H_5) output unexpected: {chi.stdout!r}")

        verred = run("verify", "--m", "3", "--segments", "4", "--json", "-", expect=0)
        if '"pass": true' not in verred.stdout:
            failures.append("verify --json - did not emit a JSON report")

    if failures:
        print("\n".join(failures))
        sys.exit(1)
    print(f"cli contract ok ({CLI})")


if __name__ == "__main__":
    main()
