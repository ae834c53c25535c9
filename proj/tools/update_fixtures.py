"""Rewrites fixtures/expected from the current brq build.

usage: update_fixtures.py BRQ_BINARY [FIXTURE_DIR]
"""
import json
import pathlib
import subprocess
import sys


def main():
    brq = sys.argv[1]
    root = pathlib.Path(sys.argv[2] if len(sys.argv) > 2 else pathlib.Path(__file__).parent.parent / "fixtures")
    manifest = json.loads((root / "manifest.json").read_text())
    for case in manifest["cases"]:
        args = [str(root / a[1:]) if a.startswith("@") else a for a in case["args"]]
        run = subprocess.run([brq, *args], capture_output=True)
        want = case.get("exit", 0)
        if run.returncode != want:
            sys.exit(f"{case['name']}: exit {run.returncode}, expected {want}")
        (root / case["expected"]).write_bytes(run.stdout)
        print(f"{case['name']}: {len(run.stdout)} bytes")


if __name__ == "__main__":
    main()
