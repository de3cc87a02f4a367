"""Golden-file case table for the CLI, shared by tests and the regenerator.

Each case is (name, argv, expected exit code); "{fix}" in argv expands to
the fixtures directory. Regenerate the goldens after an intentional
output change with:

    python3 tests/golden_cases.py --write
"""

from __future__ import annotations

import os
import subprocess
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "fixtures")
GOLDENS = os.path.join(HERE, "goldens")

CASES: list[tuple[str, list[str], int]] = [
    ("membership_member",
     ["membership", "{fix}/member.json", "--A", "0.5", "--B", "0.0",
      "--m", "1", "--grid", "--radii", "0.5,0.9,0.99", "--angles", "16"], 0),
    ("membership_nonmember",
     ["membership", "{fix}/nonmember.json", "--A", "0.5", "--B", "0.0",
      "--m", "1"], 1),
    ("apply_im",
     ["apply", "{fix}/member.json", "--op", "Im", "--param", "2"], 0),
    ("apply_h1_oracle",
     ["apply", "{fix}/member.json", "--op", "H1", "--param", "3.0",
      "--oracle-check", "0.5,0.125"], 0),
    ("apply_h1_alt",
     ["apply", "{fix}/member.json", "--op", "H1", "--param", "3.0",
      "--alt-coeff", "--oracle-check", "0.5,0.125"], 0),
    ("apply_h2",
     ["apply", "{fix}/member.json", "--op", "H2", "--param", "2.0"], 0),
    ("extreme",
     ["extreme", "--n", "3", "--A", "0.2", "--B", "-1.0", "--m", "1",
      "--k", "2", "--w", "0.1,0.0"], 0),
    ("decompose",
     ["decompose", "{fix}/member.json", "--A", "0.5", "--B", "0.0",
      "--m", "1"], 0),
    ("recompose",
     ["recompose", "{fix}/weights.json", "--A", "0.5", "--B", "0.0",
      "--m", "1", "--k", "1"], 0),
    ("combine",
     ["combine", "{fix}/member.json", "{fix}/member2.json",
      "--weights", "0.25,0.75", "--A", "0.5", "--B", "0.0", "--m", "1"], 0),
    ("sweep",
     ["sweep", "{fix}/sweepspec.json"], 0),
    ("gen_random",
     ["gen-random", "--seed", "20240817", "--A", "0.6", "--B", "0.1",
      "--m", "2", "--k", "2", "--nmax", "12", "--target-frac", "0.75"], 0),
]


def expand(argv: list[str]) -> list[str]:
    return [a.replace("{fix}", FIXTURES) for a in argv]


def golden_path(name: str) -> str:
    return os.path.join(GOLDENS, name + ".golden")


def run_case(argv: list[str]) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "fpgft", *expand(argv)],
                          capture_output=True)


def _write_all() -> int:
    os.makedirs(GOLDENS, exist_ok=True)
    for name, argv, want in CASES:
        proc = run_case(argv)
        if proc.returncode != want:
            print(f"{name}: exit {proc.returncode} != {want}; stderr:\n"
                  f"{proc.stderr.decode()}", file=sys.stderr)
            return 1
        with open(golden_path(name), "wb") as fh:
            fh.write(proc.stdout)
        print(f"wrote {golden_path(name)} ({len(proc.stdout)} bytes)")
    return 0


if __name__ == "__main__":
    if "--write" not in sys.argv:
        print(__doc__)
        sys.exit(0)
    sys.exit(_write_all())
