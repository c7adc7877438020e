#!/usr/bin/env python3
"""Run the full CLI verification suite over a battery of job configurations.

Each configuration exercises a different coefficient family and action; the
reports are written to the given output directory (default: ./verification).

Usage: python3 scripts/run_verification.py [--seed N] [--outdir DIR]
"""

import argparse
import pathlib
import sys

from skewhecke.cli import main as cli_main

CONFIGS = {
    "classical_s3": """\
field = rationals
group = symmetric(3)
subgroup = (1 2)
algebra = scalar
action = trivial
""",
    "classical_s4_d4": """\
field = rationals
group = symmetric(4)
subgroup = (1 2 3 4), (1 3)
algebra = scalar
action = trivial
""",
    "functions_s3": """\
field = rationals
group = symmetric(3)
subgroup = (1 2)
algebra = functions
action = left_translation
""",
    "group_algebra_conjugation": """\
field = rationals
group = symmetric(3)
subgroup = (1 2)
algebra = group(self)
action = conjugation
""",
    "polynomial_s3": """\
field = rationals
group = symmetric(3)
subgroup = (1 2)
algebra = polynomial(3)
action = permute_variables
degree_cap = 2
""",
    "functions_s3_gf5": """\
field = prime_field(5)
group = symmetric(3)
subgroup = (1 2)
algebra = functions
action = left_translation
""",
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--outdir", default="verification")
    args = parser.parse_args()
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    failed = []
    for name, text in CONFIGS.items():
        cfg_path = outdir / f"{name}.cfg"
        cfg_path.write_text(text)
        report_path = outdir / f"{name}.txt"
        code = cli_main([
            "verify", "all",
            "--config", str(cfg_path),
            "--seed", str(args.seed),
            "--out", str(report_path),
        ])
        status = "ok" if code == 0 else f"FAILED (exit {code})"
        print(f"{name}: {status} -> {report_path}")
        if code != 0:
            failed.append(name)
    if failed:
        print("failures: " + ", ".join(failed))
        return 1
    print("all configurations verified")
    return 0


if __name__ == "__main__":
    sys.exit(main())
