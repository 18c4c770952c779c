#!/usr/bin/env python3
"""Run every verification claim and print a one-line summary per claim.

Usage:
    python scripts/run_full_suite.py [--max-n N] [--jobs J] [--seed S] [--out DIR]

With --out, each claim additionally gets a JSON-lines report file in DIR.
The process exit code is the worst over all claims (0 clean, 2 on a
counterexample, 3 on a budget refusal).
"""
import argparse
import json
import pathlib
import sys
import time

from schubpat.verify import CLAIMS, RunConfig, exit_code, run_claim


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--seed", type=int, default=2718)
    parser.add_argument("--out", type=pathlib.Path, default=None)
    args = parser.parse_args()

    config = RunConfig(max_n=args.max_n, jobs=args.jobs, seed=args.seed)
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)

    worst = 0
    for name in sorted(CLAIMS):
        start = time.monotonic()
        reports = list(run_claim(name, config))
        elapsed = time.monotonic() - start
        code = exit_code(reports)
        worst = max(worst, code) if code != 2 else 2
        counts = {}
        for r in reports:
            counts[r.verdict] = counts.get(r.verdict, 0) + 1
        summary = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
        print(f"{name:9s} exit={code} {elapsed:6.1f}s  {summary}")
        for r in reports:
            if r.verdict == "fails":
                print(f"  counterexample {r.subject}: {r.witness}")
        if args.out:
            path = args.out / f"{name}.jsonl"
            with path.open("w", encoding="utf-8") as fh:
                for r in reports:
                    fh.write(json.dumps(r.as_dict(), separators=(",", ":")) + "\n")
    return worst


if __name__ == "__main__":
    sys.exit(main())
