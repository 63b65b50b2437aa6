#!/usr/bin/env python3
"""Run the seeded counterexample searches for the product no-go claims.

Each target scans random factor pairs for a configuration that the
structural results rule out (an orthomodular separated product with two
non-Boolean factors, a minimal product admitting a compatible
orthocomplementation or satisfying the covering law with nontrivial
factors).  Any hit is printed with its replayable inputs and makes the
script exit nonzero.
"""

import argparse
import sys

from orthlab.search import SearchSpec, TARGETS, render_report, run_search


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200,
                    help="factor pairs per target (default 200)")
    ap.add_argument("--nmax", type=int, default=4,
                    help="largest factor state count (default 4)")
    ap.add_argument("--density", type=float, default=0.5,
                    help="orthogonality density (default 0.5)")
    ap.add_argument("--seed", type=int, default=1,
                    help="base seed (default 1)")
    ap.add_argument("--target", choices=sorted(TARGETS), action="append",
                    help="repeatable; default: every target")
    ap.add_argument("--full-report", action="store_true",
                    help="print the per-instance report, not just summaries")
    args = ap.parse_args()

    exit_code = 0
    for target in args.target or sorted(TARGETS):
        report = run_search(SearchSpec(target, args.count, nmax=args.nmax,
                                       density=args.density, seed=args.seed))
        if args.full_report:
            sys.stdout.write(render_report(report))
        print(f"{target}\tcount\t{len(report.instances)}"
              f"\thits\t{len(report.hits)}\tinvalid\t{report.invalid}")
        for h in report.hits:
            exit_code = 1
            print(f"  hit at instance {h.instance.index}"
                  f" (seed {h.instance.seed}): {h.instance.detail}")
            for tag, text in (("input1", h.input1), ("input2", h.input2)):
                for line in text.rstrip("\n").splitlines():
                    print(f"    {tag}\t{line}")
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
