#!/usr/bin/env python3
"""Survey exceptional points across lattice dimensions.

Locates and certifies every r = 0 exceptional point for a range of N and
prints one row per certificate (u*, E*, multiplicities, chain residual).
Optionally dumps the certificates as JSON for downstream plotting.

Usage: python scripts/ep_survey.py [--n-max 11] [--out eps.json]
"""

import argparse
import json
import time

from epspect import DegenerateDiscriminant, locate_eps


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=11)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    all_certs = {}
    print(f"{'N':>3} {'u*':>22} {'E*':>22} {'alg':>4} {'geo':>4} {'residual':>10}")
    for n in range(args.n_min, args.n_max + 1):
        t0 = time.time()
        try:
            certs = locate_eps(n)
        except DegenerateDiscriminant as exc:
            print(f"{n:>3} degenerate discriminant: {exc}")
            continue
        for c in certs:
            print(
                f"{n:>3} {c.u_star:>22.16f} {c.e_star.real:>22.16f}"
                f" {c.algebraic_multiplicity:>4} {c.geometric_multiplicity:>4}"
                f" {c.residual:>10.2e}"
            )
        print(f"    ({len(certs)} certificates in {time.time() - t0:.2f}s)")
        all_certs[n] = [c.to_json() for c in certs]

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(all_certs, fh, indent=2)
        print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
