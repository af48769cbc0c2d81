#!/usr/bin/env python3
"""Emit the CSV plot data behind the standard picture set.

Produces, in --outdir:
  spectrum_r_n6.csv      r-sweep of the N=6 spectrum at u=0 (all-real fan)
  sturmian_u_n{3,4,5,7}.csv   shift curves u(E) at r=0, both branches
  reality_u_n{5,7,11}.csv     u-sweeps at r=0 with reality intervals
  plot_template.py       minimal matplotlib template reading the CSVs

Usage: python scripts/figure_data.py [--outdir figdata]
"""

import argparse
import json
import os

from epspect import SweepSpec, run_sweep, sturmian_plotdata

PLOT_TEMPLATE = '''\
"""Template: plot the CSVs emitted by figure_data.py."""
import csv
import sys

import matplotlib.pyplot as plt

path = sys.argv[1]
with open(path, newline="") as fh:
    rows = list(csv.reader(fh))
header, body = rows[0], rows[1:]
xs = [float(r[0]) for r in body]
for k in range(1, len(header) - 1, 2):
    ys = [float(r[k]) if r[k] else float("nan") for r in body]
    plt.plot(xs, ys, ".", ms=2)
plt.xlabel(header[0])
plt.show()
'''


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="figdata")
    args = ap.parse_args()
    os.makedirs(args.outdir, exist_ok=True)

    def write(name, text):
        path = os.path.join(args.outdir, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        print("wrote", path)

    table = run_sweep(SweepSpec(n=6, swept="r", fixed=0.0, lo=-2.0, hi=2.0, count=201))
    write("spectrum_r_n6.csv", table.to_csv())

    e_grid = [-1.6 + 3.2 * k / 400 for k in range(401)]
    for n in (3, 4, 5, 7):
        parts = []
        for branch in ("u_of_E_plus", "u_of_E_minus"):
            t = sturmian_plotdata(n, branch, e_grid)
            parts.append(t.to_csv())
            if t.extrema:
                print(f"  n={n} {branch} extrema:", t.extrema)
        write(f"sturmian_u_n{n}.csv", "\n".join(parts))

    for n, span in ((5, 1.0), (7, 0.6), (11, 0.6)):
        spec = SweepSpec(n=n, swept="u", fixed=0.0, lo=-span, hi=span, count=241)
        table = run_sweep(spec)
        write(f"reality_u_n{n}.csv", table.to_csv())
        meta = {
            "reality_intervals": table.reality_intervals,
            "ep_markers": [c.u_star for c in table.ep_markers],
        }
        write(f"reality_u_n{n}.json", json.dumps(meta, indent=2))

    write("plot_template.py", PLOT_TEMPLATE)


if __name__ == "__main__":
    main()
