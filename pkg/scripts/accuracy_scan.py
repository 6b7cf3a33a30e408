"""Relative error of the closed form against quadrature over k and eta.

Writes a CSV with one row per (k, eta) and prints the worst error per k
inside a few eta windows.

    python scripts/accuracy_scan.py --out scan.csv
"""
import argparse
import csv
import sys

import numpy as np

from fdzeta.errors import NumericalFailure
from fdzeta.fd_core import fd_closed_form
from fdzeta.model import MAX_ORDER
from fdzeta.oracle import fd_quadrature

WINDOWS = ((-6.0, -2.0), (-2.0, 0.0), (0.0, 2.0), (2.0, 5.0), (5.0, 8.0))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--eta-min", type=float, default=-6.0)
    ap.add_argument("--eta-max", type=float, default=8.0)
    ap.add_argument("--step", type=float, default=0.25)
    ap.add_argument("--out", help="CSV output path")
    args = ap.parse_args(argv)

    etas = np.arange(args.eta_min, args.eta_max + 1e-9, args.step)
    rows = []
    for k in range(1, MAX_ORDER + 1):
        for eta in etas:
            eta = float(eta)
            ref = fd_quadrature(k, eta).value
            try:
                approx = fd_closed_form(k, eta).value
            except NumericalFailure:
                approx = float("nan")
            rows.append((k, eta, approx, ref, 100 * abs(approx - ref) / ref))

    if args.out:
        with open(args.out, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(("k", "eta", "closed_form", "quadrature", "err_pct"))
            w.writerows(rows)

    head = "k  " + "  ".join(f"({lo:g},{hi:g}]".rjust(10) for lo, hi in WINDOWS)
    print("worst relative error % per eta window")
    print(head)
    for k in range(1, MAX_ORDER + 1):
        cells = []
        for lo, hi in WINDOWS:
            errs = [r[4] for r in rows if r[0] == k and lo < r[1] <= hi]
            cells.append(f"{max(errs):10.3f}" if errs else " " * 10)
        print(f"{k}  " + "  ".join(cells))
    return 0


if __name__ == "__main__":
    sys.exit(main())
