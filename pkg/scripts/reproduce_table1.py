"""Recompute the published F_{1/2} comparison table and print it.

Same as ``fdzeta reproduce-table1``; exits 3 if any row misses its tolerance.
"""
import sys

from fdzeta.cli import main

if __name__ == "__main__":
    sys.exit(main(["reproduce-table1", *sys.argv[1:]]))
