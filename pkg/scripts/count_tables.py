"""Dump P_r(n) and the punctual counts as CSV, one row per (r, n).

    python3 scripts/count_tables.py --r 2 3 4 --n-max 10 > counts.csv
"""
import argparse
import csv
import sys

from mdpart.partitions import count_table


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["r", "n", "P", "P_punctual"])
    for r in args.r:
        plain = count_table(r, args.n_max, False, args.threads)
        punct = count_table(r, args.n_max, True, args.threads)
        for n, (a, b) in enumerate(zip(plain, punct)):
            w.writerow([r, n, a, b])


if __name__ == "__main__":
    main()
