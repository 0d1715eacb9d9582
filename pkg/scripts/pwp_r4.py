"""Compare punctual solid-partition counts with the conjectured product.

    python3 scripts/pwp_r4.py --order 12 --threads 4
"""
import argparse
import time

from mdpart.moduli import check_PWP
from mdpart.partitions import partition_series


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, default=4)
    ap.add_argument("--order", type=int, default=10)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    def counter(r, order, punctual):
        return partition_series(r, order, punctual, workers=args.threads)

    t0 = time.perf_counter()
    rep = check_PWP(args.r, args.order, counter=counter)
    print(f"{'n':>3} {'punctual':>12} {'product':>12} {'diff':>8}")
    for n, (lhs, rhs) in enumerate(rep.pairs):
        lhs, rhs = int(lhs), int(rhs)
        print(f"{n:>3} {lhs:>12} {rhs:>12} {lhs - rhs:>8}")
    print(f"verdict: {rep.verdict}  first mismatch: {rep.first_mismatch}")
    print(f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
