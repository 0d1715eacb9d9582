"""Reconstruct reduced partition functions over a grid of (r, g) and test q -> 1/q.

    python3 scripts/reduced_survey.py --order 16
"""
import argparse

from mdpart.moduli import FibrationData, check_conj_euler


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=16)
    ap.add_argument("--r", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--genus", type=int, nargs="+", default=[0, 1, 2, 3])
    ap.add_argument("--chi-s", type=int, default=1)
    args = ap.parse_args()

    for r in args.r:
        # solid partitions are slow; keep r >= 4 at a modest order
        order = args.order if r <= 3 else min(args.order, 10)
        for g in args.genus:
            rep = check_conj_euler(FibrationData(r, g, chi_S=args.chi_s), order)
            rf = rep.rational_function
            sym = rep.symmetry
            sym_txt = "-" if sym is None else f"symmetric={sym.symmetric} defect={sym.defect_power}"
            print(f"r={r} g={g} order={order}: {rep.verdict:<24} {rf if rf else '-'}  {sym_txt}")


if __name__ == "__main__":
    main()
