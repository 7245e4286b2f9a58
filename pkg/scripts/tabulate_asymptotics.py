"""Write a CSV series of sum 1/|C|, F_k and squared cosines over a range of n.

    python scripts/tabulate_asymptotics.py --n-max 40 --k 1 2 --out asymptotics.csv
"""

import argparse
import csv
import sys

from permreps.asymptotics import render, report


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--family", default="H", choices=["H", "X"])
    parser.add_argument("--n-min", type=int, default=1)
    parser.add_argument("--n-max", type=int, default=40)
    parser.add_argument("--k", type=int, nargs="+", default=[1, 2])
    parser.add_argument("--with-top", action="store_true", help="also tabulate k = n - 1")
    parser.add_argument("--out", help="CSV path (default stdout)")
    args = parser.parse_args()

    out = open(args.out, "w", newline="") if args.out else sys.stdout
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["family", "n", "k", "sum_inverse_class_sizes", "f_k", "cosine_sq", "cosine_sq_exact"])
    for n in range(args.n_min, args.n_max + 1):
        ks = [k for k in args.k if k <= n]
        if args.with_top and n > 1:
            ks.append(n - 1)
        for k in sorted(set(ks)):
            rep = report(args.family, n, k)
            writer.writerow([args.family, n, k, render(rep.sum_inverse_class_sizes), render(rep.f_k),
                             render(rep.cosine_sq), str(rep.cosine_sq)])
    if args.out:
        out.close()


if __name__ == "__main__":
    main()
