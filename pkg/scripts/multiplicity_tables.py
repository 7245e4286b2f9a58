"""Print alpha/beta multiplicity tables for a family over a range of n and k.

Each table is checked against its dimension identity (sum of m f^lam f^mu
equals the family size) and, with --verify-routes, against every
independent route.

    python scripts/multiplicity_tables.py H --n-max 5 --verify-routes
"""

import argparse

from permreps.combinatorics import partitions_of
from permreps.multiplicities import FAMILIES, family_size, multiplicity_table


def format_table(table):
    parts = partitions_of(table.n)
    names = [str(p) for p in parts]
    width = max(len(s) for s in names) + 1
    lines = [" " * width + "".join(s.rjust(width) for s in names) + "  | beta"]
    for a, s in zip(parts, names):
        row = "".join(str(table.alpha[(a, b)]).rjust(width) for b in parts)
        lines.append(s.rjust(width) + row + f"  | {table.beta[a]}")
    return "\n".join(lines)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("family", choices=FAMILIES)
    parser.add_argument("--n-max", type=int, default=4)
    parser.add_argument("--r", type=int, default=3, help="modulus for Y and Cr")
    parser.add_argument("--verify-routes", action="store_true")
    args = parser.parse_args()

    r = args.r if args.family in ("Y", "Cr") else None
    for n in range(1, args.n_max + 1):
        ks = range(n + 1) if args.family in ("H", "X", "Y") else [None]
        for k in ks:
            table = multiplicity_table(args.family, n, k, r, verify_routes=args.verify_routes)
            size = family_size(args.family, n, k, r)
            status = "ok" if table.dimension_sum() == size else "MISMATCH"
            print(f"{args.family} n={n} k={k} r={r}: size {size}, dimension identity {status}")
            print(format_table(table))
            print()


if __name__ == "__main__":
    main()
