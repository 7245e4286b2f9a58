"""Split a row/column profile class of invertible 0/1 matrices into orbits.

With the default profile (2,2,1,1) for both rows and columns this shows that
a fixed profile does not determine an orbit, unlike the H_n^k profiles.

    python scripts/nontransitive_profile.py --eta 2,2,1,1 --theta 2,2,1,1
"""

import argparse

from permreps.binary import BinaryMatrix, h_profile, matrices_with_profile, profile_class_orbits
from permreps.combinatorics import Partition

A = BinaryMatrix.from_strings(["1001", "0110", "0100", "1000"])
B = BinaryMatrix.from_strings(["1100", "1010", "0100", "0001"])


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--eta", type=Partition.parse, default=Partition((2, 2, 1, 1)))
    parser.add_argument("--theta", type=Partition.parse, default=Partition((2, 2, 1, 1)))
    args = parser.parse_args()
    n = len(args.eta)

    orbits = profile_class_orbits(n, args.eta, args.theta)
    total = sum(len(o) for o in orbits)
    print(f"profile ({args.eta}; {args.theta}): {total} invertible matrices in {len(orbits)} orbits")
    for i, orbit in enumerate(orbits, 1):
        rep = min(orbit, key=lambda m: m.rows)
        tags = [name for name, m in (("A", A), ("B", B)) if m in orbit]
        print(f"  orbit {i}: size {len(orbit)}, representative {' '.join(rep.to_strings())} {' '.join(tags)}")

    print("\nH_n^k profiles for comparison (profile class = one orbit):")
    for k in range(n + 1):
        eta, theta = h_profile(n, k)
        count = len(matrices_with_profile(n, eta, theta))
        print(f"  k={k}: ({eta}; {theta}) -> {count} matrices, {len(profile_class_orbits(n, eta, theta))} orbit(s)")


if __name__ == "__main__":
    main()
