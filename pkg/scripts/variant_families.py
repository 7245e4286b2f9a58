"""Compare H_n^k with two variant families by brute force.

* the orbit of U_{n,k} with its off-diagonal ones block zeroed;
* colored permutations in C_{k+1} wr S_n using each nonzero color once.

For each (n, k) prints the set sizes and whether the diagonal fixed-point
counts agree with the H_n^k closed form.

    python scripts/variant_families.py --n-max 5
"""

import argparse
from math import factorial

from permreps.binary import act, orbit_of, u_matrix_zero_variant
from permreps.colored import act_colored, enumerate_appendix_variant
from permreps.combinatorics import falling_factorial, partitions_of, representative
from permreps.multiplicities import beta_char_H


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=5)
    args = parser.parse_args()

    print(f"{'n':>2} {'k':>2} {'|H|':>8} {'zeroed':>8} {'colored':>8}  beta(zeroed)  beta(colored)")
    for n in range(1, args.n_max + 1):
        for k in range(n + 1):
            h_size = factorial(n) * falling_factorial(n, k)
            zeroed = orbit_of(u_matrix_zero_variant(n, k))
            colored = enumerate_appendix_variant(n, k)
            agree_zeroed = agree_colored = True
            for mu in partitions_of(n):
                pi = representative(mu)
                expected = beta_char_H(n, k, mu)
                agree_zeroed &= sum(1 for a in zeroed if act(pi, pi, a) == a) == expected
                agree_colored &= sum(1 for a in colored if act_colored(pi, pi, a) == a) == expected
            print(f"{n:>2} {k:>2} {h_size:>8} {len(zeroed):>8} {len(colored):>8}  "
                  f"{'agrees' if agree_zeroed else 'differs':>12}  {'agrees' if agree_colored else 'differs':>13}")


if __name__ == "__main__":
    main()
