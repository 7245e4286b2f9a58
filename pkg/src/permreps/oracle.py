"""Brute-force ground truth for the closed forms.

The oracles here use their own dense matrices (tuples of tuples of ints) and
their own action; they never call the bit-packed code in ``binary`` or the
relabeling code in ``colored``. Colored entries are encoded as ``0`` for an
empty cell and ``1 + c`` for ``omega ** c``; multiplying by permutation
matrices only moves cells, so the encoding is preserved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Iterable, Optional

from .characters import as_integer, deletion_paths_count, dimension, mn_character
from .combinatorics import (
    Partition,
    Permutation,
    all_permutations,
    class_size,
    conjugate,
    falling_factorial,
    partitions_of,
    representative,
    support_size,
    symmetric_difference_size,
)
from .multiplicities import (
    alpha_char_H,
    alpha_mult_H_branching,
    alpha_mult_H_direct,
    alpha_mult_H_induced,
    alpha_mult_X,
    alpha_mult_X_lr,
    alpha_mult_X_restricted,
    alpha_mult_from_beta,
    beta_char_X,
    beta_char_Y,
    beta_character,
    beta_mult,
    beta_mult_H,
    gamma_route_beta_mult_H,
)

Dense = tuple[tuple[int, ...], ...]


@dataclass
class VerificationResult:
    suite: str
    n: Optional[int] = None
    k: Optional[int] = None
    family: Optional[str] = None
    checks_run: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, description: str, expected, actual) -> None:
        self.checks_run += 1
        if not ok:
            self.failures.append((description, expected, actual))

    def expect_equal(self, description: str, expected, actual) -> None:
        self.check(expected == actual, description, expected, actual)

    def absorb(self, other: "VerificationResult") -> "VerificationResult":
        self.checks_run += other.checks_run
        self.failures.extend(other.failures)
        return self


# --- dense matrices ---------------------------------------------------------


def dense_permutation_matrix(pi: Permutation) -> Dense:
    n = pi.n
    return tuple(tuple(1 if i == pi(j) else 0 for j in range(1, n + 1)) for i in range(1, n + 1))


def dense_matmul(a: Dense, b: Dense) -> Dense:
    n = len(a)
    return tuple(tuple(sum(a[i][l] * b[l][j] for l in range(n)) for j in range(n)) for i in range(n))


def dense_act(pi: Permutation, sigma: Permutation, a: Dense) -> Dense:
    """P_pi A P_sigma^-1 by moving entry (i, j) to (pi(i), sigma(j))."""
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[pi[i] - 1][sigma[j] - 1] = a[i][j]
    return tuple(tuple(row) for row in out)


def dense_u(n: int, k: int) -> Dense:
    return tuple(
        tuple(1 if (i < k and j >= i) or (i >= k and j == i) else 0 for j in range(n)) for i in range(n)
    )


def dense_u_tilde(n: int, k: int) -> Dense:
    return tuple(tuple((-1 if i < k else 1) if i == j else 0 for j in range(n)) for i in range(n))


def orbit_by_products(seed: Dense) -> set[Dense]:
    """{P_pi seed P_sigma : pi, sigma in S_n}."""
    n = len(seed)
    perms = list(all_permutations(n))
    return {dense_act(pi, sigma, seed) for pi in perms for sigma in perms}


def h_orbit(n: int, k: int) -> set[Dense]:
    return orbit_by_products(dense_u(n, k))


def x_orbit(n: int, k: int) -> set[Dense]:
    return orbit_by_products(dense_u_tilde(n, k))


def y_set(n: int, r: int, k: int) -> set[Dense]:
    """Monomial matrices over C_r with exactly k entries that are not 0 or 1, encoded."""
    out = set()
    for pi in all_permutations(n):
        for colors in product(range(r), repeat=n):
            if sum(1 for c in colors if c) != k:
                continue
            rows = [[0] * n for _ in range(n)]
            for j in range(n):
                rows[pi[j] - 1][j] = 1 + colors[j]
            out.add(tuple(tuple(row) for row in rows))
    return out


def is_fixed(pi: Permutation, sigma: Permutation, a: Dense) -> bool:
    n = len(a)
    for i in range(n):
        row, target = a[i], a[pi[i] - 1]
        for j in range(n):
            if target[sigma[j] - 1] != row[j]:
                return False
    return True


def fixed_points_alpha(orbit: Iterable[Dense], pi: Permutation, sigma: Permutation) -> int:
    return sum(1 for a in orbit if is_fixed(pi, sigma, a))


def brute_alpha_table(orbit: Iterable[Dense], n: int) -> dict[tuple[Partition, Partition], int]:
    orbit = list(orbit)
    reps = {mu: representative(mu) for mu in partitions_of(n)}
    return {
        (a, b): fixed_points_alpha(orbit, reps[a], reps[b]) for a in partitions_of(n) for b in partitions_of(n)
    }


def family_orbit(family: str, n: int, k: int, r: Optional[int] = None) -> set[Dense]:
    if family == "H":
        return h_orbit(n, k)
    if family == "X":
        return x_orbit(n, k)
    if family == "Y":
        return y_set(n, r, k)
    raise ValueError(f"no brute-force orbit for family {family!r}")


def closed_form_alpha(family: str, n: int, k: int, a: Partition, b: Partition, r: Optional[int] = None) -> int:
    if family == "H":
        return alpha_char_H(n, k, a, b)
    if a != b:
        return 0
    if family == "X":
        return beta_char_X(n, k, a)
    if family == "Y":
        return beta_char_Y(n, r, k, a)
    raise ValueError(family)


# --- suites -----------------------------------------------------------------


def verify_alpha_char(n: int, k: int, family: str = "H", r: Optional[int] = None) -> VerificationResult:
    result = VerificationResult("alpha-char", n, k, family)
    orbit = family_orbit(family, n, k, r)
    expected_size = {
        "H": factorial(n) * falling_factorial(n, k),
        "X": factorial(n) * comb(n, k),
        "Y": factorial(n) * comb(n, k) * ((r or 2) - 1) ** k,
    }[family]
    result.expect_equal(f"|{family}_{n}^{k}|", expected_size, len(orbit))
    for (a, b), count in brute_alpha_table(orbit, n).items():
        result.expect_equal(f"alpha({a}; {b})", closed_form_alpha(family, n, k, a, b, r), count)
    return result


def _decompose_beta(beta: dict[Partition, int], n: int) -> dict[Partition, int]:
    out = {}
    for lam in partitions_of(n):
        total = sum(class_size(c) * mn_character(lam, c) * beta[c] for c in partitions_of(n))
        out[lam] = as_integer(Fraction(total, factorial(n)), "brute beta multiplicity")
    return out


def _decompose_alpha(alpha: dict[tuple[Partition, Partition], int], n: int) -> dict[tuple[Partition, Partition], int]:
    parts = partitions_of(n)
    out = {}
    for lam in parts:
        for mu in parts:
            total = sum(
                class_size(a) * class_size(b) * mn_character(lam, a) * mn_character(mu, b) * alpha[(a, b)]
                for a in parts
                for b in parts
            )
            out[(lam, mu)] = as_integer(Fraction(total, factorial(n) ** 2), "brute alpha multiplicity")
    return out


def verify_multiplicity_by_decomposition(
    n: int, k: int, family: str = "H", r: Optional[int] = None
) -> VerificationResult:
    """Decompose brute-force alpha and beta characters and compare with the closed-form tables."""
    result = VerificationResult("multiplicity-decomposition", n, k, family)
    alpha = brute_alpha_table(family_orbit(family, n, k, r), n)
    beta = {c: alpha[(c, c)] for c in partitions_of(n)}
    brute_beta = _decompose_beta(beta, n)
    brute_alpha = _decompose_alpha(alpha, n)
    parts = partitions_of(n)
    for lam in parts:
        if family == "H":
            closed = beta_mult_H(lam, k)
        else:
            closed = beta_mult(lam, family, k, r)
        result.expect_equal(f"m({lam}, beta)", closed, brute_beta[lam])
    for lam in parts:
        for mu in parts:
            if family == "H":
                closed = alpha_mult_H_direct(lam, mu, k)
            elif family == "X":
                closed = alpha_mult_X(lam, mu, k)
            else:
                closed = alpha_mult_from_beta(lam, mu, beta_character(family, n, k, r))
            result.expect_equal(f"m(({lam}, {mu}), alpha)", closed, brute_alpha[(lam, mu)])
    return result


def t_fibers(n: int, k: int) -> dict[Permutation, int]:
    """Fiber sizes of pi U sigma -> pi sigma, counted over all factorizations (pi, sigma).

    Each matrix is counted once, via the first pair that produces it.
    """
    seed = dense_u(n, k)
    perms = list(all_permutations(n))
    image: dict[Dense, Permutation] = {}
    for pi in perms:
        for sigma in perms:
            a = dense_act(pi, sigma.inverse(), seed)
            target = pi * sigma
            if image.setdefault(a, target) != target:
                raise AssertionError(f"pi U sigma -> pi sigma is not well defined at n={n}, k={k}")
    fibers: dict[Permutation, int] = {p: 0 for p in perms}
    for target in image.values():
        fibers[target] += 1
    return fibers


def verify_identities(n_max: int, enumeration_max: int = 5) -> VerificationResult:
    """Class-arithmetic identities for n <= n_max; enumeration-backed ones for n <= enumeration_max."""
    result = VerificationResult("identities", n_max)
    for n in range(1, n_max + 1):
        parts = partitions_of(n)
        for k in range(n + 1):
            total = sum(class_size(c) * falling_factorial(n - support_size(c), k) for c in parts)
            result.expect_equal(f"sum_pi (n-|supp|)_k = n!, n={n} k={k}", factorial(n), total)
            if n >= 2:
                # trivial x sign is absent while transpositions still fix matrices (k <= n-2);
                # for k >= n-1 only the identity has fixed points and the multiplicity is 1
                trivial, sign = Partition((n,)), Partition((1,) * n)
                result.expect_equal(
                    f"m(((n),1^n)), n={n} k={k}", int(k >= n - 1), alpha_mult_H_direct(trivial, sign, k)
                )
            for lam in parts:
                for mu in parts:
                    m = alpha_mult_H_direct(lam, mu, k)
                    tag = f"n={n} k={k} ({lam};{mu})"
                    result.expect_equal(f"swap symmetry {tag}", m, alpha_mult_H_direct(mu, lam, k))
                    result.expect_equal(
                        f"conjugate symmetry {tag}", m, alpha_mult_H_direct(conjugate(lam), conjugate(mu), k)
                    )
                    result.expect_equal(f"branching route {tag}", m, alpha_mult_H_branching(lam, mu, k))
                    result.expect_equal(f"path route {tag}", m, deletion_paths_count(lam, mu, k))
                    result.expect_equal(
                        f"vanishing criterion {tag}", m > 0, symmetric_difference_size(lam, mu) <= 2 * k
                    )
                    if k == 0:
                        result.expect_equal(f"k=0 boundary {tag}", int(lam == mu), m)
                    if k == n:
                        result.expect_equal(f"k=n boundary {tag}", dimension(lam) * dimension(mu), m)
            if n <= 6:
                for lam in parts:
                    result.expect_equal(
                        f"gamma route n={n} k={k} {lam}", beta_mult_H(lam, k), gamma_route_beta_mult_H(lam, k)
                    )
    for n in range(1, min(n_max, 6) + 1):
        for k in range(n + 1):
            for lam in partitions_of(n):
                for mu in partitions_of(n):
                    result.expect_equal(
                        f"induced route n={n} k={k} ({lam};{mu})",
                        alpha_mult_H_direct(lam, mu, k),
                        alpha_mult_H_induced(lam, mu, k),
                    )
                    result.expect_equal(
                        f"X routes n={n} k={k} ({lam};{mu})",
                        alpha_mult_X_lr(lam, mu, k),
                        alpha_mult_X_restricted(lam, mu, k),
                    )
    for n in range(1, min(n_max, enumeration_max) + 1):
        for k in range(n + 1):
            fibers = t_fibers(n, k)
            result.expect_equal(
                f"T fiber sizes n={n} k={k}", {falling_factorial(n, k)}, set(fibers.values())
            )
    return result


def run_suite(name: str, n_max: int) -> VerificationResult:
    """Named suites for the CLI: identities, orbit-chars, multiplicities, all."""
    if name == "identities":
        return verify_identities(n_max)
    if name == "orbit-chars":
        result = VerificationResult("orbit-chars", n_max)
        for n in range(1, n_max + 1):
            for k in range(n + 1):
                result.absorb(verify_alpha_char(n, k, "H"))
                result.absorb(verify_alpha_char(n, k, "X"))
        if n_max >= 3:
            for k in range(4):
                result.absorb(verify_alpha_char(3, k, "Y", r=3))
        return result
    if name == "multiplicities":
        result = VerificationResult("multiplicities", n_max)
        for n in range(1, n_max + 1):
            for k in range(n + 1):
                result.absorb(verify_multiplicity_by_decomposition(n, k, "H"))
                result.absorb(verify_multiplicity_by_decomposition(n, k, "X"))
        if n_max >= 3:
            for k in range(4):
                result.absorb(verify_multiplicity_by_decomposition(3, k, "Y", r=3))
        return result
    if name == "all":
        result = VerificationResult("all", n_max)
        for sub in ("identities", "orbit-chars", "multiplicities"):
            result.absorb(run_suite(sub, n_max))
        return result
    raise ValueError(f"unknown suite {name!r}")


SUITES = ("identities", "orbit-chars", "multiplicities", "all")
