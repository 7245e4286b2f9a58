"""Closed-form characters of the alpha and beta actions and their multiplicities.

alpha is the S_n x S_n action ``(pi, sigma) . A = pi A sigma^-1`` on an orbit
family, beta its restriction to the diagonal (conjugation). Families:

* ``H``  -- H_n^k, invertible (0,1)-matrices
* ``X``  -- X_n^k, signed permutations with k minus signs
* ``Bn`` -- all of B_n
* ``Y``  -- Y_n^k inside C_r wr S_n
* ``Cr`` -- all of C_r wr S_n

Every alpha multiplicity for H has four independent routes (direct class sum,
restriction to S_{n-k}, corner-deletion paths, induction from the Young
subgroup); they share no code beyond the character table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Mapping, Optional

from .characters import (
    ClassFunction,
    as_integer,
    deletion_paths_count,
    dimension,
    inner_product,
    irreducible,
    kronecker_gamma,
    littlewood_richardson,
    mn_character,
    restrict_to_young,
    restricted_inner_product,
)
from .combinatorics import (
    Partition,
    centralizer_size,
    class_size,
    concat,
    falling_factorial,
    partitions_of,
    support_size,
)

FAMILIES = ("H", "X", "Bn", "Y", "Cr")


class RouteDisagreement(AssertionError):
    """Two independent computations of the same multiplicity differ."""


# --- characters -------------------------------------------------------------


def beta_char_H(n: int, k: int, mu: Partition) -> int:
    """Fixed points of conjugation by a permutation of type mu on H_n^k."""
    return centralizer_size(mu) * falling_factorial(n - support_size(mu), k)


def alpha_char_H(n: int, k: int, mu_pi: Partition, mu_sigma: Partition) -> int:
    return beta_char_H(n, k, mu_pi) if mu_pi == mu_sigma else 0


def _cycle_subset_weight(mu: Partition, k: int, weight: int) -> int:
    """Sum over sets S of cycles of mu with total length k of weight^|S|.

    Coefficient of x^k in prod_cycles (1 + weight * x^len).
    """
    poly = [1] + [0] * k
    for length in mu:
        for d in range(k, length - 1, -1):
            poly[d] += weight * poly[d - length]
    return poly[k]


def beta_char_X(n: int, k: int, mu: Partition) -> int:
    """A signed permutation Z sigma commutes with pi iff sigma does and Z is constant on pi's cycles."""
    if mu.n != n:
        raise ValueError("size mismatch")
    return centralizer_size(mu) * _cycle_subset_weight(mu, k, 1)


def beta_char_Y(n: int, r: int, k: int, mu: Partition) -> int:
    if r < 1:
        raise ValueError("r must be at least 1")
    if mu.n != n:
        raise ValueError("size mismatch")
    return centralizer_size(mu) * _cycle_subset_weight(mu, k, r - 1)


def beta_char_Bn(mu: Partition) -> int:
    return centralizer_size(mu) * 2 ** len(mu)


def beta_char_wreath(r: int, mu: Partition) -> int:
    return centralizer_size(mu) * r ** len(mu)


def beta_character(family: str, n: int, k: Optional[int] = None, r: Optional[int] = None) -> ClassFunction:
    """The beta character of a family as a class function."""
    if family == "H":
        return ClassFunction.from_function(n, lambda mu: beta_char_H(n, k, mu))
    if family == "X":
        return ClassFunction.from_function(n, lambda mu: beta_char_X(n, k, mu))
    if family == "Bn":
        return ClassFunction.from_function(n, beta_char_Bn)
    if family == "Y":
        return ClassFunction.from_function(n, lambda mu: beta_char_Y(n, r, k, mu))
    if family == "Cr":
        return ClassFunction.from_function(n, lambda mu: beta_char_wreath(r, mu))
    raise ValueError(f"unknown family {family!r}")


def family_size(family: str, n: int, k: Optional[int] = None, r: Optional[int] = None) -> int:
    return {
        "H": lambda: factorial(n) * falling_factorial(n, k),
        "X": lambda: factorial(n) * comb(n, k),
        "Bn": lambda: factorial(n) * 2**n,
        "Y": lambda: factorial(n) * comb(n, k) * (r - 1) ** k,
        "Cr": lambda: factorial(n) * r**n,
    }[family]()


def family_scale(family: str, n: int, k: Optional[int] = None, r: Optional[int] = None) -> int:
    """|family| / n!, the factor multiplying the regular representation."""
    return family_size(family, n, k, r) // factorial(n)


# --- beta multiplicities ----------------------------------------------------


def beta_mult_H(lam: Partition, k: int) -> int:
    """sum over classes C of chi_lam(C) (n - |supp C|)_k; unweighted by class size."""
    n = lam.n
    return sum(mn_character(lam, c) * falling_factorial(n - support_size(c), k) for c in partitions_of(n))


def conjugacy_mult(lam: Partition) -> int:
    """Multiplicity of chi_lam in the conjugacy representation: sum_C chi_lam(C)."""
    return sum(mn_character(lam, c) for c in partitions_of(lam.n))


def beta_mult(lam: Partition, family: str, k: Optional[int] = None, r: Optional[int] = None) -> int:
    chi = beta_character(family, lam.n, k, r)
    return as_integer(inner_product(irreducible(lam), chi), f"beta multiplicity of {lam} in {family}")


def gamma_route_beta_mult_H(lam: Partition, k: int) -> int:
    """sum_{mu,nu} <chi_mu|S_{n-k}, chi_nu|S_{n-k}> gamma_{lam mu nu}."""
    n = lam.n
    total = 0
    parts = partitions_of(n)
    for mu in parts:
        for nu in parts:
            restricted = restricted_inner_product(mu, nu, n - k)
            if restricted:
                total += restricted * kronecker_gamma(lam, mu, nu)
    return total


def gamma_decomposition_check(lam: Partition, k: int) -> int:
    value = gamma_route_beta_mult_H(lam, k)
    direct = beta_mult_H(lam, k)
    if value != direct:
        raise RouteDisagreement(f"gamma route {value} != class sum {direct} for {lam}, k={k}")
    return value


def beta_mult_lower_bound_check(
    lam: Partition, k: Optional[int], family: str = "H", r: Optional[int] = None
) -> bool:
    """Multiplicity is at least the conjugacy-representation multiplicity and positive."""
    m = beta_mult_H(lam, k) if family == "H" else beta_mult(lam, family, k, r)
    return m >= conjugacy_mult(lam) and m > 0


# --- alpha multiplicities ---------------------------------------------------


def alpha_mult_H_direct(lam: Partition, mu: Partition, k: int) -> int:
    """(1/n!) sum_pi chi_lam(pi) chi_mu(pi) (n - |supp pi|)_k, summed class-wise."""
    n = lam.n
    if mu.n != n:
        raise ValueError("size mismatch")
    total = sum(
        class_size(c) * mn_character(lam, c) * mn_character(mu, c) * falling_factorial(n - support_size(c), k)
        for c in partitions_of(n)
    )
    return as_integer(Fraction(total, factorial(n)), "alpha multiplicity (direct)")


def alpha_mult_H_branching(lam: Partition, mu: Partition, k: int) -> int:
    return restricted_inner_product(lam, mu, lam.n - k)


def alpha_mult_H_paths(lam: Partition, mu: Partition, k: int) -> int:
    return deletion_paths_count(lam, mu, k)


def omega_char(
    n: int, k: int, left: tuple[Partition, Partition], right: tuple[Partition, Partition]
) -> int:
    """Character of the Young-subgroup action on the orbit of U_{n,k}.

    ``left``/``right`` are (S_k class, S_{n-k} class) pairs.
    """
    (lk, lr), (rk, rr) = left, right
    if lk.n != k or rk.n != k or lr.n != n - k or rr.n != n - k:
        raise ValueError("class pair sizes do not match (k, n-k)")
    identity_k = Partition((1,) * k)
    if lk != identity_k or rk != identity_k or lr != rr:
        return 0
    return factorial(k) ** 2 * centralizer_size(lr)


def alpha_mult_H_induced(lam: Partition, mu: Partition, k: int) -> int:
    """Frobenius reciprocity: <omega_{n,k}, chi_(lam,mu) restricted to (S_k x S_{n-k})^2>."""
    n = lam.n
    pairs = [(a, b) for a in partitions_of(k) for b in partitions_of(n - k)]
    total = 0
    for left in pairs:
        for right in pairs:
            w = omega_char(n, k, left, right)
            if not w:
                continue
            weight = class_size(left[0]) * class_size(left[1]) * class_size(right[0]) * class_size(right[1])
            total += (
                weight * w * mn_character(lam, concat(*left)) * mn_character(mu, concat(*right))
            )
    order = (factorial(k) * factorial(n - k)) ** 2
    return as_integer(Fraction(total, order), "alpha multiplicity (induced)")


def alpha_mult_H(lam: Partition, mu: Partition, k: int, verify_routes: bool = False) -> int:
    value = alpha_mult_H_direct(lam, mu, k)
    if verify_routes:
        routes = {
            "branching": alpha_mult_H_branching(lam, mu, k),
            "paths": alpha_mult_H_paths(lam, mu, k),
            "induced": alpha_mult_H_induced(lam, mu, k),
        }
        bad = {name: v for name, v in routes.items() if v != value}
        if bad:
            raise RouteDisagreement(f"m(({lam}),({mu})), k={k}: direct={value}, {bad}")
    return value


def alpha_mult_X_lr(lam: Partition, mu: Partition, k: int) -> int:
    n = lam.n
    return sum(
        littlewood_richardson(lam, rho, nu) * littlewood_richardson(mu, rho, nu)
        for rho in partitions_of(k)
        for nu in partitions_of(n - k)
    )


def alpha_mult_X_restricted(lam: Partition, mu: Partition, k: int) -> int:
    value = restrict_to_young(lam, k).inner_product(restrict_to_young(mu, k))
    return as_integer(value, "alpha multiplicity (Young restriction)")


def alpha_mult_X(lam: Partition, mu: Partition, k: int) -> int:
    lr = alpha_mult_X_lr(lam, mu, k)
    restricted = alpha_mult_X_restricted(lam, mu, k)
    if lr != restricted:
        raise RouteDisagreement(f"X: LR sum {lr} != restricted inner product {restricted}")
    return lr


def alpha_mult_Bn(lam: Partition, mu: Partition) -> int:
    return sum(alpha_mult_X(lam, mu, k) for k in range(lam.n + 1))


def alpha_mult_from_beta(lam: Partition, mu: Partition, beta: ClassFunction) -> int:
    """alpha multiplicity of any S_n x S_n-stable set whose diagonal character is ``beta``.

    The alpha character vanishes off conjugate pairs and equals beta on them, so
    m = (1/n!^2) sum_C |C|^2 chi_lam(C) chi_mu(C) beta(C).
    """
    n = beta.n
    total = sum(
        class_size(c) ** 2 * mn_character(lam, c) * mn_character(mu, c) * beta(c) for c in partitions_of(n)
    )
    return as_integer(Fraction(total, factorial(n) ** 2), "alpha multiplicity from beta")


def alpha_routes(
    family: str, lam: Partition, mu: Partition, k: Optional[int] = None, r: Optional[int] = None
) -> dict[str, int]:
    """Every available independent computation of one alpha multiplicity, by route name."""
    if family == "H":
        return {
            "direct": alpha_mult_H_direct(lam, mu, k),
            "branching": alpha_mult_H_branching(lam, mu, k),
            "paths": alpha_mult_H_paths(lam, mu, k),
            "induced": alpha_mult_H_induced(lam, mu, k),
        }
    if family == "X":
        return {
            "littlewood-richardson": alpha_mult_X_lr(lam, mu, k),
            "young-restriction": alpha_mult_X_restricted(lam, mu, k),
            "class-sum": alpha_mult_from_beta(lam, mu, beta_character("X", lam.n, k)),
        }
    if family == "Bn":
        return {
            "sum-over-k": sum(alpha_mult_X_lr(lam, mu, j) for j in range(lam.n + 1)),
            "class-sum": alpha_mult_from_beta(lam, mu, beta_character("Bn", lam.n)),
        }
    return {"class-sum": alpha_mult_from_beta(lam, mu, beta_character(family, lam.n, k, r))}


# --- tables -----------------------------------------------------------------


@dataclass(frozen=True)
class MultiplicityTable:
    n: int
    k: Optional[int]
    family: str
    alpha: Mapping[tuple[Partition, Partition], int] = field(hash=False)
    beta: Mapping[Partition, int] = field(hash=False)
    r: Optional[int] = None

    def dimension_sum(self) -> int:
        return sum(m * dimension(lam) * dimension(mu) for (lam, mu), m in self.alpha.items())

    def beta_dimension_sum(self) -> int:
        return sum(m * dimension(lam) for lam, m in self.beta.items())


def multiplicity_table(
    family: str, n: int, k: Optional[int] = None, r: Optional[int] = None, verify_routes: bool = False
) -> MultiplicityTable:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    if family in ("H", "X", "Y") and (k is None or not 0 <= k <= n):
        raise ValueError(f"family {family} needs 0 <= k <= n")
    if family in ("Y", "Cr") and (r is None or r < 1):
        raise ValueError(f"family {family} needs r >= 1")
    parts = partitions_of(n)
    alpha = {}
    for lam in parts:
        for mu in parts:
            if family == "H":
                alpha[(lam, mu)] = alpha_mult_H(lam, mu, k, verify_routes)
            elif family == "X":
                alpha[(lam, mu)] = alpha_mult_X(lam, mu, k)
            elif family == "Bn":
                alpha[(lam, mu)] = alpha_mult_Bn(lam, mu)
            else:
                alpha[(lam, mu)] = alpha_mult_from_beta(lam, mu, beta_character(family, n, k, r))
    if family == "H":
        beta = {lam: beta_mult_H(lam, k) for lam in parts}
        if verify_routes:
            for lam in parts:
                gamma_decomposition_check(lam, k)
    else:
        beta = {lam: beta_mult(lam, family, k, r) for lam in parts}
    return MultiplicityTable(n, k, family, alpha, beta, r)
