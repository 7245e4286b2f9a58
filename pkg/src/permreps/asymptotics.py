"""Norms, angles and multiplicity ratios of beta characters against the regular character.

Everything is an exact rational. Square roots are avoided by working with
squared cosines and squared norm ratios.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Mapping, Optional

from .characters import dimension
from .combinatorics import Partition, centralizer_size, class_size, conjugate, falling_factorial, partitions_of
from .multiplicities import beta_char_H, beta_character, beta_mult, beta_mult_H, family_scale


@cache
def _inverse_class_sizes_by_fixed_points(n: int) -> tuple[tuple[int, Fraction], ...]:
    """(j, sum of 1/|C| over classes with exactly j fixed points)."""
    weights: dict[int, Fraction] = defaultdict(Fraction)
    nfact = factorial(n)
    for mu in partitions_of(n):
        weights[mu.count(1)] += Fraction(centralizer_size(mu), nfact)
    return tuple(sorted(weights.items()))


def sum_inverse_class_sizes(n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be positive")
    return sum((w for _, w in _inverse_class_sizes_by_fixed_points(n)), Fraction(0))


def f_k(n: int, k: int) -> Fraction:
    """F_k(S_n) = sum over classes of ((number of fixed points)_k)^2 / |C|."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    return sum(
        (falling_factorial(j, k) ** 2 * w for j, w in _inverse_class_sizes_by_fixed_points(n)),
        Fraction(0),
    )


def cosine_beta_regular(n: int, k: int) -> Fraction:
    """Squared cosine of the angle between chi_R and the beta character of H_n^k."""
    return Fraction(falling_factorial(n, k) ** 2) / f_k(n, k)


def beta_norm_squared(family: str, n: int, k: Optional[int] = None, r: Optional[int] = None) -> Fraction:
    """<chi_beta, chi_beta> from the closed-form character, class by class."""
    if family == "H":
        total = sum(class_size(mu) * beta_char_H(n, k, mu) ** 2 for mu in partitions_of(n))
    else:
        chi = beta_character(family, n, k, r)
        total = sum(class_size(mu) * chi(mu) ** 2 for mu in partitions_of(n))
    return Fraction(total, factorial(n))


@dataclass(frozen=True)
class AsymptoticReport:
    n: int
    k: Optional[int]
    family: str
    sum_inverse_class_sizes: Fraction
    f_k: Fraction
    norm_ratio_sq: Fraction
    cosine_sq: Fraction
    lower_bound: Fraction
    r: Optional[int] = None
    per_lambda_ratios: Optional[Mapping[Partition, tuple[Fraction, Fraction]]] = field(default=None, hash=False)

    @property
    def bounds_hold(self) -> bool:
        return all(self.lower_bound <= q <= 1 for q in (self.norm_ratio_sq, self.cosine_sq))


def report(
    family: str,
    n: int,
    k: Optional[int] = None,
    r: Optional[int] = None,
    with_ratios: bool = False,
) -> AsymptoticReport:
    """``f_k`` holds ||chi_beta||^2 / n!, which is F_k(S_n) for the H family."""
    s = sum_inverse_class_sizes(n)
    scale = family_scale(family, n, k, r)
    nfact = factorial(n)
    if family == "H":
        fk = f_k(n, k)
        norm_sq = nfact * fk
    else:
        norm_sq = beta_norm_squared(family, n, k, r)
        fk = norm_sq / nfact
    # ||scale chi_R||^2 / ||chi_beta||^2 and <chi_R, chi_beta>^2 / (||chi_R||^2 ||chi_beta||^2)
    norm_ratio_sq = Fraction(scale**2 * nfact) / norm_sq
    cosine_sq = Fraction((scale * nfact) ** 2) / (nfact * norm_sq)
    ratios = r1_ratio_report(n, k, family, r) if with_ratios else None
    return AsymptoticReport(n, k, family, s, fk, norm_ratio_sq, cosine_sq, 1 / s, r, ratios)


def r1_ratio_report(
    n: int, k: Optional[int], family: str = "H", r: Optional[int] = None
) -> dict[Partition, tuple[Fraction, Fraction]]:
    """lam -> (m(lam, beta) / (scale f^lam), max(lam_1, lam'_1) / n)."""
    scale = family_scale(family, n, k, r)
    out = {}
    for lam in partitions_of(n):
        m = beta_mult_H(lam, k) if family == "H" else beta_mult(lam, family, k, r)
        balance = Fraction(max(lam[0], conjugate(lam)[0]), n)
        out[lam] = (Fraction(m, scale * dimension(lam)), balance)
    return out


def render(q: Fraction) -> str:
    """Six significant digits for display."""
    return f"{float(q):.6g}"
