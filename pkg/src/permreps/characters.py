"""Irreducible characters of S_n and exact class-function arithmetic.

Characters are evaluated with the Murnaghan-Nakayama rule on beta-sets
(abacus beads): removing a border strip of length r is sliding a bead from
position b to the free position b - r, with sign (-1)^(beads in between).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Callable, Mapping, Union

from .combinatorics import (
    Partition,
    class_size,
    concat,
    conjugate,
    pad_with_fixed_points,
    partitions_of,
    removals,
)

Number = Union[int, Fraction]


class IntegralityError(ArithmeticError):
    """An inner product that must be an integer was not; always a bug."""


def as_integer(value: Number, what: str = "value") -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise IntegralityError(f"{what} is not an integer: {value}")
    return value.numerator


@cache
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 0 if lam else 1
    r, rest = mu[0], mu[1:]
    ell = len(lam)
    beads = [lam[i] + ell - 1 - i for i in range(ell)]
    occupied = set(beads)
    total = 0
    for i, b in enumerate(beads):
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beads if target < c < b)
        moved = sorted(beads[:i] + [target] + beads[i + 1:], reverse=True)
        shape = tuple(p for p in (moved[j] - (ell - 1 - j) for j in range(ell)) if p > 0)
        value = _mn(shape, rest)
        total += -value if height % 2 else value
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """chi_lam at the class of cycle type mu."""
    if lam.n != mu.n:
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(tuple(lam), tuple(sorted(mu, reverse=True)))


def dimension(lam: Partition) -> int:
    """f^lam by the hook-length formula."""
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(lam.n) // hooks


@cache
def character_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Rows indexed by irreducibles, columns by classes, both in descending-lex order."""
    parts = partitions_of(n)
    return tuple(tuple(mn_character(lam, mu) for mu in parts) for lam in parts)


@dataclass(frozen=True)
class ClassFunction:
    """Rational-valued class function on S_n, keyed by cycle type."""

    n: int
    values: Mapping[Partition, Number] = field(hash=False)

    def __post_init__(self):
        if set(self.values) != set(partitions_of(self.n)):
            raise ValueError(f"class function on S_{self.n} needs one value per partition")

    @classmethod
    def from_function(cls, n: int, fn: Callable[[Partition], Number]) -> "ClassFunction":
        return cls(n, {mu: fn(mu) for mu in partitions_of(n)})

    def __call__(self, mu: Partition) -> Number:
        return self.values[mu]

    def _check(self, other: "ClassFunction") -> None:
        if self.n != other.n:
            raise ValueError(f"class functions on S_{self.n} and S_{other.n}")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.n, {mu: v + other.values[mu] for mu, v in self.values.items()})

    def __mul__(self, other: Union["ClassFunction", Number]) -> "ClassFunction":
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.n, {mu: v * other.values[mu] for mu, v in self.values.items()})
        return ClassFunction(self.n, {mu: v * other for mu, v in self.values.items()})

    __rmul__ = __mul__

    def norm_squared(self) -> Fraction:
        return inner_product(self, self)


def inner_product(phi: ClassFunction, psi: ClassFunction) -> Fraction:
    """(1/n!) sum_g phi(g) psi(g); no conjugation since S_n characters are real."""
    phi._check(psi)
    total = sum(class_size(mu) * phi.values[mu] * psi.values[mu] for mu in partitions_of(phi.n))
    return Fraction(total, factorial(phi.n))


@cache
def irreducible(lam: Partition) -> ClassFunction:
    return ClassFunction.from_function(lam.n, lambda mu: mn_character(lam, mu))


def sign_character(n: int) -> ClassFunction:
    return ClassFunction.from_function(n, lambda mu: -1 if (n - len(mu)) % 2 else 1)


def regular_character(n: int) -> ClassFunction:
    identity = Partition((1,) * n)
    return ClassFunction.from_function(n, lambda mu: factorial(n) if mu == identity else 0)


def decompose(chi: ClassFunction) -> dict[Partition, int]:
    """Multiplicities of every irreducible in a character, descending-lex order."""
    return {
        lam: as_integer(inner_product(irreducible(lam), chi), f"multiplicity of {lam}")
        for lam in partitions_of(chi.n)
    }


@dataclass(frozen=True)
class ProductClassFunction:
    """Class function on S_k x S_m keyed by pairs of cycle types."""

    k: int
    m: int
    values: Mapping[tuple[Partition, Partition], Number] = field(hash=False)

    @classmethod
    def from_function(
        cls, k: int, m: int, fn: Callable[[Partition, Partition], Number]
    ) -> "ProductClassFunction":
        return cls(k, m, {(a, b): fn(a, b) for a in partitions_of(k) for b in partitions_of(m)})

    def inner_product(self, other: "ProductClassFunction") -> Fraction:
        if (self.k, self.m) != (other.k, other.m):
            raise ValueError("class functions on different Young subgroups")
        total = sum(
            class_size(a) * class_size(b) * v * other.values[(a, b)]
            for (a, b), v in self.values.items()
        )
        return Fraction(total, factorial(self.k) * factorial(self.m))


@cache
def restrict_to_young(lam: Partition, k: int) -> ProductClassFunction:
    """chi_lam restricted to S_k x S_{n-k}."""
    n = lam.n
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    return ProductClassFunction.from_function(
        k, n - k, lambda a, b: mn_character(lam, concat(a, b))
    )


@cache
def outer_product(rho: Partition, nu: Partition) -> ProductClassFunction:
    """chi_rho (x) chi_nu on S_|rho| x S_|nu|."""
    return ProductClassFunction.from_function(
        rho.n, nu.n, lambda a, b: mn_character(rho, a) * mn_character(nu, b)
    )


def restricted_inner_product(lam: Partition, mu: Partition, m: int) -> int:
    """<chi_lam restricted to S_m, chi_mu restricted to S_m>, via characters."""
    n = lam.n
    if mu.n != n:
        raise ValueError("size mismatch")
    if not 0 <= m <= n:
        raise ValueError(f"m={m} out of range for n={n}")
    total = 0
    for nu in partitions_of(m):
        padded = pad_with_fixed_points(nu, n)
        total += class_size(nu) * mn_character(lam, padded) * mn_character(mu, padded)
    return as_integer(Fraction(total, factorial(m)), "restricted inner product")


@cache
def _paths_down(lam: Partition, k: int) -> Counter:
    """nu -> number of ordered corner-deletion sequences lam -> nu of length k."""
    if k == 0:
        return Counter({lam: 1})
    out: Counter = Counter()
    for child in removals(lam):
        for nu, count in _paths_down(child, k - 1).items():
            out[nu] += count
    return out


def deletion_paths_count(lam: Partition, mu: Partition, k: int) -> int:
    """Ways to delete k cells one corner at a time from both diagrams and land on the same shape."""
    n = lam.n
    if mu.n != n:
        raise ValueError("size mismatch")
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    left, right = _paths_down(lam, k), _paths_down(mu, k)
    return sum(count * right[nu] for nu, count in left.items() if nu in right)


@cache
def kronecker_gamma(lam: Partition, mu: Partition, nu: Partition) -> int:
    n = lam.n
    if not mu.n == nu.n == n:
        raise ValueError("size mismatch")
    total = sum(
        class_size(c) * mn_character(lam, c) * mn_character(mu, c) * mn_character(nu, c)
        for c in partitions_of(n)
    )
    return as_integer(Fraction(total, factorial(n)), "Kronecker coefficient")


@cache
def littlewood_richardson(lam: Partition, rho: Partition, nu: Partition) -> int:
    """c^lam_{rho nu} as the multiplicity of chi_rho (x) chi_nu in chi_lam restricted to S_k x S_{n-k}."""
    if rho.n + nu.n != lam.n:
        raise ValueError(f"|{rho}| + |{nu}| != |{lam}|")
    value = restrict_to_young(lam, rho.n).inner_product(outer_product(rho, nu))
    return as_integer(value, "Littlewood-Richardson coefficient")
