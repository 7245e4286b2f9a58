"""Partitions, permutations and conjugacy-class arithmetic for S_n.

Partitions and permutations are tuple subclasses, so they hash, compare and
memoize like plain tuples. Permutations are 1-based: ``p[j - 1] == p(j)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; no trailing zeros."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``"4,3,1,1"``; the empty string and ``"0"`` give the empty partition."""
        text = text.strip()
        if text in ("", "0", "()"):
            return cls()
        return cls(int(p) for p in text.replace(" ", "").strip("()").split(",") if p)

    @property
    def n(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The ``i``-th part, 0-based, padding with zeros."""
        return self[i] if i < len(self) else 0

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


class Permutation(tuple):
    """Bijection of {1..n} in one-line notation.

    Multiplication is composition of functions, ``(p * q)(j) = p(q(j))``.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]) -> "Permutation":
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        images = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                images[a - 1] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """One-line notation, space separated (``"3 6 5 4 9 2 1 8 7"``)."""
        tokens = text.replace(",", " ").split()
        if len(tokens) == 1 and len(tokens[0]) > 1:
            tokens = list(tokens[0])
        return cls(int(t) for t in tokens)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, j: int) -> int:
        return self[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":  # type: ignore[override]
        if len(self) != len(other):
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(self[j - 1] for j in other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for j, image in enumerate(self, start=1):
            inv[image - 1] = j
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, fixed points included, each starting at its least element."""
        seen = [False] * (len(self) + 1)
        out = []
        for start in range(1, len(self) + 1):
            if seen[start]:
                continue
            cycle = []
            j = start
            while not seen[j]:
                seen[j] = True
                cycle.append(j)
                j = self[j - 1]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> Partition:
        return Partition(sorted((len(c) for c in self.cycles()), reverse=True))

    def support(self) -> frozenset[int]:
        return frozenset(j for j, image in enumerate(self, start=1) if image != j)

    def sign(self) -> int:
        return -1 if (len(self) - len(self.cycles())) % 2 else 1

    def __str__(self) -> str:
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    return sigma * tau


def invert(pi: Permutation) -> Permutation:
    return pi.inverse()


def conjugate_by(sigma: Permutation, pi: Permutation) -> Permutation:
    """sigma * pi * sigma^-1"""
    return sigma * pi * sigma.inverse()


def transposition(n: int, a: int, b: int) -> Permutation:
    images = list(range(1, n + 1))
    images[a - 1], images[b - 1] = b, a
    return Permutation(images)


def cycle_type(pi: Permutation) -> Partition:
    return pi.cycle_type()


def representative(mu: Partition) -> Permutation:
    """Canonical element of cycle type ``mu``: consecutive cycles 1..mu_1, then the next block, ..."""
    cycles = []
    start = 1
    for length in mu:
        cycles.append(tuple(range(start, start + length)))
        start += length
    return Permutation.from_cycles(mu.n, *cycles)


def all_permutations(n: int) -> Iterator[Permutation]:
    from itertools import permutations

    for images in permutations(range(1, n + 1)):
        yield Permutation(images)


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in gen(n, n))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for part in lam if part >= i) for i in range(1, lam[0] + 1))


def symmetric_difference_size(lam: Sequence[int], mu: Sequence[int]) -> int:
    length = max(len(lam), len(mu))
    pad = lambda p, i: p[i] if i < len(p) else 0  # noqa: E731
    return sum(abs(pad(lam, i) - pad(mu, i)) for i in range(length))


def removals(lam: Partition) -> list[Partition]:
    """Partitions obtained by deleting one corner cell, top corner first."""
    if not lam:
        raise ValueError("the empty partition has no corners")
    out = []
    for i, part in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < part:
            out.append(Partition(lam[:i] + (part - 1,) + lam[i + 1:]))
    return out


def falling_factorial(n: int, k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return prod(range(n - k + 1, n + 1)) if k else 1


@dataclass(frozen=True)
class ClassData:
    cycle_type: Partition
    class_size: int
    centralizer_size: int
    support_size: int


@cache
def centralizer_size(mu: Partition) -> int:
    return prod(i**m * factorial(m) for i, m in Counter(mu).items())


def class_size(mu: Partition) -> int:
    return factorial(mu.n) // centralizer_size(mu)


def support_size(mu: Partition) -> int:
    return mu.n - mu.count(1)


def class_data(mu: Partition) -> ClassData:
    z = centralizer_size(mu)
    return ClassData(mu, factorial(mu.n) // z, z, support_size(mu))


def pad_with_fixed_points(nu: Partition, n: int) -> Partition:
    """Cycle type of an element of S_m viewed inside S_n (m <= n)."""
    if nu.n > n:
        raise ValueError("cannot embed a larger cycle type")
    return Partition(tuple(nu) + (1,) * (n - nu.n))


def concat(alpha: Partition, beta: Partition) -> Partition:
    """Cycle type of (a, b) in S_k x S_m seen in S_{k+m}."""
    return Partition(sorted(tuple(alpha) + tuple(beta), reverse=True))
