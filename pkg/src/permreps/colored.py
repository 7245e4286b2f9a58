"""Colored permutations (C_r wr S_n) and the families X_n^k, Y_n^k.

A colored permutation is a monomial matrix whose column ``j`` holds
``omega ** colors[j-1]`` in row ``perm(j)``. Colors sit on columns, so the
two-sided action only relabels: ``(pi, sigma) . A`` has permutation
``pi * perm * sigma^-1`` and column colors shifted by sigma.
"""

from __future__ import annotations

from cmath import exp, pi as PI
from dataclasses import dataclass
from itertools import product
from math import comb, factorial
from typing import Iterator, Optional

from .binary import BinaryMatrix, NotAMemberError, canonicalize
from .combinatorics import Permutation, all_permutations, falling_factorial, transposition
from .orbits import DEFAULT_BUDGET, OrbitBudgetExceeded, bfs_closure, split_into_orbits


@dataclass(frozen=True)
class ColoredPermutation:
    perm: Permutation
    colors: tuple[int, ...]
    r: int = 2

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("modulus r must be at least 1")
        if len(self.colors) != self.perm.n:
            raise ValueError("one color per column is required")
        if any(not 0 <= c < self.r for c in self.colors):
            raise ValueError(f"colors must lie in 0..{self.r - 1}")

    @classmethod
    def plain(cls, perm: Permutation, r: int = 2) -> "ColoredPermutation":
        return cls(perm, (0,) * perm.n, r)

    @property
    def n(self) -> int:
        return self.perm.n

    def matrix(self) -> list[list[complex]]:
        """Dense complex monomial matrix; entries exact enough for equality after rounding."""
        n = self.n
        out = [[0j] * n for _ in range(n)]
        for j in range(n):
            out[self.perm[j] - 1][j] = root_of_unity(self.r, self.colors[j])
        return out

    def __str__(self) -> str:
        return f"{self.perm} | {' '.join(map(str, self.colors))} (r={self.r})"


def root_of_unity(r: int, power: int) -> complex:
    power %= r
    if power == 0:
        return 1 + 0j
    if 2 * power == r:
        return -1 + 0j
    return exp(2j * PI * power / r)


def nontrivial_color_count(a: ColoredPermutation) -> int:
    return sum(1 for c in a.colors if c)


def u_tilde(n: int, k: int) -> ColoredPermutation:
    """diag(-I_k, I_{n-k}) in B_n."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    return ColoredPermutation(Permutation.identity(n), (1,) * k + (0,) * (n - k), 2)


def act_colored(pi: Permutation, sigma: Permutation, a: ColoredPermutation) -> ColoredPermutation:
    """``P_pi A P_sigma^-1``."""
    if not pi.n == sigma.n == a.n:
        raise ValueError("size mismatch")
    sigma_inv = sigma.inverse()
    colors = tuple(a.colors[sigma_inv[j] - 1] for j in range(a.n))
    return ColoredPermutation(pi * a.perm * sigma_inv, colors, a.r)


def project(a: ColoredPermutation) -> Permutation:
    """Forget the colors."""
    return a.perm


def canonicalize_signed(a: ColoredPermutation, k: int) -> tuple[Permutation, Permutation]:
    """(pi, sigma) with ``a = P_pi U~_{n,k} P_sigma``.

    Writes ``a = Z P`` (signs on rows, then a permutation) and moves the rows
    carrying minus signs to the top with tau = (k, i_k) ... (1, i_1).
    """
    if a.r != 2:
        raise ValueError("signed canonicalization needs r = 2")
    if nontrivial_color_count(a) != k:
        raise NotAMemberError(f"expected {k} minus signs, found {nontrivial_color_count(a)}")
    n = a.n
    minus_rows = sorted(a.perm[j] for j in range(n) if a.colors[j])
    tau = Permutation.identity(n)
    for slot, row in enumerate(minus_rows, start=1):
        tau = transposition(n, slot, row) * tau
    pi, sigma = tau.inverse(), tau * a.perm
    if act_colored(pi, sigma.inverse(), u_tilde(n, k)) != a:
        raise AssertionError("signed factorization does not reconstruct")
    return pi, sigma


def t_tilde(a: BinaryMatrix, k: int) -> ColoredPermutation:
    """``pi U_{n,k} sigma -> pi U~_{n,k} sigma``."""
    f = canonicalize(a, k)
    return act_colored(f.pi, f.sigma.inverse(), u_tilde(a.n, k))


def is_member_appendix_variant(a: ColoredPermutation, k: int) -> bool:
    """Colors 1..k each appear exactly once, all others are 0 (inside C_{k+1} wr S_n)."""
    if a.r != k + 1:
        raise ValueError(f"distinct-color variant lives in C_{k + 1} wr S_n, got r={a.r}")
    nonzero = sorted(c for c in a.colors if c)
    return nonzero == list(range(1, k + 1))


def _colored_neighbours(n: int, r: int):
    def neighbours(state: tuple[tuple[int, ...], tuple[int, ...]]):
        perm, colors = state
        for i in range(1, n):
            # row swap (i, i+1) on the left: relabel values
            yield (
                tuple(i + 1 if v == i else i if v == i + 1 else v for v in perm),
                colors,
            )
            # column swap (i, i+1) on the right: swap positions
            p = list(perm)
            c = list(colors)
            p[i - 1], p[i] = p[i], p[i - 1]
            c[i - 1], c[i] = c[i], c[i - 1]
            yield tuple(p), tuple(c)

    return neighbours


def colored_orbit(a: ColoredPermutation, budget: int = DEFAULT_BUDGET) -> frozenset[ColoredPermutation]:
    states = bfs_closure((tuple(a.perm), a.colors), _colored_neighbours(a.n, a.r), budget)
    return frozenset(ColoredPermutation(Permutation(p), c, a.r) for p, c in states)


def enumerate_x(n: int, k: int, budget: int = DEFAULT_BUDGET) -> frozenset[ColoredPermutation]:
    """X_n^k as the orbit of U~_{n,k}."""
    expected = factorial(n) * comb(n, k)
    if expected > budget:
        raise OrbitBudgetExceeded(f"|X_{n}^{k}| = {expected} exceeds budget {budget}")
    return colored_orbit(u_tilde(n, k), budget)


def wreath_elements(n: int, r: int, budget: int = DEFAULT_BUDGET) -> Iterator[ColoredPermutation]:
    if factorial(n) * r**n > budget:
        raise OrbitBudgetExceeded(f"|C_{r} wr S_{n}| exceeds budget {budget}")
    for perm in all_permutations(n):
        for colors in product(range(r), repeat=n):
            yield ColoredPermutation(perm, colors, r)


def enumerate_y(n: int, r: int, k: int, budget: int = DEFAULT_BUDGET) -> frozenset[ColoredPermutation]:
    """Elements of C_r wr S_n with exactly k entries different from 0 and 1."""
    return frozenset(a for a in wreath_elements(n, r, budget) if nontrivial_color_count(a) == k)


def enumerate_appendix_variant(n: int, k: int, budget: int = DEFAULT_BUDGET) -> frozenset[ColoredPermutation]:
    expected = factorial(n) * falling_factorial(n, k)
    if expected > budget:
        raise OrbitBudgetExceeded(f"distinct-color variant set of size {expected} exceeds budget {budget}")
    seed = ColoredPermutation(Permutation.identity(n), tuple(range(1, k + 1)) + (0,) * (n - k), k + 1)
    return colored_orbit(seed, budget)


def y_orbits(n: int, r: int, k: int, budget: int = DEFAULT_BUDGET) -> list[frozenset[ColoredPermutation]]:
    members = [(tuple(a.perm), a.colors) for a in enumerate_y(n, r, k, budget)]
    members.sort()
    orbits = split_into_orbits(members, _colored_neighbours(n, r))
    return [frozenset(ColoredPermutation(Permutation(p), c, r) for p, c in o) for o in orbits]


def parse_colored_text(text: str) -> tuple[ColoredPermutation, Optional[int]]:
    """Header ``"n r k"``, then the one-line permutation, then n color exponents."""
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if len(lines) != 3:
        raise ValueError("colored matrix file needs a header, a permutation line and a colors line")
    header = [int(t) for t in lines[0].split()]
    if len(header) != 3:
        raise ValueError("colored matrix header must be 'n r k'")
    n, r, k = header
    perm = Permutation(int(t) for t in lines[1].split())
    colors = tuple(int(t) for t in lines[2].split())
    if perm.n != n or len(colors) != n:
        raise ValueError(f"expected {n} permutation entries and {n} colors")
    return ColoredPermutation(perm, colors, r), k


def format_colored_text(a: ColoredPermutation, k: Optional[int] = None) -> str:
    k = nontrivial_color_count(a) if k is None else k
    return f"{a.n} {a.r} {k}\n{a.perm}\n{' '.join(map(str, a.colors))}\n"
