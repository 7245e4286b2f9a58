"""Invertible (0,1)-matrices over GF(2) and the orbit families H_n^k.

Matrices are bit-packed: row ``i`` is an int whose bit ``j`` holds entry
``(i + 1, j + 1)``. The two-sided action is ``(pi, sigma) . A = P_pi A P_sigma^-1``
with ``[P_pi]_{i,j} = 1`` iff ``i = pi(j)``, so entry ``(i, j)`` of ``A`` lands
at ``(pi(i), sigma(j))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial
from typing import Iterable, Iterator, Optional

from .combinatorics import Partition, Permutation, falling_factorial
from .orbits import DEFAULT_BUDGET, OrbitBudgetExceeded, bfs_closure, split_into_orbits


class NotAMemberError(ValueError):
    """The matrix is not in the requested orbit family."""


@dataclass(frozen=True)
class BinaryMatrix:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n or any(r < 0 or r >> self.n for r in self.rows):
            raise ValueError("rows must be n integers of n bits")

    @classmethod
    def from_lists(cls, grid: Iterable[Iterable[int]]) -> "BinaryMatrix":
        grid = [list(row) for row in grid]
        n = len(grid)
        if any(len(row) != n for row in grid):
            raise ValueError("matrix must be square")
        rows = []
        for row in grid:
            bits = 0
            for j, entry in enumerate(row):
                if entry not in (0, 1):
                    raise ValueError(f"entries must be 0 or 1, got {entry!r}")
                bits |= entry << j
            rows.append(bits)
        return cls(n, tuple(rows))

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> "BinaryMatrix":
        return cls.from_lists([[int(c) for c in line.strip()] for line in lines])

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def permutation_matrix(cls, pi: Permutation) -> "BinaryMatrix":
        rows = [0] * pi.n
        for j in range(1, pi.n + 1):
            rows[pi(j) - 1] |= 1 << (j - 1)
        return cls(pi.n, tuple(rows))

    def entry(self, i: int, j: int) -> int:
        """1-based entry access."""
        return (self.rows[i - 1] >> (j - 1)) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.n)] for row in self.rows]

    def to_strings(self) -> list[str]:
        return ["".join(str((row >> j) & 1) for j in range(self.n)) for row in self.rows]

    def row_sums(self) -> list[int]:
        return [bin(r).count("1") for r in self.rows]

    def column_sums(self) -> list[int]:
        return [sum((r >> j) & 1 for r in self.rows) for j in range(self.n)]

    def __matmul__(self, other: "BinaryMatrix") -> "BinaryMatrix":
        return gf2_matmul(self, other)

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


@dataclass(frozen=True)
class Profile:
    eta: Partition
    theta: Partition
    ones: int


@dataclass(frozen=True)
class Factorization:
    """``source = P_pi @ representative @ P_sigma`` (matrix products)."""

    pi: Permutation
    sigma: Permutation
    k: int

    def reconstruct(self) -> BinaryMatrix:
        return act(self.pi, self.sigma.inverse(), u_matrix(self.pi.n, self.k))


def profile(a: BinaryMatrix) -> Profile:
    eta = Partition(sorted(a.row_sums(), reverse=True))
    theta = Partition(sorted(a.column_sums(), reverse=True))
    return Profile(eta, theta, eta.n)


def gf2_rank(rows: Iterable[int]) -> int:
    work = [r for r in rows if r]
    rank = 0
    while work:
        pivot = work.pop()
        if not pivot:
            continue
        rank += 1
        low = pivot & -pivot
        work = [r ^ pivot if r & low else r for r in work]
        work = [r for r in work if r]
    return rank


def is_invertible_gf2(a: BinaryMatrix) -> bool:
    return gf2_rank(a.rows) == a.n


def gf2_matmul(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    if a.n != b.n:
        raise ValueError("size mismatch")
    out = []
    for row in a.rows:
        acc = 0
        j = 0
        while row:
            if row & 1:
                acc ^= b.rows[j]
            row >>= 1
            j += 1
        out.append(acc)
    return BinaryMatrix(a.n, tuple(out))


def gf2_inverse(a: BinaryMatrix) -> BinaryMatrix:
    n = a.n
    left = list(a.rows)
    right = [1 << i for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if (left[r] >> col) & 1), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular over GF(2)")
        left[col], left[pivot] = left[pivot], left[col]
        right[col], right[pivot] = right[pivot], right[col]
        for r in range(n):
            if r != col and (left[r] >> col) & 1:
                left[r] ^= left[col]
                right[r] ^= right[col]
    return BinaryMatrix(n, tuple(right))


def _permute_bits(row: int, sigma: Permutation) -> int:
    out = 0
    j = 0
    while row:
        if row & 1:
            out |= 1 << (sigma[j] - 1)
        row >>= 1
        j += 1
    return out


def act(pi: Permutation, sigma: Permutation, a: BinaryMatrix) -> BinaryMatrix:
    """``P_pi A P_sigma^-1``: a row permutation followed by a column permutation."""
    if not pi.n == sigma.n == a.n:
        raise ValueError("size mismatch")
    rows = [0] * a.n
    for i, row in enumerate(a.rows):
        rows[pi[i] - 1] = _permute_bits(row, sigma)
    return BinaryMatrix(a.n, tuple(rows))


def u_matrix(n: int, k: int) -> BinaryMatrix:
    """Orbit representative of H_n^k: triangular ones block, ones block, zero block, identity."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    full = (1 << n) - 1
    rows = [full & ~((1 << i) - 1) for i in range(k)]
    rows += [1 << i for i in range(k, n)]
    return BinaryMatrix(n, tuple(rows))


def u_matrix_zero_variant(n: int, k: int) -> BinaryMatrix:
    """``u_matrix`` with the k x (n-k) upper-right ones block replaced by zeros."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    low_k = (1 << k) - 1
    return BinaryMatrix(n, tuple(r & low_k if i < k else r for i, r in enumerate(u_matrix(n, k).rows)))


def h_profile(n: int, k: int) -> tuple[Partition, Partition]:
    """(eta, theta) defining H_n^k."""
    eta = Partition(tuple(range(n, n - k, -1)) + (1,) * (n - k))
    theta = Partition((k + 1,) * (n - k) + tuple(range(k, 0, -1)))
    return eta, theta


def membership_failure(a: BinaryMatrix, k: int) -> Optional[str]:
    """Reason ``a`` is not in H_n^k, or None if it is."""
    n = a.n
    if not 0 <= k <= n:
        return f"k={k} out of range for n={n}"
    eta, theta = h_profile(n, k)
    prof = profile(a)
    if prof.eta != eta:
        return f"row profile {prof.eta} does not match H_{n}^{k} row profile {eta}"
    if prof.theta != theta:
        return f"column profile {prof.theta} does not match H_{n}^{k} column profile {theta}"
    if not is_invertible_gf2(a):
        return "matrix is singular over GF(2)"
    return None


def is_member_H(a: BinaryMatrix, k: int) -> bool:
    return membership_failure(a, k) is None


def detect_k(a: BinaryMatrix) -> Optional[int]:
    """Smallest k with ``a`` in H_n^k (H_n^n = H_n^(n-1), so n is never returned for n > 1)."""
    for k in range(a.n + 1):
        if is_member_H(a, k):
            return k
    return None


def canonicalize(a: BinaryMatrix, k: int) -> Factorization:
    """Find (pi, sigma) with ``a = P_pi U_{n,k} P_sigma``.

    Repeatedly moves the unique all-ones row of the trailing block to the top
    and its unique column with a single one (in that row) to the left; the
    block left after k steps is a permutation matrix and goes into sigma.
    """
    reason = membership_failure(a, k)
    if reason is not None:
        raise NotAMemberError(reason)
    n = a.n
    m = list(a.rows)
    # m == P_rowperm a P_colperm throughout
    rowperm = list(range(1, n + 1))
    colperm = list(range(1, n + 1))
    for step in range(k):
        block = ((1 << n) - 1) & ~((1 << step) - 1)
        full_rows = [r for r in range(step, n) if m[r] & block == block]
        if len(full_rows) != 1:
            raise NotAMemberError(f"step {step + 1}: expected one all-ones row, found {len(full_rows)}")
        r = full_rows[0]
        if r != step:
            m[step], m[r] = m[r], m[step]
            rowperm = [r + 1 if x == step + 1 else step + 1 if x == r + 1 else x for x in rowperm]
        single = [
            c for c in range(step, n)
            if not any((m[i] >> c) & 1 for i in range(step + 1, n))
        ]
        if len(single) != 1:
            raise NotAMemberError(f"step {step + 1}: expected one leading unit column, found {len(single)}")
        c = single[0]
        if c != step:
            d = 1 << step | 1 << c
            m = [row ^ d if ((row >> step) ^ (row >> c)) & 1 else row for row in m]
            colperm[step], colperm[c] = colperm[c], colperm[step]
    tau = list(range(1, n + 1))
    for j in range(k, n):
        below = [i for i in range(k, n) if (m[i] >> j) & 1]
        if len(below) != 1:
            raise NotAMemberError("trailing block is not a permutation matrix")
        tau[j] = below[0] + 1
    pi = Permutation(rowperm).inverse()
    sigma = Permutation(tau) * Permutation(colperm).inverse()
    found = Factorization(pi, sigma, k)
    if found.reconstruct() != a:
        raise AssertionError("canonicalize produced a factorization that does not reconstruct")
    return found


def t_map(a: BinaryMatrix, k: int) -> Permutation:
    """``pi U sigma -> pi sigma``; independent of the factorization."""
    f = canonicalize(a, k)
    return f.pi * f.sigma


def _coxeter_neighbours(n: int):
    def neighbours(rows: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        for i in range(n - 1):
            swapped = list(rows)
            swapped[i], swapped[i + 1] = rows[i + 1], rows[i]
            yield tuple(swapped)
            d = 1 << i | 1 << (i + 1)
            yield tuple(r ^ d if ((r >> i) ^ (r >> (i + 1))) & 1 else r for r in rows)

    return neighbours


def orbit_of(a: BinaryMatrix, budget: int = DEFAULT_BUDGET) -> frozenset[BinaryMatrix]:
    rows = bfs_closure(a.rows, _coxeter_neighbours(a.n), budget)
    return frozenset(BinaryMatrix(a.n, r) for r in rows)


def enumerate_orbit(n: int, k: int, budget: int = DEFAULT_BUDGET) -> frozenset[BinaryMatrix]:
    """H_n^k as the closure of U_{n,k} under adjacent row and column swaps."""
    expected = factorial(n) * falling_factorial(n, k)
    if expected > budget:
        raise OrbitBudgetExceeded(f"|H_{n}^{k}| = {expected} exceeds budget {budget}")
    return orbit_of(u_matrix(n, k), budget)


def matrices_with_profile(n: int, eta: Partition, theta: Partition, invertible: bool = True) -> list[BinaryMatrix]:
    """Exhaustive scan of all n x n (0,1)-matrices with the given row/column profile."""
    if n > 4:
        raise OrbitBudgetExceeded("exhaustive scan is limited to n <= 4")
    rows_by_weight: dict[int, list[int]] = {}
    for row in range(1 << n):
        rows_by_weight.setdefault(bin(row).count("1"), []).append(row)
    out = []
    weights = sorted(set(eta))
    candidates = [r for w in weights for r in rows_by_weight.get(w, [])]
    for rows in product(candidates, repeat=n):
        m = BinaryMatrix(n, rows)
        p = profile(m)
        if p.eta == eta and p.theta == theta and (not invertible or is_invertible_gf2(m)):
            out.append(m)
    return out


def profile_class_orbits(n: int, eta: Partition, theta: Partition) -> list[frozenset[BinaryMatrix]]:
    """Split the invertible matrices with profile (eta, theta) into orbits."""
    members = [m.rows for m in matrices_with_profile(n, eta, theta)]
    orbits = split_into_orbits(members, _coxeter_neighbours(n))
    return [frozenset(BinaryMatrix(n, r) for r in orbit) for orbit in orbits]


def parse_matrix_text(text: str) -> tuple[BinaryMatrix, Optional[int]]:
    """Header ``"n k"`` (or just ``"n"``) followed by n lines of n characters in {0,1}."""
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty matrix file")
    header = lines[0].split()
    if len(header) not in (1, 2):
        raise ValueError("binary matrix header must be 'n k' or 'n'")
    n = int(header[0])
    k = int(header[1]) if len(header) == 2 else None
    grid = lines[1:]
    if len(grid) != n or any(len(row) != n or set(row) - {"0", "1"} for row in grid):
        raise ValueError(f"expected {n} lines of {n} characters from {{0,1}}")
    return BinaryMatrix.from_strings(grid), k


def format_matrix_text(a: BinaryMatrix, k: Optional[int] = None) -> str:
    header = f"{a.n}" if k is None else f"{a.n} {k}"
    return "\n".join([header, *a.to_strings()]) + "\n"
