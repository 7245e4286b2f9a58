import random
from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from permreps.binary import BinaryMatrix, act, enumerate_orbit, t_map, u_matrix
from permreps.colored import (
    ColoredPermutation,
    act_colored,
    canonicalize_signed,
    colored_orbit,
    enumerate_appendix_variant,
    enumerate_x,
    enumerate_y,
    format_colored_text,
    is_member_appendix_variant,
    nontrivial_color_count,
    parse_colored_text,
    project,
    root_of_unity,
    t_tilde,
    u_tilde,
    wreath_elements,
    y_orbits,
)
from permreps.binary import NotAMemberError
from permreps.combinatorics import Permutation, all_permutations, falling_factorial
from permreps.orbits import OrbitBudgetExceeded

from conftest import permutations, random_permutation

E = Permutation.identity

# the signed example: columns 1 and 4 carry minus signs
SIGNED = ColoredPermutation(Permutation.parse("2 4 1 3"), (1, 0, 0, 1))


def dense(perm):
    n = perm.n
    return [[1 if i == perm(j) else 0 for j in range(1, n + 1)] for i in range(1, n + 1)]


def matmul(a, b):
    n = len(a)
    return [[sum(a[i][l] * b[l][j] for l in range(n)) for j in range(n)] for i in range(n)]


def close(a, b):
    return all(abs(x - y) < 1e-9 for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def test_validation():
    with pytest.raises(ValueError):
        ColoredPermutation(E(2), (0, 2), 2)
    with pytest.raises(ValueError):
        ColoredPermutation(E(2), (0,), 2)
    with pytest.raises(ValueError):
        ColoredPermutation(E(2), (0, 0), 0)


def test_roots_of_unity():
    assert root_of_unity(2, 1) == -1
    assert root_of_unity(4, 4) == 1
    assert abs(root_of_unity(3, 1) ** 3 - 1) < 1e-12


def test_counts_and_u_tilde():
    assert nontrivial_color_count(ColoredPermutation.plain(Permutation.parse("3 1 2"))) == 0
    assert nontrivial_color_count(SIGNED) == 2
    assert u_tilde(4, 0) == ColoredPermutation.plain(E(4))
    diag = [u_tilde(4, 2).matrix()[i][i] for i in range(4)]
    assert diag == [-1, -1, 1, 1]
    for n in range(1, 6):
        for k in range(n + 1):
            assert nontrivial_color_count(u_tilde(n, k)) == k


def test_matrix_semantics_exhaustive():
    for n in range(1, 4):
        perms = list(all_permutations(n))
        for r in range(1, 4):
            for a in wreath_elements(n, r):
                for pi, sigma in product(perms, repeat=2):
                    expected = matmul(matmul(dense(pi), a.matrix()), dense(sigma.inverse()))
                    assert close(act_colored(pi, sigma, a).matrix(), expected)


@given(st.data(), st.integers(1, 6))
def test_action_laws(data, n):
    p1, p2, s1, s2 = (data.draw(permutations(n)) for _ in range(4))
    k = data.draw(st.integers(0, n))
    a = act_colored(data.draw(permutations(n)), E(n), u_tilde(n, k))
    assert act_colored(E(n), E(n), a) == a
    assert act_colored(p1 * p2, s1 * s2, a) == act_colored(p1, s1, act_colored(p2, s2, a))
    assert nontrivial_color_count(act_colored(p1, s1, a)) == k
    assert project(act_colored(p1, s1, a)) == p1 * project(a) * s1.inverse()


def test_canonicalize_signed():
    for n in range(1, 6):
        for k in range(n + 1):
            assert canonicalize_signed(u_tilde(n, k), k) == (E(n), E(n))
    pi, sigma = canonicalize_signed(SIGNED, 2)
    assert act_colored(pi, sigma.inverse(), u_tilde(4, 2)) == SIGNED
    with pytest.raises(NotAMemberError):
        canonicalize_signed(SIGNED, 1)
    with pytest.raises(ValueError):
        canonicalize_signed(ColoredPermutation(E(2), (1, 0), 3), 1)


def test_canonicalize_signed_round_trip():
    rng = random.Random(99)
    for n in range(1, 7):
        for k in range(n + 1):
            for _ in range(15):
                a = act_colored(random_permutation(rng, n), random_permutation(rng, n), u_tilde(n, k))
                pi, sigma = canonicalize_signed(a, k)
                assert act_colored(pi, sigma.inverse(), u_tilde(n, k)) == a


@pytest.mark.parametrize("n", range(1, 6))
def test_x_orbit_sizes_and_projection(n):
    for k in range(n + 1):
        orbit = enumerate_x(n, k)
        assert len(orbit) == factorial(n) * comb(n, k)
        fibers = {}
        for a in orbit:
            fibers[project(a)] = fibers.get(project(a), 0) + 1
        assert len(fibers) == factorial(n) and set(fibers.values()) == {comb(n, k)}


def test_x_levels_partition_bn():
    for n in range(1, 7):
        levels = [enumerate_x(n, k) for k in range(n + 1)]
        assert sum(len(x) for x in levels) == 2**n * factorial(n)
        assert len(frozenset().union(*levels)) == 2**n * factorial(n)


def test_y_counts():
    for n in range(1, 5):
        for r in range(2, 5):
            for k in range(n + 1):
                assert len(enumerate_y(n, r, k)) == factorial(n) * comb(n, k) * (r - 1) ** k


def test_y_closed_but_not_transitive():
    for n in range(1, 4):
        for r in (3, 4):
            for k in range(n + 1):
                orbits = y_orbits(n, r, k)
                members = enumerate_y(n, r, k)
                assert frozenset().union(*orbits) == members
                for o in orbits:
                    assert o <= members
                assert (len(orbits) > 1) == (k >= 1)


def test_t_tilde_basics():
    for n in range(1, 6):
        for k in range(n + 1):
            assert t_tilde(u_matrix(n, k), k) == u_tilde(n, k)
    for pi in all_permutations(4):
        m = BinaryMatrix.permutation_matrix(pi)
        assert t_tilde(m, 0) == ColoredPermutation.plain(pi)


def test_t_tilde_equivariance_and_projection():
    for n in range(1, 5):
        perms = list(all_permutations(n))
        for k in range(n + 1):
            a = act(perms[-1], perms[0], u_matrix(n, k))
            ta = t_tilde(a, k)
            for pi, rho in product(perms, repeat=2):
                assert t_tilde(act(pi, rho, a), k) == act_colored(pi, rho, ta)
            for b in enumerate_orbit(n, k):
                assert project(t_tilde(b, k)) == t_map(b, k)


def test_appendix_variant_membership():
    for pi in all_permutations(3):
        assert is_member_appendix_variant(ColoredPermutation.plain(pi, 1), 0)
    assert is_member_appendix_variant(ColoredPermutation(E(3), (1, 2, 0), 3), 2)
    assert not is_member_appendix_variant(ColoredPermutation(E(3), (1, 1, 0), 3), 2)
    with pytest.raises(ValueError):
        is_member_appendix_variant(ColoredPermutation(E(3), (1, 0, 0), 2), 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_appendix_variant_sizes(n):
    for k in range(n + 1):
        members = enumerate_appendix_variant(n, k)
        assert len(members) == factorial(n) * falling_factorial(n, k)
        assert all(is_member_appendix_variant(a, k) for a in members)


def test_budgets():
    with pytest.raises(OrbitBudgetExceeded):
        enumerate_x(6, 3, budget=100)
    with pytest.raises(OrbitBudgetExceeded):
        list(wreath_elements(5, 3, budget=1000))
    with pytest.raises(OrbitBudgetExceeded):
        colored_orbit(u_tilde(5, 2), budget=10)


def test_text_format():
    text = format_colored_text(SIGNED)
    assert text == "4 2 2\n2 4 1 3\n1 0 0 1\n"
    assert parse_colored_text(text) == (SIGNED, 2)
    for bad in ("4 2 2\n2 4 1 3\n", "4 2\n2 4 1 3\n1 0 0 1\n", "3 2 1\n2 4 1 3\n1 0 0 1\n"):
        with pytest.raises(ValueError):
            parse_colored_text(bad)
