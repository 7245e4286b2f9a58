import random
from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from permreps.binary import (
    BinaryMatrix,
    NotAMemberError,
    act,
    canonicalize,
    detect_k,
    enumerate_orbit,
    format_matrix_text,
    gf2_inverse,
    gf2_rank,
    h_profile,
    is_invertible_gf2,
    is_member_H,
    matrices_with_profile,
    membership_failure,
    orbit_of,
    parse_matrix_text,
    profile,
    profile_class_orbits,
    t_map,
    u_matrix,
    u_matrix_zero_variant,
)
from permreps.combinatorics import Partition, Permutation, all_permutations, falling_factorial
from permreps.orbits import OrbitBudgetExceeded

from conftest import NONTRANSITIVE_A, NONTRANSITIVE_B, EXAMPLE_ROWS, permutations, random_permutation

EXAMPLE = BinaryMatrix.from_strings(EXAMPLE_ROWS)


def dense_product(a, b):
    n = a.n
    grid = [[sum(a.entry(i, l) * b.entry(l, j) for l in range(1, n + 1)) % 2 for j in range(1, n + 1)]
            for i in range(1, n + 1)]
    return BinaryMatrix.from_lists(grid)


def test_bit_layout():
    assert EXAMPLE.entry(2, 3) == 1 and EXAMPLE.entry(3, 2) == 0
    assert EXAMPLE.to_strings() == EXAMPLE_ROWS
    assert EXAMPLE.row_sums() == [1, 3, 1, 4]
    assert EXAMPLE.column_sums() == [3, 2, 3, 1]
    with pytest.raises(ValueError):
        BinaryMatrix.from_lists([[1, 2], [0, 1]])
    with pytest.raises(ValueError):
        BinaryMatrix.from_lists([[1, 0, 0], [0, 1]])


def test_profile_examples():
    p = profile(EXAMPLE)
    assert (p.eta, p.theta, p.ones) == ((4, 3, 1, 1), (3, 3, 2, 1), 9)
    p = profile(BinaryMatrix.identity(5))
    assert p.eta == p.theta == (1,) * 5
    p = profile(u_matrix(4, 2))
    assert (p.eta, p.theta) == ((4, 3, 1, 1), (3, 3, 2, 1))


def test_invertibility():
    assert is_invertible_gf2(BinaryMatrix.identity(4))
    assert not is_invertible_gf2(BinaryMatrix.from_strings(["10", "00"]))
    assert not is_invertible_gf2(BinaryMatrix.from_strings(["11", "11"]))
    for n in range(1, 9):
        for k in range(n + 1):
            assert is_invertible_gf2(u_matrix(n, k))


def test_rank_against_brute_force():
    # rank over GF(2) = log2 of the size of the row span
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 5)
        rows = [rng.randrange(1 << n) for _ in range(n)]
        span = {0}
        for r in rows:
            span |= {s ^ r for s in span}
        assert 1 << gf2_rank(rows) == len(span)


def test_inverse_and_product():
    rng = random.Random(11)
    for n in range(1, 6):
        for k in range(n + 1):
            a = act(random_permutation(rng, n), random_permutation(rng, n), u_matrix(n, k))
            inv = gf2_inverse(a)
            assert a @ inv == BinaryMatrix.identity(n) == inv @ a
            b = act(random_permutation(rng, n), random_permutation(rng, n), u_matrix(n, k))
            assert a @ b == dense_product(a, b)
    with pytest.raises(ZeroDivisionError):
        gf2_inverse(BinaryMatrix.from_strings(["11", "11"]))


def test_u_matrix_examples():
    assert u_matrix(5, 0) == BinaryMatrix.identity(5)
    assert u_matrix(4, 2).to_strings() == ["1111", "0111", "0010", "0001"]
    for n in range(1, 11):
        assert u_matrix(n, n) == u_matrix(n, n - 1)
    with pytest.raises(ValueError):
        u_matrix(3, 4)


def test_zero_variant_shape():
    assert u_matrix_zero_variant(4, 0) == BinaryMatrix.identity(4)
    a, b = u_matrix(4, 2).to_lists(), u_matrix_zero_variant(4, 2).to_lists()
    diff = {(i, j) for i in range(4) for j in range(4) if a[i][j] != b[i][j]}
    assert diff == {(i, j) for i in range(2) for j in range(2, 4)}


@pytest.mark.parametrize("n", range(1, 6))
def test_zero_variant_orbit_sizes(n):
    for k in range(n + 1):
        size = len(orbit_of(u_matrix_zero_variant(n, k)))
        # k = 1 zeroes the only off-diagonal ones and leaves the identity
        expected = factorial(n) if k == 1 else factorial(n) * falling_factorial(n, k)
        assert size == expected


def test_permutation_matrix_convention():
    pi = Permutation.parse("2 3 1")
    m = BinaryMatrix.permutation_matrix(pi)
    assert all(m.entry(pi(j), j) == 1 for j in range(1, 4))
    assert act(pi, Permutation.identity(3), BinaryMatrix.identity(3)) == m
    assert dense_product(m, BinaryMatrix.permutation_matrix(pi.inverse())) == BinaryMatrix.identity(3)


@given(st.data(), st.integers(1, 6), st.integers(0, 6))
def test_act_is_matrix_product(data, n, k):
    k = min(k, n)
    pi, sigma = data.draw(permutations(n)), data.draw(permutations(n))
    a = u_matrix(n, k)
    expected = dense_product(
        dense_product(BinaryMatrix.permutation_matrix(pi), a), BinaryMatrix.permutation_matrix(sigma.inverse())
    )
    assert act(pi, sigma, a) == expected


@given(st.data(), st.integers(1, 6))
def test_act_laws(data, n):
    p1, p2, s1, s2 = (data.draw(permutations(n)) for _ in range(4))
    a = act(data.draw(permutations(n)), Permutation.identity(n), u_matrix(n, min(2, n)))
    e = Permutation.identity(n)
    assert act(e, e, a) == a
    assert act(p1 * p2, s1 * s2, a) == act(p1, s1, act(p2, s2, a))
    assert profile(act(p1, s1, a)) == profile(a)


def test_membership_examples():
    assert is_member_H(EXAMPLE, 2)
    assert not is_member_H(EXAMPLE, 1)
    assert detect_k(EXAMPLE) == 2
    for pi in all_permutations(4):
        assert is_member_H(BinaryMatrix.permutation_matrix(pi), 0)
    for rows in (NONTRANSITIVE_A, NONTRANSITIVE_B):
        m = BinaryMatrix.from_strings(rows)
        assert profile(m).eta == profile(m).theta == (2, 2, 1, 1)
        assert all(not is_member_H(m, k) for k in range(5))
        assert detect_k(m) is None
    assert "row profile" in membership_failure(BinaryMatrix.from_strings(NONTRANSITIVE_A), 2)


def test_membership_reasons():
    # right row profile for H_3^1 but wrong columns
    m = BinaryMatrix.from_strings(["111", "100", "100"])
    assert "column profile" in membership_failure(m, 1)
    eta, theta = h_profile(3, 1)
    assert (eta, theta) == ((3, 1, 1), (2, 2, 1))
    assert membership_failure(u_matrix(3, 1), 1) is None
    assert membership_failure(u_matrix(3, 1), 5).startswith("k=5")


def test_profile_forces_invertibility():
    # every (0,1)-matrix with an H profile is already invertible, at least for n <= 4
    for n in range(1, 5):
        for k in range(n + 1):
            eta, theta = h_profile(n, k)
            assert matrices_with_profile(n, eta, theta, invertible=False) == matrices_with_profile(n, eta, theta)
    assert membership_failure(BinaryMatrix.from_strings(["11", "11"]), 1).startswith("row profile")


def test_canonicalize_examples():
    for n in range(1, 7):
        for k in range(n + 1):
            f = canonicalize(u_matrix(n, k), k)
            assert f.pi == f.sigma == Permutation.identity(n)
    f = canonicalize(EXAMPLE, 2)
    assert f.reconstruct() == EXAMPLE
    with pytest.raises(NotAMemberError):
        canonicalize(BinaryMatrix.from_strings(NONTRANSITIVE_B), 2)


def test_canonicalize_round_trip_random():
    rng = random.Random(2024)
    for n in range(1, 8):
        for k in range(n + 1):
            for _ in range(10):
                pi, sigma = random_permutation(rng, n), random_permutation(rng, n)
                a = act(pi, sigma, u_matrix(n, k))
                f = canonicalize(a, k)
                assert act(f.pi, f.sigma.inverse(), u_matrix(n, k)) == a
                assert t_map(a, k) == f.pi * f.sigma


@pytest.mark.parametrize("n", range(1, 6))
def test_reconstruction_over_whole_orbit(n):
    for k in range(n + 1):
        for a in enumerate_orbit(n, k):
            assert canonicalize(a, k).reconstruct() == a


def test_t_map_identity_and_equivariance_exhaustive():
    for n in range(1, 5):
        perms = list(all_permutations(n))
        for k in range(n + 1):
            u = u_matrix(n, k)
            assert t_map(u, k) == Permutation.identity(n)
            a = act(perms[-1], perms[len(perms) // 2], u)
            ta = t_map(a, k)
            for pi, rho in product(perms, repeat=2):
                assert t_map(act(pi, rho, a), k) == pi * ta * rho.inverse()


def test_t_map_equivariance_sampled():
    rng = random.Random(7)
    for n in (5, 6):
        for k in range(n + 1):
            a = act(random_permutation(rng, n), random_permutation(rng, n), u_matrix(n, k))
            ta = t_map(a, k)
            for _ in range(20):
                pi, rho = random_permutation(rng, n), random_permutation(rng, n)
                assert t_map(act(pi, rho, a), k) == pi * ta * rho.inverse()


def test_t_map_fibers():
    for n in range(1, 5):
        for k in range(n + 1):
            counts = {}
            for a in enumerate_orbit(n, k):
                t = t_map(a, k)
                counts[t] = counts.get(t, 0) + 1
            assert len(counts) == factorial(n)
            assert set(counts.values()) == {falling_factorial(n, k)}


@pytest.mark.parametrize("n", range(1, 6))
def test_orbit_sizes(n):
    for k in range(n + 1):
        orbit = enumerate_orbit(n, k)
        assert len(orbit) == factorial(n) * falling_factorial(n, k)
        assert all(is_member_H(a, k) for a in orbit)
    perms = {BinaryMatrix.permutation_matrix(p) for p in all_permutations(n)}
    assert enumerate_orbit(n, 0) == perms


def test_orbit_budget():
    with pytest.raises(OrbitBudgetExceeded):
        enumerate_orbit(6, 6, budget=1000)
    with pytest.raises(OrbitBudgetExceeded):
        orbit_of(u_matrix(5, 3), budget=100)


@pytest.mark.parametrize("n", range(1, 5))
def test_profile_class_equals_orbit(n):
    for k in range(n + 1):
        eta, theta = h_profile(n, k)
        scanned = set(matrices_with_profile(n, eta, theta))
        assert scanned == set(enumerate_orbit(n, k))


def test_nontransitive_profile_class():
    a = BinaryMatrix.from_strings(NONTRANSITIVE_A)
    b = BinaryMatrix.from_strings(NONTRANSITIVE_B)
    two = Partition((2, 2, 1, 1))
    orbits = profile_class_orbits(4, two, two)
    assert len(orbits) >= 2
    home_a = [o for o in orbits if a in o]
    home_b = [o for o in orbits if b in o]
    assert len(home_a) == len(home_b) == 1 and home_a[0] != home_b[0]


def test_h0_h1_closed_under_product_and_inverse():
    for n in range(1, 6):
        union = enumerate_orbit(n, 0) | enumerate_orbit(n, 1)
        for a in union:
            assert gf2_inverse(a) in union
        members = sorted(union, key=lambda m: m.rows)
        if n == 5:
            members = random.Random(3).sample(members, 150)
        for a in members:
            for b in members:
                assert a @ b in union


def test_text_format_round_trip():
    text = format_matrix_text(EXAMPLE, 2)
    assert text == "4 2\n1000\n1110\n0010\n1111\n"
    assert parse_matrix_text(text) == (EXAMPLE, 2)
    assert parse_matrix_text("2\n10\n01\n") == (BinaryMatrix.identity(2), None)
    for bad in ("", "2 1\n10\n", "2\n12\n01\n", "2 1 3\n10\n01\n"):
        with pytest.raises(ValueError):
            parse_matrix_text(bad)
