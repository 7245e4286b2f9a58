from fractions import Fraction
from math import factorial

import pytest

from permreps.asymptotics import (
    beta_norm_squared,
    cosine_beta_regular,
    f_k,
    r1_ratio_report,
    render,
    report,
    sum_inverse_class_sizes,
)
from permreps.characters import inner_product
from permreps.combinatorics import Partition, all_permutations, class_size, cycle_type, falling_factorial, partitions_of
from permreps.multiplicities import beta_char_H, beta_character, family_scale


def test_sum_inverse_class_sizes_examples():
    assert sum_inverse_class_sizes(1) == 1
    assert sum_inverse_class_sizes(3) == Fraction(11, 6)
    with pytest.raises(ValueError):
        sum_inverse_class_sizes(0)


def test_sum_inverse_class_sizes_trend():
    values = [sum_inverse_class_sizes(n) for n in range(1, 41)]
    assert all(v >= 1 for v in values)
    assert all(values[i] >= values[i + 1] for i in range(3, 39))
    assert all(values[i] > values[i + 1] for i in range(9, 39))


def test_f_k_examples():
    assert f_k(3, 1) == Fraction(28, 3)
    for n in range(1, 10):
        assert f_k(n, 0) == sum_inverse_class_sizes(n)
    with pytest.raises(ValueError):
        f_k(3, 4)


@pytest.mark.parametrize("n", range(1, 7))
def test_norm_matches_element_sum(n):
    for k in range(n + 1):
        elementwise = sum(beta_char_H(n, k, cycle_type(pi)) ** 2 for pi in all_permutations(n))
        assert elementwise == factorial(n) ** 2 * f_k(n, k)
        chi = beta_character("H", n, k)
        assert inner_product(chi, chi) * factorial(n) == factorial(n) ** 2 * f_k(n, k)


def test_sandwich():
    for n in range(1, 41):
        s = sum_inverse_class_sizes(n)
        for k in range(n + 1):
            low = falling_factorial(n, k) ** 2
            value = f_k(n, k)
            assert low <= value <= low * s


def test_cosine_examples():
    assert cosine_beta_regular(3, 1) == Fraction(27, 28)
    for n in range(1, 15):
        for k in range(n + 1):
            c = cosine_beta_regular(n, k)
            assert 1 / sum_inverse_class_sizes(n) <= c <= 1
    for k in (1, 2):
        assert cosine_beta_regular(30, k) >= Fraction(99, 100)
    assert cosine_beta_regular(40, 2) > cosine_beta_regular(10, 2)
    # for k >= n - 1 only the identity has fixed points, so beta is a multiple of the regular character
    for n in range(1, 41):
        assert cosine_beta_regular(n, n - 1) == cosine_beta_regular(n, n) == 1


def test_report_n1():
    rep = report("H", 1, 1)
    assert rep.sum_inverse_class_sizes == rep.f_k == rep.cosine_sq == rep.norm_ratio_sq == 1
    assert rep.bounds_hold


def test_report_consistency():
    rep = report("H", 3, 1)
    assert rep.f_k == Fraction(28, 3)
    assert rep.cosine_sq == Fraction(27, 28) == rep.norm_ratio_sq
    assert rep.lower_bound == Fraction(6, 11)


@pytest.mark.parametrize("family", ["X", "Bn"])
def test_colored_norm_bounds(family):
    for n in range(1, 8):
        s = sum_inverse_class_sizes(n)
        for k in (range(n + 1) if family == "X" else [None]):
            scale = family_scale(family, n, k)
            norm = beta_norm_squared(family, n, k)
            assert scale**2 * factorial(n) <= norm <= scale**2 * factorial(n) * s
            assert report(family, n, k).bounds_hold


def test_ratio_report():
    rows = r1_ratio_report(12, 2)
    assert set(rows) == set(partitions_of(12))
    balanced = [q for q, b in rows.values() if b <= Fraction(1, 3)]
    assert balanced and all(Fraction(1, 2) < q < Fraction(3, 2) for q in balanced)
    trivial, balance = rows[Partition((12,))]
    assert balance == 1 and abs(trivial - 1) > 1


def test_render():
    assert render(Fraction(28, 3)) == "9.33333"
    assert render(Fraction(1)) == "1"
