import random
from fractions import Fraction

import pytest

from hallwalk.errors import DimensionError
from hallwalk.intlinalg import (
    determinant,
    inverse_unimodular,
    lattice_index,
    simplex_is_unimodular,
    transpose,
    xgcd,
)


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def test_determinant_identity():
    assert determinant([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1


def test_determinant_triangular():
    assert determinant([[1, 2], [0, 1]]) == 1


def test_determinant_hand_expansion():
    # 2*5 - 3*4
    assert determinant([[2, 3], [4, 5]]) == -2


def test_determinant_singular_and_swaps():
    assert determinant([[0, 1], [0, 5]]) == 0
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[0, 0, 2], [1, 0, 0], [0, 3, 0]]) == 6


def test_determinant_rejects_non_square():
    with pytest.raises(DimensionError):
        determinant([[1, 2, 3], [4, 5, 6]])


def test_determinant_multiplicative_on_random_matrices():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 4)
        a = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        b = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert determinant(matmul(a, b)) == determinant(a) * determinant(b)


def test_determinant_of_transpose():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 4)
        a = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        assert determinant(a) == determinant(transpose(a))


def test_rational_comparison_matches_cross_multiplication():
    # a/b < c/d iff a*d < c*b whenever b, d > 0
    for a in range(-4, 5):
        for b in range(1, 5):
            for c in range(-4, 5):
                for d in range(1, 5):
                    assert (Fraction(a, b) < Fraction(c, d)) == (a * d < c * b)


def test_simplex_unimodularity():
    assert simplex_is_unimodular([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert not simplex_is_unimodular([(0, 0), (2, 0), (0, 1)])  # determinant 2
    assert simplex_is_unimodular([(0, 0), (1, 2), (0, 1)])


def test_simplex_wrong_count():
    with pytest.raises(DimensionError):
        simplex_is_unimodular([(0, 0), (1, 0)])


def test_inverse_unimodular_roundtrip():
    rng = random.Random(3)
    found = 0
    while found < 25:
        n = rng.randint(1, 4)
        m = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        if abs(determinant(m)) != 1:
            continue
        found += 1
        identity = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        assert matmul(inverse_unimodular(m), m) == identity


def test_xgcd():
    from math import gcd

    for a in range(-12, 13):
        for b in range(-12, 13):
            x, y, g = xgcd(a, b)
            assert x * a + y * b == g
            assert abs(g) == gcd(a, b)


def test_lattice_index():
    assert lattice_index([(1, 0), (0, 1)], 2) == 1
    assert lattice_index([(2, 0), (0, 1)], 2) == 2
    assert lattice_index([(2, 0), (0, 3)], 2) == 6
    assert lattice_index([(1, 1), (1, -1)], 2) == 2
    assert lattice_index([(1, 2)], 2) == 0  # rank deficient
    assert lattice_index([(3, 1), (1, 0), (0, 1)], 2) == 1
