import itertools
import random

import pytest

from galcensus.irreducibility import (
    is_irreducible_over_q,
    monic_integer_factor,
    sieve_degree_sums,
)
from galcensus.polynomials import IntPoly, discriminant

from oracles import reducible_bruteforce_deg_le4


def test_examples():
    assert not is_irreducible_over_q(IntPoly([-1, 0, 0, 0, 0, 0, 1]))  # x^6 - 1
    assert is_irreducible_over_q(IntPoly([-2, 0, 1]))  # x^2 - 2
    assert is_irreducible_over_q(IntPoly([1, 1, 0, 0, 0, 0, 1]))  # x^6 + x + 1
    assert is_irreducible_over_q(IntPoly([7, 1]))
    with pytest.raises(ValueError):
        is_irreducible_over_q(IntPoly([3]))


def test_zero_discriminant_is_reducible():
    f = IntPoly([1, 2, 1])  # (x+1)^2
    assert not is_irreducible_over_q(f)


def test_nonmonic():
    assert not is_irreducible_over_q(IntPoly([-2, 0, 2]))  # 2(x^2 - 1)... actually 2x^2-2
    assert is_irreducible_over_q(IntPoly([-1, 0, 3]))  # 3x^2 - 1
    assert not is_irreducible_over_q(IntPoly([1, 2, 0, 0, 1, 2]))  # (2x+1)(x^4+1)


def test_monic_factor_finder():
    f = IntPoly([1, 0, 1]) * IntPoly([-2, 0, 0, 1])
    g = monic_integer_factor(f)
    assert g in (IntPoly([1, 0, 1]), IntPoly([-2, 0, 0, 1]))
    assert monic_integer_factor(IntPoly([1, 1, 0, 0, 0, 0, 1])) is None


def test_sieve_proves_most_irreducible():
    mask = sieve_degree_sums(IntPoly([-2, 0, 1]))
    assert mask == (1 << 2) | 1


def test_exhaustive_against_bruteforce_deg_le4():
    # every monic polynomial of degree <= 4 with coefficients in [-5, 5]
    for deg in (2, 3, 4):
        for tail in itertools.product(range(-5, 6), repeat=deg):
            f = IntPoly(list(tail) + [1])
            expect = not reducible_bruteforce_deg_le4(f)
            assert is_irreducible_over_q(f) == expect, f.coeffs


def test_random_products_detected():
    rng = random.Random(17)
    for _ in range(60):
        d1, d2 = rng.randint(1, 3), rng.randint(1, 3)
        g = IntPoly([rng.randint(-6, 6) for _ in range(d1)] + [1])
        h = IntPoly([rng.randint(-6, 6) for _ in range(d2)] + [1])
        assert not is_irreducible_over_q(g * h)
