import random
from fractions import Fraction

import pytest
from mpmath import mpf, workprec

from galcensus.polynomials import (
    IntPoly,
    RatPoly,
    discriminant,
    discriminant_box_bound,
    discriminant_coeff_abs_sum,
    discriminant_of_tail,
    format_poly,
    monic_from_tail,
    poly_from_text,
    poly_square_root,
    resultant,
)

from oracles import sylvester_resultant


def test_poly_text_roundtrip():
    f = poly_from_text("1,0,0,0,0,1,3")
    assert f.coeffs == (3, 1, 0, 0, 0, 0, 1)
    assert format_poly(f) == "1,0,0,0,0,1,3"
    with pytest.raises(ValueError):
        poly_from_text("1,x,2")


def test_resultant_documented_examples():
    assert resultant(IntPoly([-2, 1]), IntPoly([-5, 1])) == 3
    assert resultant(IntPoly([1, 0, 1]), IntPoly([0, 1])) == 1


def test_resultant_of_cubic_with_derivative():
    # Res(f, f') for x^3 + p x + q carries the negated discriminant
    for coeffs in [(2, -3), (-1, 5), (0, 7)]:
        p, q = coeffs
        f = IntPoly([q, p, 0, 1])
        assert resultant(f, f.derivative()) == 4 * p**3 + 27 * q**2


def test_resultant_matches_sylvester_oracle():
    rng = random.Random(20240601)
    for _ in range(300):
        df, dg = rng.randint(1, 8), rng.randint(1, 8)
        f = IntPoly([rng.randint(-12, 12) for _ in range(df)] + [rng.choice([1, 2, -3])])
        g = IntPoly([rng.randint(-12, 12) for _ in range(dg)] + [rng.choice([1, -2, 5])])
        assert resultant(f, g) == sylvester_resultant(f, g)


def test_resultant_zero_inputs():
    with pytest.raises(ValueError):
        resultant(IntPoly([]), IntPoly([1, 1]))


def test_discriminant_classics():
    assert discriminant_of_tail([3, 5]) == 9 - 20  # b^2 - 4c
    assert discriminant_of_tail([0, -4, 2]) == -4 * (-4) ** 3 - 27 * 4
    assert discriminant_of_tail([0, 0, 0, 0, 0, 1]) == -46656
    with pytest.raises(ValueError):
        discriminant(IntPoly([1, 1]))


def test_discriminant_against_root_product():
    # disc = lc^(2n-2) * prod_(i<j) (a_i - a_j)^2, evaluated in ball arithmetic:
    # the exact integer must land inside the product ball
    from galcensus.balls import BallComplex
    from galcensus.roots import complex_roots_certified

    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(2, 7)
        f = IntPoly([rng.randint(-50, 50) for _ in range(n)] + [1])
        d = discriminant(f)
        if d == 0:
            continue
        with workprec(160):
            balls = complex_roots_certified(f, mpf(10) ** -25, start_prec=160, prec_cap=640)
            prod = BallComplex.exact_int(1)
            for i in range(n):
                for j in range(i + 1, n):
                    diff = balls[i] - balls[j]
                    prod = prod * (diff * diff)
            assert abs(prod.mid - d) <= prod.rad + mpf(10) ** -6


def test_box_bound_values_and_homogeneity():
    assert discriminant_box_bound(2, 1) == 5
    # exhaustive grid oracle for n = 3, X = 10
    grid_max = max(
        abs(discriminant_of_tail([0, p, q]))
        for p in range(-10, 11)
        for q in range(-10, 11)
    )
    assert grid_max == 6700
    assert discriminant_box_bound(3, 10) >= grid_max
    for n in (2, 3, 4, 5, 6):
        assert (
            discriminant_box_bound(n, 10) * 10 ** (2 * n - 2)
            == discriminant_box_bound(n, 100)
        )
    # the bound dominates on random full-tail points
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(2, 6)
        x = rng.randint(1, 8)
        tail = [rng.randint(-x, x) for _ in range(n)]
        assert abs(discriminant_of_tail(tail)) <= discriminant_box_bound(n, x)


def test_disc_abs_sums_against_symbolic_oracle():
    import sympy as sp

    for n in range(2, 7):
        x = sp.Symbol("x")
        a = sp.symbols(f"a1:{n + 1}")
        f = x**n + sum(a[i] * x ** (n - 1 - i) for i in range(n))
        poly = sp.Poly(sp.Poly(f, x).discriminant(), *a)
        assert discriminant_coeff_abs_sum(n) == sum(abs(c) for c in poly.coeffs())


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_disc_abs_sums_large_degrees(n):
    import sympy as sp

    x = sp.Symbol("x")
    a = sp.symbols(f"a1:{n + 1}")
    f = x**n + sum(a[i] * x ** (n - 1 - i) for i in range(n))
    poly = sp.Poly(sp.Poly(f, x).discriminant(), *a)
    assert discriminant_coeff_abs_sum(n) == sum(abs(c) for c in poly.coeffs())


def test_poly_square_root_examples():
    assert poly_square_root(RatPoly([1, 2, 1])) == RatPoly([1, 1])
    assert poly_square_root(RatPoly([1, 0, 1])) is None
    assert poly_square_root(RatPoly([9, 0, -12, 0, 4])) == RatPoly([-3, 0, 2])
    with pytest.raises(ValueError):
        poly_square_root(RatPoly([]))


def test_poly_square_root_roundtrip():
    rng = random.Random(99)
    for _ in range(500):
        deg = rng.randint(0, 10)
        s = RatPoly(
            [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(deg)]
            + [Fraction(rng.randint(1, 9), rng.randint(1, 4))]
        )
        got = poly_square_root(s * s)
        assert got is not None and (got == s or got == -s)


def test_poly_square_root_rejects_nonsquares():
    rng = random.Random(41)
    rejected = 0
    for _ in range(200):
        deg = rng.randint(1, 8)
        d = RatPoly([rng.randint(-9, 9) for _ in range(deg)] + [rng.randint(1, 9)])
        s = poly_square_root(d)
        if s is None:
            rejected += 1
        else:
            assert s * s == d
    assert rejected > 150  # random polynomials are almost never squares


def test_monic_from_tail():
    f = monic_from_tail([0, 2, -3, 1, 4, -5])
    assert f.degree == 6 and f.is_monic()
    assert f.coeffs == (-5, 4, 1, -3, 2, 0, 1)
