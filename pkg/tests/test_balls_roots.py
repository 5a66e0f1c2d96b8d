import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf, workprec

from galcensus.balls import BallComplex, PrecisionExceeded, ball_poly_eval
from galcensus.polynomials import IntPoly, discriminant, monic_from_tail
from galcensus.roots import complex_roots_certified


coeff_st = st.lists(st.integers(-40, 40), min_size=1, max_size=7)
point_st = st.fractions(
    min_value=-10, max_value=10, max_denominator=64
)


@given(coeff_st, point_st, point_st)
@settings(max_examples=120, deadline=None)
def test_ball_containment(coeffs, re, im):
    """Exact evaluation lies inside the ball produced by ball evaluation."""
    with workprec(64):
        z = BallComplex(0)
        z.mid = mp.mpc(mpf(re.numerator) / re.denominator, mpf(im.numerator) / im.denominator)
        z.rad = mpf(0)
        val = ball_poly_eval(coeffs, z)
    # exact complex arithmetic over Q(i)
    ere, eim = Fraction(0), Fraction(0)
    for c in reversed(coeffs):
        ere, eim = ere * re - eim * im + c, ere * im + eim * re
    with workprec(300):
        dist = abs(val.mid - mp.mpc(mpf(ere.numerator) / ere.denominator,
                                    mpf(eim.numerator) / eim.denominator))
        assert dist <= val.rad * (1 + mpf(2) ** -40) + mpf(2) ** -240


def test_ball_pow_and_scalars():
    with workprec(80):
        b = BallComplex(mp.mpc(2, 1))
        b.rad = mpf(1) / 1000
        sq = b * b
        cube = b**3
        assert abs(cube.mid - mp.mpc(2, 11)) < 1e-12
        assert cube.rad < 0.2
        shifted = b.add_int(5)
        assert abs(shifted.mid - mp.mpc(7, 1)) < 1e-12
        assert (b**0).mid == 1


def test_certify_integer():
    with workprec(64):
        b = BallComplex(mp.mpc(41.0000001, 0.0000002))
        b.rad = mpf(1) / 100
        assert b.certify_integer() == 41
        wide = BallComplex(41)
        wide.rad = mpf(2)
        assert wide.certify_integer() is None
        assert sorted(wide.integers_inside()) == [39, 40, 41, 42, 43]


def test_roots_of_quadratic():
    balls = complex_roots_certified(IntPoly([-1, 0, 1]), mpf(10) ** -25)
    centers = sorted(float(b.mid.real) for b in balls)
    assert abs(centers[0] + 1) < 1e-20 and abs(centers[1] - 1) < 1e-20


def test_roots_of_binomial_moduli():
    balls = complex_roots_certified(IntPoly([-2, 0, 0, 0, 0, 0, 1]), mpf(10) ** -25)
    m = 2 ** (1 / 6)
    for b in balls:
        assert abs(abs(complex(b.mid)) - m) < 1e-12


def test_traceless_root_sum_contains_zero():
    rng = random.Random(123)
    for _ in range(15):
        tail = [0] + [rng.randint(-20, 20) for _ in range(5)]
        f = monic_from_tail(tail)
        if discriminant(f) == 0:
            continue
        with workprec(128):
            balls = complex_roots_certified(f, mpf(10) ** -22)
            total = balls[0]
            for b in balls[1:]:
                total = total + b
            assert abs(total.mid) <= total.rad


def test_roots_are_disjoint_and_actual():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.randint(2, 7)
        f = IntPoly([rng.randint(-9, 9) for _ in range(n)] + [1])
        if discriminant(f) == 0:
            continue
        with workprec(128):
            balls = complex_roots_certified(f, mpf(10) ** -20)
            assert len(balls) == n
            for i in range(n):
                for j in range(i + 1, n):
                    assert not balls[i].overlaps(balls[j])
                val = ball_poly_eval(f.coeffs, balls[i])
                # f(center) must be tiny relative to the certified radius
                assert abs(val.mid) <= val.rad + mpf(10) ** -15


def test_repeated_roots_rejected():
    with pytest.raises(ValueError):
        complex_roots_certified(IntPoly([1, 2, 1]), mpf(10) ** -10)


def test_precision_cap_reported():
    f = IntPoly([1, 1, 0, 0, 0, 0, 1])
    with pytest.raises(PrecisionExceeded):
        complex_roots_certified(f, mpf(10) ** -200, start_prec=64, prec_cap=128)
