import math
from fractions import Fraction

import pytest

from galcensus.exponents import (
    ExactReal,
    b_term,
    best_known_exponent,
    bhargava_B,
    bp_prediction,
    box_cardinality,
    delta,
    history_table,
    imprimitive_bound,
    main_E,
    n_term,
    omega,
    record_table,
    salberger_prediction,
    schmidt_box,
    sigma,
)
from galcensus.groups import catalog_group


def test_sigma_values():
    assert sigma(6) == 2
    assert sigma(7) == Fraction(9, 4)
    assert sigma(8) == Fraction(5, 2)
    with pytest.raises(ValueError):
        sigma(1)


def test_delta_values():
    assert delta(6) == Fraction(19, 10)
    assert delta(2) == Fraction(1, 2)
    for n in range(2, 30):
        assert delta(n) < sigma(n)


def test_omega_values():
    assert omega(6) == Fraction(2) - Fraction(1, 10) + Fraction(1, 160)
    assert float(omega(6)) == 1.90625
    for n in range(2, 160):
        assert delta(n) < omega(n) < sigma(n)
    # the gap shrinks like a power of two
    assert omega(40) - delta(40) < Fraction(1, 2**38)


def test_bhargava_bounds():
    assert bhargava_B(6, catalog_group("6T14")) == Fraction(3, 2)
    assert bhargava_B(6, catalog_group("6T12")) == Fraction(3, 2)
    assert bhargava_B(7, catalog_group("7T5")) == Fraction(7, 4)
    assert bhargava_B(8, catalog_group("8T48")) == Fraction(2)
    with pytest.raises(ValueError):
        bhargava_B(6, catalog_group("C", 7))


def test_main_E_decimals():
    assert main_E(6, catalog_group("6T14")).decimal(2) == "1.42"
    assert main_E(6, catalog_group("6T12")).decimal(2) == "1.36"
    assert main_E(7, catalog_group("7T5")).decimal(2) == "1.56"
    assert main_E(8, catalog_group("8T48")).decimal(2) == "1.81"
    with pytest.raises(ValueError):
        main_E(6, catalog_group("S", 6))  # index 1 not covered


def test_exact_real_rendering_matches_float():
    for n, name in ((6, "6T12"), (6, "6T14"), (7, "7T5"), (8, "8T48")):
        e = main_E(n, catalog_group(name))
        assert abs(float(e) - float(e.decimal(12))) < 1e-11


def test_record_table_full():
    rows = {r.group: r for r in record_table()}
    expected = {
        "6T12": (Fraction(3, 2), "1.36", 60, True, 12),
        "6T14": (Fraction(3, 2), "1.42", 120, False, 6),
        "7T5": (Fraction(7, 4), "1.56", 168, True, 30),
        "8T48": (Fraction(2), "1.81", 1344, True, 30),
    }
    for name, (b, e, order, even, d) in expected.items():
        row = rows[name]
        assert row.bhargava_bound == b
        assert row.improved_bound.decimal(2) == e
        assert row.order == order
        assert row.parity_even == even
        assert row.index_in_symmetric == d
        assert row.malle_exponent == Fraction(1, 2)
        # the improvement is strict
        assert row.improved_bound.lt_fraction(row.bhargava_bound)


def test_imprimitive_bound():
    assert imprimitive_bound(6) == Fraction(5, 4)
    assert imprimitive_bound(8) == Fraction(3, 2)
    # (n+4)/8 <= E for the sextic record rows
    for name in ("6T12", "6T14"):
        assert main_E(6, catalog_group(name)).gt_fraction(imprimitive_bound(6))


def test_b_term_monotone_and_n_term():
    for n in (6, 7, 8):
        vals = [b_term(n, d).rad for d in (4, 6, 12, 30, 120)]
        assert vals == sorted(vals, reverse=True)
    assert n_term(6) == Fraction(3, 10)
    seq = [n_term(n) for n in range(2, 40)]
    assert seq == sorted(seq, reverse=True)
    assert n_term(1000) > Fraction(1, 4)
    # B_6(6) < N_6 (the d >= 4 regime)
    assert b_term(6, 6).rad < n_term(6) ** 2


def test_best_known():
    assert best_known_exponent(5).value == 1.0
    assert best_known_exponent(100).exact == omega(100)
    lo = best_known_exponent(200)
    assert lo.exact is None
    assert abs(lo.value - 1.564 * math.log(200) ** 2) < 1e-12
    assert len(history_table()) == 4


def test_schmidt_box_examples():
    ranges = schmidt_box(6, 10**10)
    assert ranges == [
        (-100, 100),
        (-1000, 1000),
        (-10000, 10000),
        (-100000, 100000),
        (-1000000, 1000000),
    ]
    assert schmidt_box(3, 16) == [(-4, 4), (-8, 8)]
    # exponents j/(2n-2) for n=3 are 1/2 and 3/4
    assert schmidt_box(3, 2**8) == [(-(2**4), 2**4), (-(2**6), 2**6)]
    with pytest.raises(ValueError):
        schmidt_box(6, 0)


def test_schmidt_box_floor_exact():
    # floor(C X^(j/(2n-2))) without float drift on near-integer powers
    ranges = schmidt_box(6, 1000)
    assert [hi for _, hi in ranges] == [3, 7, 15, 31, 63]
    ranges = schmidt_box(6, 10**5, 2)
    assert [hi for _, hi in ranges] == [20, 63, 200, 632, 2000]


def test_box_volume_exponent():
    # sum of the range exponents telescopes to sigma_n exactly:
    # sum_{j=2..n} j/(2n-2) = (n+2)/4
    for n in range(3, 9):
        expo = sum(Fraction(j, 2 * n - 2) for j in range(2, n + 1))
        assert expo == sigma(n)
    n = 6
    big, small = box_cardinality(n, 10**8), box_cardinality(n, 10**6)
    observed = math.log(big / small) / math.log(100)
    assert abs(observed - float(sigma(n))) < 0.05


def test_bp_prediction_parabola():
    t, pred = bp_prediction([(2, 0), (0, 1)], 100, 10**4)
    assert t == 10**4
    assert abs(pred - 100) < 1e-9  # H^(1/2) for the degree-2 curve
    # symmetry under swapping the two coordinates
    t2, pred2 = bp_prediction([(0, 2), (1, 0)], 10**4, 100)
    assert (t, pred) == (t2, pred2)
    # B = 1 collapses the prediction
    t3, pred3 = bp_prediction([(1, 1), (2, 0)], 1, 7)
    assert pred3 == 1.0
    with pytest.raises(ValueError):
        bp_prediction([(1, 0)], 1, 1)
    with pytest.raises(ValueError):
        bp_prediction([], 2, 2)


def test_salberger_prediction():
    t, v3 = salberger_prediction([(2, 0, 0), (0, 1, 1)], 10, 10, 10)
    assert t == 100
    expect = math.exp(math.sqrt(math.log(10) ** 3 / math.log(100)))
    assert abs(v3 - expect) < 1e-12
    with pytest.raises(ValueError):
        salberger_prediction([(0, 0, 1)], 1, 1, 1)


def test_exact_real_decimal_rational():
    assert ExactReal(Fraction(3, 2)).decimal(2) == "1.50"
    assert ExactReal(Fraction(-7, 4)).decimal(2) == "-1.75"
    assert ExactReal(Fraction(0), Fraction(2)).decimal(6) == "1.414214"
