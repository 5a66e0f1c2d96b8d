"""Closed-form exponents and bounds for the field-counting records.

All rationals are exact; the one square root that appears is kept symbolic as
``rational + sqrt(rational)`` and only rendered to decimals on demand, so
table comparisons are bit-stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .groups import PermGroup, catalog_group, malle_a


@dataclass(frozen=True)
class ExactReal:
    """Value rat + sqrt(rad) with rat, rad exact rationals, rad >= 0."""

    rat: Fraction
    rad: Fraction = Fraction(0)

    def __float__(self) -> float:
        return float(self.rat) + math.sqrt(float(self.rad))

    def lt_fraction(self, q: Fraction) -> bool:
        rhs = Fraction(q) - self.rat
        if rhs < 0:
            return False
        return self.rad < rhs * rhs

    def gt_fraction(self, q: Fraction) -> bool:
        rhs = Fraction(q) - self.rat
        if rhs <= 0:
            return self.rad > rhs * rhs or (self.rad > 0 or rhs < 0)
        return self.rad > rhs * rhs

    def decimal(self, places: int = 6) -> str:
        """Correctly rounded decimal string (round half away from zero; the
        half case can only occur when the square-root part vanishes)."""
        guard = places + 6
        num, den = self.rad.numerator, self.rad.denominator
        scaled_sqrt_floor = isqrt(num * den * 10 ** (2 * guard))  # sqrt(rad)*10^g
        total = self.rat * 10**guard + Fraction(scaled_sqrt_floor, den)
        shift = 10 ** (guard - places)
        q, r = divmod(total, shift)
        value = int(q) + (1 if 2 * r >= shift else 0)
        sign = "-" if value < 0 else ""
        value = abs(value)
        return f"{sign}{value // 10**places}.{value % 10**places:0{places}d}"


def sigma(n: int) -> Fraction:
    """(n + 2) / 4."""
    if n < 2:
        raise ValueError("n >= 2 required")
    return Fraction(n + 2, 4)


def delta(n: int) -> Fraction:
    """sigma_n - 1/(2n-2)."""
    return sigma(n) - Fraction(1, 2 * n - 2)


def omega(n: int) -> Fraction:
    """sigma_n - 1/(2n-2) + 1/(2^(2*floor((n-1)/2)) * (2n-2))."""
    return delta(n) + Fraction(1, 2 ** (2 * ((n - 1) // 2)) * (2 * n - 2))


def imprimitive_bound(n: int) -> Fraction:
    """(n + 4) / 8, the exponent available through proper subextensions."""
    return Fraction(n + 4, 8)


def b_term(n: int, d: int) -> ExactReal:
    """sqrt(n / (4 (n-1) d))."""
    if d < 1:
        raise ValueError("d >= 1 required")
    return ExactReal(Fraction(0), Fraction(n, 4 * (n - 1) * d))


def n_term(n: int) -> Fraction:
    """n / (4n - 4), decreasing toward 1/4."""
    return Fraction(n, 4 * n - 4)


def factorial(n: int) -> int:
    return math.factorial(n)


def bhargava_B(n: int, group: PermGroup) -> Fraction:
    """sigma_n - 1 + 1/ind(G), for transitive G."""
    if group.degree != n:
        raise ValueError("degree mismatch")
    if not group.is_transitive():
        raise ValueError("the bound is stated for transitive groups")
    return sigma(n) - 1 + malle_a(group)


def main_E(n: int, group: PermGroup) -> ExactReal:
    """sigma_n - 1 - 1/(2n-2) + sqrt(n/(4(n-1)d)) + n/(4n-4), d = [S_n : G]."""
    if group.degree != n:
        raise ValueError("degree mismatch")
    if not group.is_transitive():
        raise ValueError("the bound is stated for transitive groups")
    d = factorial(n) // group.order
    if d == 1:
        raise ValueError("proper subgroups only (G = S_n has index 1)")
    rat = sigma(n) - 1 - Fraction(1, 2 * n - 2) + n_term(n)
    return ExactReal(rat, b_term(n, d).rad)


@dataclass(frozen=True)
class LabeledExponent:
    value: float
    exact: Fraction | None
    label: str
    expression: str


def best_known_exponent(n: int) -> LabeledExponent:
    """The sharpest published exponent for counting all degree-n fields."""
    if n < 2:
        raise ValueError("n >= 2 required")
    if n <= 5:
        return LabeledExponent(1.0, Fraction(1), "linear (known asymptotic)", "X")
    if n <= 158:
        w = omega(n)
        return LabeledExponent(float(w), w, "Bhargava-Shankar-Wang", f"X^({w})")
    val = 1.564 * math.log(n) ** 2
    return LabeledExponent(val, None, "Lemke Oliver-Thorne", "X^(1.564 (log n)^2)")


# -- coefficient boxes -----------------------------------------------------------


def _floor_root_pow(x: int, num: int, den: int, scale: int) -> int:
    """floor(scale * x^(num/den)) for integers x >= 1, exactly."""
    target = scale**den * x**num
    # integer den-th root by Newton, seeded from floats
    r = int(round(target ** (1.0 / den))) if target < 2**960 else 1 << (
        (target.bit_length() + den - 1) // den
    )
    r = max(r, 1)
    while r**den > target:
        r = (r * (den - 1) + target // r ** (den - 1)) // den
    while (r + 1) ** den <= target:
        r += 1
    return r


def schmidt_box(n: int, x: int, c: int = 1) -> list[tuple[int, int]]:
    """Inclusive ranges for (a_2, ..., a_n): |a_j| <= floor(c * x^(j/(2n-2))).

    The leading tail coefficient a_1 is pinned to zero (traceless form) and not
    part of the returned list.
    """
    if x < 1 or c < 1:
        raise ValueError("x >= 1 and c >= 1 required")
    out = []
    for j in range(2, n + 1):
        b = _floor_root_pow(x, j, 2 * n - 2, c)
        out.append((-b, b))
    return out


def box_cardinality(n: int, x: int, c: int = 1) -> int:
    total = 1
    for lo, hi in schmidt_box(n, x, c):
        total *= hi - lo + 1
    return total


# -- lopsided point-count predictions ---------------------------------------------


def weighted_height(monomials, bounds) -> float:
    """T = max over support monomials of prod bounds_i^(e_i)."""
    monomials = list(monomials)
    if not monomials:
        raise ValueError("empty monomial support")
    best = 0.0
    for expo in monomials:
        term = 1.0
        for e, b in zip(expo, bounds):
            term *= float(b) ** e
        best = max(best, term)
    return best


def bp_prediction(monomials, b1, b2) -> tuple[float, float]:
    """(T, predicted count scale) per the lopsided curve estimate:
    prediction = exp(log b1 * log b2 / log T)."""
    if b1 < 1 or b2 < 1:
        raise ValueError("bounds must be >= 1")
    t = weighted_height(monomials, (b1, b2))
    if t <= 1.0:
        raise ValueError("weighted height T = 1: exponent undefined")
    return t, math.exp(math.log(b1) * math.log(b2) / math.log(t))


def salberger_prediction(monomials, b1, b2, b3) -> tuple[float, float]:
    """(T, V3) with V3 = exp(sqrt(log b1 * log b2 * log b3 / log T))."""
    if min(b1, b2, b3) < 1:
        raise ValueError("bounds must be >= 1")
    t = weighted_height(monomials, (b1, b2, b3))
    if t <= 1.0:
        raise ValueError("weighted height T = 1: exponent undefined")
    v3 = math.exp(math.sqrt(math.log(b1) * math.log(b2) * math.log(b3) / math.log(t)))
    return t, v3


# -- tables ------------------------------------------------------------------------


RECORD_GROUPS = ("6T12", "6T14", "7T5", "8T48")


@dataclass(frozen=True)
class RecordRow:
    group: str
    degree: int
    order: int
    parity_even: bool
    index_in_symmetric: int
    malle_exponent: Fraction
    bhargava_bound: Fraction
    improved_bound: ExactReal

    def render(self, places: int = 2) -> dict:
        return {
            "G": self.group,
            "B(G)": f"{float(self.bhargava_bound):g}",
            "E(G)": self.improved_bound.decimal(places),
            "|G|": self.order,
            "Even?": "Yes" if self.parity_even else "No",
        }


def record_table() -> list[RecordRow]:
    rows = []
    for name in RECORD_GROUPS:
        g = catalog_group(name)
        n = g.degree
        rows.append(
            RecordRow(
                group=name,
                degree=n,
                order=g.order,
                parity_even=g.parity_even,
                index_in_symmetric=factorial(n) // g.order,
                malle_exponent=malle_a(g),
                bhargava_bound=bhargava_B(n, g),
                improved_bound=main_E(n, g),
            )
        )
    return rows


@dataclass(frozen=True)
class HistoryRow:
    year: int
    authors: str
    exponent_expression: str
    applies: str


def history_table() -> list[HistoryRow]:
    return [
        HistoryRow(1995, "Schmidt", "X^((n+2)/4)", "all n"),
        HistoryRow(2006, "Ellenberg, Venkatesh", "X^(exp(C sqrt(log n)))", "large n"),
        HistoryRow(2019, "Couveignes", "X^(C (log n)^3)", "large n"),
        HistoryRow(2020, "Lemke Oliver, Thorne", "X^(1.564 (log n)^2)", "best for n >= 159"),
    ]
