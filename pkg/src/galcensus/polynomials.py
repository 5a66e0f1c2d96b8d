"""Exact univariate polynomial arithmetic over Z and Q.

Coefficients are stored ascending (index = degree of the term).  The CLI/text
format is the opposite: comma-separated integers from the leading term down,
e.g. "1,0,0,0,0,1,3" for x^6 + x + 3.

Resultant convention, fixed once for the whole package:

    resultant(f, g) = lc(g)^deg(f) * prod_{g(beta)=0} f(beta),

the determinant of the Sylvester matrix whose top block holds g's coefficient
rows.  With it, discriminant(f) = (-1)^(n(n-1)/2) resultant(f, f') / lc(f).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt


class IntPoly:
    """Dense univariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[k] + other[k] for k in range(n))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[k] - other[k] for k in range(n))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def derivative(self) -> "IntPoly":
        return IntPoly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __repr__(self) -> str:
        return f"IntPoly({format_poly(self)!r})"


def poly_from_text(text: str) -> IntPoly:
    """Parse "c_n,...,c_0" (leading coefficient first)."""
    parts = [p.strip() for p in text.strip().split(",")]
    try:
        desc = [int(p) for p in parts]
    except ValueError as e:
        raise ValueError(f"bad polynomial text {text!r}") from e
    return IntPoly(reversed(desc))


def format_poly(f: IntPoly) -> str:
    if f.is_zero():
        return "0"
    return ",".join(str(c) for c in reversed(f.coeffs))


def monic_from_tail(tail) -> IntPoly:
    """x^n + a_1 x^(n-1) + ... + a_n from the vector (a_1, ..., a_n)."""
    tail = list(tail)
    return IntPoly(list(reversed(tail)) + [1])


# -- resultants and discriminants ---------------------------------------------


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder: lc(b)^(da-db+1) * a modulo b, over Z."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    r = list(a)
    for _ in range(da - db + 1):
        dr = len(r) - 1
        if dr < db:
            r = [c * lb for c in r]
            continue
        lead = r[-1]
        r = [c * lb for c in r[:-1]]
        for j in range(db):
            r[dr - db + j] -= lead * b[j]
        while r and r[-1] == 0:
            r.pop()
    return r


def _resultant_std(f: IntPoly, g: IntPoly) -> int:
    """Standard resultant lc(f)^deg(g) * prod_{f(alpha)=0} g(alpha), by subresultant PRS."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    a, b = list(f.coeffs), list(g.coeffs)
    sign = 1
    if len(a) - 1 < len(b) - 1:
        if ((len(a) - 1) * (len(b) - 1)) % 2:
            sign = -sign
        a, b = b, a
    if len(b) == 1:
        return sign * b[0] ** (len(a) - 1)
    gg, hh = 1, 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        r = _pseudo_rem(a, b)
        if not r:
            return 0  # common factor of positive degree
        div = gg * hh**delta
        a, b = b, [c // div for c in r]
        gg = a[-1]
        if delta > 0:
            hh = gg**delta // hh ** (delta - 1)
        if len(b) == 1:
            da = len(a) - 1
            res = b[0] ** da // hh ** (da - 1) if da > 1 else b[0] ** da
            return sign * res


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant under the package convention (see module docstring)."""
    df, dg = f.degree, g.degree
    if df < 0 or dg < 0:
        raise ValueError("resultant of the zero polynomial")
    r = _resultant_std(f, g)
    return -r if (df * dg) % 2 else r


def discriminant(f: IntPoly) -> int:
    """Exact discriminant; zero iff f has a repeated complex root."""
    n = f.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    num = sign * r
    q, rem = divmod(num, f.leading)
    assert rem == 0, "discriminant division must be exact"
    return q


def discriminant_of_tail(tail) -> int:
    """Discriminant of x^n + a_1 x^(n-1) + ... + a_n given (a_1, ..., a_n)."""
    return discriminant(monic_from_tail(tail))


# Sum of absolute values of the coefficients of the fully expanded generic
# discriminant of x^n + a_1 x^(n-1) + ... + a_n.  Degrees 2..5 are recomputed
# by exact interpolation; 6..8 were expanded once offline and are pinned here
# (the test suite re-derives them against an independent symbolic expansion).
_DISC_ABS_COEFF_SUM = {6: 1561993, 7: 100558026, 8: 8658356285}


@lru_cache(maxsize=None)
def discriminant_coeff_abs_sum(n: int) -> int:
    if n < 2:
        raise ValueError("need n >= 2")
    if n in _DISC_ABS_COEFF_SUM:
        return _DISC_ABS_COEFF_SUM[n]
    if n > 8:
        raise ValueError("discriminant expansion supported for n <= 8")
    from .interp import interpolate_integer_polynomial

    # per-variable degree bounds: total degree <= 2n-2, weighted degree = n(n-1)
    bounds = [min(2 * n - 2, n * (n - 1) // i) for i in range(1, n + 1)]
    poly = interpolate_integer_polynomial(
        lambda pt: discriminant_of_tail(pt), bounds
    )
    return sum(abs(c) for c in poly.values())


def discriminant_box_bound(n: int, x: int) -> int:
    """M with: |a_i| <= x for all i implies |discriminant| <= M (needs x >= 1).

    Every expanded-discriminant monomial has total degree at most 2n-2, so the
    coefficient absolute sum times x^(2n-2) dominates; the bound is exactly
    homogeneous of degree 2n-2 in x.
    """
    if x < 1:
        raise ValueError("x >= 1 required")
    return discriminant_coeff_abs_sum(n) * x ** (2 * n - 2)


# -- rational polynomials ------------------------------------------------------


class RatPoly:
    """Dense univariate polynomial over Q (coefficients are Fractions)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_int(cls, f: IntPoly) -> "RatPoly":
        return cls(f.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __call__(self, x):
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        if self.is_zero() or other.is_zero():
            return RatPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self[k] - other[k] for k in range(n))

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self.coeffs]})"


def _fraction_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def poly_square_root(d: RatPoly) -> RatPoly | None:
    """s with s*s == d over Q, normalized to positive leading coefficient, else None."""
    if d.is_zero():
        raise ValueError("square root of the zero polynomial")
    n = d.degree
    if n % 2:
        return None
    lead = _fraction_sqrt(d.coeffs[-1])
    if lead is None:
        return None
    m = n // 2
    s = [Fraction(0)] * (m + 1)
    s[m] = lead
    # match coefficients from the top down: descent on d - s^2
    for k in range(m - 1, -1, -1):
        # coefficient of x^(k+m) in s^2, excluding the 2*s[k]*s[m] term
        acc = Fraction(0)
        for i in range(k + 1, m):
            j = k + m - i
            if 0 <= j <= m:
                acc += s[i] * s[j]
        s[k] = (d[k + m] - acc) / (2 * lead)
    cand = RatPoly(s)
    return cand if (cand * cand) == d else None


def rational_is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n
