"""Complex ball arithmetic on top of mpmath.

A ball is a complex midpoint plus a radius that is maintained as an upper
bound for every exact value reachable from points of the operand balls; each
operation widens the radius by a small multiple of the working epsilon to
absorb midpoint rounding.  Radii are therefore sound but not tight.
"""

from __future__ import annotations

from mpmath import mp, mpc, mpf


class PrecisionExceeded(Exception):
    """Certification failed below the configured precision cap."""


def _eps() -> mpf:
    # several ulps of headroom at the current working precision
    return mpf(2) ** (4 - mp.prec)


class BallComplex:
    __slots__ = ("mid", "rad")

    def __init__(self, mid, rad=0):
        self.mid = mpc(mid)
        self.rad = mpf(rad)
        if self.rad < 0:
            raise ValueError("negative radius")

    @classmethod
    def exact_int(cls, n: int) -> "BallComplex":
        b = cls(0)
        b.mid = mpc(n)
        # integers wider than the mantissa are rounded on conversion
        b.rad = abs(n) * _eps() if abs(n).bit_length() >= mp.prec - 1 else mpf(0)
        return b

    def __repr__(self) -> str:
        return f"BallComplex({self.mid}, rad={self.rad})"

    # -- magnitude bounds ---------------------------------------------------

    def abs_upper(self) -> mpf:
        return (abs(self.mid) + self.rad) * (1 + _eps())

    def abs_lower(self) -> mpf:
        lo = abs(self.mid) * (1 - _eps()) - self.rad
        return lo if lo > 0 else mpf(0)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "BallComplex") -> "BallComplex":
        out = BallComplex(0)
        out.mid = self.mid + other.mid
        out.rad = (self.rad + other.rad + abs(out.mid) * _eps()) * (1 + _eps())
        return out

    def __sub__(self, other: "BallComplex") -> "BallComplex":
        out = BallComplex(0)
        out.mid = self.mid - other.mid
        out.rad = (self.rad + other.rad + abs(out.mid) * _eps()) * (1 + _eps())
        return out

    def __mul__(self, other: "BallComplex") -> "BallComplex":
        out = BallComplex(0)
        out.mid = self.mid * other.mid
        a1, a2 = abs(self.mid), abs(other.mid)
        out.rad = (
            a1 * other.rad
            + a2 * self.rad
            + self.rad * other.rad
            + (abs(out.mid) + 1) * 4 * _eps()
        ) * (1 + _eps())
        return out

    def add_int(self, n: int) -> "BallComplex":
        return self + BallComplex.exact_int(n)

    def mul_int(self, n: int) -> "BallComplex":
        return self * BallComplex.exact_int(n)

    def __pow__(self, k: int) -> "BallComplex":
        if k < 0:
            raise ValueError("only nonnegative integer powers")
        out = BallComplex.exact_int(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __neg__(self) -> "BallComplex":
        out = BallComplex(0)
        out.mid = -self.mid
        out.rad = self.rad
        return out

    # -- queries ---------------------------------------------------------------

    def overlaps(self, other: "BallComplex") -> bool:
        gap = abs(self.mid - other.mid) * (1 - _eps()) - (self.rad + other.rad)
        return gap <= 0

    def integers_inside(self) -> list[int]:
        """All integers k that may satisfy |k - ball| <= rad (real line candidates)."""
        if abs(self.mid.imag) > self.rad:
            return []
        from mpmath import ceil as mpceil, floor as mpfloor

        lo = int(mpceil(self.mid.real - self.rad - _eps()))
        hi = int(mpfloor(self.mid.real + self.rad + _eps()))
        return [k for k in range(lo, hi + 1)]

    def certify_integer(self) -> int | None:
        """The unique integer this ball can contain, if the radius pins one down.

        Only meaningful when the exact value is known a priori to be an
        integer; None signals that the radius is too large to decide.
        """
        if self.rad >= mpf(1) / 2:
            return None
        from mpmath import nint

        cand = int(nint(self.mid.real))
        if abs(self.mid.real - cand) <= self.rad and abs(self.mid.imag) <= self.rad:
            return cand
        return None


def ball_poly_eval(coeffs, z: BallComplex) -> BallComplex:
    """Evaluate an integer-coefficient polynomial (ascending) at a ball, by Horner."""
    out = BallComplex.exact_int(0)
    for c in reversed(list(coeffs)):
        out = out * z
        if c:
            out = out.add_int(c)
    return out
