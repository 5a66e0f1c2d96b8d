"""Exact polynomial reconstruction from evaluations on integer grids.

Everything here is over Q (fractions), with results usually landing in Z.
Used wherever a closed polynomial identity is recovered from point values:
discriminant expansions, discriminant specializations along lines, and the
trivariate specialization of the sextic resolvent.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import RatPoly


def lagrange_univariate(points, values) -> RatPoly:
    """Interpolating polynomial through (points[i], values[i]), exact over Q."""
    n = len(points)
    if len(values) != n or len(set(points)) != n:
        raise ValueError("need matching lists with distinct nodes")
    # Newton form with divided differences keeps the arithmetic small
    xs = [Fraction(p) for p in points]
    table = [Fraction(v) for v in values]
    coeffs = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(n - level)
        ]
        coeffs.append(table[0])
    # expand Newton basis prod (x - x_j)
    poly = RatPoly((coeffs[-1],))
    for k in range(n - 2, -1, -1):
        poly = poly * RatPoly((-xs[k], 1)) - RatPoly((-coeffs[k],))
    return poly


def _grid(bound: int) -> list[int]:
    # symmetric small nodes: 0, 1, -1, 2, -2, ...
    out = [0]
    k = 1
    while len(out) < bound + 1:
        out.append(k)
        if len(out) < bound + 1:
            out.append(-k)
        k += 1
    return out


def interpolate_integer_polynomial(func, degree_bounds) -> dict[tuple[int, ...], int]:
    """Recover a multivariate integer polynomial as {exponent tuple: coefficient}.

    ``func`` maps an integer point (one value per variable) to an exact value;
    ``degree_bounds[i]`` bounds the degree in variable i.  Raises if any
    recovered coefficient is non-integral.
    """
    result = _interp_rec(func, list(degree_bounds), ())
    out: dict[tuple[int, ...], int] = {}
    for expo, coeff in result.items():
        if coeff == 0:
            continue
        frac = Fraction(coeff)
        if frac.denominator != 1:
            raise ValueError(f"non-integer coefficient {frac} at {expo}")
        out[expo] = int(frac)
    return out


def _interp_rec(func, bounds, prefix):
    if not bounds:
        return {(): Fraction(func(prefix))}
    head, *rest = bounds
    nodes = _grid(head)
    partials = [_interp_rec(func, rest, prefix + (x,)) for x in nodes]
    keys = set()
    for p in partials:
        keys.update(p.keys())
    out: dict[tuple[int, ...], Fraction] = {}
    for key in keys:
        vals = [p.get(key, Fraction(0)) for p in partials]
        poly = lagrange_univariate(nodes, vals)
        for k, c in enumerate(poly.coeffs):
            if c:
                out[(k,) + key] = c
    return out


def evaluate_sparse(poly: dict[tuple[int, ...], int], point) -> int:
    acc = 0
    for expo, coeff in poly.items():
        term = coeff
        for e, x in zip(expo, point):
            if e:
                term *= x**e
        acc += term
    return acc


def total_degree(poly: dict[tuple[int, ...], int]) -> int:
    return max((sum(e) for e in poly), default=-1)
