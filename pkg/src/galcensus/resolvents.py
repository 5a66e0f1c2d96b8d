"""Coset resolvents with certified integer coefficients.

Three invariants drive everything:

* the classic product invariant r(sigma) = sum_{tau in K} prod_i root_{sigma
  tau(i)}^i, giving a monic resolvent of degree [S_n : K] in y;
* its weighted generalization r_{w,e,shift} (weights w, exponents e, additive
  shift), used when a separable resolvent must be hunted down;
* the sextic degree-10 invariant built from five synthemes, whose stabilizer
  is the catalog copy of PGL(2,5); its degree-6 resolvent is the workhorse of
  the sextic census.

Resolvent coefficients are elementary symmetric functions of certified coset
values, hence exact integers once every coefficient ball has radius < 1/2;
precision escalates (doubling, capped) until that rounding certifies.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product as iproduct

from mpmath import mp, mpf, workprec

from .balls import BallComplex, PrecisionExceeded
from .groups import SEXTIC_SYNTHEMES, PermGroup, catalog_group, coset_representatives
from .perms import Permutation
from .polynomials import IntPoly, discriminant, format_poly, monic_from_tail
from .roots import PREC_CAP, complex_roots_certified

__all__ = [
    "ResolventParams",
    "ResolventPoly",
    "SearchBudgetExceeded",
    "resolvent_value",
    "build_resolvent",
    "resolvent_is_separable",
    "find_separable_params",
    "stauduhar_theta",
    "stauduhar_integer_root_test",
    "IntegerRootOutcome",
    "interpolate_surface",
    "elementary_from_monic_tail",
    "monic_tail_from_elementary",
]


class SearchBudgetExceeded(Exception):
    """Parameter search exhausted its budget without finding separability."""


@dataclass(frozen=True)
class ResolventParams:
    """Weights (one per subgroup element), per-index exponents, additive shift."""

    weights: tuple[int, ...]
    exponents: tuple[int, ...]
    shift: int = 0

    def __post_init__(self):
        if any(w < 1 for w in self.weights) or any(e < 1 for e in self.exponents):
            raise ValueError("weights and exponents must be positive")

    def validate_for(self, group: PermGroup):
        if len(self.weights) != group.order:
            raise ValueError(
                f"need {group.order} weights (one per subgroup element), got {len(self.weights)}"
            )
        if len(self.exponents) != group.degree:
            raise ValueError(
                f"need {group.degree} exponents (one per point), got {len(self.exponents)}"
            )


@dataclass(frozen=True)
class ResolventPoly:
    """Monic integer polynomial in y of degree [S_n : K], with provenance."""

    coeffs: tuple[int, ...]  # ascending, length degree+1, leading 1
    group_name: str
    source_poly: str
    params: ResolventParams | None
    cert_radius: float

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def as_int_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def __call__(self, y: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc

    def to_json(self) -> str:
        return json.dumps(
            {
                "degree": self.degree,
                "coefficients": [str(c) for c in reversed(self.coeffs)],
                "group": self.group_name,
                "source_poly": self.source_poly,
                "params": None
                if self.params is None
                else {
                    "weights": list(self.params.weights),
                    "exponents": list(self.params.exponents),
                    "shift": self.params.shift,
                },
                "cert_radius": self.cert_radius,
            }
        )


# -- invariant evaluation -------------------------------------------------------


def resolvent_value(
    roots: list[BallComplex],
    rep: Permutation,
    group: PermGroup,
    params: ResolventParams,
) -> BallComplex:
    """Certified value of the weighted invariant at one coset representative."""
    params.validate_for(group)
    n = group.degree
    if len(roots) != n:
        raise ValueError("root count does not match the group degree")
    shifted = [r.add_int(params.shift) for r in roots] if params.shift else list(roots)
    total = BallComplex.exact_int(0)
    for k, w in enumerate(params.weights, start=1):
        # cache powers (alpha_j + shift)^(k * e_i) for this k
        needed = sorted({k * e for e in params.exponents})
        powers = {j: {m: shifted[j] ** m for m in needed} for j in range(n)}
        inner = BallComplex.exact_int(0)
        for tau in group.elements:
            term = BallComplex.exact_int(1)
            for i in range(n):
                term = term * powers[rep(tau(i))][k * params.exponents[i]]
            inner = inner + term
        total = total + inner.mul_int(w)
    return total


def _classic_value(roots, rep: Permutation, group: PermGroup) -> BallComplex:
    """The unweighted invariant sum_{tau in K} prod_i root_{sigma tau(i)}^i."""
    n = group.degree
    powers = [[None] + [roots[j] ** i for i in range(1, n + 1)] for j in range(n)]
    total = BallComplex.exact_int(0)
    for tau in group.elements:
        term = powers[rep(tau(0))][1]
        for i in range(1, n):
            term = term * powers[rep(tau(i))][i + 1]
        total = total + term
    return total


_THETA_GROUP_NAME = "6T14"


def _is_syntheme_stabilizer(group: PermGroup) -> bool:
    return group.degree == 6 and group.order == 120 and group == catalog_group("6T14")


def stauduhar_theta(roots: list[BallComplex], sigma: Permutation) -> BallComplex:
    """The degree-10 syntheme product invariant, indices permuted by sigma."""
    if len(roots) != 6:
        raise ValueError("the syntheme invariant needs exactly 6 roots")
    total = BallComplex.exact_int(1)
    for syn in SEXTIC_SYNTHEMES:
        factor = BallComplex.exact_int(0)
        for a, b in syn:
            factor = factor + roots[sigma(a)] * roots[sigma(b)]
        total = total * factor
    return total


# -- building resolvents ---------------------------------------------------------


def _expand_from_roots(values: list[BallComplex]) -> list[BallComplex]:
    """Ball coefficients (ascending) of the monic prod (y - v)."""
    coeffs = [BallComplex.exact_int(1)]
    for v in values:
        nxt = [BallComplex.exact_int(0) for _ in range(len(coeffs) + 1)]
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - c * v
        coeffs = nxt
    return coeffs


def _certify_coeffs(ball_coeffs: list[BallComplex]) -> tuple[list[int], float] | None:
    out = []
    worst = mpf(0)
    for b in ball_coeffs:
        k = b.certify_integer()
        if k is None:
            return None
        worst = max(worst, b.rad)
        out.append(k)
    return out, float(worst)


def coset_values(
    f: IntPoly,
    group: PermGroup,
    params: ResolventParams | None,
    prec: int,
) -> list[BallComplex]:
    """One certified invariant value per left coset of the subgroup, fixed order."""
    reps = coset_representatives(group)
    with workprec(prec):
        roots = complex_roots_certified(
            f, mpf(2) ** (-prec // 2), start_prec=prec, prec_cap=prec
        )
        use_theta = params is None and _is_syntheme_stabilizer(group)
        vals = []
        for rep in reps:
            if use_theta:
                vals.append(stauduhar_theta(roots, rep))
            elif params is None:
                vals.append(_classic_value(roots, rep, group))
            else:
                vals.append(resolvent_value(roots, rep, group, params))
    return vals


def build_resolvent(
    f: IntPoly,
    group: PermGroup,
    params: ResolventParams | None = None,
    start_prec: int = 192,
    prec_cap: int = PREC_CAP,
) -> ResolventPoly:
    """Exact integer resolvent of f for the subgroup K, monic of degree [S_n:K] in y.

    With params=None the classic invariant is used (the syntheme invariant when
    K is the catalog PGL(2,5) copy).  Certification: every elementary-symmetric
    coefficient ball must round to an integer with pre-rounding radius < 1/2.
    """
    n = f.degree
    if not f.is_monic():
        raise ValueError("resolvents are built for monic polynomials")
    if n != group.degree:
        raise ValueError("polynomial degree must match the group degree")
    if n >= 2 and discriminant(f) == 0:
        raise ValueError("repeated roots: resolvent needs a squarefree polynomial")
    if params is not None:
        params.validate_for(group)
    prec = start_prec
    while prec <= prec_cap:
        try:
            vals = coset_values(f, group, params, prec)
        except PrecisionExceeded:
            prec *= 2
            continue
        with workprec(prec):
            certified = _certify_coeffs(_expand_from_roots(vals))
        if certified is not None:
            coeffs, worst = certified
            name = group.name or f"order-{group.order} subgroup"
            return ResolventPoly(
                coeffs=tuple(coeffs),
                group_name=name,
                source_poly=format_poly(f),
                params=params,
                cert_radius=worst,
            )
        prec *= 2
    raise PrecisionExceeded(
        f"resolvent coefficients of {format_poly(f)} did not certify below {prec_cap} bits"
    )


def resolvent_is_separable(r: ResolventPoly) -> bool:
    """True iff the exact integer discriminant in y is nonzero."""
    if r.degree < 2:
        return True
    return discriminant(r.as_int_poly()) != 0


def _param_candidates(order: int, degree: int, cap: int, budget: int):
    """Deterministic stream of (weights, exponents): staircases first, then
    lexicographic exponent vectors with all-ones weights, then weight bumps."""
    ones_w = (1,) * order
    stair = tuple(min(i, cap) for i in range(1, degree + 1))
    seen = set()
    emitted = 0

    def emit(w, e):
        nonlocal emitted
        key = (w, e)
        if key in seen:
            return None
        seen.add(key)
        emitted += 1
        return ResolventParams(weights=w, exponents=e, shift=0)

    first = emit(ones_w, stair)
    if first:
        yield first
    for e in iproduct(range(1, cap + 1), repeat=degree):
        if emitted >= budget:
            return
        got = emit(ones_w, tuple(e))
        if got:
            yield got
    for bump_pos in range(order):
        for e in (stair, (1,) * degree):
            if emitted >= budget:
                return
            w = tuple(2 if i == bump_pos else 1 for i in range(order))
            got = emit(w, e)
            if got:
                yield got


def find_separable_params(
    f: IntPoly,
    group: PermGroup,
    cap: int,
    height: int,
    budget: int = 512,
) -> ResolventParams:
    """Deterministic search for weights/exponents (entries <= cap, shift = cap^3 *
    height) making the resolvent separable; raises SearchBudgetExceeded."""
    if cap < 1 or height < 1:
        raise ValueError("cap and height must be positive")
    shift = cap**3 * height
    for cand in _param_candidates(group.order, group.degree, cap, budget):
        params = ResolventParams(cand.weights, cand.exponents, shift)
        try:
            res = build_resolvent(f, group, params)
        except PrecisionExceeded:
            continue
        if resolvent_is_separable(res):
            return params
    raise SearchBudgetExceeded(
        f"no separable parameters within budget {budget} at cap {cap}"
    )


# -- the sextic integer-root certificate -----------------------------------------


def elementary_from_monic_tail(tail) -> tuple[int, ...]:
    """Alternating sign map: tail of x^n + t_1 x^(n-1) + ... + t_n to the
    elementary-symmetric vector (a_i = (-1)^i t_i); it is an involution."""
    return tuple((-t if i % 2 else t) for i, t in enumerate(tail, start=1))


monic_tail_from_elementary = elementary_from_monic_tail


@dataclass(frozen=True)
class IntegerRootOutcome:
    status: str  # certified_root | certified_no_root | inconclusive
    root: int | None = None
    resolvent: ResolventPoly | None = None
    height_bound: int = 0
    detail: str = ""


def _sextic_from_elementary(a) -> IntPoly:
    a = tuple(int(v) for v in a)
    if len(a) != 6:
        raise ValueError("need six coefficients")
    return monic_from_tail(monic_tail_from_elementary(a))


def stauduhar_integer_root_test(a, start_prec: int = 192) -> IntegerRootOutcome:
    """Exact integer-root certificate for the sextic syntheme resolvent.

    Input is the alternating-convention vector (a_1,...,a_6), i.e. the
    elementary symmetric functions of the roots.  certified_no_root proves the
    Galois group is not conjugate into the catalog PGL(2,5); an integer root is
    evidence (not proof) in the other direction.  Integer roots are confirmed
    by exact evaluation, never by rounding alone.
    """
    f = _sextic_from_elementary(a)
    if discriminant(f) == 0:
        raise ValueError("not squarefree: integer-root test requires distinct roots")
    group = catalog_group("6T14")
    root_bound = 1 + max(abs(c) for c in f.coeffs[:-1])
    height_bound = (3 * root_bound**2) ** 5
    prec = start_prec
    while prec <= PREC_CAP:
        try:
            vals = coset_values(f, group, None, prec)
        except PrecisionExceeded:
            prec *= 2
            continue
        with workprec(prec):
            ball_coeffs = _expand_from_roots(vals)
            certified = _certify_coeffs(ball_coeffs)
            if certified is None:
                prec *= 2
                continue
            coeffs, worst = certified
            res = ResolventPoly(
                coeffs=tuple(coeffs),
                group_name=group.name or _THETA_GROUP_NAME,
                source_poly=format_poly(f),
                params=None,
                cert_radius=worst,
            )
            candidates = sorted(
                {k for v in vals for k in v.integers_inside()},
                key=lambda k: (abs(k), k),
            )
        for y in candidates:
            if res(y) == 0:
                return IntegerRootOutcome(
                    status="certified_root",
                    root=y,
                    resolvent=res,
                    height_bound=height_bound,
                )
        return IntegerRootOutcome(
            status="certified_no_root",
            resolvent=res,
            height_bound=height_bound,
        )
    return IntegerRootOutcome(
        status="inconclusive",
        height_bound=height_bound,
        detail=f"precision cap {PREC_CAP} reached",
    )


# -- exact trivariate specialization ----------------------------------------------


def interpolate_surface(a2: int, a3: int, a4: int) -> dict[tuple[int, int, int], int]:
    """Exact expansion of the syntheme resolvent with the two trailing
    coefficients and y left variable: returns {(i, j, k): coeff} for monomials
    a5^i a6^j y^k.  The expansion has total degree 12 and its a5^12 coefficient
    is 1024, whatever (a2, a3, a4) is.
    """
    from .interp import lagrange_univariate

    deg_a5, deg_a6 = 12, 10

    def psi_coeffs(a5: int, a6: int) -> tuple[int, ...]:
        out = stauduhar_integer_root_test((0, a2, a3, a4, a5, a6))
        if out.resolvent is None:
            raise PrecisionExceeded("surface interpolation hit the precision cap")
        return out.resolvent.coeffs

    def node_stream():
        yield 0
        k = 1
        while True:
            yield k
            yield -k
            k += 1

    def squarefree_at(s: int, t: int) -> bool:
        return discriminant(_sextic_from_elementary((0, a2, a3, a4, s, t))) != 0

    # product grid dodging the zero-discriminant curve: pick the a5 nodes, then
    # keep only a6 nodes whose whole column is squarefree
    nodes5 = []
    for s in node_stream():
        if sum(1 for t in range(-2, 3) if squarefree_at(s, t)) >= 3:
            nodes5.append(s)
        if len(nodes5) == deg_a5 + 1:
            break
    nodes6 = []
    for t in node_stream():
        if all(squarefree_at(s, t) for s in nodes5):
            nodes6.append(t)
        if len(nodes6) == deg_a6 + 1:
            break

    grid: dict[tuple[int, int], tuple[int, ...]] = {}
    for s in nodes5:
        for t in nodes6:
            grid[(s, t)] = psi_coeffs(s, t)

    surface: dict[tuple[int, int, int], int] = {}
    for k in range(7):  # y-degree
        # interpolate in a6 for each a5 node, then in a5
        polys_in_a6 = {}
        for s in nodes5:
            poly = lagrange_univariate(nodes6, [grid[(s, t)][k] for t in nodes6])
            polys_in_a6[s] = poly
        max_j = max((p.degree for p in polys_in_a6.values()), default=-1)
        for j in range(max_j + 1):
            poly = lagrange_univariate(
                nodes5, [polys_in_a6[s][j] for s in nodes5]
            )
            for i, c in enumerate(poly.coeffs):
                if c:
                    if c.denominator != 1:
                        raise ArithmeticError("surface coefficient not integral")
                    surface[(i, j, k)] = int(c)

    # residual check at held-out nodes (outside both node sets)
    checked = 0
    for s, t in ((max(nodes5) + 1, 1), (2, max(nodes6) + 1), (max(nodes5) + 2, -3)):
        if not squarefree_at(s, t):
            continue
        expect = psi_coeffs(s, t)
        for k in range(7):
            val = sum(
                c * s**i * t**j for (i, j, kk), c in surface.items() if kk == k
            )
            if val != (expect[k] if k < len(expect) else 0):
                raise ArithmeticError("surface interpolation failed its residual check")
        checked += 1
        if checked == 2:
            break
    if checked == 0:
        raise ArithmeticError("no usable residual-check node found")
    return surface
