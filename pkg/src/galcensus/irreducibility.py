"""Exact irreducibility over Q for degrees up to 8.

Two stages: a Frobenius degree-set sieve (intersect the achievable factor
degree sums over good primes; {0, n} certifies irreducibility), then, when the
sieve is inconclusive, a certified factor search.  Any monic integer factor's
roots form a subset of the certified root balls, so the elementary symmetric
functions of every candidate subset either miss the integers (subset
rejected), or pin a unique integer candidate that exact synthetic division
accepts or refutes.  Both outcomes are exact; only the precision at which the
balls shrink enough is adaptive.
"""

from __future__ import annotations

from itertools import combinations

from mpmath import mpf, workprec

from .balls import PrecisionExceeded
from .modp import factor_degrees_mod_p, iter_primes
from .polynomials import IntPoly, discriminant
from .roots import PREC_CAP, complex_roots_certified

_SIEVE_GOOD_PRIMES = 25


def _degree_sums_mask(ctype, n: int) -> int:
    mask = 1
    for d in ctype:
        mask |= mask << d
    return mask & ((1 << (n + 1)) - 1)


def sieve_degree_sums(f: IntPoly, max_good: int = _SIEVE_GOOD_PRIMES) -> int:
    """Bitmask of degrees a rational factor could have, from the mod-p sieve."""
    n = f.degree
    mask = (1 << (n + 1)) - 1
    target = (1 << n) | 1
    good = 0
    for p in iter_primes(10**6):
        if good >= max_good or mask == target:
            break
        if f.leading % p == 0:
            continue
        ctype = factor_degrees_mod_p(f, p)
        if ctype is None:
            continue
        good += 1
        mask &= _degree_sums_mask(ctype, n)
    return mask


def _monicize(f: IntPoly) -> IntPoly:
    """lc^(n-1) * f(x / lc): monic, integer, same splitting behaviour."""
    lc = f.leading
    n = f.degree
    return IntPoly(c * lc ** (n - 1 - k) for k, c in enumerate(f.coeffs))


def _divide_monic(f: IntPoly, g: IntPoly) -> IntPoly | None:
    """Exact quotient of monic integer polynomials, or None if not divisible."""
    r = list(f.coeffs)
    dg = g.degree
    q = [0] * (len(r) - dg)
    for k in range(len(r) - dg - 1, -1, -1):
        c = r[k + dg]
        q[k] = c
        if c:
            for j in range(dg + 1):
                r[k + j] -= c * g[j]
    return IntPoly(q) if all(v == 0 for v in r[:dg]) else None


def monic_integer_factor(f: IntPoly, start_prec: int = 128) -> IntPoly | None:
    """A monic integer factor of degree in [1, n/2] of a monic squarefree f, or
    None (certified) if f is irreducible over Q."""
    n = f.degree
    prec = start_prec
    while prec <= PREC_CAP:
        with workprec(prec):
            try:
                balls = complex_roots_certified(
                    f, mpf(2) ** (-prec // 3), start_prec=prec, prec_cap=prec
                )
            except PrecisionExceeded:
                prec *= 2
                continue
            retry = False
            for k in range(1, n // 2 + 1):
                for subset in combinations(range(n), k):
                    coeffs = [None] * (k + 1)
                    from .balls import BallComplex

                    acc = [BallComplex.exact_int(1)]
                    for idx in subset:
                        nxt = [BallComplex.exact_int(0) for _ in range(len(acc) + 1)]
                        for i, c in enumerate(acc):
                            nxt[i + 1] = nxt[i + 1] + c
                            nxt[i] = nxt[i] - c * balls[idx]
                        acc = nxt
                    cand = []
                    reject = False
                    for ball in acc[:-1]:
                        ints = ball.integers_inside()
                        if not ints:
                            reject = True
                            break
                        if len(ints) > 1 or ball.rad >= mpf(1) / 2:
                            retry = True
                            reject = True
                            break
                        cand.append(ints[0])
                    if reject:
                        continue
                    g = IntPoly(cand + [1])
                    if g.degree == k and _divide_monic(f, g) is not None:
                        return g
            if not retry:
                return None
        prec *= 2
    raise PrecisionExceeded("factor search could not certify below the precision cap")


def _has_integer_root(g: IntPoly) -> bool | None:
    """Integer-root scan for monic g via divisors of the constant term.

    None = scan skipped (constant term too large to trial-divide).
    """
    c0 = g.coeffs[0]
    if c0 == 0:
        return True
    m = abs(c0)
    if m > 10**12:
        return None
    d = 1
    while d * d <= m:
        if m % d == 0:
            for t in (d, -d, m // d, -(m // d)):
                if g(t) == 0:
                    return True
        d += 1
    return False


def is_irreducible_over_q(f: IntPoly) -> bool:
    """Exact irreducibility over the rationals (content ignored)."""
    n = f.degree
    if n < 1:
        raise ValueError("irreducibility needs degree >= 1")
    if n == 1:
        return True
    if discriminant(f) == 0:
        return False  # repeated roots force a proper rational factor
    g = _monicize(f)
    rooted = _has_integer_root(g)
    if rooted:
        return False  # a rational root of f
    if rooted is False and n <= 3:
        return True  # no root and no room for two factors of degree >= 2
    mask = sieve_degree_sums(f)
    if mask == (1 << n) | 1:
        return True
    return monic_integer_factor(g) is None
