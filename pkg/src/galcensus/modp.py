"""Polynomial arithmetic over the prime fields GF(p).

Polynomials are plain lists of residues, ascending, normalized (no trailing
zeros).  Degrees here never exceed 8, so everything is schoolbook.
"""

from __future__ import annotations

from .polynomials import IntPoly


_PRIME_CACHE: list[int] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


def _extend_primes(bound: int) -> None:
    if _PRIME_CACHE[-1] >= bound:
        return
    from math import isqrt

    root = isqrt(bound)
    if _PRIME_CACHE[-1] < root:
        _extend_primes(root)
    lo = _PRIME_CACHE[-1] + 1
    sieve = bytearray([1]) * (bound - lo + 1)
    for p in _PRIME_CACHE:
        if p * p > bound:
            break
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start <= bound:
            sieve[start - lo :: p] = b"\x00" * ((bound - start) // p + 1)
    for i, flag in enumerate(sieve):
        if flag:
            _PRIME_CACHE.append(lo + i)


def iter_primes(bound: int):
    """Primes p <= bound, ascending (cached incremental sieve)."""
    _extend_primes(bound)
    for p in _PRIME_CACHE:
        if p > bound:
            return
        yield p


def _norm(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce_poly(f: IntPoly, p: int) -> list[int]:
    return _norm([c % p for c in f.coeffs])


def mul_mod(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _norm(out)


def rem_mod(a: list[int], b: list[int], p: int) -> list[int]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a)
    inv_lb = pow(b[-1], p - 2, p)
    while len(r) >= len(b):
        c = (r[-1] * inv_lb) % p
        if c:
            sh = len(r) - len(b)
            for j in range(len(b)):
                r[sh + j] = (r[sh + j] - c * b[j]) % p
        r.pop()
        _norm(r)
        if not r:
            break
    return _norm(r)


def gcd_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, rem_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def powmod_x(e: int, f: list[int], p: int) -> list[int]:
    """x^e modulo f over GF(p)."""
    base = rem_mod([0, 1], f, p)
    acc = [1]
    while e:
        if e & 1:
            acc = rem_mod(mul_mod(acc, base, p), f, p)
        e >>= 1
        if e:
            base = rem_mod(mul_mod(base, base, p), f, p)
    return acc


def pow_poly_mod(g: list[int], e: int, f: list[int], p: int) -> list[int]:
    base = rem_mod(list(g), f, p)
    acc = [1]
    while e:
        if e & 1:
            acc = rem_mod(mul_mod(acc, base, p), f, p)
        e >>= 1
        if e:
            base = rem_mod(mul_mod(base, base, p), f, p)
    return acc


def deriv_mod(f: list[int], p: int) -> list[int]:
    return _norm([(k * c) % p for k, c in enumerate(f)][1:])


def div_exact_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Quotient a/b over GF(p); b must divide a."""
    q = [0] * (len(a) - len(b) + 1)
    r = list(a)
    inv_lb = pow(b[-1], p - 2, p)
    while len(r) >= len(b):
        c = (r[-1] * inv_lb) % p
        q[len(r) - len(b)] = c
        sh = len(r) - len(b)
        for j in range(len(b)):
            r[sh + j] = (r[sh + j] - c * b[j]) % p
        r.pop()
        _norm(r)
    if _norm(r):
        raise ArithmeticError("division was not exact")
    return _norm(q)


def factor_degrees_mod_p(f: IntPoly, p: int) -> tuple[int, ...] | None:
    """Multiset (sorted tuple) of irreducible-factor degrees of f mod p.

    Returns None when f mod p is not squarefree (a "bad" prime for the
    Frobenius sieve).  Raises when p divides the leading coefficient.
    """
    if f.leading % p == 0:
        raise ValueError(f"p={p} divides the leading coefficient")
    fp = reduce_poly(f, p)
    n = len(fp) - 1
    if n <= 0:
        return ()
    g = gcd_mod(fp, deriv_mod(fp, p), p)
    if len(g) - 1 > 0:
        return None
    # distinct-degree splitting: strip the degree-d part for d = 1, 2, ...
    degrees: list[int] = []
    rest = fp
    h = powmod_x(p, rest, p)  # x^p mod rest
    d = 1
    while len(rest) - 1 >= 2 * d:
        hx = list(h)
        if len(hx) < 2:
            hx += [0] * (2 - len(hx))
        hx[1] = (hx[1] - 1) % p
        g = gcd_mod(_norm(hx), rest, p)
        gd = len(g) - 1
        if gd > 0:
            degrees.extend([d] * (gd // d))
            rest = div_exact_mod(rest, g, p)
            h = rem_mod(h, rest, p)
        d += 1
        if len(rest) - 1 >= 2 * d:
            h = pow_poly_mod(h, p, rest, p)
    if len(rest) - 1 > 0:
        degrees.append(len(rest) - 1)
    return tuple(sorted(degrees, reverse=True))


def cycle_type_parity_even(ctype: tuple[int, ...], n: int) -> bool:
    """Parity of a permutation with the given cycle type (fixed points implied)."""
    moved = sum(ctype)
    parts = len(ctype) + (n - moved)
    return (n - parts) % 2 == 0
