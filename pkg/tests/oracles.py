"""Independent oracles: deliberately different algorithms from the package."""

from __future__ import annotations

import itertools
from fractions import Fraction

from galcensus.polynomials import IntPoly


def sylvester_resultant(f: IntPoly, g: IntPoly) -> int:
    """Determinant of the Sylvester matrix with the g-block on top, by exact
    fraction elimination (the package's documented convention)."""
    m, n = f.degree, g.degree
    size = m + n
    if size == 0:
        return 1
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    rows = []
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    mat = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if mat[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, size):
            fac = mat[r][col] * inv
            if fac:
                for c in range(col, size):
                    mat[r][c] -= fac * mat[col][c]
    assert det.denominator == 1
    return int(det)


def all_block_systems_bruteforce(group) -> set:
    """Every nontrivial equal-size stable partition, by trying them all (n <= 6)."""
    n = group.degree
    points = list(range(n))
    systems = set()

    def partitions_into(blocks, rest, size):
        if not rest:
            yield tuple(sorted(blocks, key=min))
            return
        first = rest[0]
        for others in itertools.combinations(rest[1:], size - 1):
            block = frozenset((first,) + others)
            remaining = [x for x in rest if x not in block]
            yield from partitions_into(blocks + [block], remaining, size)

    for size in range(2, n):
        if n % size:
            continue
        for part in partitions_into([], points, size):
            stable = True
            for g in group.generators:
                for block in part:
                    image = frozenset(g(x) for x in block)
                    if image not in part:
                        stable = False
                        break
                if not stable:
                    break
            if stable:
                systems.add(part)
    return systems


def gfp_factor_degrees_bruteforce(coeffs_mod_p: list[int], p: int) -> list[int]:
    """Factor degrees over GF(p) by exhaustive trial division with all monic
    irreducibles, built from scratch (small p and degree only)."""

    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
        return out

    def divmod_poly(a, b):
        a = list(a)
        binv = pow(b[-1], p - 2, p)
        q = [0] * max(1, len(a) - len(b) + 1)
        while len(a) >= len(b) and any(a):
            while a and a[-1] == 0:
                a.pop()
            if len(a) < len(b):
                break
            c = a[-1] * binv % p
            q[len(a) - len(b)] = c
            for j in range(len(b)):
                a[len(a) - len(b) + j] = (a[len(a) - len(b) + j] - c * b[j]) % p
        while a and a[-1] == 0:
            a.pop()
        return q, a

    monics_by_deg: dict[int, list[list[int]]] = {}

    def monics(d):
        if d not in monics_by_deg:
            out = []
            for tail in itertools.product(range(p), repeat=d):
                out.append(list(tail) + [1])
            monics_by_deg[d] = out
        return monics_by_deg[d]

    irreducibles: dict[int, list[list[int]]] = {}

    def irreds(d):
        if d not in irreducibles:
            out = []
            for cand in monics(d):
                ok = True
                for e in range(1, d // 2 + 1):
                    for q in irreds(e):
                        _, r = divmod_poly(cand, q)
                        if not r:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    out.append(cand)
            irreducibles[d] = out
        return irreducibles[d]

    f = list(coeffs_mod_p)
    while f and f[-1] == 0:
        f.pop()
    degrees = []
    d = 1
    while len(f) - 1 > 0:
        if len(f) - 1 < 2 * d:
            degrees.append(len(f) - 1)
            break
        progressed = False
        for q in irreds(d):
            while True:
                quo, rem = divmod_poly(f, q)
                if rem:
                    break
                degrees.append(d)
                f = quo
                progressed = True
                while f and f[-1] == 0:
                    f.pop()
            if len(f) - 1 < 2 * d:
                break
        if len(f) - 1 > 0 and len(f) - 1 < 2 * d:
            degrees.append(len(f) - 1)
            break
        if not progressed:
            d += 1
    return sorted(degrees, reverse=True)


def reducible_bruteforce_deg_le4(f: IntPoly) -> bool:
    """Monic degree <= 4: search linear and quadratic monic integer divisors
    with coefficients bounded via the Cauchy root bound."""
    n = f.degree
    assert f.is_monic() and 2 <= n <= 4
    c0 = f.coeffs[0]
    if c0 == 0:
        return True
    bound = 1 + max(abs(c) for c in f.coeffs[:-1])
    for r in range(-bound, bound + 1):
        if r != 0 and c0 % r == 0 and f(r) == 0:
            return True
    if n == 4:
        for b in range(-2 * bound, 2 * bound + 1):
            for c in range(-bound * bound, bound * bound + 1):
                if c == 0 or c0 % c != 0:
                    continue
                # divide f by x^2 + b x + c exactly
                q2 = 1
                q1 = f.coeffs[3] - b
                q0 = f.coeffs[2] - b * q1 - c
                if (
                    f.coeffs[1] == b * q0 + c * q1
                    and f.coeffs[0] == c * q0
                ):
                    return True
    return False


def count_circle_points_bruteforce(r2: int, b1: int, b2: int) -> int:
    """#{(x, y): x^2 + y^2 = r2, |x| <= b1, |y| <= b2} by double enumeration."""
    count = 0
    for x in range(-b1, b1 + 1):
        for y in range(-b2, b2 + 1):
            if x * x + y * y == r2:
                count += 1
    return count
