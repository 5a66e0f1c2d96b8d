"""Compiled hot loop for sextic censuses.

The kernel walks a coefficient box and settles the cheap bulk of the
classification with exact integer/modular arithmetic:

* code 1: reducible, certified (integer root by exact evaluation, or a
  quadratic/cubic factor confirmed by exact int64 synthetic division);
* code 2: S_6 certified (degree-sum sieve proves irreducibility; witnesses:
  a (5,1) type, a (3,1,1,1) or (2,1,1,1,1) type, an odd type);
* code 3: S_6 heuristic (irreducible + odd type + some type outside the
  PGL(2,5) type set, but the certified-witness set is incomplete);
* code 0: everything else (possible even group, PGL-compatible types, zero
  discriminant, or any uncertainty): escalated to the exact Python path.

Soundness notes.  A type observed at a good prime always lies in the Galois
group (Dedekind), an odd type certifies a non-square discriminant, and a type
outside a candidate's type set certifies exclusion; those are the only facts
code 2/3 rely on besides the sieve proof of irreducibility.  Floating point
enters only through the Durand-Kerner factor hunt, where it merely nominates
candidate factors: divisibility is always decided by exact integer division,
and a no-factor conclusion is drawn only when the a-posteriori root error
bound leaves orders of magnitude of margin against the 0.25 rounding window.

Coefficient magnitudes are capped (<= 800) by the caller so that every
integer evaluation fits comfortably in int64.
"""

from __future__ import annotations

import numpy as np
from numba import int64, njit

MAX_KERNEL_COEFF = 800

KERNEL_PRIMES = np.array(
    [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
     71, 73, 79, 83, 89, 97, 101, 103],
    dtype=np.int64,
)

CODE_PYTHON = 0
CODE_REDUCIBLE = 1
CODE_S6_CERTIFIED = 2
CODE_S6_HEURISTIC = 3


def _type_key(counts) -> int:
    key = 0
    base = 1
    for d in range(1, 7):
        key += counts.get(d, 0) * base
        base *= 7
    return key


def _key_of(parts) -> int:
    counts: dict[int, int] = {}
    for d in parts:
        counts[d] = counts.get(d, 0) + 1
    return _type_key(counts)


# type keys of the catalog PGL(2,5) copy (computed once from the group)
def _pgl_keys() -> np.ndarray:
    from .groups import catalog_group

    keys = sorted(_key_of(t) for t in catalog_group("6T14").cycle_type_set())
    return np.array(keys, dtype=np.int64)


PGL_TYPE_KEYS = _pgl_keys()
KEY_51 = _key_of((5, 1))
KEY_3111 = _key_of((3, 1, 1, 1))
KEY_21111 = _key_of((2, 1, 1, 1, 1))


def inverse_tables(primes: np.ndarray) -> np.ndarray:
    tabs = np.zeros((len(primes), int(primes.max()) + 1), dtype=np.int64)
    for i, p in enumerate(primes):
        p = int(p)
        for x in range(1, p):
            tabs[i, x] = pow(x, p - 2, p)
    return tabs


KERNEL_INVTABS = inverse_tables(KERNEL_PRIMES)


@njit(cache=True, inline="always")
def _mulmod6(a, b, fmod, p, prod, out):
    # out <- a*b mod (x^6 + fmod) mod p; fmod holds the low 6 coefficients.
    # Residues stay < p <= 103, so sums of <= 12 products of size < p^2 fit
    # int64 comfortably and reduction can wait until the end of each stage.
    for i in range(11):
        prod[i] = 0
    for i in range(6):
        ai = a[i]
        if ai:
            for j in range(6):
                prod[i + j] += ai * b[j]
    for d in range(10, 5, -1):
        c = prod[d] % p
        if c:
            for j in range(6):
                prod[d - 6 + j] += (p - c) * fmod[j]
    for i in range(6):
        out[i] = prod[i] % p


@njit(cache=True, inline="always")
def _gcd_deg6(A, B, p, inv):
    # degree of gcd; A and B are length-7 scratch (destroyed)
    da = 6
    while da >= 0 and A[da] == 0:
        da -= 1
    db = 6
    while db >= 0 and B[db] == 0:
        db -= 1
    while db >= 0:
        if da < db:
            for t in range(7):
                tmp = A[t]
                A[t] = B[t]
                B[t] = tmp
            t2 = da
            da = db
            db = t2
            continue
        c = (A[da] * inv[B[db]]) % p
        sh = da - db
        for j in range(db + 1):
            A[j + sh] = (A[j + sh] - c * B[j]) % p
        while da >= 0 and A[da] == 0:
            da -= 1
    return da


@njit(cache=True, inline="always")
def _squarefree_mod_p(a2, a3, a4, a5, a6, p, inv, s1, s2):
    s1[0] = a6 % p
    s1[1] = a5 % p
    s1[2] = a4 % p
    s1[3] = a3 % p
    s1[4] = a2 % p
    s1[5] = 0
    s1[6] = 1
    s2[0] = s1[1]
    s2[1] = (2 * s1[2]) % p
    s2[2] = (3 * s1[3]) % p
    s2[3] = (4 * s1[4]) % p
    s2[4] = 0
    s2[5] = 6 % p
    s2[6] = 0
    return _gcd_deg6(s1, s2, p, inv) == 0


@njit(cache=True)
def _frobenius_type_key(a2, a3, a4, a5, a6, p, inv, fmod, base, acc, prod,
                        mat, vec, s1, s2):
    """Cycle type key of x^6+a2x^4+a3x^3+a4x^2+a5x+a6 mod p, or -1 if p is bad."""
    fmod[0] = a6 % p
    fmod[1] = a5 % p
    fmod[2] = a4 % p
    fmod[3] = a3 % p
    fmod[4] = a2 % p
    fmod[5] = 0
    # squarefree test: gcd(f, f')
    for i in range(6):
        s1[i] = fmod[i]
    s1[6] = 1
    s2[0] = fmod[1]
    s2[1] = (2 * fmod[2]) % p
    s2[2] = (3 * fmod[3]) % p
    s2[3] = (4 * fmod[4]) % p
    s2[4] = 0
    s2[5] = 6 % p
    s2[6] = 0
    if _gcd_deg6(s1, s2, p, inv) != 0:
        return -1
    # x^p mod f
    for i in range(6):
        base[i] = 0
        acc[i] = 0
    if p < 6:
        acc[p] = 1
    else:
        base[1] = 1
        acc[0] = 1
        e = p
        while e:
            if e & 1:
                _mulmod6(acc, base, fmod, p, prod, acc)
            e >>= 1
            if e:
                _mulmod6(base, base, fmod, p, prod, base)
    # Frobenius matrix: columns x^(p*i) = successive products with x^p
    for i in range(6):
        for j in range(6):
            mat[i, j] = 0
    mat[0, 0] = 1
    for i in range(6):
        mat[i, 1] = acc[i]
        vec[i] = acc[i]
    for c in range(2, 6):
        _mulmod6(vec, acc, fmod, p, prod, vec)
        for i in range(6):
            mat[i, c] = vec[i]
    # n1 = deg gcd(x^p - x, f)
    for i in range(6):
        s1[i] = acc[i]
    s1[6] = 0
    s1[1] = (s1[1] - 1) % p
    for i in range(6):
        s2[i] = fmod[i]
    s2[6] = 1
    n1 = _gcd_deg6(s1, s2, p, inv)
    if n1 < 0:
        n1 = 0
    # number of irreducible factors: 6 - rank(Frobenius - identity)
    # (resolve the (n1=0, k=2) ambiguity first, while mat is intact)
    amb_c2 = -1
    rank = 0
    # second Frobenius image x^(p^2) = mat @ x^p, for the ambiguous case
    for i in range(6):
        s2[i] = 0
    for j in range(6):
        aj = acc[j]
        if aj:
            for i in range(6):
                s2[i] += mat[i, j] * aj
    for i in range(6):
        s2[i] %= p
    for i in range(6):
        mat[i, i] = (mat[i, i] - 1) % p
    for col in range(6):
        piv = -1
        for r in range(rank, 6):
            if mat[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for cc in range(6):
                tmp = mat[rank, cc]
                mat[rank, cc] = mat[piv, cc]
                mat[piv, cc] = tmp
        ipiv = inv[mat[rank, col]]
        for r in range(rank + 1, 6):
            fac = (mat[r, col] * ipiv) % p
            if fac:
                for cc in range(col, 6):
                    mat[r, cc] = (mat[r, cc] - fac * mat[rank, cc]) % p
        rank += 1
    k = 6 - rank
    # degree pattern from (n1, k); ambiguity only at (0, 2): {2,4} vs {3,3}
    if n1 == 0 and k == 2:
        s2[1] = (s2[1] - 1) % p  # x^(p^2) - x
        s2[6] = 0
        for i in range(6):
            s1[i] = fmod[i]
        s1[6] = 1
        # note: arguments order (A=s2 deg<=5, B=f)
        n2 = _gcd_deg6(s2, s1, p, inv)
        amb_c2 = 1 if n2 == 2 else 0
    rest = 6 - n1
    parts_rest = k - n1
    c2 = 0
    c3 = 0
    c4 = 0
    c5 = 0
    c6 = 0
    if rest == 0:
        pass
    elif parts_rest == 1:
        if rest == 2:
            c2 = 1
        elif rest == 3:
            c3 = 1
        elif rest == 4:
            c4 = 1
        elif rest == 5:
            c5 = 1
        else:
            c6 = 1
    elif parts_rest == 2:
        if rest == 4:
            c2 = 2
        elif rest == 5:
            c2 = 1
            c3 = 1
        else:  # rest == 6: {2,4} or {3,3}
            if amb_c2 == 1:
                c2 = 1
                c4 = 1
            else:
                c3 = 2
    else:  # parts_rest == 3, rest == 6
        c2 = 3
    return n1 + 7 * c2 + 49 * c3 + 343 * c4 + 2401 * c5 + 16807 * c6


@njit(cache=True, inline="always")
def _horner6(a2, a3, a4, a5, a6, t):
    return ((((t * t + a2) * t + a3) * t + a4) * t + a5) * t + a6


@njit(cache=True, inline="always")
def _has_integer_root(a2, a3, a4, a5, a6):
    # monic sextic: any rational root is an integer dividing a6 (a6 != 0 here)
    m = a6 if a6 > 0 else -a6
    d = 1
    while d * d <= m:
        if m % d == 0:
            for t in (d, -d, m // d, -(m // d)):
                if _horner6(a2, a3, a4, a5, a6, t) == 0:
                    return True
        d += 1
    return False


@njit(cache=True)
def _dk_roots(a2, a3, a4, a5, a6, zs):
    # Durand-Kerner on the monic sextic; deterministic start, fixed budget
    bound = 1.0
    for c in (a2, a3, a4, a5, a6):
        ac = abs(c)
        if 1.0 + ac > bound:
            bound = 1.0 + ac
    for k in range(6):
        ang = 1.0471975511965976 * k + 0.4
        zs[k] = bound * (np.cos(ang) + 1j * np.sin(ang))
    for _ in range(160):
        moved = 0.0
        for i in range(6):
            z = zs[i]
            fz = ((((z * z + a2) * z + a3) * z + a4) * z + a5) * z + a6
            den = 1.0 + 0j
            for j in range(6):
                if j != i:
                    den *= z - zs[j]
            if den == 0:
                zs[i] = z + 1e-7
                continue
            step = fz / den
            zs[i] = z - step
            m = abs(step) / (1.0 + abs(zs[i]))
            if m > moved:
                moved = m
        if moved < 1e-14:
            break
    # a-posteriori error bound per root: 6 |f(z)| / prod |z - z_j|
    worst = 0.0
    for i in range(6):
        z = zs[i]
        fz = ((((z * z + a2) * z + a3) * z + a4) * z + a5) * z + a6
        den = 1.0
        for j in range(6):
            if j != i:
                den *= abs(z - zs[j])
        if den == 0:
            return 1e9
        e = 6.0 * abs(fz) / den
        if e > worst:
            worst = e
    return worst


@njit(cache=True, inline="always")
def _try_divide_quadratic(a2, a3, a4, a5, a6, u, v):
    # exact division by x^2 + u x + v; quotient coefficient cap keeps int64 safe
    CAP = 1 << 30
    c2 = a2 + u * u - v
    if c2 > CAP or c2 < -CAP:
        return False
    c1 = a3 - u * c2 + u * v
    if c1 > CAP or c1 < -CAP:
        return False
    c0 = a4 - u * c1 - v * c2
    if c0 > CAP or c0 < -CAP:
        return False
    return (a5 == u * c0 + v * c1) and (a6 == v * c0)


@njit(cache=True, inline="always")
def _try_divide_cubic(a2, a3, a4, a5, a6, u, v, w):
    CAP = 1 << 30
    d2 = -u
    d1 = a2 + u * u - v
    if d1 > CAP or d1 < -CAP:
        return False
    d0 = a3 - u * d1 + u * v - w
    if d0 > CAP or d0 < -CAP:
        return False
    return (
        a4 == u * d0 + v * d1 + w * d2
        and a5 == v * d0 + w * d1
        and a6 == w * d0
    )


@njit(cache=True)
def _factor_hunt(a2, a3, a4, a5, a6, zs):
    """1 = certified factor found, 0 = no factor (with float margin), -1 = unsure."""
    err = _dk_roots(a2, a3, a4, a5, a6, zs)
    scale = 1.0
    for i in range(6):
        az = abs(zs[i])
        if az > scale:
            scale = az
    margin = err * 8.0 * scale * scale
    if margin > 0.01:
        return -1
    # quadratic factors: pairs of roots
    for i in range(5):
        for j in range(i + 1, 6):
            su = zs[i] + zs[j]
            pv = zs[i] * zs[j]
            if abs(su.imag) > 0.25 or abs(pv.imag) > 0.25:
                continue
            u = -np.round(su.real)
            v = np.round(pv.real)
            if abs(-su.real - u) > 0.25 or abs(pv.real - v) > 0.25:
                continue
            if _try_divide_quadratic(a2, a3, a4, a5, a6, int64(u), int64(v)):
                return 1
    # cubic factors: triples of roots (complement covered by symmetry)
    for i in range(4):
        for j in range(i + 1, 5):
            for k in range(j + 1, 6):
                e1 = zs[i] + zs[j] + zs[k]
                e2 = zs[i] * zs[j] + zs[i] * zs[k] + zs[j] * zs[k]
                e3 = zs[i] * zs[j] * zs[k]
                if abs(e1.imag) > 0.25 or abs(e2.imag) > 0.25 or abs(e3.imag) > 0.25:
                    continue
                u = -np.round(e1.real)
                v = np.round(e2.real)
                w = -np.round(e3.real)
                if (
                    abs(-e1.real - u) > 0.25
                    or abs(e2.real - v) > 0.25
                    or abs(-e3.real - w) > 0.25
                ):
                    continue
                if _try_divide_cubic(a2, a3, a4, a5, a6, int64(u), int64(v), int64(w)):
                    return 1
    return 0


@njit(cache=True)
def sextic_type_keys(a2, a3, a4, a5, a6, primes, invtabs, out):
    """Frobenius type key per prime for one monic sextic; -1 marks bad primes."""
    fmod = np.zeros(6, dtype=np.int64)
    base = np.zeros(6, dtype=np.int64)
    acc = np.zeros(6, dtype=np.int64)
    prod = np.zeros(11, dtype=np.int64)
    mat = np.zeros((6, 6), dtype=np.int64)
    vec = np.zeros(6, dtype=np.int64)
    s1 = np.zeros(7, dtype=np.int64)
    s2 = np.zeros(7, dtype=np.int64)
    for pi in range(primes.shape[0]):
        out[pi] = _frobenius_type_key(
            a2, a3, a4, a5, a6, primes[pi], invtabs[pi], fmod, base, acc,
            prod, mat, vec, s1, s2,
        )
    return out


def decode_type_key(key: int) -> tuple[int, ...]:
    parts = []
    for d in range(1, 7):
        count = key % 7
        key //= 7
        parts.extend([d] * count)
    return tuple(sorted(parts, reverse=True))


_WIDE_SIEVE_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def wide_prime_tables(bound: int) -> tuple[np.ndarray, np.ndarray]:
    """Odd primes up to the bound with inverse tables, cached per bound."""
    if bound not in _WIDE_SIEVE_CACHE:
        from .modp import iter_primes

        primes = np.array([p for p in iter_primes(bound) if p > 2], dtype=np.int64)
        _WIDE_SIEVE_CACHE[bound] = (primes, inverse_tables(primes))
    return _WIDE_SIEVE_CACHE[bound]


@njit(cache=True)
def classify_sextic_shard(
    a2lo, a2hi, b3, b4, b5, b6, primes, invtabs, pgl_keys, codes
):
    """Fill `codes` (one int8 per vector, mixed-radix order a2..a6 ascending)."""
    fmod = np.zeros(6, dtype=np.int64)
    base = np.zeros(6, dtype=np.int64)
    acc = np.zeros(6, dtype=np.int64)
    prod = np.zeros(11, dtype=np.int64)
    mat = np.zeros((6, 6), dtype=np.int64)
    vec = np.zeros(6, dtype=np.int64)
    s1 = np.zeros(7, dtype=np.int64)
    s2 = np.zeros(7, dtype=np.int64)
    zs = np.zeros(6, dtype=np.complex128)
    npr = primes.shape[0]
    npgl = pgl_keys.shape[0]
    idx = 0
    irr_mask_target = int64((1 << 6) | 1)
    for a2 in range(a2lo, a2hi + 1):
      for a3 in range(-b3, b3 + 1):
        for a4 in range(-b4, b4 + 1):
          for a5 in range(-b5, b5 + 1):
            for a6 in range(-b6, b6 + 1):
                # a root certifies reducibility, but the not-squarefree class
                # takes precedence, so a good prime must rule out disc = 0
                root_found = a6 == 0 or _has_integer_root(a2, a3, a4, a5, a6)
                if root_found:
                    settled = False
                    for pi in range(npr):
                        if _squarefree_mod_p(
                            a2, a3, a4, a5, a6, primes[pi], invtabs[pi], s1, s2
                        ):
                            codes[idx] = CODE_REDUCIBLE
                            settled = True
                            break
                    if not settled:
                        codes[idx] = CODE_PYTHON
                    idx += 1
                    continue
                sums_mask = int64((1 << 7) - 1)
                odd_seen = False
                pgl_possible = True
                p5_seen = False
                jordan_seen = False
                good = 0
                certified = False
                for pi in range(npr):
                    p = primes[pi]
                    key = _frobenius_type_key(
                        a2, a3, a4, a5, a6, p, invtabs[pi], fmod, base, acc,
                        prod, mat, vec, s1, s2,
                    )
                    if key < 0:
                        continue
                    good += 1
                    # unpack counts from the key
                    kk = key
                    c1 = kk % 7
                    kk //= 7
                    c2 = kk % 7
                    kk //= 7
                    c3 = kk % 7
                    kk //= 7
                    c4 = kk % 7
                    kk //= 7
                    c5 = kk % 7
                    c6 = kk // 7
                    parts = c1 + c2 + c3 + c4 + c5 + c6
                    if (6 - parts) & 1:
                        odd_seen = True
                    # subset-sum mask of this type
                    m = int64(1)
                    for _ in range(c1):
                        m |= m << 1
                    for _ in range(c2):
                        m |= m << 2
                    for _ in range(c3):
                        m |= m << 3
                    for _ in range(c4):
                        m |= m << 4
                    for _ in range(c5):
                        m |= m << 5
                    for _ in range(c6):
                        m |= m << 6
                    sums_mask &= m & int64(127)
                    if pgl_possible:
                        hit = False
                        for q in range(npgl):
                            if pgl_keys[q] == key:
                                hit = True
                                break
                        pgl_possible = hit
                    if key == KEY_51:
                        p5_seen = True
                    elif key == KEY_3111 or key == KEY_21111:
                        jordan_seen = True
                    if (
                        sums_mask == irr_mask_target
                        and odd_seen
                        and p5_seen
                        and jordan_seen
                    ):
                        certified = True
                        break
                if certified:
                    codes[idx] = CODE_S6_CERTIFIED
                elif good == 0:
                    codes[idx] = CODE_PYTHON  # possibly zero discriminant
                elif sums_mask != irr_mask_target:
                    hunt = _factor_hunt(a2, a3, a4, a5, a6, zs)
                    if hunt == 1:
                        codes[idx] = CODE_REDUCIBLE
                    elif hunt == 0 and odd_seen and not pgl_possible:
                        codes[idx] = CODE_S6_HEURISTIC
                    else:
                        codes[idx] = CODE_PYTHON
                elif not odd_seen or pgl_possible:
                    codes[idx] = CODE_PYTHON
                else:
                    codes[idx] = CODE_S6_HEURISTIC
                idx += 1
    return idx
