"""Certified complex root isolation for squarefree integer polynomials.

Strategy: simultaneous Aberth iteration on approximate roots, then an
a-posteriori certification pass in ball arithmetic.  With Weierstrass
corrections w_i = f(z_i) / prod_{j != i} (z_i - z_j), every root of f lies in
the union of the disks D(z_i, n*|w_i|), and pairwise disjoint disks each trap
exactly one root.  Failure escalates the working precision, doubling up to a
hard cap, and is always reported as failure rather than a wrong answer.
"""

from __future__ import annotations

import numpy as np
from mpmath import mp, mpc, mpf, workprec

from .balls import BallComplex, PrecisionExceeded, ball_poly_eval
from .polynomials import IntPoly, discriminant

DEFAULT_PREC = 128
PREC_CAP = 4096


def _initial_guesses(f: IntPoly) -> list[mpc]:
    n = f.degree
    try:
        arr = np.array([float(c) for c in reversed(f.coeffs)], dtype=float)
        if np.all(np.isfinite(arr)):
            rts = np.roots(arr)
            if len(rts) == n and np.all(np.isfinite(rts)):
                return [mpc(complex(r)) for r in sorted(rts, key=lambda z: (z.real, z.imag))]
    except Exception:
        pass
    # fall back to a slightly asymmetric circle
    bound = 1 + max(abs(c) for c in f.coeffs[:-1]) / abs(f.leading) if n else 1
    return [
        bound * mpc(mp.cos(2 * mp.pi * (k + 0.3) / n), mp.sin(2 * mp.pi * (k + 0.3) / n))
        for k in range(n)
    ]


def _aberth_refine(coeffs, dcoeffs, zs: list[mpc], max_iter: int) -> list[mpc]:
    n = len(zs)
    tol = mpf(2) ** (8 - mp.prec)
    for _ in range(max_iter):
        moved = mpf(0)
        for i in range(n):
            z = zs[i]
            fz = coeffs[-1]
            for c in reversed(coeffs[:-1]):
                fz = fz * z + c
            if fz == 0:
                continue
            dz = dcoeffs[-1]
            for c in reversed(dcoeffs[:-1]):
                dz = dz * z + c
            if dz == 0:
                zs[i] = z + mpf(2) ** (-mp.prec // 2)
                continue
            w = fz / dz
            s = mpc(0)
            for j in range(n):
                if j != i:
                    diff = z - zs[j]
                    if diff == 0:
                        diff = mpf(2) ** (-mp.prec // 2)
                    s += 1 / diff
            denom = 1 - w * s
            step = w if denom == 0 else w / denom
            zs[i] = z - step
            scale = 1 + abs(zs[i])
            moved = max(moved, abs(step) / scale)
        if moved < tol:
            break
    return zs


def _certify(f: IntPoly, zs: list[mpc]) -> list[BallComplex] | None:
    n = f.degree
    balls = [BallComplex(z) for z in zs]
    radii = []
    for i in range(n):
        val = ball_poly_eval(f.coeffs, balls[i])
        denom = mpf(1)
        for j in range(n):
            if j != i:
                denom *= (balls[i] - balls[j]).abs_lower()
        if denom <= 0:
            return None
        radii.append(n * val.abs_upper() / (denom * abs(mpf(f.leading))))
    out = [BallComplex(z) for z in zs]
    for b, r in zip(out, radii):
        b.rad = mpf(r) * (1 + mpf(2) ** (6 - mp.prec))
    for i in range(n):
        for j in range(i + 1, n):
            if out[i].overlaps(out[j]):
                return None
    return out


def complex_roots_certified(
    f: IntPoly,
    target_radius,
    start_prec: int = DEFAULT_PREC,
    prec_cap: int = PREC_CAP,
) -> list[BallComplex]:
    """n disjoint balls, each containing exactly one root, radii <= target_radius.

    Requires f monic (up to sign) and squarefree; raises ValueError on repeated
    roots and PrecisionExceeded past the precision cap.
    """
    n = f.degree
    if n < 1:
        raise ValueError("need degree >= 1")
    if n >= 2 and discriminant(f) == 0:
        raise ValueError("repeated roots (zero discriminant)")
    target = mpf(target_radius)
    prec = start_prec
    zs: list[mpc] | None = None
    while prec <= prec_cap:
        with workprec(prec):
            coeffs = [mpc(c) for c in f.coeffs]
            dcoeffs = [mpc(c) for c in f.derivative().coeffs]
            if zs is None:
                zs = _initial_guesses(f)
            else:
                zs = [mpc(z) for z in zs]
            zs = _aberth_refine(coeffs, dcoeffs, zs, max_iter=60 + 10 * n)
            certified = _certify(f, zs)
            if certified is not None and all(b.rad <= target for b in certified):
                return certified
        prec *= 2
    raise PrecisionExceeded(
        f"could not certify roots of {f!r} to radius {target_radius} below {prec_cap} bits"
    )
