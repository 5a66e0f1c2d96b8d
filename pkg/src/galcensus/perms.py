"""Permutations of {1,...,n} stored as dense image tables.

Points are 0-based internally; all text I/O (cycle notation) is 1-based.
Composition is right-to-left: ``(a * b)(x) = a(b(x))``.
"""

from __future__ import annotations

import itertools
import re
from functools import reduce


class Permutation:
    """Immutable bijection of {0,...,n-1}, hashable, totally ordered by image table."""

    __slots__ = ("img",)

    def __init__(self, img):
        img = tuple(img)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a bijection of 0..{len(img)-1}: {img}")
        object.__setattr__(self, "img", img)

    @property
    def degree(self) -> int:
        return len(self.img)

    def __call__(self, i: int) -> int:
        return self.img[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self.img) != len(other.img):
            raise ValueError("degree mismatch")
        a, b = self.img, other.img
        return Permutation(a[b[i]] for i in range(len(a)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.img)
        for i, j in enumerate(self.img):
            inv[j] = i
        return Permutation(inv)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.img == other.img

    def __lt__(self, other: "Permutation") -> bool:
        return self.img < other.img

    def __le__(self, other: "Permutation") -> bool:
        return self.img <= other.img

    def __hash__(self) -> int:
        return hash(self.img)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.img))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition on 0-based points, fixed points included,
        each cycle starting at its least point, cycles sorted by that point."""
        seen = [False] * len(self.img)
        out = []
        for start in range(len(self.img)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.img[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.img[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Partition of n: cycle lengths sorted in decreasing order."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def num_orbits(self) -> int:
        return len(self.cycles())

    def is_even(self) -> bool:
        # sign = (-1)^(n - #cycles)
        return (len(self.img) - self.num_orbits()) % 2 == 0

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r})"


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError("degree must be >= 1")
    return Permutation(range(n))


def from_cycles(n: int, cycles) -> Permutation:
    """Build a permutation of degree n from 0-based cycles."""
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
            img[a] = b
    return Permutation(img)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation, e.g. "(1 2 3)(4 5)". "()" is the identity."""
    text = text.strip()
    if not re.fullmatch(r"(\s*\([\d\s,]*\)\s*)+", text):
        raise ValueError(f"bad cycle notation: {text!r}")
    img = list(range(degree))
    for m in _CYCLE_RE.finditer(text):
        pts = [int(t) - 1 for t in re.split(r"[\s,]+", m.group(1).strip()) if t]
        if any(p < 0 or p >= degree for p in pts):
            raise ValueError(f"point out of range 1..{degree} in {text!r}")
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle: {text!r}")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            if img[a] != a:
                raise ValueError(f"cycles not disjoint in {text!r}")
            img[a] = b
    return Permutation(img)


def format_cycles(p: Permutation) -> str:
    """1-based cycle notation, fixed points omitted; identity rendered "()"."""
    parts = [
        "(" + " ".join(str(x + 1) for x in c) + ")" for c in p.cycles() if len(c) > 1
    ]
    return "".join(parts) if parts else "()"


def all_permutations(n: int):
    """All n! permutations of degree n in lexicographic image order."""
    return (Permutation(img) for img in itertools.permutations(range(n)))


def product(perms, n: int) -> Permutation:
    return reduce(lambda a, b: a * b, perms, identity(n))
