"""Exact permutation-group engine for degrees up to 8.

Groups are fully enumerated (no stabilizer chains): at degree <= 8 there are
at most 40320 elements and exhaustive sets keep every question exact.
"""

from __future__ import annotations

import itertools
from functools import lru_cache, reduce

from .perms import Permutation, all_permutations, from_cycles, identity

MAX_DEGREE = 8

# Five synthemes (partitions of the six points into three pairs) whose common
# stabilizer in S6 is a copy of PGL(2,5).  This fixed labelling is what makes
# the degree-10 product invariant of the sextic resolvent literally invariant
# under the catalog group, not merely invariant up to conjugacy.
SEXTIC_SYNTHEMES = (
    ((0, 1), (2, 4), (3, 5)),
    ((0, 2), (3, 4), (1, 5)),
    ((2, 3), (0, 5), (1, 4)),
    ((0, 4), (1, 3), (2, 5)),
    ((0, 3), (1, 2), (4, 5)),
)


def _closure(degree: int, gen_imgs) -> set[tuple[int, ...]]:
    """Breadth-first closure of generator image-tables under composition."""
    idimg = tuple(range(degree))
    gens = [tuple(g) for g in gen_imgs]
    seen = {idimg}
    frontier = [idimg]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                # (g then a): apply generator first, matching a * g
                prod = tuple(a[g[i]] for i in range(degree))
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return seen


class PermGroup:
    """Fully enumerated permutation group on {0,...,degree-1}."""

    def __init__(self, generators, degree=None, _elements=None, name=None):
        generators = tuple(generators)
        if degree is None:
            if not generators:
                raise ValueError("need a degree for the trivial group")
            degree = generators[0].degree
        if degree < 1:
            raise ValueError("degree must be >= 1")
        if degree > MAX_DEGREE:
            raise ValueError(f"degree {degree} > {MAX_DEGREE}: exhaustive enumeration refused")
        if any(g.degree != degree for g in generators):
            raise ValueError("generators have mismatched degrees")
        self.degree = degree
        self.generators = generators
        if _elements is None:
            imgs = _closure(degree, (g.img for g in generators))
            _elements = frozenset(Permutation(img) for img in imgs)
        self.elements = _elements
        self.order = len(self.elements)
        self.name = name
        # parity is a homomorphism, so the generators decide it
        self.parity_even = all(g.is_even() for g in generators)
        self._cycle_types = None
        self._ind = None
        self._blocks = None

    @classmethod
    def from_elements(cls, elements, degree, name=None):
        """Build from a closed element set; derives a small deterministic generating set."""
        elements = frozenset(elements)
        gens: list[Permutation] = []
        span = {identity(degree).img}
        for p in sorted(elements):
            if p.img in span:
                continue
            gens.append(p)
            span = _closure(degree, (g.img for g in gens))
            if len(span) == len(elements):
                break
        if len(span) != len(elements):
            raise ValueError("element set is not closed under composition")
        return cls(tuple(gens), degree=degree, _elements=elements, name=name)

    # -- basic structure ----------------------------------------------------

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PermGroup)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def __repr__(self) -> str:
        label = self.name or f"degree {self.degree}"
        return f"PermGroup({label}, order {self.order})"

    def orbit(self, point: int) -> frozenset[int]:
        seen = {point}
        frontier = [point]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = g(x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def orbits(self) -> list[frozenset[int]]:
        left = set(range(self.degree))
        out = []
        while left:
            orb = self.orbit(min(left))
            out.append(orb)
            left -= orb
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def cycle_type_set(self) -> frozenset[tuple[int, ...]]:
        """All cycle types (partitions of the degree) realized by elements."""
        if self._cycle_types is None:
            self._cycle_types = frozenset(p.cycle_type() for p in self.elements)
        return self._cycle_types

    # -- Malle invariants ---------------------------------------------------

    def group_index(self) -> int:
        """min over non-identity g of (degree - number of orbits of g)."""
        if self.order < 2:
            raise ValueError("index is undefined for the trivial group")
        if self._ind is None:
            best = self.degree
            for p in self.elements:
                if p.is_identity():
                    continue
                ind = self.degree - p.num_orbits()
                if ind < best:
                    best = ind
                    if best == 1:
                        break
            self._ind = best
        return self._ind

    # -- blocks and primitivity ----------------------------------------------

    def _minimal_block(self, j: int) -> tuple[frozenset[int], ...] | None:
        """Finest G-stable partition merging points 0 and j (union-find refinement).

        Returns None when the merge collapses everything to a single class.
        """
        n = self.degree
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        queue = [(0, j)]
        while queue:
            a, b = queue.pop()
            ra, rb = find(a), find(b)
            if ra == rb:
                continue
            parent[rb] = ra
            for g in self.generators:
                queue.append((g(a), g(b)))
        classes: dict[int, list[int]] = {}
        for x in range(n):
            classes.setdefault(find(x), []).append(x)
        if len(classes) == 1:
            return None
        return tuple(sorted((frozenset(c) for c in classes.values()), key=min))

    def block_systems(self) -> list[tuple[frozenset[int], ...]]:
        """All nontrivial block systems, each a partition into equal-size blocks.

        Minimal systems come from pairs {0, j}; the rest are joins of those.
        """
        if not self.is_transitive():
            raise ValueError("block systems are defined for transitive groups")
        if self._blocks is not None:
            return self._blocks
        systems = set()
        for j in range(1, self.degree):
            sys_j = self._minimal_block(j)
            if sys_j is not None and len(sys_j) < self.degree:
                systems.add(sys_j)
        # close under partition join (coarsest common refinement going up)
        changed = True
        while changed:
            changed = False
            for s1, s2 in itertools.combinations(list(systems), 2):
                joined = _partition_join(s1, s2, self.degree)
                if 1 < len(joined) < self.degree and joined not in systems:
                    systems.add(joined)
                    changed = True
        self._blocks = sorted(systems, key=lambda s: (len(s[0]), s))
        return self._blocks

    def is_primitive(self) -> bool:
        return self.is_transitive() and not self.block_systems()


def _partition_join(p1, p2, n):
    """Finest partition coarser than both (connected components of the overlap graph)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in itertools.chain(p1, p2):
        it = iter(part)
        first = next(it)
        for x in it:
            parent[find(x)] = find(first)
    classes: dict[int, list[int]] = {}
    for x in range(n):
        classes.setdefault(find(x), []).append(x)
    return tuple(sorted((frozenset(c) for c in classes.values()), key=min))


# -- cosets and conjugacy ----------------------------------------------------


def coset_representatives(group: PermGroup, degree: int | None = None) -> list[Permutation]:
    """Lexicographically least representatives of the left cosets sigma*G in S_n."""
    n = degree if degree is not None else group.degree
    if n != group.degree:
        raise ValueError("degree mismatch")
    if n > MAX_DEGREE:
        raise ValueError("degree too large for exhaustive coset enumeration")
    reps = []
    covered: set[tuple[int, ...]] = set()
    for sigma in all_permutations(n):
        if sigma.img in covered:
            continue
        reps.append(sigma)
        for g in group.elements:
            covered.add((sigma * g).img)
    return reps


def is_subgroup_of_conjugate(h: PermGroup, g: PermGroup) -> bool:
    """True iff sigma * H * sigma^-1 <= G for some sigma in S_n (brute force)."""
    if h.degree != g.degree:
        raise ValueError("degree mismatch")
    if g.order % h.order != 0:
        return False
    for sigma in all_permutations(h.degree):
        inv = sigma.inverse()
        if all((sigma * gen * inv) in g.elements for gen in h.generators):
            return True
    return False


def all_subgroups(group: PermGroup) -> list[PermGroup]:
    """Every subgroup, by closing the cyclic subgroups under pairwise joins.

    Exhaustive and slow by design; intended for orders up to a few hundred.
    """
    if group.order > 2000:
        raise ValueError("subgroup enumeration refused beyond order 2000")
    n = group.degree
    cyclics: set[frozenset[Permutation]] = set()
    for p in group.elements:
        cyc = {identity(n)}
        q = p
        while not q.is_identity():
            cyc.add(q)
            q = q * p
        cyclics.add(frozenset(cyc))
    subs: set[frozenset[Permutation]] = set(cyclics)
    frontier = set(cyclics)
    while frontier:
        new: set[frozenset[Permutation]] = set()
        for s in frontier:
            for c in cyclics:
                if c <= s:
                    continue
                joined = frozenset(
                    Permutation(img)
                    for img in _closure(n, [p.img for p in (set(s) | set(c))])
                )
                if joined not in subs:
                    new.add(joined)
        subs |= new
        frontier = new
    return [PermGroup.from_elements(s, n) for s in sorted(subs, key=lambda s: (len(s), sorted(p.img for p in s)))]


# -- catalog constructors -----------------------------------------------------

# expected (order, parity_even, primitive, ind) for the four record groups
_CATALOG_FACTS = {
    "6T12": (60, True, True, 2),
    "6T14": (120, False, True, 2),
    "7T5": (168, True, True, 2),
    "8T48": (1344, True, True, 2),
}


def _syntheme_key(synthemes, perm_img):
    moved = []
    for syn in synthemes:
        moved.append(frozenset(frozenset((perm_img[a], perm_img[b])) for a, b in syn))
    return frozenset(moved)


@lru_cache(maxsize=None)
def _syntheme_stabilizer() -> frozenset[Permutation]:
    target = _syntheme_key(SEXTIC_SYNTHEMES, tuple(range(6)))
    kept = []
    for p in all_permutations(6):
        if _syntheme_key(SEXTIC_SYNTHEMES, p.img) == target:
            kept.append(p)
    return frozenset(kept)


def _projective_line_group(full: bool) -> frozenset[Permutation]:
    """PGL(2,5) (or PSL for full=False) acting on P^1(F5), points inf,0,1,2,3,4."""
    points = list(range(-1, 5))  # -1 encodes the point at infinity
    index = {pt: i for i, pt in enumerate(points)}
    squares = {x * x % 5 for x in range(1, 5)}
    perms = set()
    for a, b, c, d in itertools.product(range(5), repeat=4):
        det = (a * d - b * c) % 5
        if det == 0 or (not full and det not in squares):
            continue
        img = [0] * 6
        for pt in points:
            if pt == -1:
                out = -1 if c == 0 else (a * pow(c, 3, 5)) % 5
            else:
                den = (c * pt + d) % 5
                out = -1 if den == 0 else ((a * pt + b) * pow(den, 3, 5)) % 5
            img[index[pt]] = index[out]
        perms.add(Permutation(img))
    return frozenset(perms)


def _psl32() -> frozenset[Permutation]:
    """GL(3,2) on the 7 nonzero vectors of F2^3, labelled by binary value."""
    vecs = list(range(1, 8))
    mats = []
    for rows in itertools.product(range(1, 8), repeat=3):
        r0, r1, r2 = rows
        # invertible iff rows linearly independent over F2
        spanned = {0, r0, r1, r0 ^ r1}
        if r1 in (0, r0) or r2 in spanned:
            continue
        mats.append(rows)
    perms = set()
    for rows in mats:
        img = []
        for v in vecs:
            w = 0
            for bit, row in zip((4, 2, 1), rows):
                if v & bit:
                    w ^= row
            img.append(w - 1)
        perms.add(Permutation(img))
    return frozenset(perms)


def _agl32() -> frozenset[Permutation]:
    """AGL(3,2) = GL(3,2) plus translations, on all 8 vectors of F2^3."""
    linear = _psl32()
    perms = set()
    for m in linear:
        lin_img = [0] + [m(v - 1) + 1 for v in range(1, 8)]
        for t in range(8):
            perms.add(Permutation(lin_img[v] ^ t for v in range(8)))
    return frozenset(perms)


@lru_cache(maxsize=None)
def catalog_group(name: str, degree: int | None = None) -> PermGroup:
    """Named constructor for the record groups and the standard families.

    Record groups: "6T12", "6T14", "7T5", "8T48" (degree optional, checked).
    Families: "S", "A", "C", "D" with the degree argument, or combined names
    like "S6", "A_6", "C4", "D_6".
    """
    name = name.strip()
    if name in _CATALOG_FACTS:
        need_deg = int(name[0])
        if degree is not None and degree != need_deg:
            raise ValueError(f"{name} has degree {need_deg}, not {degree}")
        if name == "6T14":
            g = PermGroup.from_elements(_syntheme_stabilizer(), 6, name=name)
        elif name == "6T12":
            even = frozenset(p for p in _syntheme_stabilizer() if p.is_even())
            g = PermGroup.from_elements(even, 6, name=name)
        elif name == "7T5":
            g = PermGroup.from_elements(_psl32(), 7, name=name)
        else:
            g = PermGroup.from_elements(_agl32(), 8, name=name)
        order, even, primitive, ind = _CATALOG_FACTS[name]
        if (g.order, g.parity_even) != (order, even):
            raise AssertionError(f"{name}: built order/parity {(g.order, g.parity_even)}")
        if g.is_primitive() != primitive or g.group_index() != ind:
            raise AssertionError(f"{name}: primitivity/index mismatch")
        return g

    family = name.rstrip("_0123456789").rstrip("_")
    trailing = name[len(family):].lstrip("_")
    if trailing:
        if degree is not None and degree != int(trailing):
            raise ValueError(f"degree mismatch in {name!r}")
        degree = int(trailing)
    if degree is None:
        raise ValueError(f"catalog name {name!r} needs a degree")
    n = degree
    if family == "S":
        if n == 1:
            return PermGroup((), degree=1, name="S1")
        gens = [from_cycles(n, [(0, 1)])]
        if n > 2:
            gens.append(from_cycles(n, [tuple(range(n))]))
        g = PermGroup(tuple(gens), name=f"S{n}")
        expect = _factorial(n)
    elif family == "A":
        if n <= 2:
            return PermGroup((), degree=n, name=f"A{n}")
        gens = [from_cycles(n, [(0, 1, 2)])]
        if n > 3:
            cyc = tuple(range(n)) if n % 2 == 1 else tuple(range(1, n))
            gens.append(from_cycles(n, [cyc]))
        g = PermGroup(tuple(gens), name=f"A{n}")
        expect = _factorial(n) // 2
    elif family == "C":
        g = PermGroup((from_cycles(n, [tuple(range(n))]),), name=f"C{n}")
        expect = n
    elif family == "D":
        if n < 3:
            raise ValueError("dihedral groups need degree >= 3")
        rot = from_cycles(n, [tuple(range(n))])
        refl = Permutation([(n - i) % n for i in range(n)])
        g = PermGroup((rot, refl), name=f"D{n}")
        expect = 2 * n
    else:
        raise ValueError(f"unknown catalog name {name!r}")
    if g.order != expect:
        raise AssertionError(f"{name}: order {g.order} != {expect}")
    return g


def _factorial(n: int) -> int:
    return reduce(lambda a, b: a * b, range(1, n + 1), 1)


def group_index(group: PermGroup) -> int:
    return group.group_index()


def malle_a(group: PermGroup):
    from fractions import Fraction

    return Fraction(1, group.group_index())


def element_index(p: Permutation) -> int:
    """degree minus number of orbits; 0 exactly for the identity."""
    return p.degree - p.num_orbits()
