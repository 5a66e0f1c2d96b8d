"""Galois-group classification with explicit certainty bookkeeping.

Verdict labels: reducible, not_squarefree, S_n, A_n, one of the four record
groups, other, unknown.  Every *exclusion* that feeds a verdict is certified
and carried in the evidence list: either an observed Frobenius cycle type the
candidate group cannot contain, or an exact no-integer-root certificate for
the sextic resolvent, or the exact discriminant parity (square <=> even
group).  Positive identifications below S_n/A_n are heuristic by design: the
census only needs the record groups separated from the symmetric/alternating
bulk, and anything that the evidence cannot pin down is reported as "other"
(fits a smaller subgroup) or "unknown" (undecided), never silently dropped.

Certified S_n / A_n use a Jordan-style witness set, strengthened so that it
is actually sound for transitive groups:

* a (p, 1, ..., 1) cycle type with p prime, n/2 < p < n rules out every
  nontrivial block system (an order-p element would have to fix each of the
  at most n/2 < p blocks, trapping its p-cycle inside one block of size
  < p), so the group is primitive;
* a (q, 1, ..., 1) type with q prime <= n-3 then forces the group to contain
  A_n (Jordan);
* an observed odd type (equivalently, non-square discriminant) upgrades A_n
  to S_n, while a square discriminant pins A_n itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .groups import PermGroup, all_subgroups, catalog_group
from .irreducibility import is_irreducible_over_q
from .modp import cycle_type_parity_even, factor_degrees_mod_p, iter_primes
from .polynomials import IntPoly, discriminant, format_poly
from .resolvents import (
    IntegerRootOutcome,
    elementary_from_monic_tail,
    stauduhar_integer_root_test,
)

MAX_CLASSIFY_DEGREE = 8

RECORD_LABELS = {6: ("6T12", "6T14"), 7: ("7T5",), 8: ("8T48",)}


@dataclass(frozen=True)
class TypeWitness:
    prime: int
    cycle_type: tuple[int, ...]


@dataclass(frozen=True)
class Exclusion:
    group: str
    reason: str  # cycle_type | discriminant | resolvent
    witness: TypeWitness | None = None


@dataclass(frozen=True)
class GaloisVerdict:
    label: str
    certainty: str  # certified | heuristic
    degree: int
    prime_bound: int
    cycle_types: tuple[TypeWitness, ...]
    discriminant_square: bool | None
    resolvent_status: str | None
    resolvent_root: int | None
    exclusions: tuple[Exclusion, ...]
    notes: str = ""

    def excluded_labels(self) -> frozenset[str]:
        return frozenset(e.group for e in self.exclusions)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "certainty": self.certainty,
            "degree": self.degree,
            "prime_bound": self.prime_bound,
            "cycle_types": [
                {"prime": w.prime, "type": list(w.cycle_type)} for w in self.cycle_types
            ],
            "discriminant_square": self.discriminant_square,
            "resolvent": {
                "status": self.resolvent_status,
                "root": self.resolvent_root,
            },
            "exclusions": [
                {
                    "group": e.group,
                    "reason": e.reason,
                    "witness": None
                    if e.witness is None
                    else {"prime": e.witness.prime, "type": list(e.witness.cycle_type)},
                }
                for e in self.exclusions
            ],
            "notes": self.notes,
        }


@dataclass(frozen=True)
class ClassifyConfig:
    prime_bound: int = 10_000
    use_resolvent: bool = True
    resolvent_start_prec: int = 192


def discriminant_is_square(f: IntPoly) -> bool:
    """Exact integer-square test of the discriminant (requires it nonzero)."""
    d = discriminant(f)
    if d == 0:
        raise ValueError("zero discriminant: square test needs a squarefree input")
    return d > 0 and isqrt(d) ** 2 == d


def dedekind_sieve(f: IntPoly, prime_bound: int) -> tuple[TypeWitness, ...]:
    """First witness prime for each distinct Frobenius cycle type below the bound.

    Primes with bad reduction (non-squarefree mod p, or dividing the leading
    coefficient) are skipped.  Soundness: every witnessed type is realized in
    the Galois group; completeness is only heuristic in the bound.

    Monic sextics with small coefficients ride the compiled Frobenius engine;
    p = 2 is covered by the generic path in both cases.
    """
    seen: dict[tuple[int, ...], int] = {}
    fast = (
        f.degree == 6
        and f.is_monic()
        and f.coeffs[5] == 0
        and max(abs(c) for c in f.coeffs) <= 10**8
        and prime_bound >= 3
    )
    if f.leading % 2 != 0:
        ctype = factor_degrees_mod_p(f, 2)
        if ctype is not None:
            seen[ctype] = 2
    if fast:
        import numpy as np

        from .kernels import decode_type_key, sextic_type_keys, wide_prime_tables

        primes, invtabs = wide_prime_tables(prime_bound)
        keys = np.empty(len(primes), dtype=np.int64)
        sextic_type_keys(
            f.coeffs[4], f.coeffs[3], f.coeffs[2], f.coeffs[1], f.coeffs[0],
            primes, invtabs, keys,
        )
        for p, key in zip(primes, keys):
            if key < 0:
                continue
            ctype = decode_type_key(int(key))
            if ctype not in seen:
                seen[ctype] = int(p)
    else:
        for p in iter_primes(prime_bound):
            if p == 2 or f.leading % p == 0:
                continue
            ctype = factor_degrees_mod_p(f, p)
            if ctype is None:
                continue
            if ctype not in seen:
                seen[ctype] = p
    return tuple(TypeWitness(p, t) for t, p in sorted(seen.items(), key=lambda kv: kv[1]))


def _is_certified_bulk(n: int, types: set[tuple[int, ...]], even: bool) -> bool:
    """Sound Jordan-style witness check for A_n (even=True) or S_n."""
    if n <= 2:
        return True
    if n == 3:
        return True  # transitive cubic group is A_3 or S_3; parity decides
    has_prim = any(
        t[0] > n / 2 and t[0] < n and _is_prime(t[0]) and set(t[1:]) <= {1}
        for t in types
    )
    has_jordan = any(
        _is_prime(t[0]) and t[0] <= n - 3 and set(t[1:]) <= {1} and len(t) > 1
        for t in types
    )
    if not (has_prim and has_jordan):
        return False
    if not even:
        return any(not cycle_type_parity_even(t, n) for t in types)
    return True


def _is_prime(m: int) -> bool:
    return m >= 2 and all(m % d for d in range(2, isqrt(m) + 1))


_SMALLER_TYPE_SETS_CACHE: dict[str, tuple[frozenset, ...]] = {}


def _smaller_transitive_type_sets(label: str) -> tuple[frozenset, ...]:
    """Cycle-type sets of the proper transitive subgroups of a record group."""
    if label not in _SMALLER_TYPE_SETS_CACHE:
        g = catalog_group(label)
        sets = {
            frozenset(s.cycle_type_set())
            for s in all_subgroups(g)
            if s.order < g.order and s.is_transitive()
        }
        _SMALLER_TYPE_SETS_CACHE[label] = tuple(sets)
    return _SMALLER_TYPE_SETS_CACHE[label]


def _fits_smaller(label: str, types: set[tuple[int, ...]]) -> bool:
    return any(types <= ts for ts in _smaller_transitive_type_sets(label))


def classify(f: IntPoly, config: ClassifyConfig | None = None) -> GaloisVerdict:
    """Full pipeline: irreducibility, discriminant parity, Frobenius sieve
    against the catalog type sets, and (degree 6, monic) the sextic resolvent
    integer-root certificate."""
    config = config or ClassifyConfig()
    n = f.degree
    if n < 1:
        raise ValueError("classify needs degree >= 1")
    if n > MAX_CLASSIFY_DEGREE:
        raise ValueError(f"degree {n} beyond the supported range")
    if n == 1:
        return GaloisVerdict(
            "S_n", "certified", 1, 0, (), None, None, None, (), notes="linear"
        )
    if discriminant(f) == 0:
        return GaloisVerdict(
            "not_squarefree", "certified", n, 0, (), None, None, None, ()
        )
    if not is_irreducible_over_q(f):
        return GaloisVerdict("reducible", "certified", n, 0, (), None, None, None, ())

    witnesses = dedekind_sieve(f, config.prime_bound)
    types = {w.cycle_type for w in witnesses}
    by_type = {w.cycle_type: w for w in witnesses}
    disc_square = discriminant_is_square(f)
    odd_witness = next(
        (w for w in witnesses if not cycle_type_parity_even(w.cycle_type, n)), None
    )

    exclusions: list[Exclusion] = []
    if disc_square:
        exclusions.append(Exclusion("S_n", "discriminant"))
    else:
        exclusions.append(Exclusion("A_n", "discriminant", odd_witness))

    record_labels = RECORD_LABELS.get(n, ())
    alive: dict[str, bool] = {}
    for label in record_labels:
        cat = catalog_group(label)
        bad = next((t for t in types if t not in cat.cycle_type_set()), None)
        if bad is not None:
            exclusions.append(Exclusion(label, "cycle_type", by_type[bad]))
            alive[label] = False
        elif cat.parity_even != disc_square:
            # group parity must match the discriminant parity for equality
            exclusions.append(
                Exclusion(label, "discriminant", None if disc_square else odd_witness)
            )
            alive[label] = False
        else:
            alive[label] = True

    res_status: str | None = None
    res_root: int | None = None
    notes = []
    if n == 6 and config.use_resolvent and f.is_monic():
        # the even types of the catalog PGL copy are exactly the PSL types, so
        # whenever a resolvent certificate could matter one of these is alive
        if alive.get("6T14") or alive.get("6T12"):
            tail = list(f.coeffs[:-1])[::-1]  # t_1 ... t_6
            outcome: IntegerRootOutcome = stauduhar_integer_root_test(
                elementary_from_monic_tail(tail),
                start_prec=config.resolvent_start_prec,
            )
            res_status, res_root = outcome.status, outcome.root
            if outcome.status == "certified_no_root":
                for label in ("6T14", "6T12"):
                    if alive.get(label):
                        exclusions.append(Exclusion(label, "resolvent"))
                        alive[label] = False
    elif n == 6 and not f.is_monic():
        notes.append("resolvent certificate skipped (non-monic input)")

    label, certainty = _assemble(
        n, types, disc_square, alive, res_status, res_root, notes
    )
    return GaloisVerdict(
        label=label,
        certainty=certainty,
        degree=n,
        prime_bound=config.prime_bound,
        cycle_types=witnesses,
        discriminant_square=disc_square,
        resolvent_status=res_status,
        resolvent_root=res_root,
        exclusions=tuple(exclusions),
        notes="; ".join(notes),
    )


def _assemble(n, types, disc_square, alive, res_status, res_root, notes):
    """Documented verdict rules, given the certified evidence."""
    live_records = [lab for lab, ok in alive.items() if ok]

    if not disc_square:
        # candidates: S_n and any surviving odd-capable record group
        if n == 6 and live_records:
            if res_status == "certified_root":
                if _fits_smaller("6T14", types):
                    notes.append("types fit a proper transitive subgroup of 6T14")
                    return "other", "heuristic"
                return "6T14", "heuristic"
            if res_status == "inconclusive":
                return "unknown", "heuristic"
            # no resolvent run (disabled/non-monic): cannot separate
            return "unknown", "heuristic"
        if n in (7, 8) and live_records:
            # record groups of degree 7/8 are even, so they are not live here
            pass
        cert = _is_certified_bulk(n, types, even=False)
        return "S_n", ("certified" if cert else "heuristic")

    # square discriminant: candidates A_n and surviving record groups
    if n == 6 and live_records:
        if res_status == "certified_root" and alive.get("6T12"):
            if _fits_smaller("6T12", types):
                notes.append("types fit a proper transitive subgroup of 6T12")
                return "other", "heuristic"
            return "6T12", "heuristic"
        if res_status == "inconclusive":
            return "unknown", "heuristic"
        # no-root cannot happen here (it would have emptied live_records), and
        # a skipped resolvent leaves A_6 vs 6T12 undecided
        return "unknown", "heuristic"
    if n in (7, 8) and live_records:
        # even record group not excluded by types: cannot be separated from
        # A_n by this pipeline; report the record label only when the type
        # set is too small for A_n to be likely and no smaller fit exists
        label = live_records[0]
        if _fits_smaller(label, types):
            notes.append(f"types fit a proper transitive subgroup of {label}")
            return "other", "heuristic"
        return label, "heuristic"
    cert = _is_certified_bulk(n, types, even=True)
    return "A_n", ("certified" if cert else "heuristic")
