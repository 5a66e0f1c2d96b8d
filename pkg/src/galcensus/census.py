"""Census engine: box enumeration, sharded classification, reports,
checkpointing, exponent fits, and the point-counting / discriminant-line
harnesses.

Determinism contract: a census report depends only on the box specification
and the classifier plan; shard count and worker interleaving never change a
single tally, exemplar, or byte of serialized output.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .classify import ClassifyConfig, classify
from .exponents import bhargava_B, main_E, schmidt_box, sigma
from .groups import catalog_group, malle_a
from .interp import lagrange_univariate
from .polynomials import (
    IntPoly,
    RatPoly,
    discriminant_of_tail,
    monic_from_tail,
    poly_square_root,
)

SCHEMA_VERSION = 1
DEFAULT_BUDGET = 10**8
EXEMPLARS_PER_CLASS = 5
CENSUS_PRIME_BOUND = 1000


class BudgetExceeded(Exception):
    """Box larger than the enumeration budget; lower X or C."""


# -- box specification ---------------------------------------------------------


@dataclass(frozen=True)
class BoxSpec:
    degree: int
    bound: int  # X
    const: int = 1  # C
    traceless: bool = True

    def __post_init__(self):
        if not (2 <= self.degree <= 8):
            raise ValueError("degree must be between 2 and 8")
        if self.bound < 1 or self.const < 1:
            raise ValueError("bound and const must be >= 1")
        if not self.traceless:
            raise ValueError("only the traceless (a_1 = 0) box is supported")

    def ranges(self) -> list[tuple[int, int]]:
        return schmidt_box(self.degree, self.bound, self.const)

    def radii(self) -> list[int]:
        return [hi for _, hi in self.ranges()]

    def cardinality(self) -> int:
        total = 1
        for r in self.radii():
            total *= 2 * r + 1
        return total

    def spec_hash(self) -> str:
        payload = json.dumps(
            {
                "schema": SCHEMA_VERSION,
                "degree": self.degree,
                "bound": self.bound,
                "const": self.const,
                "traceless": self.traceless,
            },
            sort_keys=True,
        )
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "bound": self.bound,
            "const": self.const,
            "traceless": self.traceless,
        }


def enumerate_box(spec: BoxSpec, budget: int = DEFAULT_BUDGET):
    """All coefficient vectors (a_2,...,a_n), mixed-radix ascending order."""
    if spec.cardinality() > budget:
        raise BudgetExceeded(
            f"box holds {spec.cardinality()} vectors (> {budget}); lower X or C"
        )
    radii = spec.radii()

    def rec(prefix, rest):
        if not rest:
            yield tuple(prefix)
            return
        r = rest[0]
        for v in range(-r, r + 1):
            yield from rec(prefix + [v], rest[1:])

    yield from rec([], radii)


def vector_at_index(spec: BoxSpec, index: int) -> tuple[int, ...]:
    radii = spec.radii()
    out = []
    for r in reversed(radii):
        width = 2 * r + 1
        index, rem = divmod(index, width)
        out.append(rem - r)
    return tuple(reversed(out))


# -- labels ----------------------------------------------------------------------


def census_label(raw: str, degree: int) -> str:
    if raw == "S_n":
        return f"S_{degree}"
    if raw == "A_n":
        return f"A_{degree}"
    return raw


ORDERED_LABEL_KINDS = (
    "reducible",
    "not_squarefree",
    "A",
    "S",
    "6T12",
    "6T14",
    "7T5",
    "8T48",
    "other",
    "unknown",
)


def _label_sort_key(label: str):
    kind = label.split("_")[0] if label[0] in "AS" and "_" in label else label
    try:
        return (ORDERED_LABEL_KINDS.index(kind), label)
    except ValueError:
        return (len(ORDERED_LABEL_KINDS), label)


# -- reports -----------------------------------------------------------------------


@dataclass
class CensusReport:
    spec: BoxSpec
    n_shards: int
    shards_done: tuple[int, ...]
    tallies: dict[str, int]
    certainty: dict[str, dict[str, int]]
    exemplars: dict[str, list[dict]]
    runtime_seconds: float
    classifier: dict
    schema_version: int = SCHEMA_VERSION

    def is_complete(self) -> bool:
        return len(self.shards_done) == self.n_shards

    def total(self) -> int:
        return sum(self.tallies.values())

    @staticmethod
    def empty(spec: BoxSpec, n_shards: int, classifier: dict) -> "CensusReport":
        return CensusReport(
            spec=spec,
            n_shards=n_shards,
            shards_done=(),
            tallies={},
            certainty={},
            exemplars={},
            runtime_seconds=0.0,
            classifier=classifier,
        )

    def merge(self, other: "CensusReport") -> "CensusReport":
        """Associative, commutative combination of disjoint shard reports."""
        if self.spec != other.spec or self.n_shards != other.n_shards:
            raise ValueError("cannot merge reports for different censuses")
        if set(self.shards_done) & set(other.shards_done):
            raise ValueError("overlapping shards")
        tallies = dict(self.tallies)
        for k, v in other.tallies.items():
            tallies[k] = tallies.get(k, 0) + v
        certainty: dict[str, dict[str, int]] = {
            k: dict(v) for k, v in self.certainty.items()
        }
        for k, sub in other.certainty.items():
            row = certainty.setdefault(k, {})
            for c, v in sub.items():
                row[c] = row.get(c, 0) + v
        exemplars: dict[str, list[dict]] = {}
        for k in set(self.exemplars) | set(other.exemplars):
            both = self.exemplars.get(k, []) + other.exemplars.get(k, [])
            both.sort(key=lambda e: e["index"])
            exemplars[k] = both[:EXEMPLARS_PER_CLASS]
        return CensusReport(
            spec=self.spec,
            n_shards=self.n_shards,
            shards_done=tuple(sorted(set(self.shards_done) | set(other.shards_done))),
            tallies=tallies,
            certainty=certainty,
            exemplars=exemplars,
            runtime_seconds=self.runtime_seconds + other.runtime_seconds,
            classifier=self.classifier or other.classifier,
        )

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "spec": self.spec.to_dict(),
            "spec_hash": self.spec.spec_hash(),
            "n_shards": self.n_shards,
            "shards_done": list(self.shards_done),
            "cardinality": self.spec.cardinality(),
            "tallies": {
                k: self.tallies[k] for k in sorted(self.tallies, key=_label_sort_key)
            },
            "certainty": {
                k: dict(sorted(self.certainty[k].items()))
                for k in sorted(self.certainty, key=_label_sort_key)
            },
            "exemplars": {
                k: self.exemplars[k] for k in sorted(self.exemplars, key=_label_sort_key)
            },
            "runtime_seconds": round(self.runtime_seconds, 3),
            "classifier": self.classifier,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    @staticmethod
    def from_dict(d: dict) -> "CensusReport":
        spec = BoxSpec(**d["spec"])
        return CensusReport(
            spec=spec,
            n_shards=d["n_shards"],
            shards_done=tuple(d["shards_done"]),
            tallies=dict(d["tallies"]),
            certainty={k: dict(v) for k, v in d["certainty"].items()},
            exemplars={k: list(v) for k, v in d["exemplars"].items()},
            runtime_seconds=d["runtime_seconds"],
            classifier=d.get("classifier", {}),
            schema_version=d.get("schema_version", SCHEMA_VERSION),
        )

    def to_csv(self) -> str:
        lines = ["label,certified,heuristic,total"]
        for k in sorted(self.tallies, key=_label_sort_key):
            cert = self.certainty.get(k, {}).get("certified", 0)
            heur = self.certainty.get(k, {}).get("heuristic", 0)
            lines.append(f"{k},{cert},{heur},{self.tallies[k]}")
        lines.append(f"TOTAL,,,{self.total()}")
        return "\n".join(lines) + "\n"


# -- shard execution ---------------------------------------------------------------


def shard_bounds(spec: BoxSpec, n_shards: int) -> list[tuple[int, int]]:
    """Contiguous chunks of the leading coordinate; may be empty at the tail."""
    lead = spec.radii()[0]
    values = 2 * lead + 1
    n_shards = max(1, n_shards)
    out = []
    base = values // n_shards
    extra = values % n_shards
    start = -lead
    for i in range(n_shards):
        width = base + (1 if i < extra else 0)
        out.append((start, start + width - 1))
        start += width
    return out


def _classifier_plan() -> dict:
    from .kernels import KERNEL_PRIMES

    return {
        "kernel_primes": [int(p) for p in KERNEL_PRIMES],
        "fallback_prime_bound": CENSUS_PRIME_BOUND,
        "version": 1,
    }


def _prewarm_sextic() -> None:
    """Compile/caches shared state before forking shard workers: the numba
    kernels, the catalog groups, the subgroup type-set cache, and the wide
    prime tables all get inherited for free."""
    import numpy as np

    from .classify import _smaller_transitive_type_sets
    from .kernels import (
        KERNEL_INVTABS,
        KERNEL_PRIMES,
        PGL_TYPE_KEYS,
        classify_sextic_shard,
        sextic_type_keys,
        wide_prime_tables,
    )

    codes = np.zeros(3, dtype=np.int8)
    classify_sextic_shard(
        0, 0, 0, 0, 0, 1, KERNEL_PRIMES, KERNEL_INVTABS, PGL_TYPE_KEYS, codes
    )
    primes, invtabs = wide_prime_tables(CENSUS_PRIME_BOUND)
    keys = np.empty(len(primes), dtype=np.int64)
    sextic_type_keys(0, 0, 0, 1, 1, primes, invtabs, keys)
    for label in ("6T12", "6T14"):
        _smaller_transitive_type_sets(label)


def _tally_add(tallies, certainty, exemplars, label, cert, index, vector):
    tallies[label] = tallies.get(label, 0) + 1
    row = certainty.setdefault(label, {})
    row[cert] = row.get(cert, 0) + 1
    ex = exemplars.setdefault(label, [])
    if len(ex) < EXEMPLARS_PER_CLASS:
        ex.append({"index": index, "vector": list(vector), "certainty": cert})


def _run_shard_sextic(spec: BoxSpec, shard_id: int, n_shards: int) -> dict:
    from .kernels import (
        CODE_PYTHON,
        CODE_REDUCIBLE,
        CODE_S6_CERTIFIED,
        CODE_S6_HEURISTIC,
        KERNEL_INVTABS,
        KERNEL_PRIMES,
        PGL_TYPE_KEYS,
        classify_sextic_shard,
    )

    t0 = time.time()
    radii = spec.radii()
    lo, hi = shard_bounds(spec, n_shards)[shard_id]
    inner = 1
    for r in radii[1:]:
        inner *= 2 * r + 1
    base_index = (lo + radii[0]) * inner
    count = max(0, hi - lo + 1) * inner
    tallies: dict[str, int] = {}
    certainty: dict[str, dict[str, int]] = {}
    exemplars: dict[str, list[dict]] = {}
    if count:
        codes = np.zeros(count, dtype=np.int8)
        classify_sextic_shard(
            lo, hi, radii[1], radii[2], radii[3], radii[4],
            KERNEL_PRIMES, KERNEL_INVTABS, PGL_TYPE_KEYS, codes,
        )
        code_label = {
            CODE_REDUCIBLE: ("reducible", "certified"),
            CODE_S6_CERTIFIED: ("S_6", "certified"),
            CODE_S6_HEURISTIC: ("S_6", "heuristic"),
        }
        counts = np.bincount(codes, minlength=4)
        for code, (label, cert) in code_label.items():
            n = int(counts[code])
            if n:
                tallies[label] = tallies.get(label, 0) + n
                certainty.setdefault(label, {})[cert] = (
                    certainty.get(label, {}).get(cert, 0) + n
                )
        # exemplars for kernel-coded classes: first few indices per code
        for code, (label, cert) in code_label.items():
            hits = np.flatnonzero(codes == code)[:EXEMPLARS_PER_CLASS]
            exemplars[label] = [
                {
                    "index": int(base_index + i),
                    "vector": list(vector_at_index(spec, int(base_index + i))),
                    "certainty": cert,
                }
                for i in hits
            ]
        # escalate the rest to the exact path
        cfg = ClassifyConfig(prime_bound=CENSUS_PRIME_BOUND)
        esc_tallies: dict[str, int] = {}
        esc_cert: dict[str, dict[str, int]] = {}
        esc_ex: dict[str, list[dict]] = {}
        for i in np.flatnonzero(codes == CODE_PYTHON):
            gidx = int(base_index + i)
            vec = vector_at_index(spec, gidx)
            f = monic_from_tail((0,) + vec)
            v = classify(f, cfg)
            label = census_label(v.label, 6)
            _tally_add(esc_tallies, esc_cert, esc_ex, label, v.certainty, gidx, vec)
        for k, n in esc_tallies.items():
            tallies[k] = tallies.get(k, 0) + n
        for k, sub in esc_cert.items():
            row = certainty.setdefault(k, {})
            for c, n in sub.items():
                row[c] = row.get(c, 0) + n
        for k, ex in esc_ex.items():
            both = exemplars.get(k, []) + ex
            both.sort(key=lambda e: e["index"])
            exemplars[k] = both[:EXEMPLARS_PER_CLASS]
        exemplars = {k: v for k, v in exemplars.items() if v}
    return {
        "shard_id": shard_id,
        "tallies": tallies,
        "certainty": certainty,
        "exemplars": exemplars,
        "runtime": time.time() - t0,
    }


def _run_shard_cubic(spec: BoxSpec, shard_id: int, n_shards: int) -> dict:
    """Vectorized exact cubic classifier: {reducible, A_3, S_3}.

    A monic cubic is reducible over Q iff it has an integer root; an
    irreducible cubic has group A_3 exactly when its discriminant is a square.
    Both tests below are exact in int64 given the budget-guarded ranges.
    """
    t0 = time.time()
    r2, r3 = spec.radii()
    lo, hi = shard_bounds(spec, n_shards)[shard_id]
    inner = 2 * r3 + 1
    tallies: dict[str, int] = {}
    certainty: dict[str, dict[str, int]] = {}
    exemplars: dict[str, list[dict]] = {}
    b = np.arange(-r3, r3 + 1, dtype=np.int64)
    tmax = int(math.isqrt(max(2 * r3, r2))) + 2
    ts = np.arange(-tmax, tmax + 1, dtype=np.int64)
    for a2 in range(lo, hi + 1):
        base_index = (a2 + r2) * inner
        disc = np.full_like(b, -4 * a2**3) - 27 * b * b
        pos = disc > 0
        sq = np.zeros(len(b), dtype=bool)
        if pos.any():
            cand = np.floor(np.sqrt(disc[pos].astype(float))).astype(np.int64)
            ok = np.zeros(cand.shape, dtype=bool)
            for dd in (0, 1, -1, 2):
                ok |= (cand + dd) ** 2 == disc[pos]
            sq[pos] = ok
        reducible = np.zeros(len(b), dtype=bool)
        root_vals = -(ts**3) - a2 * ts  # the a3 values making each t a root
        hits = root_vals[np.abs(root_vals) <= r3]
        reducible[hits + r3] = True
        # precedence: not_squarefree, then reducible, then parity
        label_code = np.where(sq, 2, 3).astype(np.int8)
        label_code[reducible] = 1
        label_code[disc == 0] = 0
        names = (
            ("not_squarefree", "certified"),
            ("reducible", "certified"),
            ("A_3", "certified"),
            ("S_3", "certified"),
        )
        counts = np.bincount(label_code, minlength=4)
        for code, (label, cert) in enumerate(names):
            ncode = int(counts[code])
            if not ncode:
                continue
            tallies[label] = tallies.get(label, 0) + ncode
            row = certainty.setdefault(label, {})
            row[cert] = row.get(cert, 0) + ncode
            ex = exemplars.setdefault(label, [])
            if len(ex) < EXEMPLARS_PER_CLASS:
                for i in np.flatnonzero(label_code == code)[
                    : EXEMPLARS_PER_CLASS - len(ex)
                ]:
                    ex.append(
                        {
                            "index": int(base_index + i),
                            "vector": [a2, int(b[i])],
                            "certainty": cert,
                        }
                    )
    return {
        "shard_id": shard_id,
        "tallies": tallies,
        "certainty": certainty,
        "exemplars": exemplars,
        "runtime": time.time() - t0,
    }


def _run_shard_generic(spec: BoxSpec, shard_id: int, n_shards: int) -> dict:
    t0 = time.time()
    radii = spec.radii()
    lo, hi = shard_bounds(spec, n_shards)[shard_id]
    inner = 1
    for r in radii[1:]:
        inner *= 2 * r + 1
    tallies: dict[str, int] = {}
    certainty: dict[str, dict[str, int]] = {}
    exemplars: dict[str, list[dict]] = {}
    cfg = ClassifyConfig(prime_bound=CENSUS_PRIME_BOUND)

    def rec(prefix, rest):
        if not rest:
            yield tuple(prefix)
            return
        r = rest[0]
        for v in range(-r, r + 1):
            yield from rec(prefix + [v], rest[1:])

    idx = (lo + radii[0]) * inner
    for lead in range(lo, hi + 1):
        for tail in rec([], radii[1:]):
            vec = (lead,) + tail
            v = classify(monic_from_tail((0,) + vec), cfg)
            label = census_label(v.label, spec.degree)
            _tally_add(tallies, certainty, exemplars, label, v.certainty, idx, vec)
            idx += 1
    return {
        "shard_id": shard_id,
        "tallies": tallies,
        "certainty": certainty,
        "exemplars": exemplars,
        "runtime": time.time() - t0,
    }


def run_shard(spec: BoxSpec, shard_id: int, n_shards: int) -> dict:
    from .kernels import MAX_KERNEL_COEFF

    if spec.degree == 6 and max(spec.radii()) <= MAX_KERNEL_COEFF:
        return _run_shard_sextic(spec, shard_id, n_shards)
    if spec.degree == 3:
        return _run_shard_cubic(spec, shard_id, n_shards)
    return _run_shard_generic(spec, shard_id, n_shards)


def _shard_to_report(spec: BoxSpec, n_shards: int, payload: dict) -> CensusReport:
    return CensusReport(
        spec=spec,
        n_shards=n_shards,
        shards_done=(payload["shard_id"],),
        tallies=payload["tallies"],
        certainty=payload["certainty"],
        exemplars=payload["exemplars"],
        runtime_seconds=payload["runtime"],
        classifier=_classifier_plan(),
    )


# -- checkpoints ---------------------------------------------------------------------


def _checkpoint_payload(spec, n_shards, shard_payloads) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "spec": spec.to_dict(),
        "spec_hash": spec.spec_hash(),
        "n_shards": n_shards,
        "shards": {str(p["shard_id"]): p for p in shard_payloads.values()},
    }


def write_checkpoint(path: str, spec, n_shards, shard_payloads) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(_checkpoint_payload(spec, n_shards, shard_payloads), fh)
    os.replace(tmp, path)


def read_checkpoint(path: str, spec: BoxSpec, n_shards: int) -> dict[int, dict]:
    if not os.path.exists(path) or os.path.getsize(path) == 0:
        return {}
    with open(path) as fh:
        data = json.load(fh)
    if data.get("spec_hash") != spec.spec_hash() or data.get("n_shards") != n_shards:
        raise ValueError("checkpoint does not match the requested census")
    return {int(k): v for k, v in data.get("shards", {}).items()}


# -- the census driver -----------------------------------------------------------------


def run_census(
    spec: BoxSpec,
    shards: int = 1,
    workers: int | None = None,
    budget: int = DEFAULT_BUDGET,
    checkpoint_path: str | None = None,
) -> CensusReport:
    card = spec.cardinality()
    if card > budget:
        raise BudgetExceeded(
            f"box holds {card} vectors (> budget {budget}); lower X or C"
        )
    done = read_checkpoint(checkpoint_path, spec, shards) if checkpoint_path else {}
    pending = [s for s in range(shards) if s not in done]
    if workers is None:
        workers = min(len(pending), os.cpu_count() or 1) or 1
    if pending and spec.degree == 6:
        _prewarm_sextic()
    payloads = dict(done)
    if pending:
        if workers <= 1 or len(pending) <= 1:
            for s in pending:
                payloads[s] = run_shard(spec, s, shards)
                if checkpoint_path:
                    write_checkpoint(checkpoint_path, spec, shards, payloads)
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = {
                    s: pool.submit(run_shard, spec, s, shards) for s in pending
                }
                for s in sorted(futures):
                    payloads[s] = futures[s].result()
                    if checkpoint_path:
                        write_checkpoint(checkpoint_path, spec, shards, payloads)
    report = CensusReport.empty(spec, shards, _classifier_plan())
    for s in sorted(payloads):
        report = report.merge(_shard_to_report(spec, shards, payloads[s]))
    if report.total() != card:
        raise AssertionError(
            f"conservation violated: {report.total()} classified of {card}"
        )
    return report


# -- exponent fitting --------------------------------------------------------------------


@dataclass(frozen=True)
class ExponentFit:
    label: str
    points: tuple[tuple[int, int], ...]  # (X, count)
    slope: float
    intercept: float
    residual: float
    references: dict

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "points": [list(p) for p in self.points],
            "slope": self.slope,
            "intercept": self.intercept,
            "residual": self.residual,
            "references": self.references,
        }


def fit_exponent(reports: list[CensusReport], label: str) -> ExponentFit:
    points = []
    for rep in sorted(reports, key=lambda r: r.spec.bound):
        count = rep.tallies.get(label, 0)
        if count > 0:
            points.append((rep.spec.bound, count))
    if len(points) < 2:
        raise ValueError("need at least two reports with positive tallies")
    xs = np.log([p[0] for p in points])
    ys = np.log([p[1] for p in points])
    slope, intercept = np.polyfit(xs, ys, 1)
    resid = float(np.max(np.abs(ys - (slope * xs + intercept))))
    n = reports[0].spec.degree
    refs: dict = {"sigma_n": float(sigma(n))}
    if label in ("6T12", "6T14", "7T5", "8T48"):
        g = catalog_group(label)
        refs.update(
            {
                "a(G)": float(malle_a(g)),
                "B(G)": float(bhargava_B(n, g)),
                "E(G)": float(main_E(n, g)),
            }
        )
    return ExponentFit(
        label=label,
        points=tuple(points),
        slope=float(slope),
        intercept=float(intercept),
        residual=resid,
        references=refs,
    )


# -- lopsided point counting -----------------------------------------------------------------


def _integer_roots_int_poly(coeffs: list[int], bound: int) -> list[int] | None:
    """Integer roots within |x| <= bound of sum coeffs[k] x^k; None = identically zero."""
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return None
    # strip powers of x
    shift = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    roots = set()
    if shift:
        roots.add(0)
    deg = len(coeffs) - 1
    if deg == 0:
        pass
    elif deg == 1:
        q, r = divmod(-coeffs[0], coeffs[1])
        if r == 0:
            roots.add(q)
    elif deg == 2:
        a, bq, c = coeffs[2], coeffs[1], coeffs[0]
        disc = bq * bq - 4 * a * c
        if disc >= 0:
            s = math.isqrt(disc)
            if s * s == disc:
                for sgn in (1, -1):
                    q, r = divmod(-bq + sgn * s, 2 * a)
                    if r == 0:
                        roots.add(q)
    else:
        arr = np.array([float(c) for c in reversed(coeffs)])
        if np.all(np.isfinite(arr)):
            for z in np.roots(arr):
                if abs(z.imag) < 0.5:
                    for cand in (math.floor(z.real), math.ceil(z.real)):
                        acc = 0
                        for c in reversed(coeffs):
                            acc = acc * cand + c
                        if acc == 0:
                            roots.add(cand)
    return [r for r in roots if abs(r) <= bound]


def point_count(
    terms: dict[tuple[int, int], int],
    b1: int,
    b2: int,
    budget: int = DEFAULT_BUDGET,
) -> dict:
    """Exact N(F; B1, B2) = #{(x1,x2): F=0, |x_i| <= B_i}, with the lopsided
    prediction for comparison.  F is {(e1, e2): coefficient}."""
    if b1 * b2 > budget:
        raise BudgetExceeded("B1*B2 beyond the enumeration budget")
    if not terms:
        raise ValueError("empty polynomial")
    max_e2 = max(e2 for _, e2 in terms)
    count = 0
    for x1 in range(-b1, b1 + 1):
        coeffs = [0] * (max_e2 + 1)
        for (e1, e2), c in terms.items():
            coeffs[e2] += c * x1**e1
        roots = _integer_roots_int_poly(coeffs, b2)
        if roots is None:
            count += 2 * b2 + 1
        else:
            count += len(roots)
    from .exponents import bp_prediction

    try:
        t, predicted = bp_prediction(list(terms.keys()), b1, b2)
        ratio = count / predicted if predicted > 0 else float("inf")
    except ValueError:
        t, predicted, ratio = 1.0, float("nan"), float("nan")
    return {
        "count": count,
        "T": t,
        "predicted": predicted,
        "ratio": ratio,
        "b1": b1,
        "b2": b2,
    }


# -- discriminant along a line -------------------------------------------------------------------


_EXCLUDED_LAST = {m * m for m in range(1, 20, 2)} | {m * m + 1 for m in range(1, 20, 2)}


def _rational_discriminant(tail) -> Fraction:
    """Discriminant of x^n + t_1 x^(n-1) + ... + t_n with rational t_i, by the
    weighted clearing t_i -> d^i t_i which scales the discriminant by d^(n(n-1))."""
    tail = [Fraction(t) for t in tail]
    n = len(tail)
    den = 1
    for t in tail:
        den = den * t.denominator // math.gcd(den, t.denominator)
    ints = []
    d = den
    scale = 1
    for i, t in enumerate(tail, start=1):
        scale *= d
        v = t * scale
        assert v.denominator == 1
        ints.append(int(v))
    disc = discriminant_of_tail(ints)
    return Fraction(disc, den ** (n * (n - 1)))


@dataclass(frozen=True)
class LineCheck:
    mode: str
    degree: int
    irreducible: bool
    square_root: tuple | None
    d_degree: int
    note: str = ""


def evenline_check(
    n: int,
    prefix: tuple,
    a,
    c1,
    c2,
    mode: str = "last",
    explore: bool = False,
) -> LineCheck:
    """Is z^2 - D(t) irreducible, for D the discriminant specialized along a line?

    mode "last": (a_(n-1), a_n) = (c1*t + c2, t).  Hypothesis (assertion mode):
    n avoids odd squares and odd squares plus one.
    mode "secondlast": (a_(n-1), a_n) = (t, c2); c1 is ignored.  Hypothesis:
    n is not an odd square plus one.
    explore=True skips the hypothesis check and just reports what it finds.
    """
    if n < 3:
        raise ValueError("n >= 3 required")
    if len(prefix) != max(0, n - 4):
        raise ValueError(f"prefix needs the {max(0, n-4)} values a_2..a_(n-3)")
    if not explore:
        if mode == "last" and n in _EXCLUDED_LAST:
            raise ValueError(f"n = {n} is excluded by the hypothesis (use explore)")
        if mode == "secondlast" and n - 1 in {m * m for m in range(1, 20, 2)}:
            raise ValueError(f"n = {n} is excluded by the hypothesis (use explore)")

    c1, c2 = Fraction(c1), Fraction(c2)

    def tail_at(t: Fraction):
        t = Fraction(t)
        if n == 3:
            head = [Fraction(a)]  # the lone free slot is the x^2 coefficient
        else:
            head = [Fraction(0)] + [Fraction(v) for v in prefix] + [Fraction(a)]
        if mode == "last":
            return head + [c1 * t + c2, t]
        if mode == "secondlast":
            return head + [t, c2]
        raise ValueError(f"unknown mode {mode!r}")

    deg_bound = 2 * n - 2
    nodes = list(range(-(deg_bound // 2) - 1, deg_bound // 2 + 2))[: deg_bound + 1]
    values = [_rational_discriminant(tail_at(t)) for t in nodes]
    dpoly = lagrange_univariate(nodes, values)
    check_t = deg_bound // 2 + 2
    if dpoly(check_t) != _rational_discriminant(tail_at(check_t)):
        raise AssertionError("discriminant interpolation failed its check node")
    if dpoly.is_zero():
        return LineCheck(mode, n, False, None, -1, note="discriminant vanishes identically")
    s = poly_square_root(dpoly)
    return LineCheck(
        mode=mode,
        degree=n,
        irreducible=s is None,
        square_root=None if s is None else tuple(str(c) for c in s.coeffs),
        d_degree=dpoly.degree,
    )
