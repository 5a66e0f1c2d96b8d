"""FastAPI service wrapping the census package.

Every external interface of the package is an endpoint here; the CLI is a
thin HTTP client of this app (in-process by default, remote with --server).
"""

from __future__ import annotations

import random
from fractions import Fraction

from fastapi import FastAPI, HTTPException

from .. import census as census_mod
from ..balls import PrecisionExceeded
from ..classify import ClassifyConfig, classify
from ..exponents import history_table, record_table, schmidt_box
from ..groups import catalog_group, malle_a
from ..perms import format_cycles
from ..polynomials import IntPoly, format_poly, poly_from_text
from ..resolvents import (
    ResolventParams,
    build_resolvent,
    elementary_from_monic_tail,
    resolvent_is_separable,
    stauduhar_integer_root_test,
)
from .models import (
    CensusRequest,
    CensusResponse,
    ClassifyRequest,
    ClassifyResponse,
    EvenLineRequest,
    EvenLineResponse,
    EvenLineResult,
    ExponentTablesResponse,
    FitRequest,
    FitResponse,
    GroupInfoRequest,
    GroupInfoResponse,
    HealthResponse,
    HistoryRowModel,
    PointCountRequest,
    PointCountResponse,
    RecordRowModel,
    ResolventRequest,
    ResolventResponse,
    SchmidtBoxRequest,
    SchmidtBoxResponse,
)

app = FastAPI(
    title="galcensus",
    description=(
        "Galois-group censuses of integer polynomials in lopsided coefficient "
        "boxes: exact group catalog, certified resolvents, exponent tables, "
        "and checkpointed enumeration."
    ),
)


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse()


@app.get("/exponents/tables", response_model=ExponentTablesResponse)
def exponent_tables() -> ExponentTablesResponse:
    records = [
        RecordRowModel(
            group=row.group,
            degree=row.degree,
            order=row.order,
            parity_even=row.parity_even,
            index_in_symmetric=row.index_in_symmetric,
            malle_exponent=str(row.malle_exponent),
            bhargava_bound=f"{float(row.bhargava_bound):g}",
            improved_bound_decimal=row.improved_bound.decimal(2),
        )
        for row in record_table()
    ]
    history = [HistoryRowModel(**row.__dict__) for row in history_table()]
    return ExponentTablesResponse(records=records, history=history)


@app.post("/groups/info", response_model=GroupInfoResponse)
def group_info(req: GroupInfoRequest) -> GroupInfoResponse:
    try:
        g = catalog_group(req.name, req.degree)
    except (ValueError, AssertionError) as exc:
        raise _bad_request(exc)
    transitive = g.is_transitive()
    return GroupInfoResponse(
        name=req.name,
        degree=g.degree,
        order=g.order,
        parity_even=g.parity_even,
        transitive=transitive,
        primitive=g.is_primitive() if transitive else False,
        malle_index=g.group_index(),
        malle_exponent=str(malle_a(g)),
        generators=[format_cycles(p) for p in g.generators],
        block_systems=[
            [sorted(x + 1 for x in block) for block in system]
            for system in (g.block_systems() if transitive else [])
        ],
        cycle_types=[list(t) for t in sorted(g.cycle_type_set())],
    )


@app.post("/galois/classify", response_model=ClassifyResponse)
def galois_classify(req: ClassifyRequest) -> ClassifyResponse:
    try:
        f = poly_from_text(req.poly)
        verdict = classify(
            f,
            ClassifyConfig(prime_bound=req.prime_bound, use_resolvent=req.use_resolvent),
        )
    except (ValueError, PrecisionExceeded) as exc:
        raise _bad_request(exc)
    return ClassifyResponse(poly=format_poly(f), verdict=verdict.to_dict())


@app.post("/resolvent/build", response_model=ResolventResponse)
def resolvent_build(req: ResolventRequest) -> ResolventResponse:
    try:
        f = poly_from_text(req.poly)
        group = catalog_group(req.group)
        params = None
        if req.weights is not None or req.exponents is not None:
            if req.weights is None or req.exponents is None:
                raise ValueError("weights and exponents must be given together")
            params = ResolventParams(
                tuple(req.weights), tuple(req.exponents), req.shift
            )
        res = build_resolvent(f, group, params)
        separable = resolvent_is_separable(res)
        status = root = None
        if group.name == "6T14" and f.is_monic() and f.degree == 6:
            tail = list(f.coeffs[:-1])[::-1]
            outcome = stauduhar_integer_root_test(elementary_from_monic_tail(tail))
            status, root = outcome.status, outcome.root
        import json as _json

        return ResolventResponse(
            resolvent=_json.loads(res.to_json()),
            separable=separable,
            integer_root_status=status,
            integer_root=root,
        )
    except (ValueError, PrecisionExceeded) as exc:
        raise _bad_request(exc)


@app.post("/box", response_model=SchmidtBoxResponse)
def box(req: SchmidtBoxRequest) -> SchmidtBoxResponse:
    try:
        spec = census_mod.BoxSpec(degree=req.degree, bound=req.bound, const=req.const)
    except ValueError as exc:
        raise _bad_request(exc)
    return SchmidtBoxResponse(
        degree=req.degree,
        bound=req.bound,
        const=req.const,
        ranges=spec.ranges(),
        cardinality=spec.cardinality(),
    )


@app.post("/census/run", response_model=CensusResponse)
def census_run(req: CensusRequest) -> CensusResponse:
    try:
        spec = census_mod.BoxSpec(degree=req.degree, bound=req.bound, const=req.const)
        report = census_mod.run_census(
            spec,
            shards=req.shards,
            workers=req.workers,
            budget=req.budget,
            checkpoint_path=req.checkpoint_path,
        )
    except (ValueError, census_mod.BudgetExceeded) as exc:
        raise _bad_request(exc)
    return CensusResponse(report=report.to_dict())


@app.post("/census/fit", response_model=FitResponse)
def census_fit(req: FitRequest) -> FitResponse:
    try:
        reports = [census_mod.CensusReport.from_dict(d) for d in req.reports]
        fit = census_mod.fit_exponent(reports, req.label)
    except (ValueError, KeyError) as exc:
        raise _bad_request(exc)
    return FitResponse(fit=fit.to_dict())


def parse_bivariate(text: str) -> dict[tuple[int, int], int]:
    terms: dict[tuple[int, int], int] = {}
    for chunk in text.strip().split(";"):
        if not chunk.strip():
            continue
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 3:
            raise ValueError(f"term {chunk!r} is not 'coeff,e1,e2'")
        c, e1, e2 = int(parts[0]), int(parts[1]), int(parts[2])
        if e1 < 0 or e2 < 0:
            raise ValueError("exponents must be nonnegative")
        terms[(e1, e2)] = terms.get((e1, e2), 0) + c
    terms = {k: v for k, v in terms.items() if v}
    if not terms:
        raise ValueError("empty polynomial")
    return terms


@app.post("/pointcount", response_model=PointCountResponse)
def pointcount(req: PointCountRequest) -> PointCountResponse:
    try:
        terms = parse_bivariate(req.poly)
        out = census_mod.point_count(terms, req.b1, req.b2, budget=req.budget)
    except (ValueError, census_mod.BudgetExceeded) as exc:
        raise _bad_request(exc)
    return PointCountResponse(
        count=out["count"],
        weighted_height=out["T"],
        predicted=out["predicted"],
        ratio=out["ratio"],
    )


@app.post("/evenline", response_model=EvenLineResponse)
def evenline(req: EvenLineRequest) -> EvenLineResponse:
    results: list[EvenLineResult] = []
    squares = 0
    try:
        if req.samples:
            rng = random.Random(req.seed)
            npref = max(0, req.degree - 4)
            for _ in range(req.samples):
                prefix = tuple(
                    rng.randint(-req.coeff_range, req.coeff_range) for _ in range(npref)
                )
                a = rng.randint(-req.coeff_range, req.coeff_range)
                c1 = rng.randint(-req.coeff_range, req.coeff_range)
                c2 = rng.randint(-req.coeff_range, req.coeff_range)
                check = census_mod.evenline_check(
                    req.degree, prefix, a, c1, c2, req.mode, explore=req.explore
                )
                squares += 0 if check.irreducible else 1
                results.append(
                    EvenLineResult(
                        irreducible=check.irreducible,
                        d_degree=check.d_degree,
                        square_root=list(check.square_root) if check.square_root else None,
                        note=check.note,
                        inputs={"prefix": list(prefix), "a": a, "c1": c1, "c2": c2},
                    )
                )
        else:
            check = census_mod.evenline_check(
                req.degree,
                tuple(req.prefix),
                req.a,
                Fraction(req.c1),
                Fraction(req.c2),
                req.mode,
                explore=req.explore,
            )
            squares += 0 if check.irreducible else 1
            results.append(
                EvenLineResult(
                    irreducible=check.irreducible,
                    d_degree=check.d_degree,
                    square_root=list(check.square_root) if check.square_root else None,
                    note=check.note,
                    inputs={
                        "prefix": req.prefix,
                        "a": req.a,
                        "c1": req.c1,
                        "c2": req.c2,
                    },
                )
            )
    except (ValueError, AssertionError) as exc:
        raise _bad_request(exc)
    return EvenLineResponse(
        mode=req.mode, degree=req.degree, results=results, squares_found=squares
    )
