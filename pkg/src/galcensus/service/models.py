"""Pydantic request/response schemas for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str = "ok"
    package: str = "galcensus"


class RecordRowModel(BaseModel):
    group: str
    degree: int
    order: int
    parity_even: bool
    index_in_symmetric: int
    malle_exponent: str
    bhargava_bound: str
    improved_bound_decimal: str


class HistoryRowModel(BaseModel):
    year: int
    authors: str
    exponent_expression: str
    applies: str


class ExponentTablesResponse(BaseModel):
    records: list[RecordRowModel]
    history: list[HistoryRowModel]


class GroupInfoRequest(BaseModel):
    name: str = Field(examples=["6T14", "S6", "D_6"])
    degree: int | None = None


class GroupInfoResponse(BaseModel):
    name: str
    degree: int
    order: int
    parity_even: bool
    transitive: bool
    primitive: bool
    malle_index: int
    malle_exponent: str
    generators: list[str]
    block_systems: list[list[list[int]]]
    cycle_types: list[list[int]]


class ClassifyRequest(BaseModel):
    poly: str = Field(description="coefficients, leading term first, e.g. '1,0,0,0,0,1,3'")
    prime_bound: int = 10_000
    use_resolvent: bool = True


class ClassifyResponse(BaseModel):
    poly: str
    verdict: dict


class ResolventRequest(BaseModel):
    poly: str
    group: str = "6T14"
    weights: list[int] | None = None
    exponents: list[int] | None = None
    shift: int = 0


class ResolventResponse(BaseModel):
    resolvent: dict
    separable: bool
    integer_root_status: str | None = None
    integer_root: int | None = None


class SchmidtBoxRequest(BaseModel):
    degree: int
    bound: int
    const: int = 1


class SchmidtBoxResponse(BaseModel):
    degree: int
    bound: int
    const: int
    ranges: list[tuple[int, int]]
    cardinality: int


class CensusRequest(BaseModel):
    degree: int
    bound: int
    const: int = 1
    shards: int = 1
    workers: int | None = None
    budget: int = 10**8
    checkpoint_path: str | None = None


class CensusResponse(BaseModel):
    report: dict


class FitRequest(BaseModel):
    reports: list[dict]
    label: str


class FitResponse(BaseModel):
    fit: dict


class PointCountRequest(BaseModel):
    poly: str = Field(
        description="bivariate terms 'c,e1,e2;c,e1,e2;...', e.g. '1,2,0;-1,0,1' for x1^2 - x2"
    )
    b1: int
    b2: int
    budget: int = 10**8


class PointCountResponse(BaseModel):
    count: int
    weighted_height: float
    predicted: float
    ratio: float


class EvenLineRequest(BaseModel):
    degree: int
    prefix: list[int] = []
    a: int = 0
    c1: str = "0"
    c2: str = "0"
    mode: str = "last"
    explore: bool = False
    samples: int | None = None
    seed: int = 0
    coeff_range: int = 50


class EvenLineResult(BaseModel):
    irreducible: bool
    d_degree: int
    square_root: list[str] | None = None
    note: str = ""
    inputs: dict = {}


class EvenLineResponse(BaseModel):
    mode: str
    degree: int
    results: list[EvenLineResult]
    squares_found: int
