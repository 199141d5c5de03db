"""FastAPI service exposing the checkers over HTTP.

Every endpoint wraps the same report layer the CLI uses; malformed input
(bad tables, unclosed subsets, unknown notions) maps to 422 with the
error class and message in the detail.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__
from .core import SemigroupError
from .harness import harness_report
from .green import render_eggbox
from .reports import (
    enumerate_report,
    example_report,
    order_report,
    relations_report,
    starpair_report,
    table_digest,
)
from .schemas import (
    CheckOrderRequest,
    CheckStarPairRequest,
    EggboxResponse,
    EnumerateRequest,
    ExampleRequest,
    HarnessRequest,
    HealthResponse,
    RelationsRequest,
    Report,
    TableRequest,
)
from .tableio import parse_table

app = FastAPI(title="sgquot", version=__version__)


def _parse(text: str):
    try:
        return parse_table(text)
    except SemigroupError as exc:
        raise HTTPException(status_code=422, detail={"error": type(exc).__name__, "message": str(exc)})


def _run(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except (SemigroupError, ValueError) as exc:
        raise HTTPException(status_code=422, detail={"error": type(exc).__name__, "message": str(exc)})


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/relations", response_model=Report, response_model_by_alias=True)
def relations(req: RelationsRequest):
    s = _parse(req.table)
    return _run(relations_report, s, eggbox=req.eggbox)


@app.post("/eggbox", response_model=EggboxResponse)
def eggbox(req: TableRequest) -> EggboxResponse:
    s = _parse(req.table)
    return EggboxResponse(digest=table_digest(s), eggbox=render_eggbox(s))


@app.post("/check-order", response_model=Report, response_model_by_alias=True)
def check_order(req: CheckOrderRequest):
    s = _parse(req.table)
    members = req.sub if req.sub is not None else list(range(s.order))
    return _run(order_report, s, members, req.notion, req.prop31)


@app.post("/check-starpair", response_model=Report, response_model_by_alias=True)
def check_starpair(req: CheckStarPairRequest):
    s = _parse(req.table)
    return _run(starpair_report, s, req.sub, req.pair)


@app.post("/harness", response_model=Report, response_model_by_alias=True)
def harness(req: HarnessRequest):
    return _run(
        harness_report,
        max_order=req.max_order,
        fixtures=req.fixtures,
        suites=req.suites,
        threads=req.threads,
    )


@app.post("/example", response_model=Report, response_model_by_alias=True)
def example(req: ExampleRequest):
    return _run(example_report, req.which, req.window, req.modulus, req.verify)


@app.post("/enumerate", response_model=Report, response_model_by_alias=True)
def enumerate_(req: EnumerateRequest):
    return _run(enumerate_report, req.order, req.up_to_iso, req.limit)
