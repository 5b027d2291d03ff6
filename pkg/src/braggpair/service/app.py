"""FastAPI service wrapping the channel-probability package.

Compute endpoints only: sweeps arrive as JSON and leave as CSV text inside a
JSON envelope, so clients (including the bundled CLI) can persist the document
byte-for-byte.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import BraggPairError
from ..multi_mode import effective_coefficients
from ..selfcheck import run_checks, render_report
from ..sweeps import PRESETS, dip_find, overlap_estimate, sweep_csv, sweep_columns, RatioSweepSpec
from .schemas import (
    CheckOutcome,
    CheckRequest,
    CheckResponse,
    DipFindRequest,
    DipFindResponse,
    HealthResponse,
    OverlapEstimateRequest,
    OverlapEstimateResponse,
    SweepRequest,
    SweepResponse,
)

app = FastAPI(title="braggpair", version=__version__)


@app.exception_handler(BraggPairError)
async def physics_error_handler(request: Request, exc: BraggPairError) -> JSONResponse:
    return JSONResponse(
        status_code=422,
        content={"detail": str(exc), "error": type(exc).__name__},
    )


@app.exception_handler(ValueError)
async def value_error_handler(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc), "error": "ValueError"})


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", service="braggpair", version=__version__)


@app.post("/sweep", response_model=SweepResponse)
def sweep(request: SweepRequest) -> SweepResponse:
    if request.preset is not None:
        try:
            spec = PRESETS[request.preset]
        except KeyError:
            raise HTTPException(
                status_code=400,
                detail=f"unknown preset {request.preset!r}; choose from {sorted(PRESETS)}",
            )
    else:
        spec = request.to_spec()
    csv = sweep_csv(spec)
    if isinstance(spec, RatioSweepSpec):
        columns = ["sigma_ratio", "d_minus_sq", "c_minus_sq"]
    else:
        columns = sweep_columns(spec)
    rows = sum(1 for line in csv.splitlines() if line and not line.startswith("#")) - 1
    return SweepResponse(csv=csv, rows=rows, columns=columns)


@app.post("/dip-find", response_model=DipFindResponse)
def find_dips(request: DipFindRequest) -> DipFindResponse:
    return DipFindResponse(w_values=dip_find(request.to_spec(), request.tolerance))


@app.post("/overlap-estimate", response_model=OverlapEstimateResponse)
def estimate_overlap(request: OverlapEstimateRequest) -> OverlapEstimateResponse:
    d = effective_coefficients(request.w, request.n_t)
    estimate = overlap_estimate(request.measured_mixed, d)
    return OverlapEstimateResponse(
        overlap=estimate.value, raw=estimate.raw, clamped=estimate.clamped
    )


@app.post("/check", response_model=CheckResponse)
def check(request: CheckRequest) -> CheckResponse:
    results = run_checks(seed=request.seed, samples=request.samples)
    return CheckResponse(
        passed=all(result.passed for result in results),
        results=[
            CheckOutcome(name=result.name, passed=result.passed, detail=result.detail)
            for result in results
        ],
        report=render_report(results),
    )
