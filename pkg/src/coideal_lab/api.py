"""HTTP front end.  Run with ``uvicorn coideal_lab.api:app``."""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import service
from .models import (
    CoproductResponse,
    DecomposeRequest,
    DecomposeResponse,
    EnumerateResponse,
    IntervalRequest,
    LatticeResponse,
    PhiRequest,
    PhiResponse,
    RunConfig,
    SubalgebraResponse,
    ThetaRequest,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(title="coideal-lab", version="0.1.0")


def _run(fn, arg):
    try:
        return fn(arg)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "suites": list(service.SUITES)}


# plain def endpoints: FastAPI runs them in its threadpool, which keeps the
# event loop free while the exact arithmetic grinds.

@app.post("/phi", response_model=PhiResponse)
def phi_endpoint(req: PhiRequest):
    return _run(service.compute_phi, req)


@app.post("/decompose", response_model=DecomposeResponse)
def decompose_endpoint(req: DecomposeRequest):
    return _run(service.decompose, req)


@app.post("/coproduct", response_model=CoproductResponse)
def coproduct_endpoint(req: IntervalRequest):
    return _run(service.coproduct, req)


@app.post("/classify", response_model=SubalgebraResponse)
def classify_endpoint(req: ThetaRequest):
    return _run(service.classify, req)


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_endpoint(config: RunConfig):
    return _run(service.enumerate_all, config)


@app.post("/lattice", response_model=LatticeResponse)
def lattice_endpoint(config: RunConfig):
    return _run(service.hasse_diagram, config)


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest):
    return _run(service.verify, req)
