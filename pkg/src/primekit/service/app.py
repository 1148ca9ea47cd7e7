"""FastAPI wiring over the shared handlers.

Error bodies have the shape {"error": {"code": ..., "message": ...}} with
codes usage (400), domain (422), resource (413), and internal (500); the
CLI's remote mode maps them back onto its exit codes. Request-validation
failures keep FastAPI's stock 422 {"detail": [...]} body.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import (
    CorruptTableError,
    DomainError,
    PrimekitError,
    ResourceLimitError,
)
from . import handlers, schemas


def _error_response(status: int, code: str, exc: Exception) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"error": {"code": code, "message": str(exc)}},
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="primekit",
        version=__version__,
        description="Probable-prime search, pair censuses, and RSA tooling.",
    )

    @app.exception_handler(handlers.UsageError)
    async def _usage(request, exc):
        return _error_response(400, "usage", exc)

    @app.exception_handler(DomainError)
    async def _domain(request, exc):
        return _error_response(422, "domain", exc)

    @app.exception_handler(CorruptTableError)
    async def _corrupt(request, exc):
        return _error_response(422, "domain", exc)

    @app.exception_handler(ResourceLimitError)
    async def _resource(request, exc):
        return _error_response(413, "resource", exc)

    @app.exception_handler(PrimekitError)
    async def _internal(request, exc):
        return _error_response(500, "internal", exc)

    @app.get("/healthz", response_model=schemas.HealthResponse)
    def healthz() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/v1/bench/depth-sweep", response_model=schemas.DepthSweepResponse)
    def bench_depth_sweep(req: schemas.DepthSweepRequest) -> schemas.DepthSweepResponse:
        return handlers.run_depth_sweep(req)

    @app.post("/v1/census", response_model=schemas.CensusResponse, response_model_exclude_none=True)
    def census(req: schemas.CensusRequest) -> schemas.CensusResponse:
        return handlers.run_census(req)

    @app.post("/v1/genprime", response_model=schemas.GenPrimeResponse, response_model_exclude_none=True)
    def genprime(req: schemas.GenPrimeRequest) -> schemas.GenPrimeResponse:
        return handlers.run_genprime(req)

    @app.post("/v1/rsa/keygen", response_model=schemas.KeyPairOut)
    def rsa_keygen(req: schemas.KeygenRequest) -> schemas.KeyPairOut:
        return handlers.run_keygen(req)

    @app.post("/v1/rsa/encrypt", response_model=schemas.EncryptResponse)
    def rsa_encrypt(req: schemas.EncryptRequest) -> schemas.EncryptResponse:
        return handlers.run_encrypt(req)

    @app.post("/v1/rsa/decrypt", response_model=schemas.DecryptResponse, response_model_exclude_none=True)
    def rsa_decrypt(req: schemas.DecryptRequest) -> schemas.DecryptResponse:
        return handlers.run_decrypt(req)

    @app.post("/v1/rsa/gc-table", response_model=schemas.GcTableResponse)
    def rsa_gc_table(req: schemas.GcTableRequest) -> schemas.GcTableResponse:
        return handlers.run_gc_table(req)

    @app.post("/v1/rsa/gc-table/resolve", response_model=schemas.ResolveResponse, response_model_exclude_none=True)
    def rsa_gc_table_resolve(req: schemas.ResolveRequest) -> schemas.ResolveResponse:
        return handlers.run_resolve(req)

    return app


app = create_app()
