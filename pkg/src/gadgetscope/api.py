"""HTTP API over the session workflow.

Iteration runs execute asynchronously in a bounded worker pool; clients
poll the iteration's status field (running / done / failed).  Every
error response carries http status, a machine code and a human message.
Session state is only ever mutated through the session store's atomic,
locked persistence.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .debloat import DebloatConfig
from .errors import GadgetscopeError, SessionError
from .gadgets import ScanParams
from .session import SessionStore

_HTTP_BY_CODE = {
    "unknown-session": 404,
    "unknown-iteration": 404,
    "decision-already-recorded": 409,
    "missing-analyses": 409,
    "session-closed": 409,
    "locked": 423,
}


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        self.status = status
        self.code = code
        self.message = message


class SessionCreateBody(BaseModel):
    package: str
    binary: str
    params: dict = Field(default_factory=dict)
    catalogs: list[str] = Field(
        default_factory=lambda: ["practical", "turing", "aslr_proof"])


class IterationBody(BaseModel):
    config: dict
    hooks: dict = Field(default_factory=dict)
    output_binary: str
    workdir: str | None = None
    short_circuit: list[str] = Field(default_factory=list)


class DecisionBody(BaseModel):
    decision: str
    rationale: str = ""


def create_app(sessions_dir, workers=None) -> FastAPI:
    store = SessionStore(sessions_dir)
    pool = ThreadPoolExecutor(max_workers=workers or os.cpu_count() or 2)
    app = FastAPI(title="gadgetscope", version="1")
    app.state.store = store
    app.state.pool = pool

    @app.exception_handler(ApiError)
    async def _api_error(request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status,
                            content={"status": exc.status, "code": exc.code,
                                     "message": exc.message})

    @app.exception_handler(SessionError)
    async def _session_error(request: Request, exc: SessionError):
        status = _HTTP_BY_CODE.get(exc.code, 400)
        return JSONResponse(status_code=status,
                            content={"status": status, "code": exc.code,
                                     "message": str(exc)})

    @app.exception_handler(GadgetscopeError)
    async def _tool_error(request: Request, exc: GadgetscopeError):
        return JSONResponse(status_code=400,
                            content={"status": 400,
                                     "code": getattr(exc, "code", "error"),
                                     "message": str(exc)})

    @app.get("/api/sessions")
    def list_sessions():
        out = []
        for sid in store.list_ids():
            r = store.load(sid)
            out.append({"id": r.id, "package": r.package,
                        "status": r.status,
                        "iterations": len(r.iterations)})
        return out

    @app.post("/api/sessions", status_code=201)
    def create_session(body: SessionCreateBody):
        params = ScanParams(**body.params) if body.params else ScanParams()
        record = store.create_session(body.package, body.binary,
                                      params=params,
                                      catalog_names=tuple(body.catalogs))
        return record.to_dict()

    @app.get("/api/sessions/{sid}")
    def get_session(sid: str):
        return store.load(sid).to_dict()

    @app.post("/api/sessions/{sid}/iterations", status_code=202)
    def post_iteration(sid: str, body: IterationBody):
        try:
            config = DebloatConfig(frozenset(body.config.get("remove", [])),
                                   scenario=body.config.get("scenario", ""))
        except (ValueError, TypeError) as e:
            raise ApiError(422, "malformed-body", str(e))
        it = store.begin_iteration(sid, config, body.hooks)
        pool.submit(store.execute_iteration, sid, it, config, body.hooks,
                    body.output_binary, body.workdir,
                    tuple(body.short_circuit))
        return {"iteration": it.number, "status": "running"}

    @app.get("/api/sessions/{sid}/iterations/{number}")
    def get_iteration(sid: str, number: int):
        record = store.load(sid)
        return record.iteration(number).to_dict()

    @app.post("/api/sessions/{sid}/iterations/{number}/decision")
    def post_decision(sid: str, number: int, body: DecisionBody):
        if body.decision not in ("accept", "reject", "iterate", "revert"):
            raise ApiError(422, "malformed-body",
                           f"unknown decision {body.decision!r}")
        record = store.record_decision(sid, number, body.decision,
                                       body.rationale)
        return {"id": record.id, "status": record.status,
                "iteration": number, "decision": body.decision}

    @app.get("/api/sessions/{sid}/compare")
    def compare(sid: str, a: int, b: int):
        return store.compare_iterations(sid, a, b)

    return app
