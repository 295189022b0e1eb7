"""Stateless JSON facade over the analysis engine.

One POST endpoint per computation; every response carries the fully
defaulted inputs it was computed from (`inputs_echo`), so any result can be
reproduced exactly with the CLI. No sessions, no persistence; the only
loaded state is the immutable COLA series.

Environment: BIND_ADDR (default 127.0.0.1:8080), COLA_DATA_PATH.
"""

from __future__ import annotations

import math
import os
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field, field_validator

from . import __version__, tables
from .cola_data import RangeError, default_series, load_series, geometric_average
from .critical import r_star_no_cola
from .params import K_MAX, Q_EPS
from .solvers import NoBracketError

NEAR_SINGULAR_Q = "q below 1e-9 is treated as zero; no-COLA formulas were used"
CLAMPED_OPTIMUM = "optimum clamped to the claiming-window boundary"


def _core_self_test() -> bool:
    # the one closed-form critical point: claiming one year early
    point = r_star_no_cola(1, 0.08)
    return (
        abs(point.r_star - math.expm1(0.08 / math.e)) < 1e-10
        and abs(point.n_star - math.e / 0.08) < 1e-10
    )


def _error_body(code: str, message: str, field: str | None = None) -> dict:
    error: dict = {"code": code, "message": message}
    if field is not None:
        error["field"] = field
    return {"error": error}


class _ParamsModel(BaseModel):
    p: float = Field(default=0.08, gt=0, lt=1)
    q: float = Field(default=0.025, ge=0, lt=1)

    @field_validator("p", "q", mode="after")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("must be finite")
        return value


def _check_K(value: float | None) -> float | None:
    if value is not None and not 0 < value <= K_MAX:
        raise ValueError(f"K must be in (0,{K_MAX}]")
    return value


class GainCurveRequest(_ParamsModel):
    K: float = 1.0
    r: float = Field(default=0.05, ge=0, lt=1)
    n_lo: float = Field(default=1.0, gt=0)
    n_hi: float = Field(default=60.0, gt=0)
    step: float = Field(default=1.0, gt=0)

    @field_validator("K")
    @classmethod
    def _k_window(cls, value: float) -> float:
        return _check_K(value)


class BreakevenRequest(_ParamsModel):
    K: float | None = None
    qs: list[float] | None = None

    @field_validator("K")
    @classmethod
    def _k_window(cls, value: float | None) -> float | None:
        return _check_K(value)


class CriticalRequest(BreakevenRequest):
    pass


class OptimizeRequest(_ParamsModel):
    mode: str = "maximin"
    n: float | None = Field(default=None, gt=0)
    r: float = Field(default=0.05, ge=0, lt=1)

    @field_validator("mode")
    @classmethod
    def _known_mode(cls, value: str) -> str:
        if value not in ("maximin", "at-age"):
            raise ValueError("mode must be 'maximin' or 'at-age'")
        return value


class ColaAverageRequest(BaseModel):
    model_config = {"populate_by_name": True}

    from_year: int = Field(alias="from")
    to_year: int = Field(alias="to")


def create_app(cola_path: str | None = None, web_dir: str | None = None) -> FastAPI:
    path = cola_path if cola_path is not None else os.environ.get("COLA_DATA_PATH")
    series = load_series(path) if path else default_series()
    assets = web_dir if web_dir is not None else os.environ.get("WEB_ASSETS_DIR")

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        app.state.ready = _core_self_test()
        yield

    app = FastAPI(title="sstiming", version=__version__, lifespan=lifespan)
    app.state.ready = False
    app.state.series = series

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        first = exc.errors()[0]
        loc = [str(part) for part in first.get("loc", []) if part != "body"]
        message = first.get("msg", "invalid request")
        if message.startswith("Value error, "):
            message = message[len("Value error, ") :]
        return JSONResponse(
            status_code=400,
            content=_error_body("validation", message, field=".".join(loc) or None),
        )

    @app.exception_handler(NoBracketError)
    async def on_no_bracket(request: Request, exc: NoBracketError):
        return JSONResponse(status_code=422, content=_error_body("no_bracket", str(exc)))

    @app.exception_handler(RangeError)
    async def on_range_error(request: Request, exc: RangeError):
        return JSONResponse(status_code=400, content=_error_body("range", str(exc)))

    @app.exception_handler(ValueError)
    async def on_domain_error(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content=_error_body("domain", str(exc)))

    def respond(result: dict, inputs_echo: dict, warnings: list[str]) -> dict:
        return {"result": result, "inputs_echo": inputs_echo, "warnings": warnings}

    @app.get("/healthz")
    async def healthz():
        if not app.state.ready:
            return JSONResponse(status_code=503, content={"status": "starting"})
        return {"status": "ok", "version": __version__}

    @app.post("/v1/gain-curve")
    async def gain_curve(body: GainCurveRequest):
        result = tables.gain_curve_payload(
            body.K, body.p, body.q, body.r, body.n_lo, body.n_hi, body.step
        )
        warnings = [NEAR_SINGULAR_Q] if 0 < body.q < Q_EPS else []
        return respond(result, body.model_dump(), warnings)

    @app.post("/v1/breakeven")
    async def breakeven(body: BreakevenRequest):
        if body.K is not None:
            result = tables.breakeven_point(body.K, body.p, body.q)
            echo = {"K": body.K, "p": body.p, "q": body.q}
        else:
            result = tables.breakeven_table(body.p, body.qs)
            echo = {"K": None, "p": body.p, "qs": result["qs"]}
        warnings = [NEAR_SINGULAR_Q] if 0 < body.q < Q_EPS else []
        return respond(result, echo, warnings)

    @app.post("/v1/critical")
    async def critical(body: CriticalRequest):
        if body.K is not None:
            result = tables.critical_point(body.K, body.p, body.q)
            echo = {"K": body.K, "p": body.p, "q": body.q}
        else:
            result = tables.critical_table(body.p, body.qs)
            echo = {"K": None, "p": body.p, "qs": result["qs"]}
        warnings = [NEAR_SINGULAR_Q] if 0 < body.q < Q_EPS else []
        return respond(result, echo, warnings)

    @app.post("/v1/optimize")
    async def optimize(body: OptimizeRequest):
        result = tables.optimize_payload(body.mode, body.p, body.q, body.r, body.n)
        warnings = [CLAMPED_OPTIMUM] if result["clamped"] else []
        return respond(result, body.model_dump(), warnings)

    @app.post("/v1/cola-average")
    async def cola_average(body: ColaAverageRequest):
        average = geometric_average(app.state.series, body.from_year, body.to_year)
        result = {
            "kind": "cola_average",
            "from_year": body.from_year,
            "to_year": body.to_year,
            "years": body.to_year - body.from_year + 1,
            "average": average,
            "source": app.state.series.source_label,
        }
        return respond(result, body.model_dump(), [])

    if assets:
        from fastapi.staticfiles import StaticFiles

        app.mount("/app", StaticFiles(directory=assets, html=True), name="web")

    return app


app = create_app()


def main() -> None:
    """Run the service with uvicorn, binding to BIND_ADDR (default loopback:8080)."""
    import uvicorn

    bind = os.environ.get("BIND_ADDR", "127.0.0.1:8080")
    host, _, port = bind.rpartition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))


if __name__ == "__main__":
    main()
