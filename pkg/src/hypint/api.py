"""FastAPI service exposing evaluation, tables, constants and certification.

The CLI drives this app (in-process by default); a standalone server is
a long-running evaluator whose coefficient-table, constant and quadrature
-node caches stay warm across requests.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel, Field

from mpmath import mpf

from . import __version__
from . import closed_forms as cf
from . import exact
from . import functions as fn
from . import identities as idt
from .errors import DomainError, DivergentInput, HypintError, NoConvergence, UnknownSuite, UnsupportedParameter
from .precision import PrecisionContext, format_decimal, to_mpf

EVAL_MODES = ("sech", "tanh_sech", "tanh_over_x", "power", "beta_recurrence", "zeta_recurrence")


class EvalRequest(BaseModel):
    mode: str = "tanh_over_x"
    L: Optional[int] = None
    N: Optional[int] = None
    T: str = "0"  # decimal string, parsed at working precision
    bits: int = Field(default=128, ge=64)
    symbolic: bool = False


class EvalResponse(BaseModel):
    value: str
    combination: Optional[dict] = None
    coefficients: Optional[list] = None


class ConstantsResponse(BaseModel):
    bits: int
    constants: dict


class VerifyRequest(BaseModel):
    suite: str = "all"
    trials: Optional[int] = None
    seed: int = 42
    bits: int = Field(default=128, ge=64)
    tolerance: Optional[str] = None


class ProductsRequest(BaseModel):
    s: str = "0.5"
    terms: int = Field(default=10_000, ge=1)
    bits: int = Field(default=128, ge=64)


class ProductsResponse(BaseModel):
    s: str
    terms: int
    partial: str
    closed: str
    gap: str


def _http_error(exc: HypintError) -> HTTPException:
    if isinstance(exc, (UnsupportedParameter,)):
        return HTTPException(status_code=422, detail={"error": "unsupported", "message": str(exc)})
    if isinstance(exc, (DomainError, DivergentInput, UnknownSuite)):
        return HTTPException(status_code=400, detail={"error": "domain", "message": str(exc)})
    return HTTPException(status_code=500, detail={"error": "numerical", "message": str(exc)})


def create_app() -> FastAPI:
    app = FastAPI(title="hypint", version=__version__)

    @app.get("/healthz")
    def healthz():
        return {"status": "ok", "version": __version__}

    @app.post("/eval", response_model=EvalResponse, response_model_exclude_none=True)
    def eval_integral(req: EvalRequest):
        if req.mode not in EVAL_MODES:
            raise HTTPException(status_code=422, detail={"error": "unsupported", "message": f"unknown mode {req.mode!r}"})
        ctx = PrecisionContext(req.bits)
        try:
            t = to_mpf(req.T, ctx)
            if req.mode == "sech":
                if req.L is None:
                    raise DomainError("mode 'sech' needs L")
                return EvalResponse(value=format_decimal(cf.sech_power_exp(req.L, t, ctx), ctx))
            if req.mode == "tanh_sech":
                if req.L is None:
                    raise DomainError("mode 'tanh_sech' needs L")
                return EvalResponse(value=format_decimal(cf.tanh_sech_power_exp(req.L, t, ctx), ctx))
            if req.mode == "tanh_over_x":
                if req.L is None:
                    raise DomainError("mode 'tanh_over_x' needs L")
                value = cf.tanh_over_x_sech_exp(req.L, t, ctx)
                comb = None
                if req.symbolic:
                    if t != int(t):
                        raise UnsupportedParameter("symbolic form needs integer T")
                    comb = cf.tanh_over_x_sech_exp_symbolic(req.L, int(t)).to_json_dict()
                return EvalResponse(value=format_decimal(value, ctx), combination=comb)
            if req.mode == "power":
                if req.N is None:
                    raise DomainError("mode 'power' needs N")
                value, coeffs = cf.tanh_over_x_power(req.N, ctx)
                return EvalResponse(
                    value=format_decimal(value, ctx),
                    coefficients=[[str(c), k] for c, k in coeffs],
                )
            if req.mode == "beta_recurrence":
                if req.N is None:
                    raise DomainError("mode 'beta_recurrence' needs N")
                value = cf.beta_recurrence_eval(req.N, ctx)
                coeffs = cf.beta_recurrence_coeffs(req.N)
            else:
                if req.N is None:
                    raise DomainError("mode 'zeta_recurrence' needs N")
                value = cf.zeta_recurrence_eval(req.N, ctx)
                coeffs = cf.zeta_recurrence_coeffs(req.N)
            return EvalResponse(
                value=format_decimal(value, ctx),
                coefficients=[[str(c), k] for c, k in coeffs],
            )
        except HypintError as exc:
            raise _http_error(exc) from exc

    @app.get("/table")
    def table(kind: str, n: int, format: str = "json"):
        try:
            tab = exact.table_by_kind(kind, n)
        except HypintError as exc:
            raise _http_error(exc) from exc
        if format == "csv":
            return PlainTextResponse(tab.to_csv(), media_type="text/csv")
        if format == "json":
            return PlainTextResponse(tab.to_json(), media_type="application/json")
        raise HTTPException(status_code=422, detail={"error": "unsupported", "message": f"unknown format {format!r}"})

    @app.get("/constants", response_model=ConstantsResponse)
    def constants(bits: int = 128):
        ctx = PrecisionContext(bits)
        vals = fn.named_constants(ctx)
        return ConstantsResponse(
            bits=bits, constants={k: format_decimal(v, ctx) for k, v in vals.items()}
        )

    @app.post("/verify")
    def verify(req: VerifyRequest):
        ctx = PrecisionContext(req.bits)
        try:
            report = idt.run_suite(
                req.suite,
                trials=req.trials,
                seed=req.seed,
                ctx=ctx,
                tolerance_override=mpf(req.tolerance) if req.tolerance else None,
            )
        except UnknownSuite as exc:
            raise HTTPException(
                status_code=422,
                detail={"error": "unknown_suite", "message": f"unknown suite {req.suite!r}"},
            ) from exc
        return PlainTextResponse(
            report.to_json(digits=ctx.decimal_digits()), media_type="application/json"
        )

    @app.post("/products", response_model=ProductsResponse)
    def products(req: ProductsRequest):
        ctx = PrecisionContext(req.bits)
        try:
            s = to_mpf(req.s, ctx)
            partial = fn.f_product_partial(s, req.terms, ctx)
            closed = fn.f_closed(s, ctx)
        except HypintError as exc:
            raise _http_error(exc) from exc
        with ctx.working():
            gap = abs(partial - closed)
        return ProductsResponse(
            s=req.s,
            terms=req.terms,
            partial=format_decimal(partial, ctx),
            closed=format_decimal(closed, ctx),
            gap=format_decimal(gap, ctx),
        )

    return app


app = create_app()
