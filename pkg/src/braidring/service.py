"""HTTP service wrapping the engine.

Endpoints:

* ``GET  /health``  liveness probe
* ``POST /eval``    evaluate an element expression to its canonical form,
  optionally after applying a braid word
* ``POST /check``   run verification suites and return the reports

The CLI is a thin client of this service (in-process by default).
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .algebra import canonicalize
from .braid import apply as braid_apply
from .braid import parse_braid_word
from .cartan import from_label
from .exprs import ParseError, parse_element
from .suites import SUITES, render_text, reports_document, run, run_config

__all__ = ["create_app", "app"]


class EvalRequest(BaseModel):
    expr: str
    type: str | None = Field(default=None, description="Cartan type label, e.g. A3")
    n: int | None = Field(default=None, ge=2, description="type-A context (rank n-1)")
    braid: str | None = Field(default=None, description='braid word, e.g. "s1 s2 s1^-1"')


class EvalResponse(BaseModel):
    text: str
    canonical: list
    zero: bool


class CheckRequest(BaseModel):
    suites: list[str] = Field(default=["all"])
    type: str | None = None
    n: int | None = Field(default=None, ge=2)
    window: tuple[int, int] = (0, 2)
    seed: int = 0
    corrupt: bool = False


class CheckResponse(BaseModel):
    passed: bool
    document: dict
    text: str


def _resolve_cartan(type_label, n):
    if type_label is not None and n is not None:
        raise HTTPException(400, detail="give either a Cartan type or N, not both")
    if type_label is not None:
        try:
            return from_label(type_label)
        except ValueError as exc:
            raise HTTPException(400, detail=str(exc)) from exc
    if n is not None:
        return from_label("A%d" % (n - 1))
    return None


def create_app():
    app = FastAPI(title="braidring", version=__version__)

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/eval", response_model=EvalResponse)
    def eval_expr(req: EvalRequest):
        c = _resolve_cartan(req.type, req.n)
        try:
            el = parse_element(req.expr, c)
            if req.braid:
                if c is None:
                    raise HTTPException(400, detail="braid words need a Cartan context")
                el = braid_apply(parse_braid_word(req.braid), el, c)
            if c is None:
                # scalar-only expression: canonicalize over the smallest type
                c = from_label("A1")
            cf = canonicalize(el, c)
        except HTTPException:
            raise
        except ParseError as exc:
            raise HTTPException(400, detail={"message": str(exc), "position": exc.pos})
        except (ValueError, ZeroDivisionError) as exc:
            raise HTTPException(400, detail=str(exc))
        return EvalResponse(text=str(cf), canonical=cf.to_json(), zero=cf.is_zero)

    @app.post("/check", response_model=CheckResponse)
    def check(req: CheckRequest):
        try:
            cfg = run_config(type_label=req.type, n=req.n, window=req.window,
                             suites=tuple(req.suites), seed=req.seed,
                             corrupt=req.corrupt)
            reports = run(cfg)
        except ValueError as exc:
            raise HTTPException(400, detail=str(exc))
        return CheckResponse(
            passed=all(r.passed for r in reports),
            document=reports_document(cfg, reports),
            text=render_text(reports),
        )

    return app


app = create_app()
