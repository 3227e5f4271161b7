"""HTTP service exposing the descent-polynomial toolkit.

Endpoints (all POST, JSON in/out):

  /compute   descent polynomial of a spec by any route, with cross-checking
  /check     positivity report (bi-gamma, alternating increase, unimodality)
  /gamma     gamma-expansion of an explicit coefficient list
  /verify    the full verification sweep

Every numeric value in responses is a decimal string (coefficients exceed
64-bit range in large sweeps).  Domain errors map to HTTP 400 with a stable
``error`` code; mathematical verdicts (disagreeing routes, failed positivity)
are ordinary 200 responses carrying the verdict.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .enumeration import (
    BudgetExceeded,
    EmptySpec,
    MultisetSpec,
    bivariate_brute,
    default_budget,
    descent_polynomial_brute,
)
from .gamma import (
    NegativeCoefficient,
    NotSymmetric,
    classify_expansion_type,
    gamma_expansion,
    positivity_report,
)
from .macmahon import macmahon_polynomial
from .operators import UnsupportedMultiplicity, polynomial_via_operators
from .polys import BiPoly, DegreeExceedsN, UniPoly
from .verify import run_verify

Method = Literal["enum", "macmahon", "operators", "all"]


class PolyTerm(BaseModel):
    i: int
    j: Optional[int] = None
    num: str
    den: str


class ComputeRequest(BaseModel):
    spec: str = ""
    bivariate: bool = False
    method: Method = "all"
    budget: Optional[int] = None


class ComputeResponse(BaseModel):
    spec: list[int]
    m: int
    method: Method
    routes_run: list[str]
    agree: bool
    polynomial: list[PolyTerm]
    bivariate: Optional[list[PolyTerm]] = None
    per_route: dict[str, list[PolyTerm]]


class CheckRequest(BaseModel):
    spec: str
    n_param: str = "m"


class GammaVectorModel(BaseModel):
    n: int
    gammas: list[str]


class DecompositionModel(BaseModel):
    n: int
    a: list[PolyTerm]
    b: list[PolyTerm]


class CheckResponse(BaseModel):
    spec: list[int]
    m: int
    n: int
    expansion_type: Optional[str]
    polynomial: list[PolyTerm]
    symmetric: bool
    gamma_positive: Optional[bool]
    bi_gamma_positive: bool
    alternatingly_increasing: bool
    unimodal: bool
    modes: list[int]
    gamma_full: Optional[GammaVectorModel]
    decomposition: DecompositionModel
    gamma_a: GammaVectorModel
    gamma_b: GammaVectorModel


class GammaRequest(BaseModel):
    coeffs: list[str] = Field(description="coefficients f_0, f_1, ... as decimal strings")
    n: int


class GammaResponse(BaseModel):
    n: int
    symmetric: bool
    gammas: Optional[list[str]]
    gamma_positive: Optional[bool]
    residual: Optional[list[PolyTerm]] = None


class VerifyRequest(BaseModel):
    max_m: int
    multiplicities: list[int] = [1, 2]
    budget: Optional[int] = None
    jobs: int = 1


def _error(code: str, message: str) -> HTTPException:
    return HTTPException(status_code=400, detail={"error": code, "message": message})


def _parse_spec(text: str) -> MultisetSpec:
    try:
        return MultisetSpec.parse(text)
    except ValueError as exc:
        raise _error("InvalidSpec", str(exc))


def _parse_rational(text: str):
    from fractions import Fraction

    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _error("InvalidCoefficient", str(exc))


def create_app() -> FastAPI:
    app = FastAPI(
        title="multiset-eulerian",
        version=__version__,
        description="Descent polynomials of multiset permutations, computed "
        "by enumeration, generating function and differential operators, "
        "with gamma-positivity certification.",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__, "default_budget": default_budget()}

    @app.post("/compute", response_model=ComputeResponse, response_model_exclude_none=True)
    def compute(req: ComputeRequest) -> ComputeResponse:
        spec = _parse_spec(req.spec)
        methods = ["enum", "macmahon", "operators"] if req.method == "all" else [req.method]
        per_route: dict[str, UniPoly] = {}
        bivariate_routes: dict[str, BiPoly] = {}
        for method in methods:
            try:
                if method == "enum":
                    biv = bivariate_brute(spec, req.budget)
                    bivariate_routes[method] = biv
                    per_route[method] = biv.set_y_to_one()
                elif method == "macmahon":
                    per_route[method] = macmahon_polynomial(spec)
                else:
                    biv = polynomial_via_operators(spec)
                    bivariate_routes[method] = biv
                    per_route[method] = biv.set_y_to_one()
            except (BudgetExceeded, EmptySpec, UnsupportedMultiplicity) as exc:
                if req.method == "all":
                    continue  # method=all runs every *applicable* route
                raise _error(type(exc).__name__, str(exc))
        if not per_route:
            raise _error("NoRoute", "no applicable computation route for this spec")
        if req.bivariate and not bivariate_routes:
            # the generating-function route is univariate only
            raise _error(
                "NoBivariateRoute",
                "bivariate output needs the enumeration or operator route",
            )
        agree = (
            len(set(per_route.values())) == 1 and len(set(bivariate_routes.values())) <= 1
        )
        polynomial = next(iter(per_route.values()))
        bivariate = next(iter(bivariate_routes.values()), None)
        return ComputeResponse(
            spec=list(spec.multiplicities),
            m=spec.m,
            method=req.method,
            routes_run=sorted(per_route),
            agree=agree,
            polynomial=polynomial.to_json(),
            bivariate=bivariate.to_json() if req.bivariate and bivariate is not None else None,
            per_route={r: p.to_json() for r, p in per_route.items()},
        )

    @app.post("/check", response_model=CheckResponse, response_model_exclude_none=True)
    def check(req: CheckRequest) -> CheckResponse:
        spec = _parse_spec(req.spec)
        f = macmahon_polynomial(spec)
        degree = f.degree or 0
        if req.n_param == "m":
            n = max(spec.m, degree)
        elif req.n_param == "deg":
            n = degree
        else:
            try:
                n = int(req.n_param)
            except ValueError:
                raise _error("InvalidNParam", f"n_param must be 'm', 'deg' or an integer")
        expansion_type = None
        if spec.m >= 1 and all(v in (1, 2) for v in spec.multiplicities):
            expansion_type = classify_expansion_type(spec, polynomial_via_operators(spec)).value
        try:
            report = positivity_report(f, n)
        except (DegreeExceedsN, NegativeCoefficient) as exc:
            raise _error(type(exc).__name__, str(exc))
        body = report.to_json()
        return CheckResponse(
            spec=list(spec.multiplicities),
            m=spec.m,
            n=n,
            expansion_type=expansion_type,
            polynomial=body["polynomial"],
            symmetric=body["symmetric"],
            gamma_positive=body["gamma_positive"],
            bi_gamma_positive=body["bi_gamma_positive"],
            alternatingly_increasing=body["alternatingly_increasing"],
            unimodal=body["unimodal"],
            modes=body["modes"],
            gamma_full=body["gamma_full"],
            decomposition=body["decomposition"],
            gamma_a=body["gamma_a"],
            gamma_b=body["gamma_b"],
        )

    @app.post("/gamma", response_model=GammaResponse, response_model_exclude_none=True)
    def gamma(req: GammaRequest) -> GammaResponse:
        f = UniPoly.from_coeff_list([_parse_rational(c) for c in req.coeffs])
        if req.n < 0 or ((f.degree or 0) > req.n):
            raise _error("DegreeExceedsN", f"degree exceeds n={req.n}")
        try:
            gv = gamma_expansion(f, req.n)
        except NotSymmetric as exc:
            return GammaResponse(
                n=req.n,
                symmetric=False,
                gammas=None,
                gamma_positive=None,
                residual=exc.residual.to_json(),
            )
        return GammaResponse(
            n=req.n,
            symmetric=True,
            gammas=gv.to_json()["gammas"],
            gamma_positive=gv.is_nonnegative(),
        )

    @app.post("/verify")
    def verify(req: VerifyRequest) -> dict:
        if req.max_m < 0:
            raise _error("InvalidMaxM", "max_m must be nonnegative")
        if any(v < 1 for v in req.multiplicities):
            raise _error("InvalidMultiplicities", "multiplicities must be positive")
        summary = run_verify(
            max_m=req.max_m,
            multiplicities=req.multiplicities or (1, 2),
            budget=req.budget,
            jobs=max(1, req.jobs),
        )
        return summary.to_json()

    return app


app = create_app()
