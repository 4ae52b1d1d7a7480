"""HTTP service exposing the library as stateless JSON endpoints.

Every endpoint is a thin wrapper over a handler function that consumes
and produces plain dictionaries; the CLI calls the same handlers
in-process.  Negative mathematical results (no solution, not conjugate,
...) are reported as status fields with HTTP 200, while malformed input
and field-capability failures map to HTTP 400.
"""
from __future__ import annotations

import random
from typing import Any, Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .boettcher import all_boettcher, boettcher, with_branch
from .decompose import Decomposition, enumerate_classes, equivalence_witness
from .errors import NegativeResult, SeriesError
from .field import ApproxField, ExactField
from .semigroup import commute_series, monomialize, reversibility_probe
from .series import TruncatedSeries, field_from_json, parse_series
from .solvers import (
    common_right_factor,
    factor_through,
    solve_joint,
    solve_left,
    solve_right,
)
from .symmetry import decompose_symmetric, detect_symmetry
from .transition import transition_group


class FieldModel(BaseModel):
    kind: Literal["exact", "approx"]
    conductor: int = 24
    tol: float = 1e-9

    def build(self):
        if self.kind == "exact":
            return ExactField(conductor=self.conductor)
        return ApproxField(tol=self.tol)


class SeriesModel(BaseModel):
    trunc: int = Field(ge=0, le=256)
    field: FieldModel
    coeffs: list[Any]

    def build(self) -> TruncatedSeries:
        return TruncatedSeries.from_json(self.model_dump())


def _dump(series: TruncatedSeries) -> dict:
    return series.to_json()


class BoettcherRequest(BaseModel):
    series: SeriesModel
    branch: int = 0
    all_branches: bool = False


class TransitionRequest(BaseModel):
    series: SeriesModel


class DecomposeRequest(BaseModel):
    series: SeriesModel
    count_only: bool = False


class SolvePairRequest(BaseModel):
    f: SeriesModel
    a: SeriesModel


class SolveJointRequest(BaseModel):
    a: SeriesModel
    b: SeriesModel


class SolveFactorRequest(BaseModel):
    a: SeriesModel
    c: SeriesModel
    d: SeriesModel


class CommonFactorRequest(BaseModel):
    a: SeriesModel
    b: SeriesModel
    order: int = Field(ge=2)


class SymmetryRequest(BaseModel):
    series: SeriesModel
    a1: Optional[SeriesModel] = None
    a2: Optional[SeriesModel] = None
    modulus: Optional[int] = None


class MonomializeRequest(BaseModel):
    generators: list[SeriesModel]


class CommuteRequest(BaseModel):
    a: SeriesModel
    b: SeriesModel


class ProbeRequest(BaseModel):
    a: SeriesModel
    b: SeriesModel
    l_max: int = Field(default=2, ge=1)
    s_max: int = Field(default=2, ge=1)


class SelftestRequest(BaseModel):
    seed: int = 0
    trunc: int = 16
    rounds: int = 5
    field: FieldModel = FieldModel(kind="exact")


# ---------------------------------------------------------------------------
# handlers (dict in, dict out) shared by the HTTP routes and the CLI


def handle_boettcher(req: BoettcherRequest) -> dict:
    a = req.series.build()
    data = boettcher(a)
    if req.branch:
        data = with_branch(data, req.branch)
    out = {
        "status": "ok",
        "n": data.n,
        "branch": data.branch,
        "beta": _dump(data.beta),
        "residual_ok": data.residual_ok(),
    }
    if req.all_branches:
        out["branches"] = [_dump(b) for b in all_boettcher(data)]
    return out


def handle_transition(req: TransitionRequest) -> dict:
    a = req.series.build()
    group = transition_group(boettcher(a))
    return {
        "status": "ok",
        "order": group.order,
        "generator_index": 1 % group.order,
        "beta": _dump(group.beta),
        "elements": [_dump(g) for g in group.elements],
    }


def handle_decompose(req: DecomposeRequest) -> dict:
    a = req.series.build()
    classes = enumerate_classes(boettcher(a))
    out = {"status": "ok", "count": len(classes)}
    if not req.count_only:
        out["classes"] = [
            {
                "shape": list(dec.shape),
                "factors": [_dump(s) for s in dec.factors],
            }
            for dec in classes
        ]
    return out


def _solution_entry(x, y=None):
    entry = {"x": _dump(x), "residual_ok": True}
    if y is not None:
        entry["y"] = _dump(y)
    return entry


def handle_solve_right(req: SolvePairRequest) -> dict:
    x = solve_right(req.f.build(), req.a.build())
    return {"status": "ok", "kind": "unique", "solutions": [_solution_entry(x)]}


def handle_solve_left(req: SolvePairRequest) -> dict:
    sols = solve_left(req.f.build(), req.a.build())
    return {
        "status": "ok",
        "kind": "finite-list",
        "solutions": [_solution_entry(x) for x in sols],
    }


def handle_solve_joint(req: SolveJointRequest) -> dict:
    x, y = solve_joint(req.a.build(), req.b.build())
    return {
        "status": "ok",
        "kind": "unique",
        "solutions": [_solution_entry(x, y)],
    }


def handle_solve_factor(req: SolveFactorRequest) -> dict:
    x = factor_through(req.a.build(), req.c.build(), req.d.build())
    return {"status": "ok", "kind": "unique", "solutions": [_solution_entry(x)]}


def handle_common_factor(req: CommonFactorRequest) -> dict:
    w, a_t, b_t = common_right_factor(req.a.build(), req.b.build(), req.order)
    return {
        "status": "ok",
        "w": _dump(w),
        "a_tilde": _dump(a_t),
        "b_tilde": _dump(b_t),
    }


def handle_symmetry(req: SymmetryRequest) -> dict:
    a = req.series.build()
    if req.a1 is not None or req.a2 is not None:
        if req.a1 is None or req.a2 is None or req.modulus is None:
            raise SeriesError(
                "symmetric decomposition needs a1, a2, and modulus together"
            )
        m = req.modulus
        mu, r1, big_r1, r2, big_r2 = decompose_symmetric(
            a, req.a1.build(), req.a2.build(), m, a.ord % m
        )
        return {
            "status": "ok",
            "mu": _dump(mu),
            "r1": r1,
            "R1": _dump(big_r1),
            "r2": r2,
            "R2": _dump(big_r2),
            "congruence": f"{r1}*{r2} = {a.ord % m} (mod {m})",
        }
    profile = detect_symmetry(a)
    return {
        "status": "ok",
        "maximal_m": profile.maximal_m,
        "pairs": [{"m": m, "r": r} for m, r in profile.pairs],
    }


def handle_monomialize(req: MonomializeRequest) -> dict:
    gens = [s.build() for s in req.generators]
    beta, images = monomialize(gens)
    f = gens[0].field
    return {
        "status": "ok",
        "beta": _dump(beta),
        "images": [
            {"c": f.scalar_to_json(im.coefficient), "m": im.exponent}
            for im in images
        ],
    }


def handle_commute(req: CommuteRequest) -> dict:
    a, b = req.a.build(), req.b.build()
    flag, c, check = commute_series(a, b)
    return {
        "status": "ok" if flag else "no",
        "commute": flag,
        "c": None if c is None else a.field.scalar_to_json(c),
        "check": check,
    }


def handle_probe(req: ProbeRequest) -> dict:
    flag = reversibility_probe(
        req.a.build(), req.b.build(), req.l_max, req.s_max
    )
    return {"status": "ok" if flag else "no", "reversible": flag}


def handle_selftest(req: SelftestRequest) -> dict:
    """Deterministic randomized property checks, for quick installs."""
    rng = random.Random(req.seed)
    f = req.field.build()
    n_trunc = req.trunc
    passed = 0

    def rand_gamma(order):
        pairs = [(order, 1)]
        pairs += [
            (i, rng.randint(-3, 3)) for i in range(order + 1, n_trunc + 1)
        ]
        return TruncatedSeries.from_pairs(f, pairs, n_trunc)

    def rand_unit():
        pairs = [(1, 1)] + [
            (i, rng.randint(-2, 2)) for i in range(2, n_trunc + 1)
        ]
        return TruncatedSeries.from_pairs(f, pairs, n_trunc)

    for _ in range(req.rounds):
        a = rand_gamma(rng.choice([2, 3, 4]))
        u = rand_unit()
        data = boettcher(a)
        assert data.residual_ok()
        passed += 1
        assert u.invert().compose(u).eq(
            TruncatedSeries.identity(f, n_trunc)
        )
        passed += 1
        x = rand_gamma(2)
        assert solve_right(x.compose(a), a).eq(x)
        passed += 1
        group = transition_group(data, verify=True)
        assert len(group.elements) == a.ord
        passed += 1
    return {"status": "ok", "passed": passed, "rounds": req.rounds}


# ---------------------------------------------------------------------------
# FastAPI wiring


app = FastAPI(
    title="fpscomp",
    description="composition of formal power series of order >= 2",
    version=__version__,
)


def _run(handler, req):
    try:
        return handler(req)
    except NegativeResult as exc:
        return {
            "status": "no",
            "reason": str(exc),
            "error_type": type(exc).__name__,
        }
    except SeriesError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.post("/boettcher")
def boettcher_endpoint(req: BoettcherRequest):
    return _run(handle_boettcher, req)


@app.post("/transition")
def transition_endpoint(req: TransitionRequest):
    return _run(handle_transition, req)


@app.post("/decompose")
def decompose_endpoint(req: DecomposeRequest):
    return _run(handle_decompose, req)


@app.post("/solve/right")
def solve_right_endpoint(req: SolvePairRequest):
    return _run(handle_solve_right, req)


@app.post("/solve/left")
def solve_left_endpoint(req: SolvePairRequest):
    return _run(handle_solve_left, req)


@app.post("/solve/joint")
def solve_joint_endpoint(req: SolveJointRequest):
    return _run(handle_solve_joint, req)


@app.post("/solve/factor")
def solve_factor_endpoint(req: SolveFactorRequest):
    return _run(handle_solve_factor, req)


@app.post("/solve/common")
def solve_common_endpoint(req: CommonFactorRequest):
    return _run(handle_common_factor, req)


@app.post("/symmetry")
def symmetry_endpoint(req: SymmetryRequest):
    return _run(handle_symmetry, req)


@app.post("/monomialize")
def monomialize_endpoint(req: MonomializeRequest):
    return _run(handle_monomialize, req)


@app.post("/commute")
def commute_endpoint(req: CommuteRequest):
    return _run(handle_commute, req)


@app.post("/probe")
def probe_endpoint(req: ProbeRequest):
    return _run(handle_probe, req)


@app.post("/selftest")
def selftest_endpoint(req: SelftestRequest):
    return _run(handle_selftest, req)


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}
