"""HTTP service exposing the analyzer, the center computation, and the
verification suite.  Requests carry the graph in the text file format;
responses mirror the CLI JSON reports.

All underlying operations are pure functions over immutable graphs, so
the app is safe under concurrent requests.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import corpus
from .graphio import GraphParseError, parse_graph
from .lattice import SubsetCapExceededError
from .reports import build_analyze_report, build_center_report
from .rings import ring_from_spec
from .verify import build_verify_report


class AnalyzeRequest(BaseModel):
    graph: str = Field(description="graph in the text file format")


class CenterRequest(BaseModel):
    graph: str
    ring: str = "z"
    max_degree: int = Field(default=12, ge=0)


class VerifyRequest(BaseModel):
    graph: str
    ring: str = "z"
    max_degree: int = Field(default=4, ge=0)


class VertexInfo(BaseModel):
    name: str
    kind: str


class PairInfo(BaseModel):
    H: list[str]
    B_H: list[str]
    condition_F: bool
    compact: bool


class CycleClassInfo(BaseModel):
    vertices: list[str]
    length: int
    rotations: list[str]
    finite_entries: bool


class AnalyzeResponse(BaseModel):
    schema_version: str
    vertices: list[VertexInfo]
    hereditary_saturated: list[PairInfo]
    exit_free_cycles: list[CycleClassInfo]


class TermInfo(BaseModel):
    coeff: str
    alpha: list[str]
    beta: list[str]
    vertex: str


class ElementInfo(BaseModel):
    text: str
    terms: list[TermInfo]
    verified: Optional[bool] = None
    by_involution: Optional[bool] = None
    pair: Optional[PairInfo] = None


class CenterResponse(BaseModel):
    schema_version: str
    ring: str
    max_degree: int
    degree0: list[ElementInfo]
    lengths: list[int]
    components: dict[str, list[ElementInfo]]
    verified: bool


class CheckInfo(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    schema_version: str
    ring: str
    passed: bool
    checks: list[CheckInfo]
    failures: list[str]


class CorpusListResponse(BaseModel):
    graphs: list[str]


class CorpusGraphResponse(BaseModel):
    name: str
    graph: str


app = FastAPI(
    title="lpacenter",
    description="Graded center of the Leavitt path algebra of a finitely "
                "presented graph.",
    version="0.1.0",
)


def _parse(text: str):
    try:
        return parse_graph(text)
    except GraphParseError as exc:
        raise HTTPException(status_code=400,
                            detail={"line": exc.line, "message": exc.reason})


def _ring(spec: str):
    try:
        return ring_from_spec(spec)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail={"message": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.get("/corpus", response_model=CorpusListResponse)
def corpus_list():
    return {"graphs": list(corpus.names())}


@app.get("/corpus/{name}", response_model=CorpusGraphResponse)
def corpus_graph(name: str):
    try:
        return {"name": name, "graph": corpus.graph_text(name)}
    except KeyError:
        raise HTTPException(status_code=404, detail={"message": f"no corpus graph {name!r}"})


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze(req: AnalyzeRequest):
    g = _parse(req.graph)
    try:
        return build_analyze_report(g)
    except SubsetCapExceededError as exc:
        raise HTTPException(status_code=400, detail={"message": str(exc)})


@app.post("/center", response_model=CenterResponse)
def center(req: CenterRequest):
    g = _parse(req.graph)
    ring = _ring(req.ring)
    try:
        return build_center_report(g, ring, req.max_degree)
    except SubsetCapExceededError as exc:
        raise HTTPException(status_code=400, detail={"message": str(exc)})


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest):
    g = _parse(req.graph)
    ring = _ring(req.ring)
    try:
        return build_verify_report(g, ring, req.max_degree)
    except SubsetCapExceededError as exc:
        raise HTTPException(status_code=400, detail={"message": str(exc)})
