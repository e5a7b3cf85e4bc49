"""Request/response schemas for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class GraphPayload(BaseModel):
    """Inline graph: vertex count plus edge pairs."""

    n: int = Field(ge=0)
    edges: list[tuple[int, int]] = Field(default_factory=list)


class ColoringPayload(BaseModel):
    """Coloring document: [u, v, color] rows, color may be null."""

    n: int = Field(ge=0)
    edges: list[tuple[int, int, int | None]] = Field(default_factory=list)
    provenance: dict | None = None


class ViolationPayload(BaseModel):
    kind: str
    edges: list[int]
    vertices: list[int]
    colors: list[int]


class VerifyResponse(BaseModel):
    ok: bool
    palette_size: int
    violation: ViolationPayload | None = None


class SolveRequest(BaseModel):
    graph: GraphPayload
    decision: int | None = Field(default=None, ge=0)
    max_nodes: int | None = Field(default=None, ge=1)
    time_cap: float | None = Field(default=None, gt=0)


class SolveResponse(BaseModel):
    status: str
    value: int | None = None
    lower: int | None = None
    upper: int | None = None
    nodes_explored: int
    coloring: ColoringPayload | None = None


class ConstructKnRequest(BaseModel):
    n: int = Field(ge=1)
    method: str = Field(default="ap3", pattern="^(ap3|recursive|exact)$")


class ConstructKnnRequest(BaseModel):
    n: int = Field(ge=1)


class ComposeRequest(BaseModel):
    graph: GraphPayload
    exact_threshold: int = Field(default=6, ge=2)


class BoundResponse(BaseModel):
    n: int
    lower_bound: int


class CertifyResponse(BaseModel):
    n: int
    palette: int
    a: list[int]
    b: list[list[int]]
    edge_sum_ok: bool
    flank_ok: list[bool]
    middle_ok: list[bool]
    chained_ok: bool
    passed: bool


class CoverRequest(BaseModel):
    graph: GraphPayload
    target: str = Field(default="q3")


class CoverPayload(BaseModel):
    source_n: int
    target_n: int
    assignment: list[int]
    source_edges: list[tuple[int, int]]
    target_edges: list[tuple[int, int]]


class CoverResponse(BaseModel):
    exists: bool
    cover: CoverPayload | None = None


class LiftRequest(BaseModel):
    cover: CoverPayload
    coloring: ColoringPayload


class CubicSevenRequest(BaseModel):
    graph: GraphPayload


class NamedGraphResponse(BaseModel):
    name: str
    graph: GraphPayload
    graph6: str
