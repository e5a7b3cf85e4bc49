"""FastAPI service wrapping the core package.

Every operation is a JSON request/response; solver endpoints take
explicit budgets so request duration is bounded by the caller.  The CLI
is a thin client of these endpoints.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import counting, covers
from ..constructions import (
    color_kn_recursive,
    color_kn_sum,
    color_knn_from_kn,
    compose_star_coloring,
)
from ..ap3 import ap3_set_of_size
from ..cubic import cubic_seven_coloring
from ..errors import StarColorError
from ..graphs import EdgeColoring, Graph, build_graph, complete_graph
from ..solver import SolveBudget, star_chromatic_index, star_decision
from ..verify import verify_star
from .models import (
    BoundResponse,
    CertifyResponse,
    ColoringPayload,
    ComposeRequest,
    ConstructKnRequest,
    ConstructKnnRequest,
    CoverPayload,
    CoverRequest,
    CoverResponse,
    CubicSevenRequest,
    GraphPayload,
    LiftRequest,
    NamedGraphResponse,
    SolveRequest,
    SolveResponse,
    VerifyResponse,
    ViolationPayload,
)

app = FastAPI(
    title="starcolor",
    description="Star edge-coloring: verification, exact solving, "
    "constructions, counting bounds, and cube-cover tools.",
)


def _graph(payload: GraphPayload) -> Graph:
    try:
        return build_graph(payload.n, payload.edges)
    except StarColorError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def _coloring(payload: ColoringPayload) -> tuple[Graph, EdgeColoring]:
    try:
        g = build_graph(payload.n, [(u, v) for u, v, _ in payload.edges])
        by_edge = {}
        for u, v, c in payload.edges:
            by_edge[(u, v) if u < v else (v, u)] = c
        return g, EdgeColoring(tuple(by_edge[e] for e in g.edges))
    except StarColorError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def _coloring_payload(
    g: Graph, c: EdgeColoring, provenance: dict | None = None
) -> ColoringPayload:
    return ColoringPayload(
        n=g.n,
        edges=[(u, v, c.colors[i]) for i, (u, v) in enumerate(g.edges)],
        provenance=provenance,
    )


def _budget(max_nodes: int | None, time_cap: float | None) -> SolveBudget:
    if max_nodes is None and time_cap is None:
        return SolveBudget.unlimited()
    return SolveBudget(max_nodes=max_nodes, time_cap=time_cap)


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(payload: ColoringPayload) -> VerifyResponse:
    g, c = _coloring(payload)
    try:
        violation = verify_star(g, c)
    except StarColorError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    if violation is None:
        return VerifyResponse(ok=True, palette_size=c.palette_size)
    return VerifyResponse(
        ok=False,
        palette_size=c.palette_size,
        violation=ViolationPayload(
            kind=violation.kind,
            edges=list(violation.edges),
            vertices=list(violation.vertices),
            colors=list(violation.colors),
        ),
    )


@app.post("/solve", response_model=SolveResponse)
def solve_endpoint(request: SolveRequest) -> SolveResponse:
    g = _graph(request.graph)
    budget = _budget(request.max_nodes, request.time_cap)
    if request.decision is not None:
        outcome = star_decision(g, request.decision, budget)
        coloring = (
            _coloring_payload(g, outcome.coloring)
            if outcome.coloring is not None
            else None
        )
        return SolveResponse(
            status=outcome.status,
            value=request.decision if outcome.status == "feasible" else None,
            nodes_explored=outcome.nodes_explored,
            coloring=coloring,
        )
    outcome = star_chromatic_index(g, budget)
    coloring = (
        _coloring_payload(g, outcome.coloring)
        if outcome.coloring is not None
        else None
    )
    return SolveResponse(
        status=outcome.status,
        value=outcome.value,
        lower=outcome.lower,
        upper=outcome.upper,
        nodes_explored=outcome.nodes_explored,
        coloring=coloring,
    )


@app.post("/construct/kn", response_model=ColoringPayload)
def construct_kn_endpoint(request: ConstructKnRequest) -> ColoringPayload:
    n = request.n
    if request.method == "ap3":
        a = ap3_set_of_size(n, "behrend")
        g, c = color_kn_sum(a)
        provenance = {
            "method": "ap3-sum",
            "parameters": {"n": n, "span": a.span, "elements": list(a.elements)},
            "palette_size": c.palette_size,
        }
    elif request.method == "recursive":
        g, c, blocks = color_kn_recursive(n)
        provenance = {
            "method": "dyadic-recursive",
            "parameters": {"n": n, "blocks": blocks},
            "palette_size": c.palette_size,
        }
    else:
        if n > 7:
            raise HTTPException(
                status_code=422,
                detail="exact construction is capped at n <= 7",
            )
        outcome = star_chromatic_index(complete_graph(n), SolveBudget.unlimited())
        g, c = complete_graph(n), outcome.coloring
        provenance = {
            "method": "exact",
            "parameters": {"n": n},
            "palette_size": c.palette_size,
        }
    return _coloring_payload(g, c, provenance)


@app.post("/construct/knn", response_model=ColoringPayload)
def construct_knn_endpoint(request: ConstructKnnRequest) -> ColoringPayload:
    n = request.n
    a = ap3_set_of_size(n, "behrend")
    kn_g, kn_c = color_kn_sum(a)
    g, c = color_knn_from_kn(kn_g, kn_c)
    provenance = {
        "method": "bipartite-doubling",
        "parameters": {"n": n, "base_palette": kn_c.palette_size},
        "palette_size": c.palette_size,
    }
    return _coloring_payload(g, c, provenance)


@app.post("/construct/compose", response_model=ColoringPayload)
def construct_compose_endpoint(request: ComposeRequest) -> ColoringPayload:
    g = _graph(request.graph)
    product = compose_star_coloring(g, exact_threshold=request.exact_threshold)
    provenance = {
        "method": "frugal-product",
        "parameters": {
            "beta": product.frugal.beta,
            "outer_palette": product.outer_palette_size,
            "inner_palette_max": product.inner_palette_max,
        },
        "palette_size": product.flattened.palette_size,
    }
    return _coloring_payload(g, product.flattened, provenance)


@app.get("/bound/kn", response_model=BoundResponse)
def bound_endpoint(n: int) -> BoundResponse:
    try:
        return BoundResponse(n=n, lower_bound=counting.kn_lower_bound(n))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.post("/certify", response_model=CertifyResponse)
def certify_endpoint(payload: ColoringPayload) -> CertifyResponse:
    g, c = _coloring(payload)
    try:
        cert = counting.counting_certificate(g, c)
    except StarColorError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    report = counting.check_counting_identities(cert)
    return CertifyResponse(
        n=cert.n,
        palette=cert.palette,
        a=list(cert.a),
        b=[list(row) for row in cert.b],
        edge_sum_ok=report.edge_sum_ok,
        flank_ok=list(report.flank_ok),
        middle_ok=list(report.middle_ok),
        chained_ok=report.chained_ok,
        passed=report.passed,
    )


@app.post("/cover", response_model=CoverResponse)
def cover_endpoint(request: CoverRequest) -> CoverResponse:
    if request.target != "q3":
        raise HTTPException(status_code=422, detail="only target q3 is supported")
    g = _graph(request.graph)
    target = covers.cube_graph()
    try:
        cover = covers.find_cover(g, target)
    except StarColorError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    if cover is None:
        return CoverResponse(exists=False)
    return CoverResponse(
        exists=True,
        cover=CoverPayload(
            source_n=g.n,
            target_n=target.n,
            assignment=list(cover.assignment),
            source_edges=list(g.edges),
            target_edges=list(target.edges),
        ),
    )


@app.post("/lift", response_model=ColoringPayload)
def lift_endpoint(request: LiftRequest) -> ColoringPayload:
    try:
        source = build_graph(request.cover.source_n, request.cover.source_edges)
        target = build_graph(request.cover.target_n, request.cover.target_edges)
        cover = covers.CoverMap(source, target, tuple(request.cover.assignment))
    except StarColorError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    tg, tc = _coloring(request.coloring)
    if (tg.n, tg.edges) != (target.n, target.edges):
        raise HTTPException(
            status_code=422, detail="coloring does not match the cover's target"
        )
    try:
        lifted = covers.lift_coloring(cover, tc)
    except StarColorError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    provenance = {"method": "cover-lift", "palette_size": lifted.palette_size}
    return _coloring_payload(source, lifted, provenance)


@app.post("/cubic7", response_model=ColoringPayload)
def cubic7_endpoint(request: CubicSevenRequest) -> ColoringPayload:
    g = _graph(request.graph)
    try:
        c = cubic_seven_coloring(g)
    except StarColorError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    provenance = {
        "method": "matching-decomposition",
        "palette_size": c.palette_size,
    }
    return _coloring_payload(g, c, provenance)


@app.get("/graphs/{name}", response_model=NamedGraphResponse)
def named_graph_endpoint(name: str, params: str = "") -> NamedGraphResponse:
    from ..formats import to_graph6
    from ..graphs import named_graph

    args = [int(x) for x in params.split(",") if x.strip()] if params else []
    try:
        g = named_graph(name, *args)
    except StarColorError as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from exc
    return NamedGraphResponse(
        name=name,
        graph=GraphPayload(n=g.n, edges=list(g.edges)),
        graph6=to_graph6(g),
    )
