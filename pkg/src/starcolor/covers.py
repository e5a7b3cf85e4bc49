"""Covering maps, missing-color machinery, and coloring lifts.

A covering map is a locally bijective graph homomorphism.  Star
4-colorings of cubic graphs are tied to covers of the 3-cube: the color
missing at each vertex plus one of two cyclic local patterns pins every
vertex to a unique cube vertex, and conversely the cube's reference
coloring lifts through any cover.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_key
from .errors import (
    InvalidCoverError,
    NotStarColoringError,
    PaletteError,
    PatternInconsistencyError,
    PreconditionError,
)
from .graphs import EdgeColoring, Graph, build_graph, cube_graph, densify_colors
from .verify import verify_star

# Star 4-coloring of the cube under this package's labeling (vertices are
# 3-bit integers, edges flip one bit), found once by the exact solver and
# frozen.  Validated by tests: unique i,j,i path between same-missing-color
# vertices, and both local patterns occur in every missing-color class.
CUBE_REFERENCE_COLORS: tuple[int, ...] = (0, 1, 2, 2, 3, 3, 0, 1, 1, 3, 0, 2)


def cube_reference_coloring() -> tuple[Graph, EdgeColoring]:
    return cube_graph(), EdgeColoring(CUBE_REFERENCE_COLORS)


@dataclass(frozen=True)
class CoverMap:
    """Vertex assignment source -> target, validated on construction."""

    source: Graph
    target: Graph
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        src, tgt, f = self.source, self.target, self.assignment
        if len(f) != src.n:
            raise InvalidCoverError("assignment length must match source order")
        if any(not (0 <= w < tgt.n) for w in f):
            raise InvalidCoverError("assignment image out of range")
        for u, v in src.edges:
            if not tgt.has_edge(f[u], f[v]):
                raise InvalidCoverError(
                    f"edge ({u},{v}) maps to non-edge ({f[u]},{f[v]})"
                )
        for v in range(src.n):
            images = sorted(f[u] for u in src.neighbors(v))
            expected = sorted(tgt.neighbors(f[v]))
            if images != expected:
                raise InvalidCoverError(
                    f"neighborhood of {v} does not biject onto that of {f[v]}"
                )
        if src.is_connected():
            sizes = [0] * tgt.n
            for w in f:
                sizes[w] += 1
            if len(set(sizes)) != 1:
                raise InvalidCoverError("fibers of a connected cover must be equal")

    @property
    def fiber_size(self) -> int:
        return self.source.n // self.target.n


def find_cover(g: Graph, h: Graph) -> CoverMap | None:
    """Exhaustive search for a covering map g -> h; None proves absence.

    g must be connected.  The root's image is fixed to a single vertex
    when h is the cube (vertex-transitive target), otherwise all target
    vertices are tried.
    """
    if not g.is_connected():
        raise PreconditionError("cover search expects a connected source")
    if not h.is_connected() or h.n == 0:
        raise PreconditionError("cover search expects a connected target")
    if g.n % h.n != 0:
        return None
    k = g.n // h.n
    if sorted(g.degree(v) for v in range(g.n)) != sorted(
        d for v in range(h.n) for d in [h.degree(v)] * k
    ):
        return None

    roots = [0] if canonical_key(h) == canonical_key(cube_graph()) else list(range(h.n))

    assignment: list[int] = [-1] * g.n

    def extend() -> bool:
        # first assigned vertex with an unassigned neighbor, by index
        for v in range(g.n):
            if assignment[v] < 0:
                continue
            pending = [u for u in g.neighbors(v) if assignment[u] < 0]
            if not pending:
                continue
            u = min(pending)
            taken = {
                assignment[x] for x in g.neighbors(v) if assignment[x] >= 0
            }
            for w in h.neighbors(assignment[v]):
                if w in taken:
                    continue
                if not _consistent(u, w):
                    continue
                assignment[u] = w
                if extend():
                    return True
                assignment[u] = -1
            return False
        return all(x >= 0 for x in assignment)

    def _consistent(u: int, w: int) -> bool:
        for x in g.neighbors(u):
            fx = assignment[x]
            if fx < 0:
                continue
            if not h.has_edge(fx, w):
                return False
            for y in g.neighbors(x):
                if y != u and assignment[y] == w:
                    return False
        return True

    for root_image in roots:
        assignment = [-1] * g.n
        assignment[0] = root_image
        if extend():
            return CoverMap(g, h, tuple(assignment))
    return None


def lift_coloring(m: CoverMap, c: EdgeColoring) -> EdgeColoring:
    """Pull a total coloring of the target back along the cover."""
    c.require_total("coloring lift")
    if len(c.colors) != m.target.m:
        raise InvalidCoverError("coloring does not match the cover's target")
    f = m.assignment
    lifted = tuple(
        c.colors[m.target.edge_index(f[u], f[v])] for u, v in m.source.edges
    )
    return EdgeColoring(lifted)


def voltage_double_cover(g: Graph, negated_edges) -> tuple[Graph, CoverMap]:
    """Two-fold cover from an edge signing; negated edges cross copies.

    Vertex (v, s) is encoded as v + s*n; the canonical projection is the
    returned CoverMap.
    """
    negated = set(negated_edges)
    n = g.n
    pairs = []
    for e, (u, v) in enumerate(g.edges):
        if e in negated:
            pairs.append((u, v + n))
            pairs.append((u + n, v))
        else:
            pairs.append((u, v))
            pairs.append((u + n, v + n))
    lift = build_graph(2 * n, pairs)
    projection = tuple(x % n for x in range(2 * n))
    return lift, CoverMap(lift, g, projection)


# ---------------------------------------------------------------------------
# Missing colors and local patterns
# ---------------------------------------------------------------------------


def missing_color_map(g: Graph, c: EdgeColoring) -> tuple[int, ...]:
    """Per-vertex color absent from the incident edges.

    Defined for cubic graphs under star colorings with palette exactly 4.
    The result is a proper, locally injective vertex coloring; both facts
    are theorems and asserted after computation.
    """
    if not g.is_regular(3):
        raise PreconditionError("missing-color map expects a cubic graph")
    c = densify_colors(c)
    if c.palette_size != 4:
        raise PaletteError(
            f"missing-color map needs palette exactly 4, got {c.palette_size}"
        )
    if verify_star(g, c) is not None:
        raise NotStarColoringError("missing-color map needs a star coloring")
    full = {0, 1, 2, 3}
    out = []
    for v in range(g.n):
        present = {c.colors[e] for e in g.incident[v]}
        (gap,) = full - present
        out.append(gap)
    result = tuple(out)
    for u, v in g.edges:
        assert result[u] != result[v], "missing-color map must be proper"
    for v in range(g.n):
        images = [result[u] for u in g.neighbors(v)]
        assert len(set(images)) == len(images), (
            "missing-color map must be locally injective"
        )
    return result


FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class LocalPattern:
    """One of the two cyclic pairings of edge colors to neighbor gaps."""

    vertex: int
    orientation: str


def local_color_pattern(
    g: Graph, c: EdgeColoring, f, v: int
) -> LocalPattern:
    """Classify vertex v by how its edge colors meet its neighbors' gaps.

    With the three non-missing colors sorted as (j, k, l), the edges
    colored j, k, l lead to vertices missing k, l, j (forward) or
    l, j, k (backward); anything else signals an upstream bug.
    """
    c = densify_colors(c)
    j, k, l = sorted({0, 1, 2, 3} - {f[v]})
    succ_forward = {j: k, k: l, l: j}
    succ_backward = {j: l, k: j, l: k}
    forward_ok = True
    backward_ok = True
    for e in g.incident[v]:
        color = c.colors[e]
        gap = f[g.other_end(e, v)]
        if succ_forward[color] != gap:
            forward_ok = False
        if succ_backward[color] != gap:
            backward_ok = False
    if forward_ok == backward_ok:
        raise PatternInconsistencyError(
            f"vertex {v} fits {'both' if forward_ok else 'neither'} pattern"
        )
    return LocalPattern(v, FORWARD if forward_ok else BACKWARD)


def derive_q3_cover(g: Graph, c: EdgeColoring) -> CoverMap:
    """Unique cover onto the cube induced by a star 4-coloring.

    Each vertex maps to the cube vertex sharing its missing color and
    local pattern under the frozen reference coloring; the CoverMap
    constructor then certifies the result.
    """
    c = densify_colors(c)
    f = missing_color_map(g, c)
    cube, ref = cube_reference_coloring()
    ref_missing = missing_color_map(cube, ref)
    table: dict[tuple[int, str], int] = {}
    for w in range(cube.n):
        pat = local_color_pattern(cube, ref, ref_missing, w)
        key = (ref_missing[w], pat.orientation)
        if key in table:  # pragma: no cover - reference fixture is validated
            raise PatternInconsistencyError("reference coloring is degenerate")
        table[key] = w
    assignment = []
    for v in range(g.n):
        pat = local_color_pattern(g, c, f, v)
        assignment.append(table[(f[v], pat.orientation)])
    return CoverMap(g, cube, tuple(assignment))
