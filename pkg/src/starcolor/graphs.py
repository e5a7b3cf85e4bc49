"""Graph and edge-coloring substrate.

Vertices are dense integers 0..n-1.  Edges are stored canonically (min
endpoint first) and sorted lexicographically, so edge index i always means
the i-th pair in that order.  Colors are 0-based non-negative integers.

Named graphs use fixed labelings, documented on ``named_graph``, so that
example colorings are reproducible byte-for-byte.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import InvalidGraphError, PartialColoringError, UnknownGraphError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with canonical edge identities.

    ``edges[i]`` is the i-th pair (u, v), u < v, in lexicographic order.
    ``incident[v]`` lists the indices of edges touching v, ascending.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    incident: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    _edge_index: dict[tuple[int, int], int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        index: dict[tuple[int, int], int] = {}
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
            index[(u, v)] = i
        object.__setattr__(self, "incident", tuple(tuple(x) for x in inc))
        object.__setattr__(self, "_edge_index", index)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def max_degree(self) -> int:
        return max((len(x) for x in self.incident), default=0)

    def neighbors(self, v: int) -> list[int]:
        return [self.other_end(i, v) for i in self.incident[v]]

    def edge_index(self, u: int, v: int) -> int:
        """Index of edge uv; raises KeyError if absent."""
        return self._edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def other_end(self, edge: int, v: int) -> int:
        u, w = self.edges[edge]
        return u + w - v

    def is_regular(self, d: int) -> bool:
        return self.n > 0 and all(len(x) == d for x in self.incident)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for u in self.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == self.n


def build_graph(n: int, pairs) -> Graph:
    """Build a simple graph from vertex pairs, rejecting bad input.

    Raises InvalidGraphError on loops, duplicate pairs, or endpoints >= n.
    """
    if n < 0:
        raise InvalidGraphError(f"vertex count must be non-negative, got {n}")
    canon: list[tuple[int, int]] = []
    for u, v in pairs:
        if u == v:
            raise InvalidGraphError(f"loop edge at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f"edge ({u},{v}) out of range for n={n}")
        canon.append((u, v) if u < v else (v, u))
    deduped = sorted(set(canon))
    if len(deduped) != len(canon):
        seen: set[tuple[int, int]] = set()
        for e in canon:
            if e in seen:
                raise InvalidGraphError(f"duplicate edge {e}")
            seen.add(e)
    return Graph(n, tuple(deduped))


@dataclass(frozen=True)
class EdgeColoring:
    """Per-edge-index color assignment; None marks an uncolored edge.

    ``palette_size`` is always recomputed from the assigned values.
    """

    colors: tuple[int | None, ...]
    palette_size: int = field(init=False)

    def __post_init__(self) -> None:
        assigned = {c for c in self.colors if c is not None}
        if any(c < 0 for c in assigned):
            raise ValueError("colors must be non-negative")
        object.__setattr__(self, "palette_size", len(assigned))

    @property
    def total(self) -> bool:
        return all(c is not None for c in self.colors)

    def palette(self) -> set[int]:
        return {c for c in self.colors if c is not None}

    def require_total(self, context: str) -> None:
        if not self.total:
            missing = [i for i, c in enumerate(self.colors) if c is None]
            raise PartialColoringError(
                f"{context} requires a total coloring; uncolored edges {missing[:5]}"
            )


def densify_colors(coloring: EdgeColoring) -> EdgeColoring:
    """Remap assigned colors onto 0..k-1, preserving sorted value order."""
    values = sorted(coloring.palette())
    remap = {c: i for i, c in enumerate(values)}
    return EdgeColoring(tuple(None if c is None else remap[c] for c in coloring.colors))


# ---------------------------------------------------------------------------
# Named graphs.
#
# Fixed labelings:
#   complete K_n          vertices 0..n-1
#   complete bipartite    parts {0..m-1} and {m..m+n-1}
#   cycle C_k             edges i-(i+1 mod k)
#   path P_k              k vertices, edges i-(i+1)
#   cube Q_3              vertices are 3-bit integers, edges flip one bit
#   petersen              outer cycle 0..4, spokes i-(i+5), inner 5+i to 5+((i+2) mod 5)
#   heawood               LCF [5,-5]^7: 14-cycle plus chords 2k to (2k+5) mod 14
# ---------------------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise UnknownGraphError(f"cycle needs k >= 3, got {k}")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    if k < 1:
        raise UnknownGraphError(f"path needs k >= 1 vertices, got {k}")
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def cube_graph() -> Graph:
    pairs = []
    for v in range(8):
        for bit in (1, 2, 4):
            if v < v ^ bit:
                pairs.append((v, v ^ bit))
    return build_graph(8, pairs)


def petersen_graph() -> Graph:
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    pairs += [(i, i + 5) for i in range(5)]
    pairs += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, pairs)


def heawood_graph() -> Graph:
    pairs = [(i, (i + 1) % 14) for i in range(14)]
    pairs += [(2 * k, (2 * k + 5) % 14) for k in range(7)]
    return build_graph(14, pairs)


def named_graph(name: str, *params: int) -> Graph:
    """Constructor for the standard graphs used throughout the package.

    Accepted names: complete/k_n (n), complete_bipartite/k_m_n (m, n),
    cycle/c_k (k), path/p_k (k), cube/q3, petersen, heawood.
    """
    key = name.strip().lower().replace("-", "_")
    try:
        if key in ("complete", "k_n", "kn"):
            (n,) = params
            return complete_graph(n)
        if key in ("complete_bipartite", "k_m_n", "kmn", "knn"):
            m, n = params
            return complete_bipartite(m, n)
        if key in ("cycle", "c_k", "ck"):
            (k,) = params
            return cycle_graph(k)
        if key in ("path", "p_k", "pk"):
            (k,) = params
            return path_graph(k)
        if key in ("cube", "q3", "q_3"):
            if params:
                raise UnknownGraphError("cube takes no parameters")
            return cube_graph()
        if key == "petersen":
            if params:
                raise UnknownGraphError("petersen takes no parameters")
            return petersen_graph()
        if key == "heawood":
            if params:
                raise UnknownGraphError("heawood takes no parameters")
            return heawood_graph()
    except ValueError as exc:  # tuple unpacking arity
        raise UnknownGraphError(f"bad parameters {params} for {name!r}") from exc
    except InvalidGraphError as exc:
        raise UnknownGraphError(str(exc)) from exc
    raise UnknownGraphError(f"unknown graph name {name!r}")


def edge_distance(g: Graph, e1: int, e2: int, cap: int = 2) -> int:
    """Distance between two edges in the line graph, saturated at cap+1.

    0 iff e1 == e2, 1 iff they share a vertex, 2 iff disjoint but joined by
    an edge adjacent to both; any larger distance is reported as cap+1.
    """
    if not (0 <= e1 < g.m and 0 <= e2 < g.m):
        raise InvalidGraphError(f"edge index out of range: {e1}, {e2}")
    if e1 == e2:
        return 0
    far = cap + 1
    dist = {e1: 0}
    queue = deque([e1])
    while queue:
        e = queue.popleft()
        d = dist[e]
        if d >= cap:
            continue
        u, v = g.edges[e]
        for w in (u, v):
            for f in g.incident[w]:
                if f not in dist:
                    dist[f] = d + 1
                    if f == e2:
                        return d + 1
                    queue.append(f)
    return far
