"""Exact decision procedure and optimizer for the star chromatic index.

Backtracking over edges with dynamic most-constrained-first selection
(ties by canonical edge index), lowest feasible color first, and color
symmetry breaking: an edge may introduce at most one fresh color beyond
the maximum used so far.  Pruning is incremental: only patterns through
the newly colored edge are examined per node; a full verification runs
at every feasible leaf as defense in depth.

Budgets are first-class: ``exhausted-budget`` distinguishes "unknown"
from "infeasible", and identical inputs always yield identical outcomes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graphs import EdgeColoring, Graph
from .verify import verify_star

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
EXHAUSTED = "exhausted-budget"


@dataclass(frozen=True)
class SolveBudget:
    """Search caps; at least one must be set unless explicitly unlimited."""

    max_nodes: int | None = None
    time_cap: float | None = None
    allow_unlimited: bool = False

    def __post_init__(self) -> None:
        if self.max_nodes is None and self.time_cap is None and not self.allow_unlimited:
            raise ValueError(
                "set max_nodes or time_cap, or pass allow_unlimited=True"
            )

    @classmethod
    def unlimited(cls) -> "SolveBudget":
        return cls(allow_unlimited=True)


@dataclass(frozen=True)
class SolveOutcome:
    status: str
    coloring: EdgeColoring | None
    nodes_explored: int


@dataclass(frozen=True)
class IndexOutcome:
    """Result of optimizing the star chromatic index.

    ``lower``/``upper`` always bracket the true value; on ``exhausted-budget``
    they are the interval established before the budget ran out, with
    ``coloring`` a greedy witness for ``upper`` when one exists.
    """

    status: str
    value: int | None
    coloring: EdgeColoring | None
    lower: int
    upper: int | None
    nodes_explored: int


class _Exhausted(Exception):
    pass


class _Search:
    """Mutable search state shared by decision calls; one instance per call."""

    def __init__(self, g: Graph, k: int, budget: SolveBudget, start_nodes: int = 0):
        self.g = g
        self.k = k
        self.m = g.m
        self.colors = [-1] * g.m
        # inc[v] = list of (edge index, other endpoint)
        self.inc = [
            [(i, g.other_end(i, v)) for i in g.incident[v]] for v in range(g.n)
        ]
        # edges sharing a vertex with e
        self.touch = [
            [f for w in g.edges[e] for f in g.incident[w] if f != e]
            for e in range(g.m)
        ]
        # times each color appears on edges incident to e (shared endpoint)
        self.cnt = [[0] * k for _ in range(g.m)]
        self.avail = [k] * g.m
        self.nodes = start_nodes
        self.max_nodes = budget.max_nodes
        self.deadline = (
            time.monotonic() + budget.time_cap if budget.time_cap is not None else None
        )

    # -- bookkeeping ---------------------------------------------------

    def assign(self, e: int, c: int) -> None:
        self.colors[e] = c
        for f in self.touch[e]:
            cf = self.cnt[f]
            cf[c] += 1
            if cf[c] == 1:
                self.avail[f] -= 1
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _Exhausted
        if self.deadline is not None and self.nodes % 256 == 0:
            if time.monotonic() > self.deadline:
                raise _Exhausted

    def unassign(self, e: int) -> None:
        c = self.colors[e]
        self.colors[e] = -1
        for f in self.touch[e]:
            cf = self.cnt[f]
            cf[c] -= 1
            if cf[c] == 0:
                self.avail[f] += 1

    # -- incremental star check ----------------------------------------

    def conflicts(self, e: int, a: int) -> bool:
        """Would coloring e with a create a bi-colored 4-path or 4-cycle?

        Assumes a is proper at e (no incident edge colored a).  Checks e
        in every pattern position against currently colored edges.
        """
        g = self.g
        colors = self.colors
        inc = self.inc
        u, v = g.edges[e]

        # e as an end edge: walk w, x, y away from either endpoint.
        for p, q in ((v, u), (u, v)):
            for f2, w in inc[p]:
                b = colors[f2]
                if f2 == e or b < 0:
                    continue
                for f3, x in inc[w]:
                    if colors[f3] != a or x == p:
                        continue
                    for f4, y in inc[x]:
                        if colors[f4] != b or f4 == f2:
                            continue
                        if y == q:
                            return True  # 4-cycle q-p-w-x
                        if y not in (p, w):
                            return True  # 4-path q-p-w-x-y

        # e as an inner edge: same-colored pair at u and v.
        for f1, x in inc[u]:
            b = colors[f1]
            if f1 == e or b < 0:
                continue
            for f3, w in inc[v]:
                if f3 == e or colors[f3] != b:
                    continue
                if w == x:
                    continue
                if g.has_edge(x, w) and colors[g.edge_index(x, w)] == a:
                    return True  # 4-cycle x-u-v-w
                for f4, y in inc[w]:
                    if colors[f4] == a and y not in (u, v, x):
                        return True  # 4-path x-u-v-w-y
                for f4, y in inc[x]:
                    if colors[f4] == a and y not in (u, v, w):
                        return True  # 4-path y-x-u-v-w
        return False

    # -- search ----------------------------------------------------------

    def run(self) -> bool:
        return self._extend(0, -1)

    def _extend(self, depth: int, max_used: int) -> bool:
        if depth == self.m:
            return True
        # Most-constrained uncolored edge, ties by canonical index.
        best = -1
        best_avail = self.k + 1
        for f in range(self.m):
            if self.colors[f] < 0 and self.avail[f] < best_avail:
                best_avail = self.avail[f]
                best = f
                if best_avail == 0:
                    return False
        limit = min(self.k, max_used + 2)
        cnt_e = self.cnt[best]
        for c in range(limit):
            if cnt_e[c] == 0 and not self.conflicts(best, c):
                self.assign(best, c)
                if self._extend(depth + 1, max(max_used, c)):
                    return True
                self.unassign(best)
        return False


def star_decision(g: Graph, k: int, budget: SolveBudget) -> SolveOutcome:
    """Decide whether g admits a star k-edge-coloring, within budget."""
    if k < 0:
        raise ValueError(f"palette size must be non-negative, got {k}")
    if g.m == 0:
        return SolveOutcome(FEASIBLE, EdgeColoring(()), 0)
    if k == 0:
        return SolveOutcome(INFEASIBLE, None, 0)
    search = _Search(g, k, budget)
    try:
        found = search.run()
    except _Exhausted:
        return SolveOutcome(EXHAUSTED, None, search.nodes)
    if not found:
        return SolveOutcome(INFEASIBLE, None, search.nodes)
    coloring = EdgeColoring(tuple(search.colors))
    violation = verify_star(g, coloring)
    if violation is not None:  # pragma: no cover - defense in depth
        raise AssertionError(f"solver produced a non-star coloring: {violation}")
    return SolveOutcome(FEASIBLE, coloring, search.nodes)


def greedy_star_coloring(g: Graph) -> EdgeColoring:
    """First-fit star coloring in canonical edge order; always succeeds.

    A fresh color is always safe, so the palette is finite but not
    optimal; useful as an upper bound and as test scaffolding.
    """
    if g.m == 0:
        return EdgeColoring(())
    k = g.m  # a fresh color per edge always suffices
    search = _Search(g, k, SolveBudget.unlimited())
    for e in range(g.m):
        for c in range(k):
            if search.cnt[e][c] == 0 and not search.conflicts(e, c):
                search.assign(e, c)
                break
        else:  # pragma: no cover - fresh color is always feasible
            raise AssertionError("greedy coloring failed to place an edge")
    coloring = EdgeColoring(tuple(search.colors))
    violation = verify_star(g, coloring)
    if violation is not None:  # pragma: no cover - defense in depth
        raise AssertionError(f"greedy produced a non-star coloring: {violation}")
    return coloring


def star_chromatic_index(g: Graph, budget: SolveBudget) -> IndexOutcome:
    """Smallest k admitting a star k-edge-coloring, from the trivial bound up.

    The lower bound starts at the maximum degree, raised to 4 for cubic
    graphs.  The budget covers the whole sweep; on exhaustion the outcome
    carries the bracket established so far plus a greedy witness.
    """
    if g.m == 0:
        return IndexOutcome("exact", 0, EdgeColoring(()), 0, 0, 0)
    lower = g.max_degree()
    if g.is_regular(3):
        lower = max(lower, 4)
    greedy = greedy_star_coloring(g)
    upper = greedy.palette_size

    deadline = (
        time.monotonic() + budget.time_cap if budget.time_cap is not None else None
    )
    nodes_used = 0
    k = lower
    while True:
        remaining_nodes = (
            None if budget.max_nodes is None else budget.max_nodes - nodes_used
        )
        remaining_time = None if deadline is None else deadline - time.monotonic()
        if (remaining_nodes is not None and remaining_nodes <= 0) or (
            remaining_time is not None and remaining_time <= 0
        ):
            return IndexOutcome(EXHAUSTED, None, greedy, k, upper, nodes_used)
        step = SolveBudget(
            max_nodes=remaining_nodes,
            time_cap=remaining_time,
            allow_unlimited=budget.allow_unlimited,
        )
        outcome = star_decision(g, k, step)
        nodes_used += outcome.nodes_explored
        if outcome.status == FEASIBLE:
            return IndexOutcome("exact", k, outcome.coloring, k, k, nodes_used)
        if outcome.status == EXHAUSTED:
            return IndexOutcome(EXHAUSTED, None, greedy, k, upper, nodes_used)
        if k >= upper:  # pragma: no cover - greedy witness caps the sweep
            raise AssertionError("decision infeasible at a known-feasible k")
        k += 1
