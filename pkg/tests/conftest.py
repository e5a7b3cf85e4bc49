"""Shared test helpers: independent oracles and graph enumerators.

The naive star oracle enumerates all 4-edge subsets and checks the
bi-colored path/cycle condition directly; it never shares code with the
production verifier.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import combinations

import pytest

from starcolor.canon import canonical_key
from starcolor.graphs import Graph, build_graph


def naive_star_violation(g: Graph, colors) -> tuple | None:
    """Subset-enumeration star check: independent of the verifier."""
    for i in range(g.m):
        for j in range(i + 1, g.m):
            if colors[i] == colors[j] and set(g.edges[i]) & set(g.edges[j]):
                return ("improper", (i, j))
    for quad in combinations(range(g.m), 4):
        if len({colors[i] for i in quad}) > 2:
            continue
        deg = Counter()
        for i in quad:
            u, v = g.edges[i]
            deg[u] += 1
            deg[v] += 1
        vals = sorted(deg.values())
        verts = set(deg)
        if len(verts) == 5 and vals == [1, 1, 2, 2, 2]:
            if _is_single_path(g, quad, verts, deg):
                return ("path4", quad)
        if len(verts) == 4 and vals == [2, 2, 2, 2]:
            if _is_single_cycle(g, quad, verts):
                return ("cycle4", quad)
    return None


def _adjacency(g: Graph, quad):
    adj: dict[int, list[int]] = {}
    for i in quad:
        u, v = g.edges[i]
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return adj


def _is_single_path(g: Graph, quad, verts, deg) -> bool:
    adj = _adjacency(g, quad)
    start = min(v for v in verts if deg[v] == 1)
    seen = {start}
    prev, cur = None, start
    while True:
        step = [w for w in adj[cur] if w != prev]
        if not step:
            break
        prev, cur = cur, step[0]
        if cur in seen:
            return False
        seen.add(cur)
    return len(seen) == 5


def _is_single_cycle(g: Graph, quad, verts) -> bool:
    adj = _adjacency(g, quad)
    start = min(verts)
    seen = {start}
    prev, cur = None, start
    for _ in range(4):
        step = [w for w in adj[cur] if w != prev]
        if not step:
            return False
        prev, cur = cur, step[0]
        seen.add(cur)
    return cur == start and len(seen) == 4


def random_graph(rng: random.Random, n: int, p: float, deg_cap: int | None = None) -> Graph:
    pairs = []
    deg = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                if deg_cap is None or (deg[u] < deg_cap and deg[v] < deg_cap):
                    pairs.append((u, v))
                    deg[u] += 1
                    deg[v] += 1
    return build_graph(n, pairs)


def graphs_by_edge_count(max_edges: int) -> dict[int, list[Graph]]:
    """All isomorphism classes with m <= max_edges edges, no isolated vertices."""
    levels: dict[int, list[Graph]] = {0: [build_graph(0, [])]}
    for m in range(1, max_edges + 1):
        seen: dict[tuple, Graph] = {}
        for parent in levels[m - 1]:
            n = parent.n
            candidates = []
            # two fresh endpoints
            candidates.append(build_graph(n + 2, list(parent.edges) + [(n, n + 1)]))
            # one fresh endpoint
            for v in range(n):
                candidates.append(build_graph(n + 1, list(parent.edges) + [(v, n)]))
            # both endpoints existing
            for u in range(n):
                for v in range(u + 1, n):
                    if not parent.has_edge(u, v):
                        candidates.append(
                            build_graph(n, list(parent.edges) + [(u, v)])
                        )
            for child in candidates:
                key = canonical_key(child)
                if key not in seen:
                    seen[key] = child
        levels[m] = [seen[k] for k in sorted(seen)]
    return levels


def graphs_on_at_most(n_max: int) -> list[Graph]:
    """All isomorphism classes of graphs on <= n_max vertices."""
    out: list[Graph] = []
    for n in range(n_max + 1):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        seen: set[tuple] = set()
        for mask in range(1 << len(pairs)):
            chosen = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = build_graph(n, chosen)
            key = canonical_key(g)
            if key not in seen:
                seen.add(key)
                out.append(g)
    return out


@pytest.fixture(scope="session")
def small_graph_classes() -> list[Graph]:
    """Graphs on <= 6 vertices, one per isomorphism class (208 of them)."""
    return graphs_on_at_most(6)
