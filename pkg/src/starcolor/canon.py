"""Canonical labeling for small graphs via individualization-refinement.

Intended for graphs up to ~16 vertices (census generation, isomorphism
tests, fixture transport).  The canonical form is the lexicographically
largest upper-triangle adjacency bitstring over all labelings reachable
through the refinement tree; equality of forms is equality of isomorphism
classes.
"""

from __future__ import annotations

from .graphs import Graph, build_graph


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbor counts toward cells."""
    work = [c[:] for c in cells]
    changed = True
    while changed:
        changed = False
        for target in list(work):
            mask = 0
            for v in target:
                mask |= 1 << v
            new_work: list[list[int]] = []
            for cell in work:
                if len(cell) == 1:
                    new_work.append(cell)
                    continue
                buckets: dict[int, list[int]] = {}
                for v in cell:
                    k = bin(adj[v] & mask).count("1")
                    buckets.setdefault(k, []).append(v)
                if len(buckets) == 1:
                    new_work.append(cell)
                else:
                    changed = True
                    for k in sorted(buckets, reverse=True):
                        new_work.append(buckets[k])
            work = new_work
            if changed:
                break
    return work


def _code_for(adj: list[int], order: list[int]) -> int:
    """Upper-triangle adjacency bits of the relabeled graph, row by row."""
    n = len(order)
    code = 0
    for i in range(n):
        ai = adj[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | ((ai >> order[j]) & 1)
    return code


def canonical_order(g: Graph) -> list[int]:
    """A vertex order whose adjacency code is maximal; deterministic."""
    n = g.n
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(bin(adj[v]).count("1"), []).append(v)
    initial = [by_degree[d] for d in sorted(by_degree, reverse=True)]

    best: dict[str, object] = {"code": -1, "order": list(range(n))}

    def descend(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        split = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if split is None:
            order = [c[0] for c in cells]
            code = _code_for(adj, order)
            if code > best["code"]:
                best["code"] = code
                best["order"] = order
            return
        for v in cells[split]:
            rest = [u for u in cells[split] if u != v]
            descend(cells[:split] + [[v], rest] + cells[split + 1 :])

    if n == 0:
        return []
    descend(initial)
    return best["order"]  # type: ignore[return-value]


def canonical_key(g: Graph) -> tuple[int, int]:
    """Hashable complete isomorphism invariant: (n, max adjacency code)."""
    order = canonical_order(g)
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return (g.n, _code_for(adj, order))


def relabeled(g: Graph, order: list[int]) -> Graph:
    """Graph with vertex order[i] renamed to i."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return build_graph(g.n, [(pos[u], pos[v]) for u, v in g.edges])


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Vertex map g -> h as a list, or None if not isomorphic."""
    if g.n != h.n or g.m != h.m:
        return None
    og = canonical_order(g)
    oh = canonical_order(h)
    if canonical_key(g) != canonical_key(h):
        return None
    pos_h = [0] * h.n
    for i, v in enumerate(oh):
        pos_h[v] = i
    mapping = [0] * g.n
    for i, v in enumerate(og):
        mapping[v] = oh[i]
    # Canonical codes equal means order-composed mapping is an isomorphism.
    for u, v in g.edges:
        if not h.has_edge(mapping[u], mapping[v]):
            return None
    return mapping
