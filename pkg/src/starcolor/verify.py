"""Star edge-coloring verifier and the extension/gluing tests.

A proper edge coloring is *star* when no 4-edge path and no 4-cycle is
bi-colored.  Properness makes a bi-colored 4-edge path exactly an
a,b,a,b color sequence, so the scan enumerates each edge as the second
edge of a potential path: a same-colored pair at its two endpoints plus
a one-edge extension, or a closing edge for the 4-cycle case.

Violations are reported deterministically in canonical edge order so CI
failures are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .graphs import EdgeColoring, Graph

IMPROPER_PAIR = "improper-pair"
BICOLORED_PATH4 = "bicolored-path4"
BICOLORED_CYCLE4 = "bicolored-cycle4"


@dataclass(frozen=True)
class Violation:
    """Witness for a failed check.

    ``edges`` hold edge indices: the clashing pair for improper-pair, the
    path edges in path order for bicolored-path4, and the cycle edges in
    cyclic order for bicolored-cycle4.  ``vertices`` give the 5-vertex path
    sequence or the 4-cycle sequence (empty for improper pairs).
    """

    kind: str
    edges: tuple[int, ...]
    vertices: tuple[int, ...]
    colors: tuple[int, ...]


def find_violation(
    g: Graph, c: EdgeColoring, *, require_total: bool = True
) -> Violation | None:
    """First violation in canonical order, or None.

    With ``require_total=False`` uncolored edges are treated as absent,
    which checks star-ness of the colored partial coloring.
    """
    if require_total:
        c.require_total("star verification")
    colors = c.colors

    # Properness first: scan edges ascending, compare against incident
    # lower-indexed edges.
    for e, (u, v) in enumerate(g.edges):
        a = colors[e]
        if a is None:
            continue
        for w in (u, v):
            for f in g.incident[w]:
                if f < e and colors[f] == a:
                    return Violation(IMPROPER_PAIR, (f, e), (), (a,))

    # Star scan: e as the second edge of the pattern.
    for e, (u, v) in enumerate(g.edges):
        a = colors[e]
        if a is None:
            continue
        for f1 in g.incident[u]:
            b = colors[f1]
            if f1 == e or b is None:
                continue
            x = g.other_end(f1, u)
            for f3 in g.incident[v]:
                if f3 == e or colors[f3] != b:
                    continue
                w = g.other_end(f3, v)
                if w == x:
                    continue  # would be improper, caught above
                # 4-cycle x-u-v-w-x with colors b,a,b,a.
                if g.has_edge(x, w):
                    f4 = g.edge_index(x, w)
                    if colors[f4] == a:
                        return Violation(
                            BICOLORED_CYCLE4,
                            (f1, e, f3, f4),
                            (x, u, v, w),
                            (b, a),
                        )
                # 4-edge path x-u-v-w-y with colors b,a,b,a.
                for f4 in g.incident[w]:
                    if f4 == f3 or colors[f4] != a:
                        continue
                    y = g.other_end(f4, w)
                    if y not in (u, v, x):
                        return Violation(
                            BICOLORED_PATH4,
                            (f1, e, f3, f4),
                            (x, u, v, w, y),
                            (b, a),
                        )
                # 4-edge path y-x-u-v-w with colors a,b,a,b.
                for f4 in g.incident[x]:
                    if f4 == f1 or colors[f4] != a:
                        continue
                    y = g.other_end(f4, x)
                    if y not in (u, v, w):
                        return Violation(
                            BICOLORED_PATH4,
                            (f4, f1, e, f3),
                            (y, x, u, v, w),
                            (a, b),
                        )
    return None


def is_proper(g: Graph, c: EdgeColoring) -> Violation | None:
    """None iff no two incident edges share a color; witness otherwise."""
    c.require_total("properness check")
    colors = c.colors
    for e, (u, v) in enumerate(g.edges):
        a = colors[e]
        for w in (u, v):
            for f in g.incident[w]:
                if f < e and colors[f] == a:
                    return Violation(IMPROPER_PAIR, (f, e), (), (a,))
    return None


def verify_star(g: Graph, c: EdgeColoring) -> Violation | None:
    """None iff c is a star edge-coloring of g; first witness otherwise."""
    return find_violation(g, c, require_total=True)


def edges_within_two(g: Graph, e: int) -> set[int]:
    """Edge indices at line-graph distance 1 or 2 from e."""
    u, v = g.edges[e]
    near: set[int] = set()
    for w in (u, v):
        for f in g.incident[w]:
            if f != e:
                near.add(f)
    for f in list(near):
        for w in g.edges[f]:
            for f2 in g.incident[w]:
                if f2 != e:
                    near.add(f2)
    return near


def can_extend(
    g: Graph,
    partial: EdgeColoring,
    e: int,
    color: int,
    *,
    check_partial: bool = False,
) -> bool:
    """Lemma-style freshness test for assigning ``color`` to edge ``e``.

    True iff no colored edge at line-graph distance <= 2 from e carries
    the color; starting from a star coloring of g - e, a True answer
    means the assignment keeps the coloring star.

    With ``check_partial`` the precondition (every other edge colored,
    no violation among them) is verified instead of assumed.
    """
    if partial.colors[e] is not None:
        raise PreconditionError(f"edge {e} is already colored")
    if check_partial:
        for f in range(g.m):
            if f != e and partial.colors[f] is None:
                raise PreconditionError(
                    f"extension expects g - e fully colored; edge {f} is not"
                )
        bad = find_violation(g, partial, require_total=False)
        if bad is not None:
            raise PreconditionError(f"partial coloring is not star: {bad}")
    for f in edges_within_two(g, e):
        if partial.colors[f] == color:
            return False
    return True


@dataclass(frozen=True)
class GlueReport:
    """Outcome of the five-condition cut test; ``failed`` lists 1..5."""

    failed: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.failed


def _masked(c: EdgeColoring, keep: set[int]) -> EdgeColoring:
    return EdgeColoring(
        tuple(col if i in keep else None for i, col in enumerate(c.colors))
    )


def glue_check(g: Graph, a_side, c: EdgeColoring) -> GlueReport:
    """Evaluate the five gluing conditions for the cut (A, V - A).

    Condition 4 measures edge distance inside the subgraph formed by the
    B-side edges together with the cut edges, not in g itself.  A full
    pass implies verify_star(g, c) passes.
    """
    c.require_total("glue check")
    a_set = set(a_side)
    colors = c.colors

    cut: list[int] = []
    inside_a: set[int] = set()
    inside_b: set[int] = set()
    for i, (u, v) in enumerate(g.edges):
        a_hits = (u in a_set) + (v in a_set)
        if a_hits == 2:
            inside_a.add(i)
        elif a_hits == 0:
            inside_b.add(i)
        else:
            cut.append(i)

    failed: list[int] = []

    if find_violation(g, _masked(c, inside_a), require_total=False) is not None:
        failed.append(1)
    if find_violation(g, _masked(c, inside_b), require_total=False) is not None:
        failed.append(2)

    def a_end(i: int) -> int:
        u, v = g.edges[i]
        return u if u in a_set else v

    ok3 = True
    for idx, e1 in enumerate(cut):
        for e2 in cut[idx + 1 :]:
            a1, a2 = a_end(e1), a_end(e2)
            if a1 == a2 or g.has_edge(a1, a2):
                ok3 = False
    if not ok3:
        failed.append(3)

    # Distance-2 neighborhoods inside G[B] + X.
    sub = set(cut) | inside_b

    def sub_adjacent(i: int) -> set[int]:
        u, v = g.edges[i]
        out = set()
        for w in (u, v):
            for f in g.incident[w]:
                if f != i and f in sub:
                    out.add(f)
        return out

    ok4 = True
    for e in cut:
        near = sub_adjacent(e)
        for f in list(near):
            near |= sub_adjacent(f)
        near.discard(e)
        if any(colors[f] == colors[e] for f in near):
            ok4 = False
    if not ok4:
        failed.append(4)

    cut_colors = {colors[e] for e in cut}
    if any(colors[f] in cut_colors for f in inside_a):
        failed.append(5)

    return GlueReport(tuple(failed))
