from __future__ import annotations

import random
from itertools import permutations, product

import pytest

from starcolor.errors import PartialColoringError, PreconditionError
from starcolor.graphs import (
    EdgeColoring,
    build_graph,
    complete_graph,
    cycle_graph,
    path_graph,
)
from starcolor.solver import greedy_star_coloring
from starcolor.verify import (
    BICOLORED_CYCLE4,
    BICOLORED_PATH4,
    IMPROPER_PAIR,
    can_extend,
    glue_check,
    is_proper,
    verify_star,
)

from conftest import naive_star_violation, random_graph


def cycle_coloring(k: int, traversal_colors) -> EdgeColoring:
    """Colors given in traversal order 0-1, 1-2, ..., (k-1)-0."""
    g = cycle_graph(k)
    colors: list[int | None] = [None] * g.m
    for i, c in enumerate(traversal_colors):
        colors[g.edge_index(i, (i + 1) % k)] = c
    return EdgeColoring(tuple(colors))


class TestIsProper:
    def test_triangle_rainbow(self):
        g = complete_graph(3)
        assert is_proper(g, EdgeColoring((0, 1, 2))) is None

    def test_shared_color_at_vertex(self):
        g = path_graph(3)
        v = is_proper(g, EdgeColoring((0, 0)))
        assert v is not None and v.kind == IMPROPER_PAIR
        assert v.edges == (0, 1) and v.colors == (0,)

    def test_partial_rejected(self):
        g = path_graph(3)
        with pytest.raises(PartialColoringError):
            is_proper(g, EdgeColoring((0, None)))


class TestVerifyStar:
    def test_c4_alternating_is_cycle_violation(self):
        v = verify_star(cycle_graph(4), cycle_coloring(4, [0, 1, 0, 1]))
        assert v is not None and v.kind == BICOLORED_CYCLE4
        assert len(v.edges) == 4 and len(set(v.vertices)) == 4

    def test_c7_published_pattern(self):
        # 1,2,3,2,1,2,3 shifted to 0-based
        assert verify_star(cycle_graph(7), cycle_coloring(7, [0, 1, 2, 1, 0, 1, 2])) is None

    def test_c5_has_no_3_coloring(self):
        g = cycle_graph(5)
        for colors in product(range(3), repeat=5):
            assert verify_star(g, cycle_coloring(5, colors)) is not None

    def test_path4_witness_shape(self):
        g = path_graph(5)
        colors = tuple(
            [0, 1, 0, 1][[g.edge_index(i, i + 1) for i in range(4)].index(e)]
            for e in range(4)
        )
        v = verify_star(g, EdgeColoring(colors))
        assert v is not None and v.kind == BICOLORED_PATH4
        assert len(v.edges) == 4 and len(set(v.vertices)) == 5
        # witness edges carry exactly the reported colors
        seen = {colors[e] for e in v.edges}
        assert seen == set(v.colors)

    def test_star_implies_proper(self):
        rng = random.Random(17)
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 9), 0.5)
            if g.m == 0:
                continue
            colors = tuple(rng.randrange(4) for _ in range(g.m))
            c = EdgeColoring(colors)
            if verify_star(g, c) is None:
                assert is_proper(g, c) is None

    def test_palette_permutation_invariance(self):
        rng = random.Random(23)
        for _ in range(40):
            g = random_graph(rng, 7, 0.5)
            if g.m == 0:
                continue
            colors = tuple(rng.randrange(3) for _ in range(g.m))
            base = verify_star(g, EdgeColoring(colors)) is None
            for perm in permutations(range(3)):
                mapped = tuple(perm[c] for c in colors)
                assert (verify_star(g, EdgeColoring(mapped)) is None) == base

    def test_agreement_with_naive_oracle_sampled(self):
        rng = random.Random(31)
        for _ in range(300):
            g = random_graph(rng, rng.randint(2, 8), 0.5)
            if g.m == 0:
                continue
            colors = tuple(rng.randrange(rng.randint(1, 4)) for _ in range(g.m))
            mine = verify_star(g, EdgeColoring(colors)) is None
            naive = naive_star_violation(g, colors) is None
            assert mine == naive


class TestCanExtend:
    def test_incident_color_blocked(self):
        g = path_graph(3)
        partial = EdgeColoring((0, None))
        assert can_extend(g, partial, 1, 0) is False
        assert can_extend(g, partial, 1, 1) is True

    def test_fresh_color_after_six_used(self):
        # star with 6 spokes colored 0..5; adding a 7th spoke needs color 6
        g = build_graph(8, [(0, i) for i in range(1, 8)])
        partial = EdgeColoring((0, 1, 2, 3, 4, 5, None))
        e = g.edge_index(0, 7)
        for c in range(6):
            assert can_extend(g, partial, e, c) is False
        assert can_extend(g, partial, e, 6) is True

    def test_already_colored_rejected(self):
        g = path_graph(3)
        with pytest.raises(PreconditionError, match="already"):
            can_extend(g, EdgeColoring((0, 1)), 1, 2)

    def test_check_partial_flag(self):
        g = cycle_graph(5)
        partial = EdgeColoring((None,) * 5)
        with pytest.raises(PreconditionError, match="fully colored"):
            can_extend(g, partial, 0, 0, check_partial=True)

    def test_extension_preserves_star_on_small_graphs(self, small_graph_classes):
        checked = 0
        for g in small_graph_classes:
            if g.m < 2:
                continue
            full = greedy_star_coloring(g)
            for e in range(g.m):
                blanked = list(full.colors)
                blanked[e] = None
                partial = EdgeColoring(tuple(blanked))
                for c in range(full.palette_size + 2):
                    if can_extend(g, partial, e, c, check_partial=True):
                        extended = list(blanked)
                        extended[e] = c
                        assert verify_star(g, EdgeColoring(tuple(extended))) is None
                        checked += 1
        assert checked > 500


class TestGlueCheck:
    def test_single_vertex_side_of_an_edge(self):
        g = build_graph(2, [(0, 1)])
        report = glue_check(g, {0}, EdgeColoring((0,)))
        assert report.passed

    def test_reused_cut_color_fails_condition_5(self):
        # triangle on A = {0,1,2} plus pendants; one pendant reuses color 0
        g = build_graph(
            6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]
        )
        colors = {
            g.edge_index(0, 1): 0,
            g.edge_index(0, 2): 1,
            g.edge_index(1, 2): 2,
            g.edge_index(0, 3): 0,  # clash with G[A]
            g.edge_index(1, 4): 4,
            g.edge_index(2, 5): 5,
        }
        report = glue_check(g, {0, 1, 2}, EdgeColoring(tuple(colors[e] for e in range(g.m))))
        assert 5 in report.failed

    def test_cut_edges_sharing_a_vertex_fail_condition_3(self):
        g = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
        c = EdgeColoring((1, 2, 3, 0))
        report = glue_check(g, {0}, c)
        assert 3 in report.failed

    def test_pass_implies_star_seeded(self):
        rng = random.Random(47)
        passes = 0
        for _ in range(300):
            g = random_graph(rng, 10, 0.3)
            if g.m == 0:
                continue
            a_side = {v for v in range(10) if rng.random() < 0.4}
            colors = _glued_coloring(g, a_side, rng)
            report = glue_check(g, a_side, colors)
            if report.passed:
                passes += 1
                assert verify_star(g, colors) is None
        assert passes > 10  # the constructed colorings pass regularly


def _glued_coloring(g, a_side, rng):
    """Color G[A] and G[B] independently, then cut edges with fresh colors."""
    inside_a = [i for i, (u, v) in enumerate(g.edges) if u in a_side and v in a_side]
    inside_b = [i for i, (u, v) in enumerate(g.edges) if u not in a_side and v not in a_side]
    cut = [i for i in range(g.m) if i not in inside_a and i not in inside_b]
    colors: list[int | None] = [None] * g.m
    sub_a = greedy_star_coloring(build_graph(g.n, [g.edges[i] for i in inside_a]))
    for pos, i in enumerate(sorted(inside_a)):
        colors[i] = _lookup(g, inside_a, sub_a, i)
    offset = (max((c for c in colors if c is not None), default=-1)) + 1
    sub_b = greedy_star_coloring(build_graph(g.n, [g.edges[i] for i in inside_b]))
    for i in sorted(inside_b):
        colors[i] = offset + _lookup(g, inside_b, sub_b, i)
    offset = (max((c for c in colors if c is not None), default=-1)) + 1
    for pos, i in enumerate(sorted(cut)):
        colors[i] = offset + pos
    return EdgeColoring(tuple(colors))


def _lookup(g, subset, sub_coloring, edge):
    sub_edges = sorted(g.edges[i] for i in subset)
    return sub_coloring.colors[sub_edges.index(g.edges[edge])]
