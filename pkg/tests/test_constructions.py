from __future__ import annotations

import random

import pytest

from starcolor.ap3 import Ap3Set, ap3_set_of_size
from starcolor.constructions import (
    color_kn_recursive,
    color_kn_sum,
    color_knn_from_kn,
    compose_star_coloring,
    distance2_edge_coloring,
    frugal_coloring,
    neighborhood_multiplicity,
    recursion_palette_bound,
)
from starcolor.errors import NotStarColoringError
from starcolor.graphs import (
    EdgeColoring,
    build_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    edge_distance,
    path_graph,
    petersen_graph,
)
from starcolor.verify import is_proper, verify_star

from conftest import random_graph


class TestSumColoring:
    def test_two_elements(self):
        g, c = color_kn_sum(Ap3Set((1, 2), 2))
        assert g.m == 1 and c.palette_size == 1

    def test_hand_example_raw_values(self):
        g, c = color_kn_sum(Ap3Set((1, 2, 4, 5), 5), densify=False)
        assert c.colors == (3, 5, 6, 6, 7, 9)
        assert c.palette_size == 5
        assert verify_star(g, c) is None

    def test_palette_within_twice_span(self):
        for n in (5, 12, 30, 50):
            a = ap3_set_of_size(n, "behrend")
            g, raw = color_kn_sum(a, densify=False)
            assert verify_star(g, raw) is None
            assert all(2 <= v <= 2 * a.span for v in raw.colors)

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            color_kn_sum(Ap3Set((), 1))


class TestBipartiteDoubling:
    def test_single_vertex(self):
        g, c = color_knn_from_kn(complete_graph(1), EdgeColoring(()))
        assert g.m == 1 and c.palette_size == 1

    def test_k44_from_hand_example(self):
        kn, kc = color_kn_sum(Ap3Set((1, 2, 4, 5), 5))
        g, c = color_knn_from_kn(kn, kc)
        assert c.palette_size == kc.palette_size + 4 <= 9
        assert verify_star(g, c) is None

    def test_sweep_up_to_30(self):
        for n in (2, 7, 18, 30):
            kn, kc = color_kn_sum(ap3_set_of_size(n, "behrend"))
            g, c = color_knn_from_kn(kn, kc)
            assert verify_star(g, c) is None
            assert c.palette_size == kc.palette_size + n

    def test_non_star_input_rejected(self):
        g = complete_graph(3)
        with pytest.raises(NotStarColoringError):
            color_knn_from_kn(g, EdgeColoring((0, 0, 1)))
        with pytest.raises(NotStarColoringError):
            color_knn_from_kn(cycle_graph(4), EdgeColoring((0, 1, 2, 3)))


class TestDyadicRecursion:
    def test_two_vertices(self):
        g, c, _ = color_kn_recursive(2)
        assert c.palette_size == 1

    def test_four_vertices_is_five_colors(self):
        g, c, blocks = color_kn_recursive(4)
        assert c.palette_size <= 5
        assert sum(p for _, p in blocks) == 5
        assert verify_star(g, c) is None

    def test_sixteen_matches_summed_bound(self):
        g, c, blocks = color_kn_recursive(16)
        assert verify_star(g, c) is None
        assert c.palette_size <= recursion_palette_bound(16)

    def test_odd_orders(self):
        for n in (3, 7, 11):
            g, c, _ = color_kn_recursive(n)
            assert verify_star(g, c) is None


class TestFrugalColoring:
    def test_c4(self):
        fr = frugal_coloring(cycle_graph(4))
        assert len(set(fr.vertex_colors)) <= 3
        assert fr.beta == 2

    def test_clique_is_rainbow(self):
        g = complete_graph(6)
        fr = frugal_coloring(g)
        assert len(set(fr.vertex_colors)) == 6
        assert fr.beta == 1

    def test_star_center(self):
        # the harm-minimizing greedy spreads the leaves over distinct
        # colors, so the center sees each color once
        fr = frugal_coloring(complete_bipartite(1, 6))
        assert fr.beta == 1

    def test_proper_palette_and_recomputed_beta(self):
        rng = random.Random(53)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 20), 0.3)
            fr = frugal_coloring(g)
            for u, v in g.edges:
                assert fr.vertex_colors[u] != fr.vertex_colors[v]
            assert max(fr.vertex_colors, default=0) <= g.max_degree()
            assert fr.beta == neighborhood_multiplicity(g, fr.vertex_colors)


class TestStrongColoring:
    def test_c4_needs_four(self):
        assert distance2_edge_coloring(cycle_graph(4)).palette_size == 4

    def test_single_edge(self):
        assert distance2_edge_coloring(build_graph(2, [(0, 1)])).palette_size == 1

    def test_p4_needs_three(self):
        assert distance2_edge_coloring(path_graph(4)).palette_size == 3

    def test_pairs_within_two_differ(self):
        rng = random.Random(59)
        for _ in range(25):
            g = random_graph(rng, 10, 0.35)
            c = distance2_edge_coloring(g)
            for e in range(g.m):
                for f in range(e + 1, g.m):
                    if edge_distance(g, e, f, cap=2) <= 2:
                        assert c.colors[e] != c.colors[f]
            delta = g.max_degree()
            assert c.palette_size <= 2 * delta * (delta - 1) + 1


class TestProductComposition:
    def test_single_edge(self):
        pc = compose_star_coloring(build_graph(2, [(0, 1)]))
        assert pc.flattened.palette_size == 1

    def test_petersen(self):
        g = petersen_graph()
        pc = compose_star_coloring(g)
        assert verify_star(g, pc.flattened) is None
        beta = pc.frugal.beta
        assert pc.flattened.palette_size <= pc.outer_palette_size * (
            2 * beta * (beta - 1) + 1
        )

    def test_flattening_injective_on_pairs(self):
        g = petersen_graph()
        pc = compose_star_coloring(g)
        flat_of_pair = {}
        for pair, flat in zip(pc.pairs, pc.flattened.colors):
            assert flat_of_pair.setdefault(pair, flat) == flat
        assert len(set(flat_of_pair.values())) == len(flat_of_pair)

    def test_properness_both_routes(self):
        # exact route (small degree) and progression-set route (forced)
        g = cycle_graph(7)
        assert is_proper(g, compose_star_coloring(g).flattened) is None
        assert (
            is_proper(g, compose_star_coloring(g, exact_threshold=2).flattened)
            is None
        )

    def test_random_sweep(self):
        rng = random.Random(61)
        for _ in range(30):
            g = random_graph(rng, rng.randint(5, 40), 0.15, deg_cap=8)
            pc = compose_star_coloring(g)
            assert verify_star(g, pc.flattened) is None
