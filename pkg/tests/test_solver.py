from __future__ import annotations

import random

import pytest

from starcolor.graphs import (
    build_graph,
    complete_bipartite,
    complete_graph,
    cube_graph,
    cycle_graph,
    petersen_graph,
)
from starcolor.solver import (
    EXHAUSTED,
    FEASIBLE,
    INFEASIBLE,
    SolveBudget,
    greedy_star_coloring,
    star_chromatic_index,
    star_decision,
)
from starcolor.verify import verify_star

from conftest import random_graph

UNLIMITED = SolveBudget.unlimited()


class TestBudget:
    def test_requires_a_cap_or_explicit_unlimited(self):
        with pytest.raises(ValueError):
            SolveBudget()
        SolveBudget(max_nodes=10)
        SolveBudget(time_cap=1.0)
        SolveBudget.unlimited()

    def test_node_cap_reports_exhaustion(self):
        outcome = star_decision(complete_graph(6), 9, SolveBudget(max_nodes=5))
        assert outcome.status == EXHAUSTED
        assert outcome.nodes_explored >= 5


class TestStarDecision:
    def test_c5_needs_four(self):
        assert star_decision(cycle_graph(5), 3, UNLIMITED).status == INFEASIBLE
        assert star_decision(cycle_graph(5), 4, UNLIMITED).status == FEASIBLE

    def test_cube_four_colorable(self):
        outcome = star_decision(cube_graph(), 4, UNLIMITED)
        assert outcome.status == FEASIBLE
        assert outcome.coloring.palette_size <= 4

    def test_k33_boundary(self):
        g = complete_bipartite(3, 3)
        assert star_decision(g, 5, UNLIMITED).status == INFEASIBLE
        assert star_decision(g, 6, UNLIMITED).status == FEASIBLE

    def test_feasible_coloring_verifies(self):
        rng = random.Random(13)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 8), 0.5)
            if g.m == 0:
                continue
            k = rng.randint(1, 6)
            outcome = star_decision(g, k, UNLIMITED)
            if outcome.status == FEASIBLE:
                assert verify_star(g, outcome.coloring) is None
                assert outcome.coloring.palette_size <= k

    def test_monotone_in_k(self):
        rng = random.Random(29)
        for _ in range(25):
            g = random_graph(rng, 7, 0.5)
            if g.m == 0:
                continue
            statuses = [
                star_decision(g, k, UNLIMITED).status for k in range(0, 8)
            ]
            seen_feasible = False
            for s in statuses:
                if s == FEASIBLE:
                    seen_feasible = True
                else:
                    assert not seen_feasible, "feasibility must be monotone in k"

    def test_deterministic(self):
        g = petersen_graph()
        a = star_decision(g, 5, UNLIMITED)
        b = star_decision(g, 5, UNLIMITED)
        assert a.coloring.colors == b.coloring.colors
        assert a.nodes_explored == b.nodes_explored

    def test_empty_graph(self):
        g = build_graph(3, [])
        assert star_decision(g, 0, UNLIMITED).status == FEASIBLE


class TestStarChromaticIndex:
    def test_known_small_values(self):
        assert star_chromatic_index(build_graph(2, [(0, 1)]), UNLIMITED).value == 1
        assert star_chromatic_index(cycle_graph(4), UNLIMITED).value == 3
        assert star_chromatic_index(cycle_graph(5), UNLIMITED).value == 4

    def test_petersen_is_five(self):
        outcome = star_chromatic_index(petersen_graph(), UNLIMITED)
        assert outcome.value == 5
        assert verify_star(petersen_graph(), outcome.coloring) is None

    def test_k4_within_theorem_bracket(self):
        outcome = star_chromatic_index(complete_graph(4), UNLIMITED)
        assert 4 <= outcome.value <= 7

    def test_cubic_lower_bound_applied(self):
        # every cubic graph needs at least 4 colors
        for g in (cube_graph(), petersen_graph(), complete_graph(4)):
            outcome = star_chromatic_index(g, UNLIMITED)
            assert outcome.value >= 4

    def test_subgraph_monotonicity(self):
        rng = random.Random(37)
        for _ in range(12):
            g = random_graph(rng, 7, 0.55)
            if g.m < 2:
                continue
            keep = [e for e in range(g.m) if rng.random() < 0.7]
            sub = build_graph(g.n, [g.edges[e] for e in keep])
            vg = star_chromatic_index(g, UNLIMITED).value
            vs = star_chromatic_index(sub, UNLIMITED).value
            assert vs <= vg

    def test_exhaustion_reports_bracket(self):
        outcome = star_chromatic_index(complete_graph(6), SolveBudget(max_nodes=10))
        assert outcome.status == EXHAUSTED
        assert outcome.value is None
        assert outcome.lower >= 5
        assert outcome.upper >= outcome.lower
        assert outcome.coloring is not None  # greedy witness for the upper bound
        assert verify_star(complete_graph(6), outcome.coloring) is None

    def test_edgeless_graph(self):
        outcome = star_chromatic_index(build_graph(4, []), UNLIMITED)
        assert outcome.value == 0


class TestGreedy:
    def test_always_star(self):
        rng = random.Random(41)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 12), 0.4)
            c = greedy_star_coloring(g)
            assert verify_star(g, c) is None
