from __future__ import annotations

import pytest

from starcolor.ap3 import Ap3Set, ap3_set_of_size
from starcolor.constructions import color_kn_recursive, color_kn_sum
from starcolor.counting import (
    check_counting_identities,
    counting_certificate,
    kn_lower_bound,
)
from starcolor.errors import NotCompleteGraphError, NotStarColoringError
from starcolor.graphs import EdgeColoring, complete_graph, cycle_graph
from starcolor.solver import SolveBudget, star_chromatic_index


class TestLowerBound:
    @pytest.mark.parametrize(
        "n,expected", [(1, 0), (2, 1), (3, 3), (4, 4), (10, 15), (100, 195)]
    )
    def test_closed_form(self, n, expected):
        assert kn_lower_bound(n) == expected

    def test_exact_integer_arithmetic(self):
        # ceil semantics: 2*5*4/7 = 40/7 -> 6
        assert kn_lower_bound(5) == 6

    def test_ratio_trend_toward_two(self):
        ratios = [kn_lower_bound(n) / n for n in range(4, 200)]
        assert all(a <= b + 1e-12 for a, b in zip(ratios, ratios[1:]))
        assert ratios[-1] < 2 <= ratios[-1] + 0.1


class TestCertificate:
    def test_k2(self):
        cert = counting_certificate(complete_graph(2), EdgeColoring((0,)))
        assert cert.a == (1,) and cert.b == ((0,),)

    def test_k4_hand_example(self):
        g, c = color_kn_sum(Ap3Set((1, 2, 4, 5), 5))
        cert = counting_certificate(g, c)
        assert cert.a == (1, 1, 2, 1, 1)
        # the doubled color sees one i,j,i path through each other color
        assert sum(cert.b[2]) == 4
        assert cert.b[2] == (1, 1, 0, 1, 1)
        # diagonal vanishes under properness
        assert all(cert.b[i][i] == 0 for i in range(cert.palette))

    def test_rejects_non_complete_host(self):
        g = cycle_graph(4)
        with pytest.raises(NotCompleteGraphError):
            counting_certificate(g, EdgeColoring((0, 1, 2, 3)))

    def test_rejects_non_star_coloring(self):
        g = complete_graph(3)
        with pytest.raises(NotStarColoringError):
            counting_certificate(g, EdgeColoring((0, 0, 1)))


class TestIdentities:
    def test_k4_hand_checks(self):
        g, c = color_kn_sum(Ap3Set((1, 2, 4, 5), 5))
        cert = counting_certificate(g, c)
        report = check_counting_identities(cert)
        assert report.edge_sum_ok            # 6 = C(4,2)
        assert report.flank_ok[2]            # 4 = 4*C(2,2)
        assert report.middle_ok[0]           # 1 <= 1*(4-2)
        assert report.passed

    def test_all_singleton_coloring(self):
        for n in (3, 5, 7):
            g = complete_graph(n)
            cert = counting_certificate(g, EdgeColoring(tuple(range(g.m))))
            report = check_counting_identities(cert)
            assert report.passed
            assert all(sum(cert.b[i]) == 0 for i in range(cert.palette))

    def test_solver_colorings_satisfy_identities(self):
        for n in range(2, 6):
            outcome = star_chromatic_index(complete_graph(n), SolveBudget.unlimited())
            cert = counting_certificate(complete_graph(n), outcome.coloring)
            assert check_counting_identities(cert).passed

    def test_construction_colorings_satisfy_identities(self):
        for n in range(2, 9):
            g, c = color_kn_sum(ap3_set_of_size(n, "behrend"))
            assert check_counting_identities(counting_certificate(g, c)).passed
            g, c, _ = color_kn_recursive(n)
            assert check_counting_identities(counting_certificate(g, c)).passed

    def test_bound_consistent_with_solver(self):
        for n in range(1, 6):
            outcome = star_chromatic_index(complete_graph(n), SolveBudget.unlimited())
            assert kn_lower_bound(n) <= outcome.value
