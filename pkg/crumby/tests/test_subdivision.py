# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import itertools

import mock
import pytest
from hypothesis import assume, given

from crumby.exc import (
    CrumbyBudgetException,
    CrumbyConstructionException,
    CrumbyGraphException,
)
from crumby.models.coloring import BLUE, RED
from crumby.models.patterns import PatternPurpose
from crumby.models.services.generator import GeneratorService
from crumby.models.services.graph import GraphService
from crumby.models.services.subdivision import SubdivisionService
from crumby.models.services.verifier import VerifierService
from crumby.tests import BaseTestCase, graph
from crumby.tests.strategies import (
    PROPERTY_SETTINGS,
    subcubic_trees,
    subdivided_cubic,
    subdivided_subcubic,
)

SINGLETON = PatternPurpose.ENDPOINTS_SINGLETON_RED
IN_K2 = PatternPurpose.ENDPOINTS_IN_RED_K2
MIXED = PatternPurpose.MIXED_SINGLETON_AND_K2

UNATTAINABLE = [
    (3, IN_K2),
    (3, MIXED),
    (4, IN_K2),
    (5, SINGLETON),
    (6, MIXED),
    (7, IN_K2),
]


class TestPathPatterns(object):
    def test_table_cell(self):
        pattern = SubdivisionService.path_pattern(5, IN_K2)
        assert pattern.colors == "rrbrr"
        assert pattern.attainable

    def test_unattainable_cell_keeps_colors(self):
        pattern = SubdivisionService.path_pattern(5, SINGLETON)
        assert pattern.colors == "rrbbr"
        assert not pattern.attainable
        assert str(pattern) == "RRBBR"

    @pytest.mark.parametrize("k, purpose", UNATTAINABLE)
    def test_unattainable_cells_are_exhaustive(self, k, purpose):
        for colors in itertools.product("rb", repeat=k):
            assert not VerifierService.validate_pattern("".join(colors), purpose)
        assert SubdivisionService.search_path_pattern(k, purpose) is None

    @pytest.mark.parametrize("k", range(3, 21))
    @pytest.mark.parametrize("purpose", list(PatternPurpose))
    def test_patterns_validate(self, k, purpose):
        pattern = SubdivisionService.path_pattern(k, purpose)
        assert len(pattern.colors) == k
        assert pattern.attainable == ((k, purpose) not in UNATTAINABLE)
        if pattern.attainable:
            assert VerifierService.validate_pattern(pattern.colors, purpose)

    def test_search_finds_first_pattern(self):
        assert SubdivisionService.search_path_pattern(5, IN_K2) == "rrbrr"
        assert SubdivisionService.search_path_pattern(3, SINGLETON) == "rbr"

    def test_short_paths_rejected(self):
        with pytest.raises(CrumbyGraphException):
            SubdivisionService.path_pattern(2, SINGLETON)

    @pytest.mark.parametrize(
        "count, expected",
        [
            (2, "rr"),
            (3, "rrr"),
            (4, "rrrb"),
            (5, "rrbrr"),
            (6, "rrrbrr"),
            (7, "rrbbrrr"),
            (8, "rrbrrbrr"),
            (9, "rrbrrrbrr"),
        ],
    )
    def test_deep_patterns(self, count, expected):
        assert SubdivisionService.deep_pattern(count) == expected

    def test_deep_pattern_needs_two(self):
        with pytest.raises(CrumbyGraphException):
            SubdivisionService.deep_pattern(1)


class TestOneSubdivision(BaseTestCase):
    @pytest.mark.parametrize(
        "base",
        [
            GeneratorService.gen_k4(),
            GeneratorService.gen_prism(),
            GeneratorService.gen_petersen(),
            GeneratorService.gen_no_perfect_matching_cubic(),
            GeneratorService.gen_random_cubic(20, seed=11),
        ],
    )
    def test_cubic_bases(self, base):
        sg = GraphService.subdivide(base, 1)
        self.assert_crumby(sg.expanded, SubdivisionService.solve_one_subdivision(sg))

    def test_detected_structure(self):
        g = GraphService.subdivide(GeneratorService.gen_petersen(), 1).expanded
        sg = GraphService.detect_subdivision_structure(g)
        self.assert_crumby(g, SubdivisionService.solve_one_subdivision(sg))

    def test_rejects_deeper_counts(self):
        sg = GraphService.subdivide(GeneratorService.gen_k4(), 2)
        with pytest.raises(CrumbyGraphException):
            SubdivisionService.solve_one_subdivision(sg)

    @PROPERTY_SETTINGS
    @given(subdivided_cubic(min_count=1, max_count=1))
    def test_random_cubic_bases(self, sg):
        self.assert_crumby(sg.expanded, SubdivisionService.solve_one_subdivision(sg))


class TestDeepSubdivision(BaseTestCase):
    @pytest.mark.parametrize("count", range(2, 10))
    def test_uniform_counts(self, count):
        sg = GraphService.subdivide(GeneratorService.gen_k4(), count)
        self.assert_crumby(sg.expanded, SubdivisionService.solve_deep_subdivision(sg))

    def test_mixed_counts_on_prism(self):
        sg = GraphService.subdivide(
            GeneratorService.gen_prism(), [2, 3, 4, 5, 6, 7, 8, 4, 4]
        )
        self.assert_crumby(sg.expanded, SubdivisionService.solve_deep_subdivision(sg))

    @PROPERTY_SETTINGS
    @given(subdivided_cubic(min_count=2, max_count=7))
    def test_random(self, sg):
        self.assert_crumby(sg.expanded, SubdivisionService.solve_deep_subdivision(sg))


class TestGenuineSubdivision(BaseTestCase):
    @pytest.mark.parametrize("count", range(1, 7))
    def test_single_edge_base(self, count):
        sg = GraphService.subdivide(GeneratorService.gen_path(2), count)
        self.assert_crumby(
            sg.expanded, SubdivisionService.solve_genuine_subdivision(sg)
        )

    def test_claw_with_bare_leaf_edges(self):
        sg = GraphService.subdivide(GeneratorService.gen_star(3), [0, 2, 0])
        self.assert_crumby(
            sg.expanded, SubdivisionService.solve_genuine_subdivision(sg)
        )

    def test_tree_base(self):
        base = GeneratorService.gen_random_subcubic_tree(15, seed=5)
        sg = GraphService.subdivide(base, 2)
        self.assert_crumby(
            sg.expanded, SubdivisionService.solve_genuine_subdivision(sg)
        )

    def test_unsubdivided_inner_edge_rejected(self):
        sg = GraphService.subdivide(GeneratorService.gen_prism(), [0] + [1] * 8)
        with pytest.raises(CrumbyGraphException):
            SubdivisionService.solve_genuine_subdivision(sg)

    def test_cubic_without_perfect_matching(self):
        sg = GraphService.subdivide(
            GeneratorService.gen_no_perfect_matching_cubic(),
            [1, 2, 3, 5] * 6,
        )
        self.assert_crumby(
            sg.expanded, SubdivisionService.solve_genuine_subdivision(sg)
        )

    @PROPERTY_SETTINGS
    @given(subdivided_cubic(min_count=1, max_count=6))
    def test_random(self, sg):
        assume(GraphService.is_connected(sg.expanded))
        self.assert_crumby(
            sg.expanded, SubdivisionService.solve_genuine_subdivision(sg)
        )

    def test_tree_with_mixed_counts(self):
        base = graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6)])
        sg = GraphService.subdivide(base, [1, 3, 2, 5, 3, 4])
        self.assert_crumby(
            sg.expanded, SubdivisionService.solve_genuine_subdivision(sg)
        )

    def test_claw_with_two_internal_vertices(self):
        sg = GraphService.subdivide(GeneratorService.gen_star(3), 2)
        self.assert_crumby(
            sg.expanded, SubdivisionService.solve_genuine_subdivision(sg)
        )

    @pytest.mark.parametrize("counts", [[1, 1, 1], [2, 2, 2], [5, 5, 5], [1, 2, 5]])
    def test_triangle_base(self, counts):
        sg = GraphService.subdivide(GeneratorService.gen_cycle(3), counts)
        self.assert_crumby(
            sg.expanded, SubdivisionService.solve_genuine_subdivision(sg)
        )

    def test_no_end_states_raises(self):
        sg = GraphService.subdivide(GeneratorService.gen_prism(), 1)
        with mock.patch(
            "crumby.models.services.subdivision._EndStateSearch.run", return_value=None
        ):
            with pytest.raises(CrumbyConstructionException) as excinfo:
                SubdivisionService.solve_genuine_subdivision(sg)
        assert excinfo.value.instance == GraphService.write_graph6(
            sg.expanded
        ).decode("ascii")

    def test_search_budget(self, settings_factory):
        settings_factory(budget=1)
        sg = GraphService.subdivide(GeneratorService.gen_petersen(), 2)
        with pytest.raises(CrumbyBudgetException):
            SubdivisionService.solve_genuine_subdivision(sg)

    @PROPERTY_SETTINGS
    @given(subdivided_subcubic(bases=subcubic_trees(max_size=12)))
    def test_random_trees(self, sg):
        self.assert_crumby(
            sg.expanded, SubdivisionService.solve_genuine_subdivision(sg)
        )

    @PROPERTY_SETTINGS
    @given(subdivided_subcubic())
    def test_random_subcubic(self, sg):
        self.assert_crumby(
            sg.expanded, SubdivisionService.solve_genuine_subdivision(sg)
        )


class TestEndStates(object):
    @pytest.mark.parametrize(
        "count, start, end, expected",
        [
            (1, (RED, 3), (RED, 3), "rrr"),
            (0, (RED, 2), (RED, 2), "rr"),
            (0, (BLUE, 2), (BLUE, 2), "bb"),
            (0, (RED, 1), (BLUE, 1), "rb"),
            (1, (RED, 1), (RED, 1), "rbr"),
            (3, (RED, 2), (RED, 2), "rrbrr"),
            (2, (RED, 2), (RED, 1), "rrbr"),
            (2, (RED, 1), (RED, 2), "rbrr"),
            (2, (RED, 3), (BLUE, 1), "rrrb"),
            (4, (BLUE, 2), (BLUE, 2), "bbrrbb"),
            (1, (BLUE, 1), (RED, 2), "brr"),
        ],
    )
    def test_edge_colors(self, count, start, end, expected):
        assert SubdivisionService.edge_colors(count, start, end) == expected

    @pytest.mark.parametrize(
        "count, start, end",
        [
            (2, (RED, 2), (RED, 2)),
            (5, (RED, 2), (RED, 2)),
            (3, (RED, 1), (RED, 1)),
            (1, (BLUE, 1), (BLUE, 1)),
            (6, (BLUE, 2), (BLUE, 2)),
            (1, (RED, 3), (RED, 1)),
            (0, (BLUE, 1), (BLUE, 1)),
        ],
    )
    def test_edges_without_coloring(self, count, start, end):
        assert SubdivisionService.edge_colors(count, start, end) is None

    @pytest.mark.parametrize("count", range(0, 12))
    def test_edge_colors_are_crumby_inside(self, count):
        states = [(RED, 1), (RED, 2), (RED, 3), (BLUE, 1), (BLUE, 2)]
        for start, end in itertools.product(states, repeat=2):
            colors = SubdivisionService.edge_colors(count, start, end)
            if colors is None:
                continue
            assert len(colors) == count + 2
            assert colors[0] == start[0] and colors[-1] == end[0]
            assert "bbb" not in colors and "rrrr" not in colors
            assert "brb" not in colors[1:-1]

    def test_states_of_a_degree_three_vertex(self):
        sg = GraphService.subdivide(GeneratorService.gen_k4(), 1)
        states = SubdivisionService.end_states(sg, 0)
        assert len(states) == 14
        assert states.count((RED, (2, 1, 1))) == 1
        assert (RED, (3, 2, 1)) not in states
        assert (BLUE, (2, 2, 1)) not in states

    def test_first_state_leads(self):
        sg = GraphService.subdivide(GeneratorService.gen_k4(), 1)
        states = SubdivisionService.end_states(sg, 0, (BLUE, (1, 1, 1)))
        assert states[0] == (BLUE, (1, 1, 1))
        assert len(states) == 14
