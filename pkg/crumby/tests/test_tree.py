# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import pytest
from hypothesis import given

from crumby.exc import CrumbyGraphException
from crumby.models.coloring import BLUE, RED
from crumby.models.services.generator import GeneratorService
from crumby.models.services.oracle import OracleService
from crumby.models.services.tree import TreeService
from crumby.models.tree_state import TreeState
from crumby.tests import BaseTestCase, graph
from crumby.tests.strategies import PROPERTY_SETTINGS, subcubic_trees


class TestSolveTree(BaseTestCase):
    def test_single_edge_blue(self, small_graphs):
        assert TreeService.solve_tree(small_graphs["k2"], {0: BLUE}) == "bb"

    def test_single_vertex(self):
        assert TreeService.solve_tree(GeneratorService.gen_path(1)) == "b"

    def test_p3_middle_blue(self, small_graphs):
        assert TreeService.solve_tree(small_graphs["p3"], {1: BLUE}) is None

    def test_p3_middle_red(self, small_graphs):
        self.assert_crumby(
            small_graphs["p3"],
            TreeService.solve_tree(small_graphs["p3"], {1: RED}),
            {1: RED},
        )

    def test_not_a_tree(self, small_graphs):
        with pytest.raises(CrumbyGraphException):
            TreeService.solve_tree(small_graphs["c5"])

    def test_not_subcubic(self):
        with pytest.raises(CrumbyGraphException):
            TreeService.solve_tree(GeneratorService.gen_star(4))

    def test_several_prescriptions(self):
        t = GeneratorService.gen_path(7)
        prescription = {0: BLUE, 3: RED, 6: BLUE}
        self.assert_crumby(t, TreeService.solve_tree(t, prescription), prescription)

    @pytest.mark.parametrize("n", range(2, 13))
    def test_any_leaf_any_color(self, n):
        for t in GeneratorService.enumerate_trees(n):
            for leaf in [v for v in t.vertices() if t.degree(v) == 1]:
                for color in (RED, BLUE):
                    result = TreeService.solve_tree(t, {leaf: color})
                    self.assert_crumby(t, result, {leaf: color})

    @pytest.mark.parametrize("n", range(4, 10))
    def test_any_degree_two_vertex_any_color(self, n):
        for t in GeneratorService.enumerate_trees(n):
            for v in [v for v in t.vertices() if t.degree(v) == 2]:
                for color in (RED, BLUE):
                    result = TreeService.solve_tree(t, {v: color})
                    self.assert_crumby(t, result, {v: color})

    @PROPERTY_SETTINGS
    @given(subcubic_trees(max_size=200))
    def test_random_trees(self, t):
        self.assert_crumby(t, TreeService.solve_tree(t))


class TestCounting(object):
    @PROPERTY_SETTINGS
    @given(subcubic_trees(max_size=10))
    def test_count_matches_oracle(self, t):
        assert TreeService.count_tree_colorings(t) == OracleService.count_colorings(t)

    @PROPERTY_SETTINGS
    @given(subcubic_trees(max_size=10))
    def test_prescribed_count_matches_oracle(self, t):
        prescription = {t.vertex_count - 1: BLUE}
        assert TreeService.count_tree_colorings(
            t, prescription
        ) == OracleService.count_colorings(t, prescription)

    def test_state_table(self, small_graphs):
        table = TreeService.tree_state_table(small_graphs["p3"], root=0)
        assert table[2] == {TreeState.B_FREE, TreeState.R_PEND}
        assert table[0] == {
            TreeState.B_FREE,
            TreeState.R_PEND,
            TreeState.R_CTR1,
            TreeState.R_LEAF,
        }


def test_tree_with_leaf_prescription_on_long_path():
    t = graph(12, [(i, i + 1) for i in range(11)])
    result = TreeService.solve_tree(t, {0: BLUE, 11: BLUE})
    assert result is not None
    assert result[0] == result[11] == BLUE
