# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import pytest
from hypothesis import given

from crumby.exc import CrumbyGraphException
from crumby.models.services.generator import GeneratorService
from crumby.models.services.graph import GraphService
from crumby.models.services.matching import MatchingService
from crumby.tests.strategies import PROPERTY_SETTINGS, outerplanar_graphs


class TestFixedFamilies(object):
    def test_prism(self):
        g = GeneratorService.gen_prism()
        assert (g.vertex_count, g.edge_count) == (6, 9)
        assert GraphService.is_cubic(g)

    def test_petersen(self):
        g = GeneratorService.gen_petersen()
        assert (g.vertex_count, g.edge_count) == (10, 15)
        assert GraphService.is_cubic(g)

    def test_cubic_without_perfect_matching(self):
        g = GeneratorService.gen_no_perfect_matching_cubic()
        assert g.vertex_count == 16
        assert GraphService.is_cubic(g)
        assert GraphService.is_connected(g)
        assert MatchingService.perfect_matching(g) is None

    def test_theta(self):
        g = GeneratorService.gen_theta(1, 2, 3)
        assert g.vertex_count == 8
        assert g.degree(0) == g.degree(1) == 3

    def test_theta_needs_two_subdivided_paths(self):
        with pytest.raises(CrumbyGraphException):
            GeneratorService.gen_theta(0, 0, 4)

    def test_k4_subdivided(self):
        sg = GeneratorService.gen_k4_subdivided([1] * 6)
        assert sg.expanded.vertex_count == 10
        assert GraphService.is_bipartite(sg.expanded)

    def test_cycle_too_short(self):
        with pytest.raises(CrumbyGraphException):
            GeneratorService.gen_cycle(2)

    def test_cycle_with_trees_sizes(self):
        g = GeneratorService.gen_cycle_with_trees(5, {0: "K2", 2: "K13"})
        assert g.vertex_count == 5 + 1 + 3
        assert g.edge_count == g.vertex_count


class TestRandomFamilies(object):
    def test_random_tree_is_deterministic(self):
        first = GeneratorService.gen_random_subcubic_tree(40, seed=7)
        second = GeneratorService.gen_random_subcubic_tree(40, seed=7)
        assert first == second
        assert GraphService.is_tree(first)
        assert GraphService.is_subcubic(first)

    def test_random_cubic_is_deterministic(self):
        first = GeneratorService.gen_random_cubic(12, seed=3)
        assert first == GeneratorService.gen_random_cubic(12, seed=3)
        assert GraphService.is_cubic(first)

    def test_random_cubic_needs_even_order(self):
        with pytest.raises(CrumbyGraphException):
            GeneratorService.gen_random_cubic(7, seed=1)

    @PROPERTY_SETTINGS
    @given(outerplanar_graphs())
    def test_fans_are_two_connected_outerplanar(self, g):
        assert GraphService.is_subcubic(g)
        assert GraphService.is_two_connected(g)
        assert GraphService.is_outerplanar(g)


@pytest.mark.parametrize(
    "n, expected", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 2), (6, 4), (7, 6), (8, 11)]
)
def test_enumerate_trees_counts(n, expected):
    trees = list(GeneratorService.enumerate_trees(n))
    assert len(trees) == expected
    assert all(GraphService.is_tree(t) and GraphService.is_subcubic(t) for t in trees)
