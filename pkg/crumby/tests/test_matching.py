# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import mock
import networkx as nx
import pytest
from hypothesis import given

from crumby.exc import CrumbyConstructionException
from crumby.models.matching import SATURATED, UNSATURATED, Matching
from crumby.models.services.generator import GeneratorService
from crumby.models.services.matching import MatchingService
from crumby.tests import graph
from crumby.tests.strategies import PROPERTY_SETTINGS, small_subcubic_graphs


class TestMatchingModel(object):
    def test_overlap_rejected(self):
        with pytest.raises(ValueError):
            Matching([(0, 1), (1, 2)])

    def test_queries(self):
        m = Matching([(3, 2), (0, 1)])
        assert m.edges == [(0, 1), (2, 3)]
        assert m.mate(3) == 2
        assert (1, 0) in m
        assert m.exposed(range(5)) == [4]

    def test_record(self):
        m = Matching([(3, 2), (0, 1)])
        assert m.as_record() == {"edges": [[0, 1], [2, 3]]}
        assert m.get_dict(exclude_keys=["edges"]) == {}
        assert repr(m) == "<Matching: edges=[(0, 1), (2, 3)]>"


class TestMaximumMatching(object):
    def test_cycle(self, small_graphs):
        m = MatchingService.maximum_matching(small_graphs["c6"])
        assert len(m) == 3
        assert m.is_perfect(6)

    def test_claw(self, small_graphs):
        assert len(MatchingService.maximum_matching(small_graphs["claw"])) == 1

    def test_odd_cycle_blossom(self):
        g = graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6)])
        assert len(MatchingService.maximum_matching(g)) == 3

    @PROPERTY_SETTINGS
    @given(small_subcubic_graphs())
    def test_size_matches_networkx(self, g):
        m = MatchingService.maximum_matching(g)
        reference = nx.max_weight_matching(g.to_networkx(), maxcardinality=True)
        assert m.is_valid_for(g)
        assert len(m) == len(reference)

    def test_perfect_matching(self, small_graphs):
        assert MatchingService.perfect_matching(small_graphs["petersen"]) is not None
        assert (
            MatchingService.perfect_matching(
                GeneratorService.gen_no_perfect_matching_cubic()
            )
            is None
        )

    def test_perfect_matching_on_subset(self, small_graphs):
        m = MatchingService.perfect_matching(small_graphs["c6"], [0, 1, 2, 3])
        assert m.edges == [(0, 1), (2, 3)]

    def test_hypomatchable(self, small_graphs):
        assert MatchingService.hypomatchable(small_graphs["c5"])
        assert not MatchingService.hypomatchable(GeneratorService.gen_cycle(4))


class TestEdmondsGallai(object):
    def test_claw(self, small_graphs):
        d = MatchingService.edmonds_gallai(small_graphs["claw"])
        assert d.A == {1, 2, 3}
        assert d.B == {0}
        assert d.C == frozenset()
        assert d.odd_components == [[1], [2], [3]]
        roles = d.roles()
        assert [r.role for r in roles].count(SATURATED) == 1
        assert [r.role for r in roles].count(UNSATURATED) == 2

    def test_perfect_matching_graph(self, small_graphs):
        d = MatchingService.edmonds_gallai(small_graphs["c6"])
        assert not d.A and not d.B
        assert d.even_components == [list(range(6))]

    def test_cubic_without_perfect_matching(self):
        g = GeneratorService.gen_no_perfect_matching_cubic()
        d = MatchingService.edmonds_gallai(g)
        assert d.B == {0}
        assert len(d.odd_components) == 3
        assert MatchingService.validate_decomposition(d)
        assert MatchingService.hall_matching_onto_B(d) == d.contracted_matching

    @PROPERTY_SETTINGS
    @given(small_subcubic_graphs())
    def test_decomposition_is_valid(self, g):
        d = MatchingService.edmonds_gallai(g)
        assert MatchingService.validate_decomposition(d)

    def test_validate_setting_checks_every_run(self, small_graphs):
        with mock.patch.object(MatchingService, "validate_decomposition") as check:
            d = MatchingService.edmonds_gallai(small_graphs["petersen"])
        assert not d.A
        check.assert_called_once_with(d)

    def test_checks_off_without_validate(self, small_graphs, settings_factory):
        settings_factory(validate=False)
        with mock.patch.object(MatchingService, "validate_decomposition") as check:
            MatchingService.edmonds_gallai(small_graphs["petersen"])
        assert not check.called

    def test_broken_decomposition_is_reported(self, small_graphs):
        d = MatchingService.edmonds_gallai(small_graphs["claw"])
        d.B = frozenset()
        with pytest.raises(CrumbyConstructionException):
            MatchingService.validate_decomposition(d)

    def test_text_form(self, small_graphs):
        text = MatchingService.edmonds_gallai(small_graphs["claw"]).as_text()
        assert text.splitlines()[:3] == ["A: 1 2 3", "B: 0", "C: "]
