# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crumby.exc import CrumbyColoringException, CrumbyParseException
from crumby.models.coloring import Coloring
from crumby.models.patterns import PatternPurpose
from crumby.models.report import (
    BLUE_DEGREE_EXCEEDED,
    BLUE_EDGE,
    BLUE_SINGLETON,
    OTHER,
    RED_ISOLATED,
    RED_P4,
    RED_STAR,
    RED_TRIANGLE,
)
from crumby.models.services.generator import GeneratorService
from crumby.models.services.verifier import VerifierService
from crumby.tests import coloring, graph
from crumby.tests.strategies import (
    PROPERTY_SETTINGS,
    colorings_for,
    small_subcubic_graphs,
)

SINGLETON = PatternPurpose.ENDPOINTS_SINGLETON_RED
IN_K2 = PatternPurpose.ENDPOINTS_IN_RED_K2
MIXED = PatternPurpose.MIXED_SINGLETON_AND_K2


class TestVerifyCrumby(object):
    def test_cycle_ok(self, small_graphs):
        report = VerifierService.verify_crumby(small_graphs["c6"], coloring("rrbrrb"))
        assert report.ok
        assert str(report) == "ok"

    def test_alternating_cycle(self, small_graphs):
        report = VerifierService.verify_crumby(small_graphs["c6"], coloring("rbrbrb"))
        assert report.kinds() == [RED_ISOLATED]
        assert len(report.violations) == 3
        assert report.witness_vertices() == [0, 2, 4]

    def test_path_with_blue_middle(self, small_graphs):
        report = VerifierService.verify_crumby(small_graphs["p3"], coloring("rbr"))
        assert [v.kind for v in report.violations] == [RED_ISOLATED, RED_ISOLATED]

    def test_red_path_on_four(self):
        report = VerifierService.verify_crumby(
            GeneratorService.gen_path(4), coloring("rrrr")
        )
        assert report.kinds() == [RED_P4]

    def test_blue_claw(self, small_graphs):
        report = VerifierService.verify_crumby(small_graphs["claw"], coloring("bbbb"))
        assert report.kinds() == [BLUE_DEGREE_EXCEEDED]
        assert report.violations[0].witness == (0, 1, 2, 3)

    def test_red_triangle_is_fine(self):
        assert VerifierService.verify_crumby(
            GeneratorService.gen_cycle(3), coloring("rrr")
        ).ok

    @pytest.mark.parametrize("colors", ["rr", "bb"])
    def test_k2(self, small_graphs, colors):
        assert VerifierService.verify_crumby(small_graphs["k2"], coloring(colors)).ok

    def test_length_mismatch(self, small_graphs):
        with pytest.raises(CrumbyColoringException):
            VerifierService.verify_crumby(small_graphs["c6"], coloring("rrb"))

    def test_bad_character(self):
        with pytest.raises(CrumbyParseException):
            Coloring.from_string("rgb")

    def test_record(self, small_graphs):
        report = VerifierService.verify_crumby(small_graphs["p3"], coloring("rbr"))
        assert report.as_record() == {
            "ok": False,
            "violations": [
                {"kind": RED_ISOLATED, "witness": [0]},
                {"kind": RED_ISOLATED, "witness": [2]},
            ],
        }


class TestComponentShapes(object):
    def test_cycle(self, small_graphs):
        shapes = VerifierService.component_shapes(
            small_graphs["c6"], coloring("rrbrrb")
        )
        assert [(s.kind, s.vertices) for s in shapes] == [
            (RED_STAR, [0, 1]),
            (BLUE_SINGLETON, [2]),
            (RED_STAR, [3, 4]),
            (BLUE_SINGLETON, [5]),
        ]

    def test_star_center(self, small_graphs):
        shapes = VerifierService.component_shapes(
            small_graphs["claw"], coloring("rrrr")
        )
        assert len(shapes) == 1
        assert shapes[0].kind == RED_STAR
        assert shapes[0].size == 3
        assert shapes[0].center == 0

    def test_triangle_and_blue_edge(self):
        g = graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
        kinds = [s.kind for s in VerifierService.component_shapes(g, coloring("rrrbb"))]
        assert kinds == [RED_TRIANGLE, BLUE_EDGE]

    @PROPERTY_SETTINGS
    @given(st.data())
    def test_agrees_with_shape_acceptance(self, data):
        g = data.draw(small_subcubic_graphs())
        colors = coloring(data.draw(colorings_for(g)))
        shapes = VerifierService.component_shapes(g, colors)
        accepted = all(s.kind != OTHER for s in shapes)
        assert VerifierService.verify_crumby(g, colors).ok == accepted


class TestValidatePattern(object):
    @pytest.mark.parametrize(
        "pattern, purpose, expected",
        [
            ("rbr", SINGLETON, True),
            ("rrbrr", IN_K2, True),
            ("rrbbr", MIXED, True),
            ("rbbrr", MIXED, True),
            ("rrbbr", SINGLETON, False),
            ("rrbrr", SINGLETON, False),
            ("rrrr", IN_K2, False),
            ("brr", SINGLETON, False),
            ("rbbbr", SINGLETON, False),
            ("rbrbr", SINGLETON, False),
            ("rrbrrbrr", IN_K2, True),
        ],
    )
    def test_patterns(self, pattern, purpose, expected):
        assert VerifierService.validate_pattern(pattern, purpose) is expected

    def test_accepts_purpose_names(self):
        assert VerifierService.validate_pattern("rrbrr", "EndpointsInRedK2")

    def test_unknown_purpose(self):
        with pytest.raises(CrumbyParseException):
            VerifierService.validate_pattern("rbr", "Nope")

    def test_too_short(self):
        with pytest.raises(CrumbyColoringException):
            VerifierService.validate_pattern("rr", SINGLETON)


class TestCheckPartial(object):
    def test_unfinished_red_vertex_is_tolerated(self):
        g = GeneratorService.gen_path(3)
        colors = {0: "r", 1: "b"}
        assert VerifierService.check_partial(g, colors, {0, 1}, {(0, 1)}) == []

    def test_blue_degree(self):
        g = GeneratorService.gen_path(3)
        colors = {0: "b", 1: "b", 2: "b"}
        found = VerifierService.check_partial(g, colors, {0, 1, 2}, {(0, 1), (1, 2)})
        assert [v.kind for v in found] == [BLUE_DEGREE_EXCEEDED]
