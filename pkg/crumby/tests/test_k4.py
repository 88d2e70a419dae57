# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import itertools

import mock
import pytest
from hypothesis import given
from hypothesis import strategies as st

from crumby.exc import (
    CrumbyConstructionException,
    CrumbyFixtureException,
    CrumbyGraphException,
)
from crumby.models.coloring import Coloring
from crumby.models.k4 import K4SubdivisionVector
from crumby.models.services.fixture import FixtureService
from crumby.models.services.generator import GeneratorService
from crumby.models.services.graph import GraphService
from crumby.models.services.k4 import K4SubdivisionService
from crumby.models.services.verifier import VerifierService
from crumby.tests import BaseTestCase, graph
from crumby.tests.strategies import PROPERTY_SETTINGS

PATH_CASES = list(itertools.product((0, 1, 2), repeat=3))


class TestVector(object):
    def test_parse_and_reduce(self):
        vector = K4SubdivisionVector.parse("3,4 5 0 7 2")
        assert vector.counts == (3, 4, 5, 0, 7, 2)
        assert vector.vertex_count == 25
        assert str(vector.reduced()) == "0 1 2 0 1 2"
        assert not vector.is_base()
        assert vector.reduced().is_base()

    def test_rejects_bad_counts(self):
        with pytest.raises(CrumbyGraphException):
            K4SubdivisionVector([1, 2, 3])
        with pytest.raises(CrumbyGraphException):
            K4SubdivisionVector([0, 0, 0, 0, 0, -1])

    def test_canonical_order(self):
        order = K4SubdivisionService.canonical_order()
        assert order[:4] == ["A", "B", "C", "D"]
        assert len(order) == 10

    def test_base_vectors(self):
        vectors = list(K4SubdivisionService.base_vectors())
        assert len(vectors) == 729
        assert len(set(vectors)) == 729


class TestPathCases(object):
    @pytest.mark.parametrize("i, j, k", PATH_CASES)
    def test_rows_are_crumby(self, i, j, k):
        row = FixtureService.load_fixtures().get("k4_path_case", "%d %d %d" % (i, j, k))
        g, coloring = K4SubdivisionService.path_case_from_row(i, j, k, row)
        assert g.vertex_count == 4 + i + j + k
        assert VerifierService.verify_crumby(g, coloring).ok

    def test_lookup(self):
        coloring = K4SubdivisionService.path_case_coloring(0, 0, 0)
        assert len(coloring) == 4

    def test_counts_out_of_range(self):
        with pytest.raises(CrumbyGraphException):
            K4SubdivisionService.path_case_coloring(3, 0, 0)

    def test_row_of_wrong_shape(self):
        with pytest.raises(CrumbyFixtureException):
            K4SubdivisionService.path_case_from_row(1, 0, 0, "R B R B")


class TestK4Base(object):
    def test_every_base_vector(self):
        for vector in K4SubdivisionService.base_vectors():
            coloring = K4SubdivisionService.solve_k4_base(vector, use_fixtures=False)
            g = K4SubdivisionService.instance(vector).expanded
            assert VerifierService.verify_crumby(g, coloring).ok, str(vector)

    def test_memoized(self):
        vector = K4SubdivisionVector([1, 2, 0, 1, 2, 0])
        first = K4SubdivisionService.solve_k4_base(vector, use_fixtures=False)
        assert K4SubdivisionService.solve_k4_base(vector, use_fixtures=False) is first

    def test_rejects_large_counts(self):
        with pytest.raises(CrumbyGraphException):
            K4SubdivisionService.solve_k4_base(K4SubdivisionVector([3, 0, 0, 0, 0, 0]))

    def test_red_triangle_edge_cannot_grow(self):
        zeros = K4SubdivisionVector([0] * 6)
        coloring = Coloring.from_string("rrrb")
        assert not K4SubdivisionService.grows_from(zeros, coloring, [0])
        assert K4SubdivisionService.grows_from(zeros, coloring, [2, 4, 5])

    def test_chosen_base_grows_on_every_edge(self):
        zeros = K4SubdivisionVector([0] * 6)
        coloring = K4SubdivisionService.solve_k4_base(zeros, use_fixtures=False)
        assert coloring.colors.count("b") == 2
        assert K4SubdivisionService.grows_from(zeros, coloring, range(6))


class TestK4Subdivision(BaseTestCase):
    @pytest.mark.parametrize(
        "counts",
        [
            (0, 0, 0, 0, 0, 0),
            (3, 0, 0, 0, 0, 0),
            (0, 0, 0, 3, 0, 0),
            (0, 0, 0, 0, 0, 3),
            (3, 3, 3, 3, 3, 3),
            (1, 4, 7, 2, 5, 8),
            (9, 0, 1, 0, 2, 0),
            (5, 5, 5, 5, 5, 5),
            (12, 0, 0, 0, 0, 11),
        ],
    )
    def test_vectors(self, counts):
        vector = K4SubdivisionVector(counts)
        coloring = K4SubdivisionService.solve_k4_subdivision(vector)
        self.assert_crumby(K4SubdivisionService.instance(vector).expanded, coloring)

    def test_counts_up_to_three(self):
        for counts in itertools.product(range(4), repeat=6):
            vector = K4SubdivisionVector(counts)
            coloring = K4SubdivisionService.solve_k4_subdivision(vector)
            self.assert_crumby(K4SubdivisionService.instance(vector).expanded, coloring)

    def test_lifted_start(self):
        vector = K4SubdivisionVector([6, 0, 0, 3, 0, 0])
        zeros = K4SubdivisionVector([0] * 6)
        lifted, coloring = K4SubdivisionService._lifted_start(vector, zeros)
        assert lifted.counts == (3, 0, 0, 3, 0, 0)
        self.assert_crumby(K4SubdivisionService.instance(lifted).expanded, coloring)

    def test_failed_growth_names_the_instance(self):
        vector = K4SubdivisionVector([6, 0, 0, 0, 0, 0])
        with mock.patch.object(
            K4SubdivisionService, "_insert_block", return_value=None
        ):
            with pytest.raises(CrumbyConstructionException) as excinfo:
                K4SubdivisionService.solve_k4_subdivision(vector)
        expected = K4SubdivisionService.instance(vector).expanded
        assert excinfo.value.instance == GraphService.write_graph6(expected).decode(
            "ascii"
        )

    def test_plain_counts_accepted(self):
        coloring = K4SubdivisionService.solve_k4_subdivision([4, 0, 0, 0, 0, 0])
        assert len(coloring) == 8

    @PROPERTY_SETTINGS
    @given(st.lists(st.integers(min_value=0, max_value=10), min_size=6, max_size=6))
    def test_random_vectors(self, counts):
        vector = K4SubdivisionVector(counts)
        coloring = K4SubdivisionService.solve_k4_subdivision(vector)
        self.assert_crumby(K4SubdivisionService.instance(vector).expanded, coloring)


class TestSolveSubdivided(BaseTestCase):
    def test_relabelled_instance(self):
        g = GraphService.subdivide(
            GeneratorService.gen_k4(), [1, 0, 2, 3, 0, 4]
        ).expanded
        n = g.vertex_count
        relabel = dict((v, n - 1 - v) for v in range(n))
        h = graph(n, [(relabel[u], relabel[v]) for u, v in g.edges()])
        self.assert_crumby(h, K4SubdivisionService.solve_subdivided(h))

    def test_not_k4(self, small_graphs):
        with pytest.raises(CrumbyGraphException):
            K4SubdivisionService.solve_subdivided(small_graphs["prism"])
