# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from crumby.models.coloring import Coloring
from crumby.models.graph import Graph
from crumby.models.services.graph import GraphService
from crumby.models.services.oracle import OracleService
from crumby.models.services.verifier import VerifierService


def graph(n, edges):
    return Graph.from_edges(n, edges)


def from_graph6(text):
    return GraphService.parse_graph6(text)


def coloring(text):
    return Coloring.from_string(text)


def assert_crumby(g, result, prescription=None):
    """ fails with the verifier report when result is not a crumby coloring """
    assert result is not None
    report = VerifierService.verify_crumby(g, result)
    assert report.ok, "%s\n%s" % (result, report)
    if prescription:
        assert result.extends(prescription), (result, prescription)


def brute_force_count(g, prescription=None):
    return len(list(OracleService.brute_force_colorings(g, prescription)))


class BaseTestCase(object):
    def assert_crumby(self, g, result, prescription=None):
        assert_crumby(g, result, prescription)

    def assert_unsat(self, g, prescription=None):
        assert not list(OracleService.brute_force_colorings(g, prescription))
