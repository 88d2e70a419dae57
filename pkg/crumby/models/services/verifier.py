# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import logging

from crumby.exc import CrumbyColoringException, CrumbyParseException
from crumby.models.coloring import BLUE, COLORS, RED
from crumby.models.patterns import PatternPurpose
from crumby.models.report import (
    BAD_COMPONENT_SHAPE,
    BLUE_DEGREE_EXCEEDED,
    BLUE_EDGE,
    BLUE_SINGLETON,
    OTHER,
    RED_ISOLATED,
    RED_P4,
    RED_STAR,
    RED_TRIANGLE,
    ComponentShape,
    Violation,
)
from crumby.models.services import BaseService

__all__ = ["VerifierService"]

log = logging.getLogger(__name__)


class VerifierService(BaseService):
    @classmethod
    def verify_crumby(cls, g, coloring):
        """
        Checks every blue vertex for at most one blue neighbor, every red
        vertex for a red neighbor and every red component for a path on four
        vertices (searched directly, depth 3)

        :param g:
        :param coloring:
        :return: VerifierReport
        """
        coloring.check_size(g)
        violations = []
        for v in g.vertices():
            same = [u for u in g.neighbors(v) if coloring[u] == coloring[v]]
            if coloring[v] == BLUE and len(same) > 1:
                violations.append(Violation(BLUE_DEGREE_EXCEEDED, tuple([v] + same)))
            elif coloring[v] == RED and not same:
                violations.append(Violation(RED_ISOLATED, (v,)))
        for comp in cls.color_components(g, coloring, RED):
            if len(comp) < 4:
                continue
            path = cls.find_red_p4(g, coloring, comp)
            if path is not None:
                violations.append(Violation(RED_P4, tuple(path)))
        if not violations:
            for shape in cls.component_shapes(g, coloring):
                if shape.kind == OTHER:
                    violations.append(
                        Violation(BAD_COMPONENT_SHAPE, tuple(shape.vertices))
                    )
        return cls.model(violations)

    @classmethod
    def color_components(cls, g, coloring, color):
        """ components of the subgraph induced by one color, by least vertex """
        seen = set()
        result = []
        for start in g.vertices():
            if coloring[start] != color or start in seen:
                continue
            seen.add(start)
            stack = [start]
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in g.neighbors(v):
                    if coloring[u] == color and u not in seen:
                        seen.add(u)
                        stack.append(u)
            result.append(sorted(comp))
        return result

    @classmethod
    def find_red_p4(cls, g, coloring, component):
        for start in component:
            stack = [[start]]
            while stack:
                path = stack.pop()
                if len(path) == 4:
                    return path
                for u in g.neighbors(path[-1]):
                    if coloring[u] == RED and u not in path:
                        stack.append(path + [u])
        return None

    @classmethod
    def component_shapes(cls, g, coloring):
        """
        Classifies every monochromatic component: red ones as RedStar(size)
        or RedTriangle, blue ones as BlueSingleton or BlueEdge, anything else
        as Other

        :param g:
        :param coloring:
        :return: list of ComponentShape
        """
        coloring.check_size(g)
        shapes = []
        for color in COLORS:
            for comp in cls.color_components(g, coloring, color):
                shapes.append(cls._shape(g, color, comp))
        shapes.sort(key=lambda s: s.vertices[0])
        return shapes

    @classmethod
    def _shape(cls, g, color, comp):
        members = set(comp)
        degree = dict(
            (v, len([u for u in g.neighbors(v) if u in members])) for v in comp
        )
        edges = sum(degree.values()) // 2
        size = len(comp)
        if color == BLUE:
            if size == 1:
                return ComponentShape(color, BLUE_SINGLETON, comp, 1, None)
            if size == 2:
                return ComponentShape(color, BLUE_EDGE, comp, 2, None)
            return ComponentShape(color, OTHER, comp, size, None)
        if size == 3 and edges == 3:
            return ComponentShape(color, RED_TRIANGLE, comp, 3, None)
        if size >= 2 and edges == size - 1:
            centers = [v for v in comp if degree[v] == size - 1]
            if centers:
                center = centers[0] if size > 2 else None
                return ComponentShape(color, RED_STAR, comp, size - 1, center)
        return ComponentShape(color, OTHER, comp, size, None)

    @classmethod
    def validate_pattern(cls, pattern, purpose):
        """
        Judges a color string as the coloring of a path whose two ends are
        branch vertices: ends must be red, the path must be crumby apart from
        the ends' own red isolation, and each end must have the local shape
        the purpose asks for

        :param pattern: string over r/b
        :param purpose: PatternPurpose or its name
        :return: bool
        """
        try:
            purpose = PatternPurpose.from_name(purpose)
        except ValueError:
            raise CrumbyParseException("unknown pattern purpose {!r}", purpose)
        pattern = str(pattern).lower()
        if len(pattern) < 3 or set(pattern) - set(COLORS):
            raise CrumbyColoringException("not a path pattern {!r}", pattern)
        if pattern[0] != RED or pattern[-1] != RED:
            return False
        k = len(pattern)
        for i in range(k):
            same = [
                j for j in (i - 1, i + 1) if 0 <= j < k and pattern[j] == pattern[i]
            ]
            if pattern[i] == BLUE and len(same) > 1:
                return False
            if pattern[i] == RED and not same and 0 < i < k - 1:
                return False
        if RED * 4 in pattern:
            return False

        def singleton(p):
            return p[1] == BLUE

        def in_k2(p):
            return p[1] == RED and (len(p) == 2 or p[2] == BLUE)

        forward, backward = pattern, pattern[::-1]
        if purpose == PatternPurpose.ENDPOINTS_SINGLETON_RED:
            return singleton(forward) and singleton(backward)
        if purpose == PatternPurpose.ENDPOINTS_IN_RED_K2:
            return in_k2(forward) and in_k2(backward)
        return (singleton(forward) and in_k2(backward)) or (
            in_k2(forward) and singleton(backward)
        )

    @classmethod
    def check_partial(cls, g, colors, vertices, edges):
        """
        Relaxed check on a partially built graph: blue degree at most one,
        no red path on four vertices, and every red vertex that already has
        two incident edges has a red neighbor

        :param colors: dict vertex -> color
        :param vertices: processed vertex set
        :param edges: processed edge set of sorted pairs
        :return: list of Violation
        """
        adj = dict((v, []) for v in vertices)
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        violations = []
        for v in sorted(vertices):
            same = [u for u in adj[v] if colors.get(u) == colors.get(v)]
            if colors.get(v) == BLUE and len(same) > 1:
                violations.append(Violation(BLUE_DEGREE_EXCEEDED, tuple([v] + same)))
            elif colors.get(v) == RED and not same and len(adj[v]) >= 2:
                violations.append(Violation(RED_ISOLATED, (v,)))
        for v in sorted(vertices):
            if colors.get(v) != RED:
                continue
            stack = [[v]]
            while stack:
                path = stack.pop()
                if len(path) == 4:
                    violations.append(Violation(RED_P4, tuple(path)))
                    return violations
                for u in adj[path[-1]]:
                    if colors.get(u) == RED and u not in path:
                        stack.append(path + [u])
        return violations
