# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import logging
from collections import deque

from crumby.exc import CrumbyConstructionException
from crumby.models.matching import EGDecomposition
from crumby.models.services import BaseService
from crumby.utils import as_bool

__all__ = ["MatchingService"]

log = logging.getLogger(__name__)


def _find_path(adj, match, root):
    """
    Grows an alternating tree from an exposed root, shrinking blossoms by
    relabeling their base. Returns the exposed endpoint of an augmenting
    path (or -1), the parent array and the even-vertex flags.
    """
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent, used
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent, used


def _augment(match, parent, v):
    while v != -1:
        pv = parent[v]
        ppv = match[pv]
        match[v] = pv
        match[pv] = v
        v = ppv


class MatchingService(BaseService):
    @classmethod
    def _mate_array(cls, g):
        adj = [sorted(g.neighbors(v)) for v in g.vertices()]
        match = [-1] * g.vertex_count
        for root in g.vertices():
            if match[root] != -1:
                continue
            end, parent, _ = _find_path(adj, match, root)
            if end != -1:
                _augment(match, parent, end)
        return adj, match

    @classmethod
    def maximum_matching(cls, g):
        """
        Maximum cardinality matching by Edmonds' blossom algorithm, roots
        tried in increasing order

        :param g:
        :return: Matching
        """
        _, match = cls._mate_array(g)
        return cls.model.from_mate(match)

    @classmethod
    def maximum_matching_on(cls, g, vertices):
        """ maximum matching of the subgraph induced by ``vertices`` """
        from crumby.models.services.graph import GraphService

        sub, order = GraphService.subgraph(g, vertices)
        local = cls.maximum_matching(sub)
        return cls.model((order[u], order[v]) for u, v in local.edges)

    @classmethod
    def perfect_matching(cls, g, vertices=None):
        """ a perfect matching of g (or of g[vertices]), None if there is none """
        if vertices is None:
            vertices = list(g.vertices())
        matching = cls.maximum_matching_on(g, vertices)
        if 2 * len(matching) == len(set(vertices)):
            return matching
        return None

    @classmethod
    def edmonds_gallai(cls, g):
        """
        Gallai-Edmonds decomposition from one matching run: A collects the
        even vertices of the alternating forests grown, after the matching is
        maximum, from every exposed vertex

        :param g:
        :return: EGDecomposition
        """
        from crumby.models.services.graph import GraphService

        adj, match = cls._mate_array(g)
        A = set()
        for root in g.vertices():
            if match[root] != -1:
                continue
            end, _, used = _find_path(adj, match, root)
            if end != -1:
                raise CrumbyConstructionException(
                    "augmenting path left at vertex {}", root
                )
            A.update(v for v in g.vertices() if used[v])
        B = set(u for v in A for u in g.neighbors(v)) - A
        C = set(g.vertices()) - A - B
        odd = [
            [order[i] for i in comp]
            for sub, order in [GraphService.subgraph(g, A)]
            for comp in GraphService.components(sub)
        ]
        even = [
            [order[i] for i in comp]
            for sub, order in [GraphService.subgraph(g, C)]
            for comp in GraphService.components(sub)
        ]
        odd.sort(key=lambda c: c[0])
        even.sort(key=lambda c: c[0])
        matching = cls.model.from_mate(match)
        comp_of = dict((v, i) for i, comp in enumerate(odd) for v in comp)
        contracted = {}
        for b in sorted(B):
            mate = match[b]
            if mate in comp_of:
                contracted[b] = comp_of[mate]
        decomposition = EGDecomposition(g, A, B, C, odd, even, matching, contracted)
        log.debug(
            "edmonds-gallai |A|=%s |B|=%s |C|=%s matching=%s",
            len(A), len(B), len(C), len(matching),
        )
        if as_bool(cls.setting("validate", False)):
            cls.validate_decomposition(decomposition)
        return decomposition

    @classmethod
    def hypomatchable(cls, g, vertices=None):
        """
        True when removing any single vertex leaves a perfect matching

        :param g:
        :param vertices: optional vertex subset to test instead of g
        :return: bool
        """
        if vertices is None:
            vertices = list(g.vertices())
        vertices = sorted(set(vertices))
        for x in vertices:
            rest = [v for v in vertices if v != x]
            if cls.perfect_matching(g, rest) is None:
                return False
        return True

    @classmethod
    def hall_matching_onto_B(cls, d):
        """
        Map from every B vertex to a distinct odd component it has an edge
        into, read off the maximum matching and checked

        :param d: EGDecomposition
        :return: dict B-vertex -> odd component id
        """
        g = d.graph
        result = {}
        for b in sorted(d.B):
            mate = d.matching.mate(b)
            comp = d.component_of(mate) if mate is not None else None
            if comp is None:
                raise CrumbyConstructionException(
                    "B vertex {} is not matched into A", b
                )
            result[b] = comp
        if len(set(result.values())) != len(result):
            raise CrumbyConstructionException(
                "Hall matching is not injective {}", result
            )
        for b, comp in result.items():
            if not any(g.has_edge(b, v) for v in d.odd_components[comp]):
                raise CrumbyConstructionException(
                    "no edge between {0[0]} and odd component {0[1]}", (b, comp)
                )
        if result != d.contracted_matching:
            raise CrumbyConstructionException(
                "Hall matching differs from the contracted matching {}", result
            )
        return result

    @classmethod
    def validate_decomposition(cls, d):
        """
        Re-checks every structural property of a decomposition and raises
        CrumbyConstructionException naming the first one that fails

        :param d: EGDecomposition
        :return: True
        """
        g = d.graph
        vertices = set(g.vertices())

        def fail(what, value=None):
            raise CrumbyConstructionException(
                "invalid Edmonds-Gallai decomposition: " + what, value
            )

        if d.A | d.B | d.C != vertices or (d.A & d.B) or (d.A & d.C) or (d.B & d.C):
            fail("A, B, C do not partition V")
        if set(u for v in d.A for u in g.neighbors(v)) - d.A != d.B:
            fail("B is not the neighborhood of A")
        if set(v for c in d.odd_components for v in c) != d.A:
            fail("odd components do not cover A")
        if set(v for c in d.even_components for v in c) != d.C:
            fail("even components do not cover C")
        if not d.matching.is_valid_for(g):
            fail("matching uses a non-edge")
        for comp in d.odd_components:
            if not cls.hypomatchable(g, comp):
                fail("odd component {} is not factor-critical", comp)
        for comp in d.even_components:
            if cls.perfect_matching(g, comp) is None:
                fail("even component {} has no perfect matching", comp)
        cls.hall_matching_onto_B(d)
        deficiency = len(d.odd_components) - len(d.B)
        if 2 * len(d.matching) != len(vertices) - deficiency:
            fail("matching size {} is not maximum", len(d.matching))
        return True
