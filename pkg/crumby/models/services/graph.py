# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import logging
from collections import deque

import networkx as nx

from crumby.exc import CrumbyGraphException, CrumbyParseException
from crumby.models.graph_class import GraphClass
from crumby.models.services import BaseService
from crumby.models.subdivided import Branch, Internal

__all__ = ["GraphService"]

log = logging.getLogger(__name__)

GRAPH6_HEADER = b">>graph6<<"


class GraphService(BaseService):
    """
    Codecs, structural predicates and subdivision machinery over Graph
    """

    @classmethod
    def parse_graph6(cls, text):
        """
        Decodes one graph6 record, an optional ">>graph6<<" header is allowed

        :param text: bytes or str
        :return: Graph
        """
        if not isinstance(text, bytes):
            try:
                text = text.encode("ascii")
            except UnicodeEncodeError:
                raise CrumbyParseException("graph6 record is not ascii {!r}", text)
        text = text.strip()
        if text.startswith(GRAPH6_HEADER):
            text = text[len(GRAPH6_HEADER):]
        values = []
        for ch in bytearray(text):
            if not 63 <= ch <= 126:
                raise CrumbyParseException(
                    "graph6 character out of range {!r}", chr(ch)
                )
            values.append(ch - 63)
        if not values:
            raise CrumbyParseException("empty graph6 record {!r}", text)

        if values[0] == 63:
            if len(values) > 1 and values[1] == 63:
                width = 6
                head = values[2:8]
            else:
                width = 3
                head = values[1:4]
            if len(head) != width:
                raise CrumbyParseException("malformed graph6 length prefix {!r}", text)
            n = 0
            for value in head:
                n = (n << 6) | value
            rest = values[1 + width + (width == 6):]
        else:
            n = values[0]
            rest = values[1:]

        pairs = n * (n - 1) // 2
        if len(rest) != (pairs + 5) // 6:
            raise CrumbyParseException(
                "graph6 body has {0[0]} bytes, expected {0[1]}",
                (len(rest), (pairs + 5) // 6),
            )
        bits = []
        for value in rest:
            for shift in range(5, -1, -1):
                bits.append((value >> shift) & 1)
        if any(bits[pairs:]):
            raise CrumbyParseException("graph6 padding bits are not zero {!r}", text)

        edges = []
        k = 0
        for j in range(1, n):
            for i in range(j):
                if bits[k]:
                    edges.append((i, j))
                k += 1
        return cls.model.from_edges(n, edges)

    @classmethod
    def write_graph6(cls, g):
        """
        Encodes a graph as a graph6 record without header or newline

        :param g:
        :return: bytes
        """
        n = g.vertex_count
        if n <= 62:
            out = [n]
        elif n <= 258047:
            out = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
        else:
            out = [63, 63] + [(n >> shift) & 63 for shift in range(30, -1, -6)]
        bits = [
            1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)
        ]
        bits.extend([0] * (-len(bits) % 6))
        for pos in range(0, len(bits), 6):
            value = 0
            for bit in bits[pos:pos + 6]:
                value = (value << 1) | bit
            out.append(value)
        return bytes(bytearray(v + 63 for v in out))

    @classmethod
    def parse_edge_list(cls, text):
        """
        Reads "u v" lines; the first line is a "n m" header when exactly m
        edge lines follow and all of them fit below n. Blank lines and "#"
        comments are skipped.

        :param text:
        :return: Graph
        """
        rows = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise CrumbyParseException(
                    "edge list line {0[0]} is not two integers: {0[1]!r}",
                    (lineno, line),
                )
            rows.append((int(parts[0]), int(parts[1])))
        if not rows:
            return cls.model(0)
        n, m = rows[0]
        body = rows[1:]
        if len(body) == m and all(max(u, v) < n for u, v in body):
            return cls.model.from_edges(n, body)
        return cls.model.from_edges(1 + max(max(u, v) for u, v in rows), rows)

    @classmethod
    def write_edge_list(cls, g):
        lines = ["%d %d" % (g.vertex_count, g.edge_count)]
        lines.extend("%d %d" % edge for edge in g.edges())
        return "\n".join(lines) + "\n"

    @classmethod
    def read_graph(cls, text):
        """
        Parses either format; edge lists always contain digits, which graph6
        never does

        :param text: str or bytes
        :return: Graph
        """
        if isinstance(text, bytes):
            text = text.decode("ascii", "replace")
        stripped = text.strip()
        if stripped.startswith(GRAPH6_HEADER.decode("ascii")):
            return cls.parse_graph6(stripped.splitlines()[0])
        first = stripped.splitlines()[0] if stripped else ""
        if first and not any(ch.isdigit() or ch.isspace() for ch in first):
            return cls.parse_graph6(first)
        return cls.parse_edge_list(text)

    @classmethod
    def components(cls, g):
        """ connected components as sorted vertex lists, ordered by least vertex """
        seen = set()
        result = []
        for start in g.vertices():
            if start in seen:
                continue
            seen.add(start)
            queue = deque([start])
            comp = []
            while queue:
                v = queue.popleft()
                comp.append(v)
                for u in g.neighbors(v):
                    if u not in seen:
                        seen.add(u)
                        queue.append(u)
            result.append(sorted(comp))
        return result

    @classmethod
    def subgraph(cls, g, vertices):
        """
        Induced subgraph, vertex i of the result is the i-th smallest of
        ``vertices``

        :param g:
        :param vertices:
        :return: (Graph, list of original vertices)
        """
        order = sorted(set(vertices))
        index = dict((v, i) for i, v in enumerate(order))
        edges = [
            (index[u], index[v])
            for u in order
            for v in g.neighbors(u)
            if v in index and u < v
        ]
        return cls.model.from_edges(len(order), edges), order

    @classmethod
    def bfs_order(cls, g, start=0):
        """ vertices in breadth-first order, every component in turn """
        order = []
        seen = set()
        starts = [start] + [v for v in g.vertices() if v != start]
        for s in starts:
            if s in seen or s >= g.vertex_count:
                continue
            seen.add(s)
            queue = deque([s])
            while queue:
                v = queue.popleft()
                order.append(v)
                for u in g.neighbors(v):
                    if u not in seen:
                        seen.add(u)
                        queue.append(u)
        return order

    @classmethod
    def is_connected(cls, g):
        return len(cls.components(g)) <= 1

    @classmethod
    def is_subcubic(cls, g):
        return g.max_degree() <= 3

    @classmethod
    def is_cubic(cls, g):
        return g.vertex_count > 0 and all(g.degree(v) == 3 for v in g.vertices())

    @classmethod
    def is_tree(cls, g):
        return (
            g.vertex_count >= 1
            and g.edge_count == g.vertex_count - 1
            and cls.is_connected(g)
        )

    @classmethod
    def is_bipartite(cls, g):
        return nx.is_bipartite(g.to_networkx())

    @classmethod
    def is_outerplanar(cls, g):
        """
        A graph is outerplanar exactly when adding one vertex adjacent to
        every vertex keeps it planar
        """
        is_planar, _ = nx.check_planarity(cls.with_apex(g))
        return is_planar

    @classmethod
    def with_apex(cls, g):
        nx_graph = g.to_networkx()
        apex = g.vertex_count
        nx_graph.add_edges_from((apex, v) for v in g.vertices())
        return nx_graph

    @classmethod
    def is_two_connected(cls, g):
        return g.vertex_count >= 3 and nx.is_biconnected(g.to_networkx())

    @classmethod
    def has_k4_minor(cls, g):
        """
        Series-parallel reduction: delete vertices of degree at most 1 and
        suppress vertices of degree 2 (parallel edges merge); the graph is
        K4-minor-free exactly when nothing is left

        :param g:
        :return: bool
        """
        adj = dict((v, set(g.neighbors(v))) for v in g.vertices())
        stack = list(g.vertices())
        while stack:
            v = stack.pop()
            if v not in adj:
                continue
            nbrs = adj[v]
            if len(nbrs) <= 1:
                for u in nbrs:
                    adj[u].discard(v)
                    stack.append(u)
                del adj[v]
            elif len(nbrs) == 2:
                a, b = nbrs
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                del adj[v]
                stack.extend((a, b))
        return bool(adj)

    @classmethod
    def glue_tree(cls, g, t, leaf, at):
        """
        Identifies leaf of t with vertex at of g; vertices of g keep their
        index, the other vertices of t follow in increasing order

        :return: (Graph, dict t-vertex -> glued vertex)
        """
        if t.degree(leaf) != 1:
            raise CrumbyGraphException("attachment vertex {} is not a leaf", leaf)
        mapping = {leaf: at}
        nxt = g.vertex_count
        for v in t.vertices():
            if v != leaf:
                mapping[v] = nxt
                nxt += 1
        edges = g.edges() + [(mapping[u], mapping[v]) for u, v in t.edges()]
        return cls.model.from_edges(nxt, edges), mapping

    @classmethod
    def subdivide(cls, base, counts):
        """
        Replaces every base edge by a path. Base vertices keep their index,
        internal vertices are appended edge by edge in sorted edge order

        :param base:
        :param counts: int for all edges, list parallel to base.edges(), or
            dict keyed by base edge
        :return: SubdividedGraph
        """
        from crumby.models.subdivided import SubdividedGraph

        edges = base.edges()
        if isinstance(counts, int):
            per_edge = [counts] * len(edges)
        elif isinstance(counts, dict):
            table = {}
            for (u, v), c in counts.items():
                key = (min(u, v), max(u, v))
                if not base.has_edge(u, v):
                    raise CrumbyGraphException("{} is not an edge of the base", key)
                table[key] = c
            per_edge = [table.get(e, 0) for e in edges]
        else:
            per_edge = list(counts)
            if len(per_edge) != len(edges):
                raise CrumbyGraphException(
                    "expected {0[1]} counts, got {0[0]}", (len(per_edge), len(edges))
                )
        if any(c < 0 for c in per_edge):
            raise CrumbyGraphException("negative subdivision count {}", per_edge)

        n = base.vertex_count
        provenance = [Branch(v) for v in range(n)]
        paths = []
        expanded_edges = []
        nxt = n
        for i, ((u, v), c) in enumerate(zip(edges, per_edge)):
            internals = list(range(nxt, nxt + c))
            nxt += c
            provenance.extend(Internal(i, pos) for pos in range(1, c + 1))
            path = [u] + internals + [v]
            paths.append(path)
            expanded_edges.extend(zip(path, path[1:]))
        expanded = cls.model.from_edges(nxt, expanded_edges)
        return SubdividedGraph(
            base, n, edges, per_edge, paths, expanded, provenance, list(range(n))
        )

    @classmethod
    def detect_subdivision_structure(cls, g):
        """
        Suppresses every degree-2 vertex. Branch vertices are the vertices of
        degree other than 2; base vertex i is the i-th smallest of them. A
        base with loops or parallel edges comes back with ``base`` None.

        :param g:
        :return: SubdividedGraph
        """
        from crumby.models.subdivided import SubdividedGraph

        branch = [v for v in g.vertices() if g.degree(v) != 2]
        if not any(g.degree(v) == 3 for v in branch):
            raise CrumbyGraphException("graph has no degree-3 branch vertex {}", None)
        if g.max_degree() > 3:
            raise CrumbyGraphException(
                "graph is not subcubic, max degree {}", g.max_degree()
            )
        base_index = dict((v, i) for i, v in enumerate(branch))
        walked = set()
        found = []
        for b in branch:
            for first in g.neighbors(b):
                if (b, first) in walked:
                    continue
                path = [b]
                prev, cur = b, first
                while cur not in base_index:
                    path.append(cur)
                    nxt = [u for u in g.neighbors(cur) if u != prev][0]
                    prev, cur = cur, nxt
                path.append(cur)
                walked.add((b, first))
                walked.add((cur, path[-2]))
                if base_index[path[0]] > base_index[path[-1]]:
                    path.reverse()
                found.append(path)
        covered = set(v for p in found for v in p) | set(branch)
        if len(covered) != g.vertex_count:
            raise CrumbyGraphException(
                "component without branch vertex at {}",
                min(set(g.vertices()) - covered),
            )
        found.sort(key=lambda p: (base_index[p[0]], base_index[p[-1]], p))
        base_edges = [(base_index[p[0]], base_index[p[-1]]) for p in found]
        counts = [len(p) - 2 for p in found]
        provenance = [None] * g.vertex_count
        for v, i in base_index.items():
            provenance[v] = Branch(i)
        for i, p in enumerate(found):
            for pos, v in enumerate(p[1:-1], 1):
                provenance[v] = Internal(i, pos)
        sg = SubdividedGraph(
            None, len(branch), base_edges, counts, found, g, provenance, branch
        )
        if not sg.irregular_pairs():
            sg.base = cls.model.from_edges(len(branch), base_edges)
        else:
            log.info("suppressed base is a multigraph at %s", sg.irregular_pairs())
        return sg

    @classmethod
    def _structure_or_none(cls, g):
        try:
            return cls.detect_subdivision_structure(g)
        except CrumbyGraphException:
            return None

    @classmethod
    def class_predicates(cls):
        """ ordered (GraphClass, predicate) pairs used by classify """

        def cubic_base(sg):
            return (
                sg is not None
                and sg.base_vertex_count > 0
                and all(sg.base_degree(v) == 3 for v in range(sg.base_vertex_count))
            )

        def k4(g):
            sg = cls._structure_or_none(g)
            return (
                cubic_base(sg)
                and sg.is_simple_base
                and sg.base_vertex_count == 4
                and len(sg.base_edges) == 6
            )

        def one_sub(g):
            sg = cls._structure_or_none(g)
            return cubic_base(sg) and sg.is_simple_base and all(
                c == 1 for c in sg.counts
            )

        def deep(g):
            sg = cls._structure_or_none(g)
            return cubic_base(sg) and all(c >= 2 for c in sg.counts)

        def genuine(g):
            sg = cls._structure_or_none(g)
            return sg is not None and cls.is_connected(g) and sg.is_genuine()

        def outerplanar(g):
            return (
                cls.is_subcubic(g)
                and cls.is_two_connected(g)
                and cls.is_outerplanar(g)
            )

        def cycle_with_trees(g):
            return (
                cls.is_subcubic(g)
                and g.vertex_count >= 3
                and g.edge_count == g.vertex_count
                and cls.is_connected(g)
            )

        return [
            (GraphClass.TREE, lambda g: cls.is_tree(g) and cls.is_subcubic(g)),
            (GraphClass.K4_SUBDIVISION, k4),
            (GraphClass.ONE_SUBDIVISION_OF_CUBIC, one_sub),
            (GraphClass.DEEP_SUBDIVISION, deep),
            (GraphClass.GENUINE_SUBDIVISION, genuine),
            (GraphClass.TWO_CONNECTED_OUTERPLANAR, outerplanar),
            (GraphClass.CYCLE_WITH_TREES, cycle_with_trees),
            (GraphClass.UNKNOWN, lambda g: True),
        ]

    @classmethod
    def classify(cls, g, hint=None):
        """
        Returns the first class in priority order whose predicate holds; a
        hint is returned when its own predicate holds and rejected otherwise

        :param g:
        :param hint: optional GraphClass or class name
        :return: GraphClass
        """
        predicates = cls.class_predicates()
        if hint is not None:
            if not isinstance(hint, GraphClass):
                hint = GraphClass.from_name(hint)
            if dict(predicates)[hint](g):
                return hint
            raise CrumbyGraphException("graph is not of class {}", hint.value)
        for graph_class, predicate in predicates:
            if predicate(g):
                log.info("classified graph as %s", graph_class.value)
                return graph_class
        return GraphClass.UNKNOWN
