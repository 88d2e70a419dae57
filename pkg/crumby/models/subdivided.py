# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from collections import namedtuple

from crumby.models.base import BaseModel

__all__ = ["Branch", "Internal", "SubdividedGraph"]

Branch = namedtuple("Branch", ["base_vertex"])
# edge is the index into base_edges, position runs 1..count from the lower end
Internal = namedtuple("Internal", ["edge", "position"])


class SubdividedGraph(BaseModel):
    """
    A base graph together with the graph obtained by replacing every base edge
    with a path.

    ``base_edges`` lists base edges as (u, v) with u <= v; a base recovered from
    a graph may repeat a pair (parallel paths) or have u == v (a cycle through
    one branch vertex), in which case ``base`` is None. ``paths[i]`` lists the
    expanded vertices of edge i from its u end to its v end, branch vertices
    included.
    """

    _keys = ("base_vertex_count", "base_edges", "counts")

    def __init__(
        self,
        base,
        base_vertex_count,
        base_edges,
        counts,
        paths,
        expanded,
        provenance,
        branch_vertices,
    ):
        self.base = base
        self.base_vertex_count = base_vertex_count
        self.base_edges = list(base_edges)
        self.counts = list(counts)
        self.paths = [tuple(p) for p in paths]
        self.expanded = expanded
        self.provenance = list(provenance)
        self.branch_vertices = list(branch_vertices)

    @property
    def is_simple_base(self):
        return self.base is not None

    def is_genuine(self):
        return all(c >= 1 for c in self.counts)

    def internal_vertices(self, edge_index):
        return self.paths[edge_index][1:-1]

    def edge_index(self, u, v):
        key = (min(u, v), max(u, v))
        return self.base_edges.index(key)

    def path_between(self, u, v):
        """ expanded path from base vertex u to base vertex v """
        path = self.paths[self.edge_index(u, v)]
        if self.base_edges[self.edge_index(u, v)][0] == u:
            return path
        return tuple(reversed(path))

    def incident_edges(self, base_vertex):
        return [
            i for i, (u, v) in enumerate(self.base_edges) if base_vertex in (u, v)
        ]

    def base_degree(self, base_vertex):
        return sum(
            (u == base_vertex) + (v == base_vertex) for u, v in self.base_edges
        )

    def irregular_pairs(self):
        """ base pairs that are loops or carry parallel paths """
        seen = set()
        result = []
        for pair in self.base_edges:
            if pair[0] == pair[1] or pair in seen:
                if pair not in result:
                    result.append(pair)
            seen.add(pair)
        return result
