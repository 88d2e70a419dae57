# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import networkx as nx

from crumby.exc import CrumbyGraphException
from crumby.models.base import BaseModel

__all__ = ["Graph"]


class Graph(BaseModel):
    """
    Undirected simple graph on the dense vertex range 0..vertex_count-1,
    stored as per-vertex neighbor tuples. Instances are immutable.
    """

    _keys = ("vertex_count", "edge_count")

    def __init__(self, vertex_count, adjacency=None):
        if vertex_count < 0:
            raise CrumbyGraphException("negative vertex count {}", vertex_count)
        if adjacency is None:
            adjacency = [() for _ in range(vertex_count)]
        if len(adjacency) != vertex_count:
            raise CrumbyGraphException(
                "adjacency has {} rows", (len(adjacency), vertex_count)
            )
        adjacency = tuple(tuple(int(u) for u in nbrs) for nbrs in adjacency)
        neighbor_sets = [frozenset(nbrs) for nbrs in adjacency]
        for v, nbrs in enumerate(adjacency):
            if len(neighbor_sets[v]) != len(nbrs):
                raise CrumbyGraphException("repeated neighbor at vertex {}", v)
            for u in nbrs:
                if u == v:
                    raise CrumbyGraphException("self-loop at vertex {}", v)
                if not 0 <= u < vertex_count:
                    raise CrumbyGraphException("vertex index out of range {}", u)
                if v not in neighbor_sets[u]:
                    raise CrumbyGraphException("asymmetric adjacency {}", (v, u))
        self._vertex_count = vertex_count
        self._adjacency = adjacency
        self._neighbor_sets = tuple(neighbor_sets)
        self._edge_count = sum(len(nbrs) for nbrs in adjacency) // 2

    @classmethod
    def from_edges(cls, vertex_count, edges):
        """
        Builds a graph from an edge iterable, neighbor lists come out sorted

        :param vertex_count:
        :param edges:
        :return: Graph
        """
        adjacency = [set() for _ in range(vertex_count)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise CrumbyGraphException("self-loop at vertex {}", u)
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise CrumbyGraphException("vertex index out of range {}", (u, v))
            if v in adjacency[u]:
                raise CrumbyGraphException("duplicate edge {}", (min(u, v), max(u, v)))
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(vertex_count, [sorted(nbrs) for nbrs in adjacency])

    @classmethod
    def from_networkx(cls, nx_graph):
        """
        Converts a networkx graph, integer labels keep their sorted order

        :param nx_graph:
        :return: Graph
        """
        nodes = list(nx_graph.nodes())
        try:
            nodes = sorted(nodes)
        except TypeError:
            pass
        index = dict((node, i) for i, node in enumerate(nodes))
        edges = [(index[u], index[v]) for u, v in nx_graph.edges() if u != v]
        return cls.from_edges(len(nodes), edges)

    def to_networkx(self):
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self._vertex_count))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    @property
    def vertex_count(self):
        return self._vertex_count

    @property
    def edge_count(self):
        return self._edge_count

    @property
    def adjacency(self):
        return self._adjacency

    def vertices(self):
        return range(self._vertex_count)

    def neighbors(self, v):
        return self._adjacency[v]

    def degree(self, v):
        return len(self._adjacency[v])

    def has_edge(self, u, v):
        return v in self._neighbor_sets[u]

    def max_degree(self):
        return max([len(nbrs) for nbrs in self._adjacency] or [0])

    def edges(self):
        """ sorted list of (u, v) pairs with u < v """
        return [
            (u, v)
            for u in range(self._vertex_count)
            for v in sorted(self._adjacency[u])
            if u < v
        ]

    def __len__(self):
        return self._vertex_count

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertex_count == other._vertex_count and self._neighbor_sets == (
            other._neighbor_sets
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._vertex_count, self._neighbor_sets))
