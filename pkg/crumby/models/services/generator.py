# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import logging
import random

import networkx as nx

from crumby.exc import CrumbyGraphException
from crumby.models.services import BaseService

__all__ = ["GeneratorService"]

log = logging.getLogger(__name__)

K2 = "K2"
K13 = "K13"


class GeneratorService(BaseService):
    """
    Deterministic instance generators, randomized ones take an explicit seed
    """

    @classmethod
    def gen_path(cls, k):
        return cls.model.from_edges(k, [(i, i + 1) for i in range(k - 1)])

    @classmethod
    def gen_cycle(cls, k):
        if k < 3:
            raise CrumbyGraphException("a cycle needs at least 3 vertices, got {}", k)
        return cls.model.from_edges(k, [(i, (i + 1) % k) for i in range(k)])

    @classmethod
    def gen_star(cls, leaves=3):
        return cls.model.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    @classmethod
    def gen_prism(cls):
        """ two triangles 0-1-2 and 3-4-5 joined by the matching i - i+3 """
        edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        edges += [(i, i + 3) for i in range(3)]
        return cls.model.from_edges(6, edges)

    @classmethod
    def gen_k4(cls):
        return cls.model.from_networkx(nx.complete_graph(4))

    @classmethod
    def gen_petersen(cls):
        return cls.model.from_networkx(nx.petersen_graph())

    @classmethod
    def gen_no_perfect_matching_cubic(cls):
        """
        16-vertex cubic graph without a perfect matching: vertex 0 joined to
        three copies of K4 with one subdivided edge
        """
        edges = []
        for blob in range(3):
            a, b, c, d, s = [1 + 5 * blob + i for i in range(5)]
            edges += [(a, c), (a, d), (b, c), (b, d), (c, d), (a, s), (s, b), (0, s)]
        return cls.model.from_edges(16, edges)

    @classmethod
    def gen_theta(cls, a, b, c):
        """
        Vertices 0 and 1 joined by three paths with a, b and c internal
        vertices
        """
        if sorted([a, b, c])[1] == 0:
            raise CrumbyGraphException("theta needs two subdivided paths {}", (a, b, c))
        edges = []
        nxt = 2
        for count in (a, b, c):
            walk = [0] + list(range(nxt, nxt + count)) + [1]
            nxt += count
            edges.extend(zip(walk, walk[1:]))
        return cls.model.from_edges(nxt, edges)

    @classmethod
    def gen_k4_subdivided(cls, counts):
        """
        Subdivided K4 with A, B, C, D = 0, 1, 2, 3 and counts on AB, AC, AD,
        BC, BD, CD

        :param counts: six nonnegative integers
        :return: SubdividedGraph
        """
        from crumby.models.services.graph import GraphService

        counts = list(counts)
        if len(counts) != 6:
            raise CrumbyGraphException("K4 needs 6 edge counts, got {}", counts)
        return GraphService.subdivide(cls.gen_k4(), counts)

    @classmethod
    def gen_random_subcubic_tree(cls, n, seed=None):
        if n < 1:
            raise CrumbyGraphException("tree needs at least one vertex, got {}", n)
        log.debug("random subcubic tree n=%s seed=%s", n, seed)
        rng = random.Random(seed)
        degree = [0] * n
        edges = []
        for v in range(1, n):
            parent = rng.choice([u for u in range(v) if degree[u] < 3])
            degree[parent] += 1
            degree[v] += 1
            edges.append((parent, v))
        return cls.model.from_edges(n, edges)

    @classmethod
    def gen_random_cubic(cls, n, seed=None):
        if n < 4 or n % 2:
            raise CrumbyGraphException("cubic graphs need an even n >= 4, got {}", n)
        log.debug("random cubic graph n=%s seed=%s", n, seed)
        return cls.model.from_networkx(nx.random_regular_graph(3, n, seed=seed))

    @classmethod
    def gen_fan_outerplanar(cls, face_sizes, seed=None):
        """
        Glues faces one at a time onto an outer edge whose endpoints both
        have degree 2, which keeps the graph subcubic, 2-connected and
        outerplanar with a Hamiltonian outer cycle

        :param face_sizes: sizes (>= 3) of the bounded faces
        :param seed:
        :return: Graph
        """
        face_sizes = list(face_sizes)
        if not face_sizes or min(face_sizes) < 3:
            raise CrumbyGraphException("face sizes must be >= 3, got {}", face_sizes)
        log.debug("fan outerplanar faces=%s seed=%s", face_sizes, seed)
        rng = random.Random(seed)
        first = face_sizes[0]
        outer = list(range(first))
        edges = [(i, (i + 1) % first) for i in range(first)]
        degree = [2] * first
        for size in face_sizes[1:]:
            m = len(outer)
            candidates = [
                i
                for i in range(m)
                if degree[outer[i]] == 2 and degree[outer[(i + 1) % m]] == 2
            ]
            if not candidates:
                raise CrumbyGraphException(
                    "no outer edge left to glue a {}-face on", size
                )
            i = rng.choice(candidates)
            x, y = outer[i], outer[(i + 1) % m]
            new = list(range(len(degree), len(degree) + size - 2))
            degree[x] += 1
            degree[y] += 1
            degree.extend([2] * len(new))
            walk = [x] + new + [y]
            edges.extend(zip(walk, walk[1:]))
            outer[i + 1:i + 1] = new
        return cls.model.from_edges(len(degree), edges)

    @classmethod
    def attachment_tree(cls, attachment):
        """
        Resolves an attachment to (tree, leaf): "K2", "K13" or a
        (tree, leaf) pair
        """
        if attachment == K2:
            return cls.gen_path(2), 0
        if attachment == K13:
            return cls.gen_star(3), 1
        tree, leaf = attachment
        return tree, leaf

    @classmethod
    def gen_cycle_with_trees(cls, k, attachments=None):
        """
        C_k on vertices 0..k-1 with a tree identified, at one of its leaves,
        with each listed cycle position

        :param k:
        :param attachments: dict position -> "K2" | "K13" | (tree, leaf)
        :return: Graph
        """
        from crumby.models.services.graph import GraphService

        g = cls.gen_cycle(k)
        for pos in sorted(attachments or {}):
            if not 0 <= pos < k:
                raise CrumbyGraphException("attachment position {} not on cycle", pos)
            tree, leaf = cls.attachment_tree(attachments[pos])
            g, _ = GraphService.glue_tree(g, tree, leaf, pos)
        return g

    @classmethod
    def enumerate_trees(cls, n):
        """
        Every subcubic tree on n vertices, one per isomorphism class

        :param n:
        :return: generator of Graph
        """
        if n < 1:
            return
        if n == 1:
            yield cls.model(1)
            return
        if n == 2:
            yield cls.gen_path(2)
            return
        for tree in nx.nonisomorphic_trees(n):
            if max(d for _, d in tree.degree()) <= 3:
                yield cls.model.from_networkx(tree)
