# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import itertools
import logging

from crumby.exc import (
    CrumbyConstructionException,
    CrumbyFixtureException,
    CrumbyGraphException,
)
from crumby.models.coloring import BLUE, RED
from crumby.models.k4 import A, B, C, D, K4_EDGE_NAMES, K4_EDGES
from crumby.models.outcome import SAT
from crumby.models.services import BaseService

__all__ = ["K4SubdivisionService"]

log = logging.getLogger(__name__)

# inserted three-vertex blocks tried by the fallback, in order
BLOCKS = ("brr", "rrb", "rbr", "rrr")

_base_solutions = {}
_lifted_solutions = {}


class K4SubdivisionService(BaseService):
    """
    Subdivisions of K4: every count is reduced mod 3, the base instance is
    solved exactly and each edge is grown back by three vertices at a time
    """

    @classmethod
    def canonical_order(cls):
        """
        Vertex order of every K4 instance: A, B, C, D as 0..3, then the
        internal vertices edge by edge in the order AB, AC, AD, BC, BD, CD,
        each edge from its first to its second letter

        :return: list of str
        """
        return ["A", "B", "C", "D"] + [
            "internal vertices of %s" % name for name in K4_EDGE_NAMES
        ]

    @classmethod
    def instance(cls, vector):
        """ SubdividedGraph of the vector in canonical order """
        from crumby.models.services.generator import GeneratorService
        from crumby.models.services.graph import GraphService

        return GraphService.subdivide(GeneratorService.gen_k4(), list(vector.counts))

    @classmethod
    def base_vectors(cls):
        for counts in itertools.product((0, 1, 2), repeat=6):
            yield cls.model(counts)

    @classmethod
    def path_case_from_row(cls, i, j, k, row):
        """
        Instance with intact AB, BC, CD and i, j, k internal vertices on CA,
        AD, DB, colored by a row read along C-A-D-B

        :return: (Graph, Coloring)
        """
        tokens = row.split()
        capitals = [t for t in tokens if t == t.upper()]
        if len(capitals) != 4 or any(len(t) != 1 for t in capitals):
            raise CrumbyFixtureException(
                "path case row {!r} needs 4 branch colors", row
            )
        groups = []
        current = []
        for t in tokens[1:]:
            if t == t.upper():
                groups.append("".join(current))
                current = []
            else:
                current.append(t)
        if [len(s) for s in groups] != [i, j, k]:
            raise CrumbyFixtureException("path case row {!r} does not fit", row)
        vector = cls.model([0, i, j, 0, k, 0])
        sg = cls.instance(vector)
        colors = [None] * sg.expanded.vertex_count
        for v, c in zip((C, A, D, B), capitals):
            colors[v] = c.lower()
        for (u, w), group in zip(((C, A), (A, D), (D, B)), groups):
            for v, c in zip(sg.path_between(u, w)[1:-1], group):
                colors[v] = c
        return sg.expanded, cls.models_proxy.Coloring(colors)

    @classmethod
    def path_case_coloring(cls, i, j, k):
        """
        The frozen coloring of the instance whose intact edges AB, BC, CD
        form a path, with i, j, k internal vertices on CA, AD, DB

        :return: Coloring in canonical order
        """
        from crumby.models.services.fixture import FixtureService

        if not all(c in (0, 1, 2) for c in (i, j, k)):
            raise CrumbyGraphException(
                "path case counts must be 0..2, got {}", (i, j, k)
            )
        row = FixtureService.load_fixtures().get("k4_path_case", "%d %d %d" % (i, j, k))
        if row is None:
            raise CrumbyFixtureException("no path case row for {}", (i, j, k))
        return cls.path_case_from_row(i, j, k, row)[1]

    @classmethod
    def solve_k4_base(cls, vector, use_fixtures=True):
        """
        Exact search on an instance with every count at most 2, memoized;
        stored solutions are used when the fixture table holds them. Among
        the crumby colorings the first one every edge can grow from is kept,
        the first coloring otherwise.

        :param vector: K4SubdivisionVector
        :param use_fixtures:
        :return: Coloring
        """
        from crumby.models.services.fixture import FixtureService
        from crumby.models.services.oracle import OracleService

        if not vector.is_base():
            raise CrumbyGraphException("base vectors have counts <= 2, got {}", vector)
        if use_fixtures:
            stored = FixtureService.load_fixtures().get("k4_base", str(vector))
            if stored is not None:
                return cls.models_proxy.Coloring.from_string(stored)
        if vector in _base_solutions:
            return _base_solutions[vector]
        chosen = None
        for coloring in OracleService.solve_exact_all(cls.instance(vector).expanded):
            if chosen is None:
                chosen = coloring
            if cls.grows_from(vector, coloring, range(6)):
                chosen = coloring
                break
        if chosen is None:
            raise CrumbyConstructionException(
                "K4 base {} has no crumby coloring",
                str(vector),
                instance=cls._graph6(vector),
            )
        _base_solutions[vector] = chosen
        return chosen

    @classmethod
    def grows_from(cls, vector, coloring, edges):
        """
        True when one block can be inserted on each of the given edges of
        the instance colored by coloring, the edges taken in order

        :param vector: K4SubdivisionVector
        :param coloring: Coloring of the instance in canonical order
        :param edges: edge indices
        :return: bool
        """
        sg = cls.instance(vector)
        branch = [coloring[v] for v in (A, B, C, D)]
        sequences = [[coloring[v] for v in path] for path in sg.paths]
        counts = list(vector.counts)
        for edge in edges:
            result = cls._insert_block(counts, sequences, branch, edge)
            if result is None:
                return False
            counts, sequences = result
        return True

    @classmethod
    def _lifted_start(cls, vector, base):
        """
        Starting point for vectors the base coloring cannot grow to: every
        growing edge without internal vertices in the base gets three, and
        that instance is solved exactly

        :return: (K4SubdivisionVector, Coloring)
        """
        from crumby.models.services.oracle import OracleService

        counts = [
            3 if c == 0 and target > 0 else c
            for c, target in zip(base.counts, vector.counts)
        ]
        lifted = cls.model(counts)
        if lifted not in _lifted_solutions:
            outcome = OracleService.solve_exact(cls.instance(lifted).expanded)
            if outcome.status != SAT:
                raise CrumbyConstructionException(
                    "K4 instance {} has no crumby coloring",
                    str(lifted),
                    instance=cls._graph6(lifted),
                )
            _lifted_solutions[lifted] = outcome.coloring
        log.info("base %s cannot grow to %s, starting from %s", base, vector, lifted)
        return lifted, _lifted_solutions[lifted]

    @classmethod
    def _graph6(cls, vector):
        from crumby.models.services.graph import GraphService

        return GraphService.write_graph6(cls.instance(vector).expanded).decode("ascii")

    @classmethod
    def _assemble(cls, counts, sequences, branch):
        """ instance graph and coloring from per-edge color sequences """
        sg = cls.instance(cls.model(counts))
        colors = list(branch) + [None] * (sg.expanded.vertex_count - 4)
        for i, seq in enumerate(sequences):
            for v, c in zip(sg.paths[i][1:-1], seq[1:-1]):
                colors[v] = c
        return sg.expanded, cls.models_proxy.Coloring(colors)

    @classmethod
    def _try_insert(cls, counts, sequences, branch, edge, position, block):
        from crumby.models.services.verifier import VerifierService

        seq = sequences[edge]
        grown = seq[: position + 1] + list(block) + seq[position + 1 :]
        trial = list(sequences)
        trial[edge] = grown
        trial_counts = list(counts)
        trial_counts[edge] += 3
        g, coloring = cls._assemble(trial_counts, trial, branch)
        if VerifierService.verify_crumby(g, coloring).ok:
            return trial_counts, trial
        return None

    @classmethod
    def _primary_insertion(cls, seq):
        """ (position, block) the growth rule asks for on an edge """
        for p in range(len(seq) - 1):
            x, y = seq[p], seq[p + 1]
            if x == RED and y == BLUE:
                return p, "brr"
            if x == BLUE and y == RED:
                return p, "rrb"
        if seq[0] == RED:
            return 0, "rbr"
        return 0, "rrr"

    @classmethod
    def _insert_block(cls, counts, sequences, branch, edge):
        """ one block on edge, the growth rule first and every position after """
        position, block = cls._primary_insertion(sequences[edge])
        result = cls._try_insert(counts, sequences, branch, edge, position, block)
        if result is None:
            log.debug(
                "block %s on %s at %s fails, searching",
                block,
                K4_EDGE_NAMES[edge],
                position,
            )
            result = cls._search_insertion(counts, sequences, branch, edge)
        return result

    @classmethod
    def solve_k4_subdivision(cls, vector):
        """
        Crumby coloring of any subdivision of K4. Branch vertices keep their
        base colors; each added block goes between two differently colored
        neighbors, after an "rbr" block on an all red edge or an "rrr" block
        between two blue branch vertices. An intact edge of a red triangle
        takes no block, so such bases are replaced by a solved instance with
        three internal vertices on each growing intact edge.

        :param vector: K4SubdivisionVector
        :return: Coloring in canonical order
        """
        if not isinstance(vector, cls.model):
            vector = cls.model(vector)
        start = vector.reduced()
        start_coloring = cls.solve_k4_base(start)
        growing = [i for i in range(6) if vector.counts[i] > start.counts[i]]
        if not cls.grows_from(start, start_coloring, growing):
            start, start_coloring = cls._lifted_start(vector, start)
        sg = cls.instance(start)
        branch = [start_coloring[v] for v in (A, B, C, D)]
        sequences = [[start_coloring[v] for v in path] for path in sg.paths]
        counts = list(start.counts)
        for edge in range(6):
            while counts[edge] < vector.counts[edge]:
                result = cls._insert_block(counts, sequences, branch, edge)
                if result is None:
                    raise CrumbyConstructionException(
                        "no block insertion on {}",
                        K4_EDGE_NAMES[edge],
                        instance=cls._graph6(vector),
                    )
                counts, sequences = result
                log.debug("grew %s to %s", K4_EDGE_NAMES[edge], counts[edge])
        g, coloring = cls._assemble(counts, sequences, branch)
        return cls.finalize(g, coloring, phase="k4-expansion")

    @classmethod
    def _search_insertion(cls, counts, sequences, branch, edge):
        for position in range(len(sequences[edge]) - 1):
            for block in BLOCKS:
                result = cls._try_insert(
                    counts, sequences, branch, edge, position, block
                )
                if result is not None:
                    return result
        return None

    @classmethod
    def solve_subdivided(cls, g):
        """
        Colors a graph recognized as a K4 subdivision, mapping the canonical
        solution back through the detected branch vertices and paths

        :param g:
        :return: Coloring of g
        """
        from crumby.models.services.graph import GraphService

        sg = GraphService.detect_subdivision_structure(g)
        if sg.base_vertex_count != 4 or sg.base_edges != list(K4_EDGES):
            raise CrumbyGraphException("graph is not a subdivision of K4")
        vector = cls.model(sg.counts)
        canonical = cls.instance(vector)
        solution = cls.solve_k4_subdivision(vector)
        colors = [None] * g.vertex_count
        for i in range(6):
            for v, w in zip(sg.paths[i], canonical.paths[i]):
                colors[v] = solution[w]
        return cls.models_proxy.Coloring(colors)
