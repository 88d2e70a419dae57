# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import itertools
import logging

from crumby.exc import (
    CrumbyBudgetException,
    CrumbyConstructionException,
    CrumbyGraphException,
)
from crumby.models.coloring import BLUE, RED
from crumby.models.matching import UNSATURATED
from crumby.models.patterns import PathPattern, PatternPurpose
from crumby.models.services import BaseService

__all__ = ["SubdivisionService"]

log = logging.getLogger(__name__)

SINGLETON = PatternPurpose.ENDPOINTS_SINGLETON_RED
IN_K2 = PatternPurpose.ENDPOINTS_IN_RED_K2
MIXED = PatternPurpose.MIXED_SINGLETON_AND_K2

DEEP_PATTERNS = {
    2: "rr",
    3: "rrr",
    4: "rrrb",
    5: "rrbrr",
    6: "rrrbrr",
    7: "rrbbrrr",
    8: "rrbrrbrr",
}

_pattern_cache = {}
_edge_cache = {}

# admissible lengths of the runs strictly between the two ends of an edge
RUN_LENGTHS = {RED: (2, 3), BLUE: (1, 2)}


class SubdivisionService(BaseService):
    """
    Constructive colorings of subdivided graphs: one internal vertex per
    edge of a cubic graph, at least two per edge of a cubic graph, and at
    least one per edge of any subcubic graph
    """

    @classmethod
    def path_pattern(cls, k, purpose):
        """
        Coloring of a path on k vertices whose red ends serve a purpose.
        Lengths up to 8 come from the path pattern table, longer ones are
        built from k - 3 and searched for when that fails.

        :param k: number of vertices, at least 3
        :param purpose: PatternPurpose
        :return: PathPattern
        """
        from crumby.models.services.fixture import FixtureService
        from crumby.models.services.verifier import VerifierService

        purpose = PatternPurpose.from_name(purpose)
        if k < 3:
            raise CrumbyGraphException("path patterns need k >= 3, got {}", k)
        key = (k, purpose)
        if key in _pattern_cache:
            return _pattern_cache[key]
        cell = FixtureService.load_fixtures().get(
            "path_patterns", "%d %s" % (k, purpose.value)
        )
        if cell is not None:
            result = PathPattern(k, purpose, cell.lower(), cell == cell.lower())
        else:
            result = None
            shorter = cls.path_pattern(k - 3, purpose)
            if shorter.attainable:
                if purpose == SINGLETON:
                    colors = shorter.colors[0] + "brr" + shorter.colors[1:]
                else:
                    colors = "rrb" + shorter.colors
                if VerifierService.validate_pattern(colors, purpose):
                    result = PathPattern(k, purpose, colors, True)
            if result is None:
                colors = cls.search_path_pattern(k, purpose)
                if colors is None:
                    raise CrumbyConstructionException(
                        "no path pattern for {}", (k, purpose.value)
                    )
                log.debug("path pattern %s %s found by search", k, purpose.value)
                result = PathPattern(k, purpose, colors, True)
        _pattern_cache[key] = result
        return result

    @classmethod
    def search_path_pattern(cls, k, purpose):
        """
        First valid pattern in r-before-b order, pruning prefixes that
        already hold three blues in a row, an isolated inner red or four
        reds in a row

        :param k:
        :param purpose:
        :return: color string or None
        """
        from crumby.models.services.verifier import VerifierService

        stack = [RED]
        while stack:
            prefix = stack.pop()
            tail = prefix[-4:]
            if "bbb" in tail or "rrrr" in tail or (
                len(prefix) >= 3 and prefix[-3:] == "brb"
            ):
                continue
            if len(prefix) == k:
                if VerifierService.validate_pattern(prefix, purpose):
                    return prefix
                continue
            stack.append(prefix + BLUE)
            stack.append(prefix + RED)
        return None

    @classmethod
    def deep_pattern(cls, count):
        """
        Internal colors of an edge with at least two subdivision vertices
        between blue ends; only count 4 leaves a blue next to an end
        """
        if count < 2:
            raise CrumbyGraphException("deep patterns need count >= 2, got {}", count)
        if count in DEEP_PATTERNS:
            return DEEP_PATTERNS[count]
        return "rrb" + cls.deep_pattern(count - 3)

    @classmethod
    def _paint(cls, colors, path, pattern):
        for v, c in zip(path, pattern):
            colors[v] = c

    @classmethod
    def _cubic_base(cls, sg):
        return sg.base_vertex_count > 0 and all(
            sg.base_degree(v) == 3 for v in range(sg.base_vertex_count)
        )

    @classmethod
    def solve_one_subdivision(cls, sg):
        """
        1-subdivision of a cubic graph: base vertices red, internal vertices
        blue, then internal vertices of a matching structure recolored red.
        Without a perfect matching the Edmonds-Gallai decomposition supplies
        matchings inside even components, onto B and inside saturated odd
        components; every unsaturated odd component H gets a perfect
        matching of H - x and the edge from x to a neighbor y, which turns
        blue.

        :param sg: SubdividedGraph
        :return: Coloring
        """
        from crumby.models.services.matching import MatchingService

        if not (sg.is_simple_base and cls._cubic_base(sg) and set(sg.counts) <= {1}):
            raise CrumbyGraphException(
                "not a 1-subdivision of a cubic graph {}", sg.counts
            )
        base = sg.base
        g = sg.expanded
        colors = [BLUE] * g.vertex_count
        for v in sg.branch_vertices:
            colors[v] = RED

        def middle(u, v):
            return sg.path_between(u, v)[1]

        def recolor(matching):
            for u, v in matching.edges:
                colors[middle(u, v)] = RED

        d = MatchingService.edmonds_gallai(base)
        if d.matching.is_perfect(base.vertex_count):
            log.debug("1-subdivision base has a perfect matching")
            recolor(d.matching)
        else:
            for comp in d.even_components:
                recolor(MatchingService.perfect_matching(base, comp))
            hall = MatchingService.hall_matching_onto_B(d)
            for b in sorted(hall):
                colors[middle(b, d.matching.mate(b))] = RED
            for role in d.roles():
                comp = d.odd_components[role.component]
                if role.role == UNSATURATED:
                    x = comp[0]
                else:
                    x = d.matching.mate(role.partner)
                rest = [v for v in comp if v != x]
                recolor(MatchingService.perfect_matching(base, rest))
                if role.role == UNSATURATED:
                    inside = [u for u in base.neighbors(x) if u in comp]
                    y = min(inside or base.neighbors(x))
                    colors[middle(x, y)] = RED
                    colors[sg.branch_vertices[y]] = BLUE
                    log.debug("unsaturated component at %s uses edge %s-%s", x, x, y)
        return cls.finalize(
            g, cls.models_proxy.Coloring(colors), phase="one-subdivision"
        )

    @classmethod
    def solve_deep_subdivision(cls, sg):
        """
        Every edge of a cubic graph subdivided at least twice: base vertices
        blue, fixed internal patterns, then every blue vertex with two or
        three blue neighbors is turned red with local recoloring around it

        :param sg: SubdividedGraph
        :return: Coloring
        """
        if not (cls._cubic_base(sg) and min(sg.counts) >= 2):
            raise CrumbyGraphException(
                "not a deep subdivision of a cubic graph {}", sg.counts
            )
        g = sg.expanded
        colors = [None] * g.vertex_count
        for v in sg.branch_vertices:
            colors[v] = BLUE
        blue_ends = [0] * sg.base_vertex_count
        for i, (u, v) in enumerate(sg.base_edges):
            count = sg.counts[i]
            pattern = cls.deep_pattern(count)
            internals = list(sg.internal_vertices(i))
            if count == 4 and blue_ends[u] < blue_ends[v]:
                # blue end next to u
                internals.reverse()
                blue_ends[u] += 1
            elif count == 4:
                blue_ends[v] += 1
            cls._paint(colors, internals, pattern)

        for c in sorted(sg.branch_vertices):
            blue = [u for u in g.neighbors(c) if colors[u] == BLUE]
            if len(blue) < 2:
                continue
            red = [u for u in g.neighbors(c) if colors[u] == RED]
            colors[c] = RED
            if len(blue) == 3 or cls._ends_red_p3(g, colors, red[0], c):
                n1 = blue[0]
                n2 = [u for u in g.neighbors(n1) if u != c][0]
                colors[n1] = RED
                colors[n2] = BLUE
                if len(blue) == 2:
                    colors[red[0]] = BLUE
            log.debug("blue star at %s recolored", c)
        return cls.finalize(
            g, cls.models_proxy.Coloring(colors), phase="deep-subdivision"
        )

    @classmethod
    def _ends_red_p3(cls, g, colors, v, exclude):
        """ v is red and the end of a red path on three vertices, ignoring exclude """
        reds = [u for u in g.neighbors(v) if colors[u] == RED and u != exclude]
        return any(
            [w for w in g.neighbors(u) if colors[w] == RED and w != v] for u in reds
        )

    @classmethod
    def solve_genuine_subdivision(cls, sg):
        """
        Every base edge carries at least one internal vertex (edges at base
        leaves may carry none). Each base vertex gets an end state on every
        incident edge, its color and the length of the one-colored run
        starting at it along the edge, and every edge is then colored from
        the states at its two ends. The states first tried follow a maximum
        matching: base vertices red, in a red K2 along their matching edge
        (the red P3 "rrr" on edges with one internal vertex) and red
        singletons towards the other edges, vertices the matching misses
        turning blue when all their edges carry one internal vertex. Base
        vertices those states leave without a red neighbor, or with a path
        the end states cannot color, get the correction states: blue, or a
        red K2 or red P3 along another edge.

        :param sg: SubdividedGraph
        :return: Coloring
        """
        from crumby.models.services.graph import GraphService
        from crumby.models.services.matching import MatchingService
        from crumby.models.services.tree import TreeService

        g = sg.expanded
        if g.max_degree() > 3:
            raise CrumbyGraphException("base is not subcubic {}", g.max_degree())
        for i, (u, v) in enumerate(sg.base_edges):
            if sg.counts[i] == 0 and sg.base_degree(u) != 1 and sg.base_degree(v) != 1:
                raise CrumbyGraphException("base edge {} is not subdivided", (u, v))

        colors = [None] * g.vertex_count
        base_edges = [(u, v) for u, v in sg.base_edges if u != v]
        simple_base = GraphService.model.from_edges(
            sg.base_vertex_count, sorted(set(base_edges))
        )
        branch = sg.branch_vertices

        solved = set()
        for comp in GraphService.components(simple_base):
            edges = [
                i for i, (u, _) in enumerate(sg.base_edges) if u in comp
            ]
            if len(comp) == 1 and not edges:
                colors[branch[comp[0]]] = BLUE
                solved.update(comp)
            elif len(comp) == 2 and len(edges) == 1:
                path = sg.paths[edges[0]]
                sub, order = GraphService.subgraph(g, path)
                solution = TreeService.solve_tree(sub)
                for j, v in enumerate(order):
                    colors[v] = solution[j]
                solved.update(comp)
                log.debug("base component %s is a single path", comp)

        d = MatchingService.edmonds_gallai(simple_base)
        matched = {}
        for u, v in d.matching.edges:
            if u not in solved:
                matched[u] = matched[v] = sg.edge_index(u, v)
        exposed = set(
            role.exposed
            for role in d.roles()
            if role.role == UNSATURATED and role.exposed is not None
        ) - solved

        order = [w for w in GraphService.bfs_order(simple_base) if w not in solved]
        choices = dict(
            (w, cls.end_states(sg, w, cls._first_state(sg, w, matched, exposed)))
            for w in order
        )
        states = _EndStateSearch(sg, order, choices, cls._budget()).run()
        if states is None:
            raise CrumbyConstructionException(
                "no end states color the genuine subdivision",
                instance=GraphService.write_graph6(g).decode("ascii"),
            )
        corrected = [w for w in order if states[w] != choices[w][0]]
        if corrected:
            log.debug("corrected base vertices %s", corrected)
        for w in order:
            colors[branch[w]] = states[w][0]
        for i, (u, v) in enumerate(sg.base_edges):
            if u in solved:
                continue
            edge = cls.edge_colors(
                sg.counts[i],
                _end_state(sg, states, i, 0),
                _end_state(sg, states, i, 1),
            )
            cls._paint(colors, sg.internal_vertices(i), edge[1:-1])
        for w in order:
            v = branch[w]
            if colors[v] == RED and not any(colors[u] == RED for u in g.neighbors(v)):
                raise CrumbyConstructionException(
                    "base vertex {} left as a red singleton",
                    w,
                    instance=GraphService.write_graph6(g).decode("ascii"),
                )
        return cls.finalize(
            g, cls.models_proxy.Coloring(colors), phase="genuine-subdivision"
        )

    @classmethod
    def _budget(cls):
        return int(cls.setting("budget", 10 ** 8))

    @classmethod
    def _first_state(cls, sg, w, matched, exposed):
        """ the end states of w the matching construction asks for """
        ends = _ends(sg, w)
        if w in exposed and all(sg.counts[i] == 1 for i, _ in ends):
            return BLUE, tuple(1 for _ in ends)
        if w in matched:
            i = matched[w]
            run = 3 if sg.counts[i] == 1 else 2
            return RED, tuple(run if j == i else 1 for j, _ in ends)
        return RED, tuple(2 for _ in ends)

    @classmethod
    def end_states(cls, sg, w, first=None):
        """
        Every admissible state of base vertex w: a color and one run length
        per edge end at w. A red vertex has its red neighbors as leaves of a
        star around it (runs 2) or is the end of one red P3 (a single run
        3); a blue vertex has at most one blue neighbor (a single run 2).

        :param sg: SubdividedGraph
        :param w: base vertex
        :param first: state tried first
        :return: list of (color, tuple of runs)
        """
        n = len(_ends(sg, w))
        states = [first] if first is not None else []
        for size in range(1, n + 1):
            for leaves in itertools.combinations(range(n), size):
                states.append((RED, tuple(2 if j in leaves else 1 for j in range(n))))
        for j in range(n):
            states.append((RED, tuple(3 if k == j else 1 for k in range(n))))
        states.append((BLUE, (1,) * n))
        for j in range(n):
            states.append((BLUE, tuple(2 if k == j else 1 for k in range(n))))
        result = []
        for state in states:
            if state not in result and _state_ok(state):
                result.append(state)
        return result

    @classmethod
    def edge_colors(cls, count, start, end):
        """
        Colors along a base edge with count internal vertices, both base
        vertices included, given the (color, run) states at its two ends.
        Runs between the ends are red of length 2 or 3 and blue of length 1
        or 2. Red ends of runs 1 and 2 take the cell of the path pattern
        table when it fits.

        :param count: internal vertices
        :param start: (color, run) at the first end
        :param end: (color, run) at the second end
        :return: color string of length count + 2 or None
        """
        key = (count, start, end)
        if key not in _edge_cache:
            _edge_cache[key] = cls._edge_colors(count, start, end)
        return _edge_cache[key]

    @classmethod
    def _edge_colors(cls, count, start, end):
        k = count + 2
        (first, a), (last, b) = start, end
        if a + b > k:
            single = a == b == k and (
                (first == RED and k in (2, 3)) or (first == BLUE and k == 2)
            )
            return first * k if single and first == last else None
        if first == RED and last == RED and max(a, b) <= 2 and 3 <= k <= 8:
            purpose = {(1, 1): SINGLETON, (2, 2): IN_K2}.get((a, b), MIXED)
            cell = cls.path_pattern(k, purpose)
            for colors in (cell.colors, cell.colors[::-1]):
                runs = _runs(colors) if cell.attainable else None
                if runs and runs[0] == (RED, a) and runs[-1] == (RED, b):
                    return colors
        middle = _middle_runs(k - a - b, _other(first), _other(last))
        if middle is None:
            return None
        return first * a + "".join(c * n for c, n in middle) + last * b


def _other(color):
    return BLUE if color == RED else RED


def _runs(colors):
    """ (color, length) runs of a color string, None when a middle run breaks
    the red 2..3 or blue 1..2 bounds """
    runs = []
    for c in colors:
        if runs and runs[-1][0] == c:
            runs[-1] = (c, runs[-1][1] + 1)
        else:
            runs.append((c, 1))
    for c, n in runs[1:-1]:
        if n not in RUN_LENGTHS[c]:
            return None
    return runs


def _middle_runs(total, first, last):
    """ alternating runs from first to last color filling total vertices """
    if total == 0:
        return [] if first != last else None
    for n in range(1, total + 1):
        if (n % 2 == 1) != (first == last):
            continue
        colors = [first if j % 2 == 0 else _other(first) for j in range(n)]
        low = sum(RUN_LENGTHS[c][0] for c in colors)
        high = sum(RUN_LENGTHS[c][-1] for c in colors)
        if low > total:
            return None
        if total > high:
            continue
        lengths = [RUN_LENGTHS[c][0] for c in colors]
        extra = total - low
        for j, c in enumerate(colors):
            grow = min(extra, RUN_LENGTHS[c][-1] - lengths[j])
            lengths[j] += grow
            extra -= grow
        return list(zip(colors, lengths))
    return None


def _ends(sg, w):
    """ (edge, side) pairs of the edge ends at base vertex w """
    return [
        (i, side)
        for i, pair in enumerate(sg.base_edges)
        for side in (0, 1)
        if pair[side] == w
    ]


def _end_state(sg, states, i, side):
    w = sg.base_edges[i][side]
    color, runs = states[w]
    return color, runs[_ends(sg, w).index((i, side))]


def _state_ok(state):
    color, runs = state
    if color == BLUE:
        return runs.count(2) <= 1
    leaves, p3 = runs.count(2), runs.count(3)
    return (leaves >= 1 and p3 == 0) or (p3 == 1 and leaves == 0)


class _EndStateSearch(object):
    """
    Backtracking over the end states of the base vertices in the given
    order, checking every edge once both of its ends are set and looking
    one step ahead at the unset neighbors
    """

    def __init__(self, sg, order, choices, budget):
        self.sg = sg
        self.order = order
        self.choices = choices
        self.budget = budget
        self.nodes = 0
        self.states = {}
        self.ends = dict((w, _ends(sg, w)) for w in order)

    def neighbors(self, w):
        return set(self.sg.base_edges[i][1 - side] for i, side in self.ends[w])

    def state_at(self, w, i, side):
        color, runs = self.states[w]
        return color, runs[self.ends[w].index((i, side))]

    def fits(self, w, state):
        """ state of w agrees with the states already set around it """
        color, runs = state
        for (i, side), run in zip(self.ends[w], runs):
            other = self.sg.base_edges[i][1 - side]
            if other == w:
                theirs = (color, runs[self.ends[w].index((i, 1 - side))])
            elif other in self.states:
                theirs = self.state_at(other, i, 1 - side)
            else:
                continue
            pair = ((color, run), theirs) if side == 0 else (theirs, (color, run))
            if SubdivisionService.edge_colors(self.sg.counts[i], *pair) is None:
                return False
        return True

    def run(self, i=0):
        if i == len(self.order):
            return dict(self.states)
        w = self.order[i]
        for state in self.choices[w]:
            self.nodes += 1
            if self.nodes > self.budget:
                raise CrumbyBudgetException(
                    "end state search exceeded {} nodes", self.budget, nodes=self.nodes
                )
            if not self.fits(w, state):
                continue
            self.states[w] = state
            ahead = all(
                any(self.fits(u, s) for s in self.choices[u])
                for u in self.neighbors(w)
                if u not in self.states
            )
            if ahead:
                found = self.run(i + 1)
                if found is not None:
                    return found
            del self.states[w]
        return None
