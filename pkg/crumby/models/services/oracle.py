# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import itertools
import logging
from collections import deque

from crumby.exc import CrumbyBudgetException, CrumbyConstructionException
from crumby.models.coloring import BLUE, RED, Prescription
from crumby.models.outcome import BUDGET_EXCEEDED, SAT, UNSAT, OracleOutcome
from crumby.models.report import RED_P4
from crumby.models.services import BaseService
from crumby.utils import as_int_list

__all__ = ["OracleService"]

log = logging.getLogger(__name__)


class _BudgetStop(Exception):
    pass


class _Search(object):
    """
    Backtracking over unprescribed vertices in breadth-first order from
    vertex 0, red before blue. A partial assignment is cut as soon as a blue
    vertex has two blue neighbors, a red vertex with every neighbor assigned
    has no red neighbor, or the assigned red component around the last
    vertex is neither a star nor a triangle. A red vertex whose last free
    neighbor is the only way to give it a red neighbor forces that neighbor
    red.
    """

    def __init__(self, g, prescription, budget, order):
        self.g = g
        self.budget = budget
        self.nodes = 0
        self.colors = [None] * g.vertex_count
        for v, c in prescription.items():
            self.colors[v] = c
        self.order = [v for v in order if v not in prescription]

    def prescription_ok(self):
        return all(
            self.ok_around(v) for v in range(self.g.vertex_count) if self.colors[v]
        )

    def ok_around(self, v):
        g, colors = self.g, self.colors
        for w in (v,) + tuple(g.neighbors(v)):
            cw = colors[w]
            if cw is None:
                continue
            same = free = 0
            for u in g.neighbors(w):
                cu = colors[u]
                if cu is None:
                    free += 1
                elif cu == cw:
                    same += 1
            if cw == BLUE and same > 1:
                return False
            if cw == RED and not same and not free:
                return False
        if colors[v] == RED:
            return self.red_component_ok(v)
        return True

    def red_component_ok(self, v):
        g, colors = self.g, self.colors
        comp = set([v])
        stack = [v]
        while stack:
            w = stack.pop()
            for u in g.neighbors(w):
                if colors[u] == RED and u not in comp:
                    comp.add(u)
                    stack.append(u)
        if len(comp) <= 3:
            return True
        degrees = [len([u for u in g.neighbors(w) if u in comp]) for w in comp]
        return sum(degrees) == 2 * (len(comp) - 1) and max(degrees) == len(comp) - 1

    def forced_red(self, v):
        g, colors = self.g, self.colors
        for w in g.neighbors(v):
            if colors[w] != RED:
                continue
            if any(colors[u] == RED for u in g.neighbors(w)):
                continue
            if [u for u in g.neighbors(w) if colors[u] is None] == [v]:
                return True
        return False

    def run(self, i=0):
        if i == len(self.order):
            yield tuple(self.colors)
            return
        v = self.order[i]
        for color in (RED, BLUE):
            if color == BLUE and self.forced_red(v):
                continue
            self.nodes += 1
            if self.nodes > self.budget:
                raise _BudgetStop()
            self.colors[v] = color
            if self.ok_around(v):
                for found in self.run(i + 1):
                    yield found
        self.colors[v] = None


class OracleService(BaseService):
    """
    Exact decision, enumeration and counting of crumby colorings for small
    graphs
    """

    @classmethod
    def _budget(cls, budget):
        if budget is None:
            budget = cls.setting("budget", 10 ** 8)
        return int(budget)

    @classmethod
    def _prepare(cls, g, prescription):
        prescription = Prescription(prescription or {})
        prescription.check_vertices(g)
        return prescription

    @classmethod
    def _new_search(cls, g, prescription, budget):
        from crumby.models.services.graph import GraphService

        return _Search(g, prescription, budget, GraphService.bfs_order(g))

    @classmethod
    def solve_exact(cls, g, prescription=None, budget=None):
        """
        Finds the first crumby coloring extending the prescription. Components
        are searched independently and share the node budget.

        :param g:
        :param prescription: optional mapping vertex -> color
        :param budget: node limit, defaults to the crumby.budget setting
        :return: OracleOutcome
        """
        from crumby.models.services.graph import GraphService

        prescription = cls._prepare(g, prescription)
        budget = cls._budget(budget)
        colors = [None] * g.vertex_count
        nodes = 0
        for comp in GraphService.components(g):
            sub, order = GraphService.subgraph(g, comp)
            index = dict((v, i) for i, v in enumerate(order))
            local = Prescription(
                (index[v], c) for v, c in prescription.items() if v in index
            )
            search = cls._new_search(sub, local, budget - nodes)
            found = None
            try:
                if search.prescription_ok():
                    found = next(search.run(), None)
            except _BudgetStop:
                nodes += search.nodes
                log.info("oracle budget of %s nodes exceeded", budget)
                return OracleOutcome(BUDGET_EXCEEDED, None, nodes)
            nodes += search.nodes
            if found is None:
                return OracleOutcome(UNSAT, None, nodes)
            for i, c in enumerate(found):
                colors[order[i]] = c
        return OracleOutcome(SAT, cls.model(colors), nodes)

    @classmethod
    def solve_exact_all(cls, g, prescription=None, budget=None):
        """
        Streams every crumby coloring extending the prescription, in search
        order

        :param g:
        :param prescription:
        :param budget:
        :return: generator of Coloring
        """
        prescription = cls._prepare(g, prescription)
        search = cls._new_search(g, prescription, cls._budget(budget))
        if not search.prescription_ok():
            return
        try:
            for colors in search.run():
                yield cls.model(colors)
        except _BudgetStop:
            raise CrumbyBudgetException(
                "enumeration exceeded {} nodes", search.budget, nodes=search.nodes
            )

    @classmethod
    def count_colorings(cls, g, prescription=None, budget=None):
        """
        Exact number of crumby colorings (labeled), the product of the
        per-component counts

        :param g:
        :param prescription:
        :param budget:
        :return: int
        """
        from crumby.models.services.graph import GraphService

        prescription = cls._prepare(g, prescription)
        budget = cls._budget(budget)
        total = 1
        nodes = 0
        for comp in GraphService.components(g):
            sub, order = GraphService.subgraph(g, comp)
            index = dict((v, i) for i, v in enumerate(order))
            local = Prescription(
                (index[v], c) for v, c in prescription.items() if v in index
            )
            search = cls._new_search(sub, local, budget - nodes)
            count = 0
            try:
                if search.prescription_ok():
                    for _ in search.run():
                        count += 1
            except _BudgetStop:
                raise CrumbyBudgetException(
                    "counting exceeded {} nodes", budget, nodes=nodes + search.nodes
                )
            nodes += search.nodes
            total *= count
            if not total:
                return 0
        return total

    @classmethod
    def brute_force_colorings(cls, g, prescription=None):
        """
        Reference enumerator without pruning: tries all 2^n colorings and
        keeps the verified ones

        :param g:
        :param prescription:
        :return: generator of Coloring
        """
        from crumby.models.services.verifier import VerifierService

        prescription = cls._prepare(g, prescription)
        for colors in itertools.product((RED, BLUE), repeat=g.vertex_count):
            coloring = cls.model(colors)
            if not coloring.extends(prescription):
                continue
            if VerifierService.verify_crumby(g, coloring).ok:
                yield coloring

    @classmethod
    def ball(cls, g, seeds, radius):
        """ vertices within ``radius`` steps of any seed """
        dist = dict((v, 0) for v in seeds)
        queue = deque(seeds)
        while queue:
            v = queue.popleft()
            if dist[v] == radius:
                continue
            for u in g.neighbors(v):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return set(dist)

    @classmethod
    def repair(cls, g, coloring, prescription=None, phase=None):
        """
        Local repair of an invalid coloring: frees the vertices near the
        violations, keeps every other color fixed and searches exactly,
        growing the radius through crumby.repair_radii and finally freeing
        the whole graph

        :param g:
        :param coloring:
        :param prescription:
        :param phase: name of the construction being repaired
        :return: Coloring
        """
        from crumby.models.services.graph import GraphService
        from crumby.models.services.verifier import VerifierService

        prescription = cls._prepare(g, prescription)
        report = VerifierService.verify_crumby(g, coloring)
        seeds = set(report.witness_vertices())
        red_components = VerifierService.color_components(g, coloring, RED)
        for violation in report.violations:
            if violation.kind == RED_P4:
                for comp in red_components:
                    if violation.witness[0] in comp:
                        seeds.update(comp)
        seeds.update(v for v, c in prescription.items() if coloring[v] != c)
        radii = as_int_list(cls.setting("repair_radii", "1,2,3,5,8"))
        budget = cls._budget(None)
        for radius in radii + [None]:
            if radius is None:
                free = set(g.vertices())
            else:
                free = cls.ball(g, sorted(seeds), radius)
            fixed = Prescription(
                (v, coloring[v]) for v in g.vertices() if v not in free
            )
            fixed.update(prescription)
            outcome = cls.solve_exact(g, fixed, budget)
            if outcome.status == SAT:
                log.info(
                    "repaired %s coloring with radius %s (%s nodes)",
                    phase,
                    "all" if radius is None else radius,
                    outcome.nodes,
                )
                return outcome.coloring
            if outcome.status == BUDGET_EXCEEDED and radius is None:
                raise CrumbyBudgetException(
                    "repair of {} exceeded the node budget", phase, nodes=outcome.nodes
                )
        raise CrumbyConstructionException(
            "{} coloring cannot be repaired, no crumby coloring exists",
            phase,
            instance=GraphService.write_graph6(g).decode("ascii"),
        )
