# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import itertools
import logging
from collections import deque

from crumby.exc import CrumbyGraphException
from crumby.models.coloring import BLUE, RED, Prescription
from crumby.models.services import BaseService
from crumby.models.tree_state import (
    BLUE_STATES,
    CENTERS,
    ROOT_STATES,
    STATE_ORDER,
    TreeState,
)

__all__ = ["TreeService"]

log = logging.getLogger(__name__)

CLOSED_RED = CENTERS + (TreeState.R_LEAF,)


class TreeService(BaseService):
    """
    Exact crumby coloring of subcubic trees by a bottom-up state machine.

    Red components of a colored tree are stars, so each vertex is described
    by its color and its role in its star (see TreeState). Tables hold the
    number of colorings of a subtree realizing each state, which makes the
    same pass usable for deciding, counting and reconstructing.
    """

    @classmethod
    def _check_tree(cls, t):
        from crumby.models.services.graph import GraphService

        if not GraphService.is_tree(t):
            raise CrumbyGraphException("graph is not a tree {}", t.edge_count)
        if not GraphService.is_subcubic(t):
            raise CrumbyGraphException(
                "tree is not subcubic, max degree {}", t.max_degree()
            )

    @classmethod
    def _root_for(cls, t, prescription):
        if len(prescription) == 1:
            return list(prescription)[0]
        return 0

    @classmethod
    def _rooted(cls, t, root):
        parent = {root: None}
        order = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in t.neighbors(v):
                if u not in parent:
                    parent[u] = v
                    order.append(u)
                    queue.append(u)
        children = dict(
            (v, [u for u in t.neighbors(v) if parent.get(u) == v and u != parent[v]])
            for v in order
        )
        return order, children

    @classmethod
    def _vertex_table(cls, allowed, child_tables):
        table = dict((s, 0) for s in TreeState)
        if BLUE in allowed:
            none_blue, one_blue = 1, 0
            for ct in child_tables:
                closed = sum(ct[s] for s in CLOSED_RED)
                free = ct[TreeState.B_FREE]
                none_blue, one_blue = (
                    none_blue * closed,
                    one_blue * closed + none_blue * free,
                )
            table[TreeState.B_FREE] = none_blue
            table[TreeState.B_PAIR] = one_blue
        if RED in allowed:
            pending = [1, 0, 0, 0]
            leaf = 0
            for ct in child_tables:
                blue = ct[TreeState.B_FREE] + ct[TreeState.B_PAIR]
                pend = ct[TreeState.R_PEND]
                center = sum(ct[s] for s in CENTERS)
                leaf = leaf * blue + pending[0] * center
                pending = [pending[0] * blue] + [
                    pending[k] * blue + pending[k - 1] * pend for k in range(1, 4)
                ]
            table[TreeState.R_PEND] = pending[0]
            for k in range(1, 4):
                table[TreeState.center(k)] = pending[k]
            table[TreeState.R_LEAF] = leaf
        return table

    @classmethod
    def _tables(cls, t, root, prescription):
        order, children = cls._rooted(t, root)
        tables = {}
        for v in reversed(order):
            allowed = (prescription[v],) if v in prescription else (RED, BLUE)
            tables[v] = cls._vertex_table(allowed, [tables[c] for c in children[v]])
        return order, children, tables

    @classmethod
    def tree_state_table(cls, t, root=None, prescription=None):
        """
        Feasible states per vertex, each relative to its subtree when the
        tree hangs from ``root``

        :param t: subcubic tree
        :param root: defaults to the prescribed vertex or 0
        :param prescription:
        :return: dict vertex -> set of TreeState
        """
        cls._check_tree(t)
        prescription = Prescription(prescription or {})
        if root is None:
            root = cls._root_for(t, prescription)
        _, _, tables = cls._tables(t, root, prescription)
        return dict(
            (v, set(s for s, count in table.items() if count))
            for v, table in tables.items()
        )

    @classmethod
    def count_tree_colorings(cls, t, prescription=None):
        """ number of crumby colorings of t extending the prescription """
        cls._check_tree(t)
        prescription = Prescription(prescription or {})
        root = cls._root_for(t, prescription)
        _, _, tables = cls._tables(t, root, prescription)
        return sum(tables[root][s] for s in ROOT_STATES)

    @classmethod
    def solve_tree(cls, t, prescription=None):
        """
        Crumby coloring of a subcubic tree honoring any prescription, or None
        when there is none. Reconstruction prefers red at the root and then
        the fixed state order for every child.

        :param t:
        :param prescription:
        :return: Coloring or None
        """
        cls._check_tree(t)
        prescription = Prescription(prescription or {})
        prescription.check_vertices(t)
        root = cls._root_for(t, prescription)
        order, children, tables = cls._tables(t, root, prescription)
        root_state = None
        for s in STATE_ORDER:
            if s in ROOT_STATES and tables[root][s]:
                root_state = s
                break
        if root_state is None:
            log.debug("tree has no crumby coloring for %s", dict(prescription))
            return None
        state = {root: root_state}
        for v in order:
            kids = children[v]
            picked = cls._pick_children(state[v], [tables[c] for c in kids])
            for c, s in zip(kids, picked):
                state[c] = s
        colors = [RED if state[v].is_red else BLUE for v in t.vertices()]
        return cls.model(colors)

    @classmethod
    def _first(cls, table, states):
        for s in STATE_ORDER:
            if s in states and table[s]:
                return s
        return None

    @classmethod
    def _pick_children(cls, s, tables):
        m = len(tables)
        if s in BLUE_STATES:
            slots = [()] if s == TreeState.B_FREE else [(j,) for j in range(m)]
            special = (TreeState.B_FREE,)
            other = CLOSED_RED
        elif s == TreeState.R_LEAF:
            slots = [(j,) for j in range(m)]
            special = CENTERS
            other = BLUE_STATES
        else:
            k = 0 if s == TreeState.R_PEND else CENTERS.index(s) + 1
            slots = list(itertools.combinations(range(m), k))
            special = (TreeState.R_PEND,)
            other = BLUE_STATES
        for slot in slots:
            picked = [
                cls._first(tables[j], special if j in slot else other) for j in range(m)
            ]
            if all(p is not None for p in picked):
                return picked
        raise CrumbyGraphException("inconsistent tree table at state {}", s.value)
