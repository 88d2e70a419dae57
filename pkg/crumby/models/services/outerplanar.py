# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import logging

import networkx as nx

from crumby.exc import CrumbyConstructionException, CrumbyGraphException
from crumby.models.coloring import BLUE, RED, normalize_color, opposite
from crumby.models.embedding import ColoringState, Ear
from crumby.models.services import BaseService
from crumby.utils import as_bool

__all__ = ["OuterplanarService"]

log = logging.getLogger(__name__)

ANY = ()
X_FREE = ("x_free",)
X_P3 = ("x_p3",)
Y_SINGLETON = ("y_singleton",)
Y_K2 = ("y_k2",)

# colors of (x, z_1, ..., z_l, y) for an ear with red x, first matching row wins
EAR_LEDGER = {
    (1, "rb"): [(X_FREE, "rrb"), (Y_SINGLETON, "rbb"), (ANY, "brr")],
    (1, "rr"): [(ANY, "rbr")],
    (2, "rb"): [
        (X_P3 + Y_SINGLETON, "brrb"),
        (X_P3 + Y_K2, "brrr"),
        (X_FREE + Y_SINGLETON, "rrbb"),
        (X_FREE + Y_K2, "rrbr"),
    ],
    (2, "rr"): [(ANY, "rrbr")],
    (3, "rb"): [(ANY, "rbrrb")],
    (3, "rr"): [(ANY, "rrbbr")],
    (4, "rb"): [(ANY, "rbrrrb")],
    (4, "rr"): [(ANY, "rbrrbr")],
    (5, "rb"): [
        (X_P3 + Y_SINGLETON, "brrbrrb"),
        (X_P3 + Y_K2, "brrbrrr"),
        (X_FREE, "rrbrrrb"),
    ],
    (5, "rr"): [(ANY, "rbrrrbr")],
    (6, "rb"): [(ANY, "rbrrbrrb")],
    (6, "rr"): [(ANY, "rrbrrrbr")],
}

MERGED_EAR_PATTERNS = {1: "r", 2: "rr", 3: "rrb", 4: "rbrr", 5: "rrbrr", 6: "rrbrrr"}

K2, K13, OTHER = "K2", "K13", "other"


def _edge(u, v):
    return (min(u, v), max(u, v))


class OuterplanarService(BaseService):
    """
    Ear-by-ear colorings of 2-connected subcubic outerplanar graphs with one
    prescribed vertex, cycles with attached trees and tree attachment
    """

    @classmethod
    def embed_outerplanar(cls, g):
        """
        Outer cycle, chords, bounded faces and their adjacency. The outer
        cycle is read from the rotation around an apex joined to every
        vertex, and starts at vertex 0 heading to its smaller cycle neighbor.

        :param g:
        :return: OuterplanarEmbedding
        """
        from crumby.models.services.graph import GraphService

        if not GraphService.is_two_connected(g):
            raise CrumbyGraphException("graph is not 2-connected")
        apexed = GraphService.with_apex(g)
        is_planar, embedding = nx.check_planarity(apexed)
        if not is_planar:
            raise CrumbyGraphException("graph is not outerplanar")
        cycle = list(embedding.neighbors_cw_order(g.vertex_count))
        start = cycle.index(0)
        cycle = cycle[start:] + cycle[:start]
        if len(cycle) > 2 and cycle[-1] < cycle[1]:
            cycle = [cycle[0]] + cycle[1:][::-1]
        n = len(cycle)
        cycle_edges = set(_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n))
        if not all(g.has_edge(u, v) for u, v in cycle_edges):
            raise CrumbyGraphException("no outer hamiltonian cycle {}", cycle)
        chords = [e for e in g.edges() if e not in cycle_edges]

        faces = []
        polygons = [cycle]
        while polygons:
            polygon = polygons.pop()
            position = dict((v, i) for i, v in enumerate(polygon))
            split = None
            for u, v in chords:
                if u in position and v in position:
                    i, j = sorted((position[u], position[v]))
                    if j - i not in (1, len(polygon) - 1):
                        split = (i, j)
                        break
            if split is None:
                faces.append(polygon)
                continue
            i, j = split
            polygons.append(polygon[i:j + 1])
            polygons.append(polygon[j:] + polygon[:i + 1])
        faces = [cls._rotate_to_min(f) for f in faces]
        faces.sort(key=lambda f: sorted(f))

        chord_set = set(chords)
        dual = dict((i, []) for i in range(len(faces)))
        for i in range(len(faces)):
            for j in range(i + 1, len(faces)):
                common = set(faces[i]) & set(faces[j])
                if len(common) == 2 and tuple(sorted(common)) in chord_set:
                    dual[i].append(j)
                    dual[j].append(i)
        log.debug("outerplanar embedding with %s faces", len(faces))
        return cls.models_proxy.OuterplanarEmbedding(g, cycle, chords, faces, dual)

    @classmethod
    def _rotate_to_min(cls, face):
        i = face.index(min(face))
        return face[i:] + face[:i]

    @classmethod
    def _face_edges(cls, face):
        n = len(face)
        return [_edge(face[i], face[(i + 1) % n]) for i in range(n)]

    @classmethod
    def _face_chords(cls, e, f):
        chords = set(e.chords)
        return [c for c in cls._face_edges(e.inner_faces[f]) if c in chords]

    @classmethod
    def _walk_between(cls, face, a, b):
        """ face vertices from a to b the long way round, both ends included """
        n = len(face)
        i = face.index(a)
        step = -1 if face[(i + 1) % n] == b else 1
        walk = [a]
        while walk[-1] != b:
            i = (i + step) % n
            walk.append(face[i])
        return walk

    @classmethod
    def ear_decomposition(cls, e, v):
        """
        Starts at a face containing v and adds the other faces in breadth
        first order over the face adjacency. When v has degree 3 the face
        across v's chord is the first ear, so v is one of its endpoints.

        :param e: OuterplanarEmbedding
        :param v: start vertex
        :return: EarDecomposition
        """
        faces = e.faces_containing(v)
        if not faces:
            raise CrumbyGraphException("vertex {} is on no face", v)
        start = faces[0]
        first = faces[1] if len(faces) > 1 else None
        initial = e.inner_faces[start]
        i = initial.index(v)
        initial = initial[i:] + initial[:i]

        ears = []
        seen = set([start])
        queue = [start]
        while queue:
            f = queue.pop(0)
            children = [c for c in e.dual_tree[f] if c not in seen]
            children.sort(key=lambda c: (c != first, c))
            for c in children:
                seen.add(c)
                x, y = e.shared_chord(f, c)
                walk = cls._walk_between(e.inner_faces[c], x, y)
                ears.append(Ear(c, x, y, tuple(walk[1:-1])))
                queue.append(c)
        return cls.model(initial, ears, initial_face=start)

    @classmethod
    def cycle_pattern(cls, k):
        """
        Crumby coloring of the cycle on k vertices from the cycle table,
        "rrb" followed by the pattern for k - 3 beyond it

        :param k: at least 3
        :return: color string
        """
        from crumby.models.services.fixture import FixtureService

        if k < 3:
            raise CrumbyGraphException("cycles need k >= 3, got {}", k)
        value = FixtureService.load_fixtures().get("cycle", str(k))
        if value is not None:
            return value
        return "rrb" + cls.cycle_pattern(k - 3)

    @classmethod
    def start_patterns(cls, k, l):
        """
        Colors of (w_1..w_k) and (z_1..z_l) when a degree-3 start vertex v
        is red and its chord partner u is blue, the face boundary running
        u, w_1, ..., w_k, v and the first ear u, z_1, ..., z_l, v.

        :return: (w colors, z colors), None for k = l = 2
        """
        if k < 1 or l < 1:
            raise CrumbyGraphException("start needs k, l >= 1, got {}", (k, l))
        if k == 2 and l == 2:
            return None
        c, d = (k - 1) // 3, (l - 1) // 3
        if k % 3 == 1:
            w = "rrb" * c + "r"
        elif k % 3 == 2:
            w = ("rrb" * (c - 1) + "rrr" if c >= 1 else "") + "br"
        else:
            w = "rrb" * c + "rrb"
        if l % 3 == 1:
            z = "rrb" * d + "r"
        elif l % 3 == 2:
            z = "br" if d == 0 else "rrb" * (d - 1) + "rrrbr"
        elif k % 3 == 0:
            z = "brr" if d == 0 else "rrb" * (d - 1) + "rrrbrr"
        else:
            z = "rrb" * d + "rrb"
        return w, z

    @classmethod
    def merged_ear_pattern(cls, m):
        """ colors of w_1..w_m on the ear merged into an l = 3 ear """
        if m < 1:
            raise CrumbyGraphException("merged ears need m >= 1, got {}", m)
        if m in MERGED_EAR_PATTERNS:
            return MERGED_EAR_PATTERNS[m]
        return cls.merged_ear_pattern(m - 3) + "brr"

    @classmethod
    def _start_configurations(cls, color):
        """
        Colorings of the two squares u w1 w2 v / u z1 z2 v with v of the given
        color, as strings in the order u, w1, w2, v, z1, z2
        """
        from crumby.models.services.fixture import FixtureService

        value = FixtureService.load_fixtures().get("ear_start", color)
        if value is not None:
            return value.split()
        return cls.enumerate_start_configurations(color)

    @classmethod
    def enumerate_start_configurations(cls, color):
        from crumby.models.services.oracle import OracleService

        g = cls.models_proxy.Graph.from_edges(
            6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (3, 5)]
        )
        return [
            c.colors for c in OracleService.solve_exact_all(g, {3: color})
        ]

    @classmethod
    def _start(cls, g, e, decomposition, state, v, color):
        """ colors G_0, and the first ear too when v has degree 3 """
        face = decomposition.initial
        if g.degree(v) == 2:
            pattern = cls.cycle_pattern(len(face))
            choice = None
            for walk in (face, [face[0]] + face[1:][::-1]):
                for r in range(len(walk)):
                    colors = pattern[r:] + pattern[:r]
                    if colors[0] != color:
                        continue
                    state.colors.update(zip(walk, colors))
                    if choice is None:
                        choice = (walk, colors)
                    if state.property_a_holds():
                        state.add_walk(walk, colors, closed=True)
                        return 0
            log.warning("no rotation of the start cycle keeps property (A)")
            state.add_walk(choice[0], choice[1], closed=True)
            return 0

        first = decomposition.ears[0]
        u = first.x if first.y == v else first.y
        walk_w = cls._walk_between(face, u, v)
        inner = first.internals if first.x == u else first.internals[::-1]
        walk_z = [u] + list(inner) + [v]
        state.pending.discard(_edge(u, v))
        state.pending.update(cls._face_chords(e, first.face))
        state.pending.discard(_edge(u, v))
        k, l = len(walk_w) - 2, len(walk_z) - 2
        patterns = cls.start_patterns(k, l)
        if patterns is None:
            order = [walk_w[0], walk_w[1], walk_w[2], v, walk_z[1], walk_z[2]]
            candidates = cls._start_configurations(color)
            for colors in candidates:
                state.colors.update(zip(order, colors))
                if state.property_a_holds():
                    break
            log.debug(
                "k = l = 2 start uses %s", "".join(state.colors[x] for x in order)
            )
        else:
            if color == BLUE:
                walk_w, walk_z = walk_w[::-1], walk_z[::-1]
            w, z = patterns
            state.colors.update(zip(walk_w, BLUE + w + RED))
            state.colors.update(zip(walk_z, BLUE + z + RED))
        state.add_walk(walk_w)
        state.add_walk(walk_z)
        state.edges.add(_edge(u, v))
        return 1

    @classmethod
    def _facts(cls, state, x, y):
        facts = set()
        facts.add("x_p3" if state.ends_red_p3(x) else "x_free")
        if state.is_singleton_blue(y):
            facts.add("y_singleton")
        elif state.in_blue_k2(y):
            facts.add("y_k2")
        return facts

    @classmethod
    def _ledger_row(cls, l, kind, facts):
        for needs, pattern in EAR_LEDGER[(l, kind)]:
            if set(needs) <= facts:
                return pattern
        return None

    @classmethod
    def _add_ear(cls, e, state, ears, index, consumed):
        """ colors one ear, or two when the l = 3 merge applies """
        ear = ears[index]
        x, y, internals = ear.x, ear.y, list(ear.internals)
        state.pending.discard(_edge(x, y))
        state.pending.update(cls._face_chords(e, ear.face))
        state.pending.discard(_edge(x, y))
        cx, cy = state.colors[x], state.colors[y]
        if cx == BLUE and cy == BLUE:
            log.warning("ear %s has two blue endpoints %s", index, (x, y))
            cls._fail(state, index, "both endpoints blue")
            walk = [x] + internals + [y]
            inner = ("rrb" * len(internals))[: len(internals)]
            state.add_walk(walk, BLUE + inner + BLUE)
            return
        if cx == BLUE:
            x, y, internals = y, x, internals[::-1]
        kind = "rb" if state.colors[y] == BLUE else "rr"
        if kind == "rr" and state.ends_red_p3(x) and not state.ends_red_p3(y):
            x, y, internals = y, x, internals[::-1]

        while len(internals) >= 7:
            prefix = [x] + internals[:3]
            state.add_walk(prefix, RED + "brr")
            x, internals = internals[2], internals[3:]

        l = len(internals)
        walk = [x] + internals + [y]
        if (l, kind) == (3, "rr"):
            merged = cls._merge_target(e, ears, ear.face, internals[1], internals[2])
            if merged is not None:
                other = ears[merged]
                consumed.add(merged)
                z1, z2, z3 = internals
                ws = list(other.internals if other.x == z2 else other.internals[::-1])
                state.pending.discard(_edge(z2, z3))
                state.pending.update(cls._face_chords(e, other.face))
                state.pending.discard(_edge(z2, z3))
                state.add_walk(walk, RED + "brb" + state.colors[y])
                state.add_walk(
                    [z2] + ws + [z3], RED + cls.merged_ear_pattern(len(ws)) + BLUE
                )
                log.debug("ear %s merged with ear %s", index, merged)
                return
        pattern = cls._ledger_row(l, kind, cls._facts(state, x, y))
        if pattern is None:
            cls._fail(state, index, "no ledger row for l=%d %s" % (l, kind))
            pattern = RED + ("rrb" * l)[:l] + state.colors[y]
        if pattern[0] != state.colors[x] or pattern[-1] != state.colors[y]:
            log.debug(
                "ear %s recolors endpoints to %s", index, pattern[0] + pattern[-1]
            )
        state.add_walk(walk, pattern)

    @classmethod
    def _merge_target(cls, e, ears, face, z2, z3):
        """ index of the ear on chord z2 z3 across from face, if any """
        for f in e.chord_faces(z2, z3):
            if f == face:
                continue
            for i, ear in enumerate(ears):
                if ear.face == f:
                    return i
        return None

    @classmethod
    def _fail(cls, state, index, reason):
        if as_bool(cls.setting("validate", False)):
            raise CrumbyConstructionException(
                "ear ledger mismatch: {}",
                "ear %s %s, state %s" % (index, reason, state.snapshot()),
            )

    @classmethod
    def _check_step(cls, g, state, index):
        from crumby.models.services.verifier import VerifierService

        if not state.property_a_holds():
            log.debug("property (A) fails after ear %s", index)
            cls._fail(state, index, "property (A)")
        if as_bool(cls.setting("validate", False)):
            violations = VerifierService.check_partial(
                g, state.colors, state.vertices, state.edges
            )
            if violations:
                cls._fail(state, index, "partial coloring %s" % violations[0].kind)

    @classmethod
    def solve_outerplanar_2conn(cls, g, v, color):
        """
        Crumby coloring of a 2-connected subcubic outerplanar graph giving v
        the prescribed color: a start coloring of the face (or two faces)
        at v, then one ear at a time from the ear ledger while no pending
        chord gets two blue ends.

        :param g:
        :param v: prescribed vertex
        :param color: red or blue
        :return: Coloring
        """
        from crumby.models.services.graph import GraphService

        color = normalize_color(color)
        if not GraphService.is_subcubic(g):
            raise CrumbyGraphException("graph is not subcubic")
        e = cls.embed_outerplanar(g)
        decomposition = cls.ear_decomposition(e, v)
        state = ColoringState(g)
        state.pending.update(cls._face_chords(e, decomposition.initial_face))
        done = cls._start(g, e, decomposition, state, v, color)
        cls._check_step(g, state, -1)
        consumed = set()
        for index in range(done, len(decomposition.ears)):
            if index in consumed:
                continue
            cls._add_ear(e, state, decomposition.ears, index, consumed)
            cls._check_step(g, state, index)
        coloring = cls.models_proxy.Coloring.from_mapping(g.vertex_count, state.colors)
        return cls.finalize(g, coloring, {v: color}, phase="outerplanar")

    @classmethod
    def _tree_side(cls, g, at, x):
        """ vertices reachable from x without passing through at """
        seen = set([at, x])
        stack = [x]
        while stack:
            w = stack.pop()
            for u in g.neighbors(w):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        seen.discard(at)
        return sorted(seen)

    @classmethod
    def _extend_into_tree(cls, g, colors, at, x, vertices):
        """
        Colors the tree on vertices (holding x, the neighbor of at) with x
        opposite to at
        """
        from crumby.models.services.graph import GraphService
        from crumby.models.services.tree import TreeService

        sub, order = GraphService.subgraph(g, vertices)
        local = order.index(x)
        solution = TreeService.solve_tree(sub, {local: opposite(colors[at])})
        if solution is None:
            raise CrumbyConstructionException(
                "attachment at {} cannot be completed", at
            )
        for i, w in enumerate(order):
            colors[w] = solution[i]

    @classmethod
    def attach_tree(cls, g, coloring, t, leaf, at):
        """
        Glues t to g by identifying its leaf with at, colors the neighbor of
        the leaf opposite to at and completes the rest of t with the tree
        solver

        :param g:
        :param coloring: crumby coloring of g
        :param t: subcubic tree other than K2 and K1,3 rooted at leaf
        :param leaf:
        :param at:
        :return: Coloring of the glued graph
        """
        from crumby.models.services.graph import GraphService

        coloring.check_size(g)
        kind = cls._attachment_kind_of_tree(t, leaf)
        if kind != OTHER:
            raise CrumbyGraphException("{} attachments need the cycle solver", kind)
        glued, mapping = GraphService.glue_tree(g, t, leaf, at)
        colors = dict(enumerate(coloring))
        x = mapping[t.neighbors(leaf)[0]]
        cls._extend_into_tree(glued, colors, at, x, cls._tree_side(glued, at, x))
        result = cls.models_proxy.Coloring.from_mapping(glued.vertex_count, colors)
        return cls.finalize(glued, result, phase="attach-tree")

    @classmethod
    def _attachment_kind_of_tree(cls, t, leaf):
        if t.degree(leaf) != 1:
            raise CrumbyGraphException("attachment vertex {} is not a leaf", leaf)
        if t.vertex_count == 2:
            return K2
        x = t.neighbors(leaf)[0]
        if t.vertex_count == 4 and t.degree(x) == 3:
            return K13
        return OTHER

    @classmethod
    def _cycle_of(cls, g):
        """ the vertices of the only cycle, in walking order from the lowest """
        degree = dict((v, g.degree(v)) for v in g.vertices())
        leaves = [v for v in g.vertices() if degree[v] == 1]
        removed = set()
        while leaves:
            w = leaves.pop()
            removed.add(w)
            for u in g.neighbors(w):
                if u not in removed:
                    degree[u] -= 1
                    if degree[u] == 1:
                        leaves.append(u)
        core = set(g.vertices()) - removed
        start = min(core)
        cycle = [start]
        prev = None
        current = start
        while True:
            options = sorted(u for u in g.neighbors(current) if u in core and u != prev)
            nxt = options[0]
            if nxt == start:
                break
            cycle.append(nxt)
            prev, current = current, nxt
        return cycle

    @classmethod
    def solve_cycle_with_trees(cls, g):
        """
        Crumby coloring of a cycle with trees hanging from some of its
        vertices. Trees other than K2 and K1,3 are left out and attached at
        the end with the neighbor of the cycle vertex colored opposite to it.

        :param g:
        :return: Coloring
        """
        from crumby.models.services.graph import GraphService

        if not (
            GraphService.is_subcubic(g)
            and GraphService.is_connected(g)
            and g.vertex_count >= 3
            and g.edge_count == g.vertex_count
        ):
            raise CrumbyGraphException("graph is not a cycle with attached trees")
        cycle = cls._cycle_of(g)
        on_cycle = set(cycle)
        k = len(cycle)
        hang = {}
        kinds = {}
        for v in cycle:
            outside = [u for u in g.neighbors(v) if u not in on_cycle]
            if not outside:
                kinds[v] = None
                continue
            x = outside[0]
            side = cls._tree_side(g, v, x)
            hang[v] = (x, side)
            if len(side) == 1:
                kinds[v] = K2
            elif len(side) == 3 and g.degree(x) == 3:
                kinds[v] = K13
            else:
                kinds[v] = OTHER
        core = [kinds[v] if kinds[v] != OTHER else None for v in cycle]

        colors = {}
        if not any(core):
            pattern = cls.cycle_pattern(k)
            colors.update(zip(cycle, pattern))
            order = cycle
            log.debug("cycle of length %s without small attachments", k)
        elif all(core):
            order, cycle_colors = cls._full_cycle_colors(cycle, core)
            colors.update(zip(order, cycle_colors))
        else:
            order, cycle_colors = cls._walk_cycle_colors(cycle, core)
            colors.update(zip(order, cycle_colors))

        for i, v in enumerate(order):
            kind = kinds[v]
            if kind not in (K2, K13):
                continue
            x, side = hang[v]
            red_on_cycle = RED in (colors[order[i - 1]], colors[order[(i + 1) % k]])
            if kind == K2:
                colors[x] = RED if colors[v] == RED and not red_on_cycle else BLUE
            else:
                colors[x] = RED
                leaf_color = BLUE if colors[v] == RED else RED
                for w in side:
                    if w != x:
                        colors[w] = leaf_color

        if any(core) and not all(core) and kinds[order[0]] == K13:
            last, before = order[-1], order[-2]
            if colors[last] == RED and (
                (colors[before] == RED and kinds[before] in (None, OTHER))
                or kinds[last] == K13
            ):
                v1 = order[0]
                colors[v1] = BLUE
                for w in hang[v1][1]:
                    colors[w] = RED
                log.debug("closing red path at %s recolored", v1)

        for v in cycle:
            if kinds[v] == OTHER:
                x, side = hang[v]
                cls._extend_into_tree(g, colors, v, x, side)
        coloring = cls.models_proxy.Coloring.from_mapping(g.vertex_count, colors)
        return cls.finalize(g, coloring, phase="cycle-with-trees")

    @classmethod
    def _full_cycle_colors(cls, cycle, core):
        """ every cycle vertex carries K2 or K1,3 """
        k = len(cycle)
        if k % 2 == 0:
            return cycle, (RED + BLUE) * (k // 2)
        # color of the neighbor of v_j in a coloring of T_j - v_j
        u = [BLUE if kind == K2 else RED for kind in core]
        for j in range(k):
            if u[j] == u[(j + 1) % k]:
                break
        order = cycle[j:] + cycle[:j]
        pair = RED if u[j] == BLUE else BLUE
        rest = "".join(
            opposite(pair) if i % 2 == 0 else pair for i in range(k - 2)
        )
        return order, pair + pair + rest

    @classmethod
    def _walk_cycle_colors(cls, cycle, core):
        """
        Starts at an attached vertex followed by an empty one and alternates,
        except that an empty red vertex after a blue one is followed by red
        """
        k = len(cycle)
        for i in range(k):
            if core[i] and not core[(i + 1) % k]:
                break
        order = cycle[i:] + cycle[:i]
        kinds = core[i:] + core[:i]
        colors = [RED, BLUE]
        for j in range(2, k):
            prev = colors[j - 1]
            if prev == BLUE:
                colors.append(RED)
            elif kinds[j - 1] is None and colors[j - 2] == BLUE:
                colors.append(RED)
            else:
                colors.append(BLUE)
        return order, "".join(colors)
