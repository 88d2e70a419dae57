# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from collections import namedtuple

from crumby.models.base import BaseModel
from crumby.models.coloring import BLUE, RED

# x and y are the adjacent attachment vertices, internals run from x to y
Ear = namedtuple("Ear", ["face", "x", "y", "internals"])


class OuterplanarEmbedding(BaseModel):
    """
    Outer Hamiltonian cycle of a 2-connected outerplanar graph, its chords,
    the bounded faces as vertex cycles and the face adjacency across chords
    """

    _keys = ("outer_cycle", "chords", "inner_faces", "dual_tree")

    def __init__(self, graph, outer_cycle, chords, inner_faces, dual_tree):
        self.graph = graph
        self.outer_cycle = list(outer_cycle)
        self.chords = sorted(chords)
        self.inner_faces = [list(f) for f in inner_faces]
        self.dual_tree = dict((k, sorted(v)) for k, v in dual_tree.items())

    def faces_containing(self, v):
        return [i for i, face in enumerate(self.inner_faces) if v in face]

    def shared_chord(self, f1, f2):
        common = set(self.inner_faces[f1]) & set(self.inner_faces[f2])
        return tuple(sorted(common))

    def chord_faces(self, u, v):
        """ the two faces on either side of chord uv """
        return [
            i for i, face in enumerate(self.inner_faces) if u in face and v in face
        ]


class EarDecomposition(BaseModel):
    _keys = ("initial", "ears")

    def __init__(self, initial, ears, initial_face=0):
        self.initial = list(initial)
        self.ears = list(ears)
        self.initial_face = initial_face

    def vertex_set(self):
        result = set(self.initial)
        for ear in self.ears:
            result.update(ear.internals)
        return result

    def edge_set(self):
        k = len(self.initial)
        edges = set()
        for i in range(k):
            u, v = self.initial[i], self.initial[(i + 1) % k]
            edges.add((min(u, v), max(u, v)))
        for ear in self.ears:
            walk = [ear.x] + list(ear.internals) + [ear.y]
            for u, v in zip(walk, walk[1:]):
                edges.add((min(u, v), max(u, v)))
        return edges

    def as_text(self):
        lines = ["initial: %s" % " ".join(str(v) for v in self.initial)]
        for i, ear in enumerate(self.ears):
            lines.append(
                "ear %d: %d-%d [%s]"
                % (i, ear.x, ear.y, " ".join(str(v) for v in ear.internals))
            )
        return "\n".join(lines)


class ColoringState(object):
    """
    Partial coloring of the part of an outerplanar graph built so far, with
    the chords that still border an unprocessed face
    """

    def __init__(self, graph):
        self.graph = graph
        self.colors = {}
        self.vertices = set()
        self.edges = set()
        self.pending = set()

    def add_walk(self, walk, colors=None, closed=False):
        pairs = list(zip(walk, walk[1:]))
        if closed:
            pairs.append((walk[-1], walk[0]))
        for u, v in pairs:
            self.edges.add((min(u, v), max(u, v)))
        self.vertices.update(walk)
        if colors is not None:
            for v, c in zip(walk, colors):
                self.colors[v] = c

    def neighbors(self, v):
        return [
            u
            for u in self.graph.neighbors(v)
            if (min(u, v), max(u, v)) in self.edges
        ]

    def red_neighbors(self, v):
        return [u for u in self.neighbors(v) if self.colors.get(u) == RED]

    def blue_neighbors(self, v):
        return [u for u in self.neighbors(v) if self.colors.get(u) == BLUE]

    def ends_red_p3(self, x):
        """ some red neighbor of x has a second red neighbor """
        return any(
            [w for w in self.red_neighbors(y) if w != x] for y in self.red_neighbors(x)
        )

    def is_singleton_blue(self, x):
        return self.colors.get(x) == BLUE and not self.blue_neighbors(x)

    def in_blue_k2(self, x):
        return self.colors.get(x) == BLUE and bool(self.blue_neighbors(x))

    def property_a_holds(self):
        return not [
            (u, v)
            for u, v in self.pending
            if self.colors.get(u) == BLUE and self.colors.get(v) == BLUE
        ]

    def snapshot(self):
        return "".join(self.colors.get(v, ".") for v in range(self.graph.vertex_count))
