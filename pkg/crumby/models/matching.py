# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from collections import namedtuple

from crumby.models.base import BaseModel

SATURATED = "Saturated"
UNSATURATED = "Unsaturated"

# component is the odd component id, partner is the B vertex matched into a
# saturated component, exposed is z for an unsaturated one
OddComponentRole = namedtuple(
    "OddComponentRole", ["component", "role", "partner", "exposed"]
)


class Matching(BaseModel):
    """ Set of pairwise disjoint edges stored as sorted (u, v) pairs """

    _keys = ("edges",)

    def __init__(self, pairs=()):
        mate = {}
        edges = set()
        for u, v in pairs:
            u, v = min(u, v), max(u, v)
            if u in mate or v in mate or u == v:
                raise ValueError("matching pairs overlap at %r" % ((u, v),))
            mate[u] = v
            mate[v] = u
            edges.add((u, v))
        self._mate = mate
        self._edges = frozenset(edges)

    @classmethod
    def from_mate(cls, mate):
        return cls(
            (v, u) for v, u in enumerate(mate) if u is not None and u >= 0 and v < u
        )

    @property
    def edges(self):
        return sorted(self._edges)

    def mate(self, v):
        return self._mate.get(v)

    def contains(self, u, v):
        return (min(u, v), max(u, v)) in self._edges

    def is_perfect(self, vertex_count):
        return len(self._mate) == vertex_count

    def exposed(self, vertices):
        return [v for v in vertices if v not in self._mate]

    def is_valid_for(self, g):
        return all(g.has_edge(u, v) for u, v in self._edges)

    def __len__(self):
        return len(self._edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, pair):
        return self.contains(*pair)


class EGDecomposition(BaseModel):
    """
    Gallai-Edmonds structure of a graph: A holds the vertices missed by some
    maximum matching, B = N(A), C the rest. Odd components are the components
    of G[A] and even components those of G[C], both as sorted vertex lists.
    contracted_matching maps every B vertex to the odd component its matching
    partner lies in.
    """

    _keys = (
        "A",
        "B",
        "C",
        "odd_components",
        "even_components",
        "matching",
        "contracted_matching",
    )

    def __init__(
        self,
        graph,
        A,
        B,
        C,
        odd_components,
        even_components,
        matching,
        contracted_matching,
    ):
        self.graph = graph
        self.A = frozenset(A)
        self.B = frozenset(B)
        self.C = frozenset(C)
        self.odd_components = [sorted(c) for c in odd_components]
        self.even_components = [sorted(c) for c in even_components]
        self.matching = matching
        self.contracted_matching = dict(contracted_matching)

    def component_of(self, v):
        for i, comp in enumerate(self.odd_components):
            if v in comp:
                return i
        return None

    def roles(self):
        """ list of OddComponentRole, one per odd component """
        partner_of = dict((c, b) for b, c in self.contracted_matching.items())
        result = []
        for i, comp in enumerate(self.odd_components):
            if i in partner_of:
                result.append(OddComponentRole(i, SATURATED, partner_of[i], None))
            else:
                exposed = self.matching.exposed(comp)
                result.append(
                    OddComponentRole(
                        i, UNSATURATED, None, exposed[0] if exposed else None
                    )
                )
        return result

    def as_text(self):
        lines = [
            "A: %s" % " ".join(str(v) for v in sorted(self.A)),
            "B: %s" % " ".join(str(v) for v in sorted(self.B)),
            "C: %s" % " ".join(str(v) for v in sorted(self.C)),
        ]
        for i, comp in enumerate(self.odd_components):
            lines.append("odd %d: %s" % (i, " ".join(str(v) for v in comp)))
        for i, comp in enumerate(self.even_components):
            lines.append("even %d: %s" % (i, " ".join(str(v) for v in comp)))
        lines.append(
            "matching: %s" % " ".join("%d-%d" % e for e in self.matching.edges)
        )
        for b in sorted(self.contracted_matching):
            lines.append("hall %d -> odd %d" % (b, self.contracted_matching[b]))
        return "\n".join(lines)

    def as_record(self):
        return {
            "A": sorted(self.A),
            "B": sorted(self.B),
            "C": sorted(self.C),
            "odd_components": self.odd_components,
            "even_components": self.even_components,
            "matching": [list(e) for e in self.matching.edges],
            "contracted_matching": dict(
                (str(b), c) for b, c in sorted(self.contracted_matching.items())
            ),
        }
