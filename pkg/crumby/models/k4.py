# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from crumby.exc import CrumbyGraphException
from crumby.models.base import BaseModel

A, B, C, D = 0, 1, 2, 3
K4_EDGES = ((A, B), (A, C), (A, D), (B, C), (B, D), (C, D))
K4_EDGE_NAMES = ("AB", "AC", "AD", "BC", "BD", "CD")


class K4SubdivisionVector(BaseModel):
    """ Internal vertex counts on the K4 edges AB, AC, AD, BC, BD, CD """

    _keys = ("counts",)

    def __init__(self, counts):
        counts = tuple(int(c) for c in counts)
        if len(counts) != 6 or min(counts) < 0:
            raise CrumbyGraphException("expected 6 nonnegative counts, got {}", counts)
        self.counts = counts

    @classmethod
    def parse(cls, text):
        return cls(text.replace(",", " ").split())

    @property
    def vertex_count(self):
        return 4 + sum(self.counts)

    def reduced(self):
        return K4SubdivisionVector(c % 3 for c in self.counts)

    def is_base(self):
        return max(self.counts) <= 2

    def __iter__(self):
        return iter(self.counts)

    def __eq__(self, other):
        if not isinstance(other, K4SubdivisionVector):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self):
        return hash(self.counts)

    def __str__(self):
        return " ".join(str(c) for c in self.counts)
