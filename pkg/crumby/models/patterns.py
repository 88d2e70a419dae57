# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from enum import Enum

from crumby.models.base import BaseModel


class PatternPurpose(Enum):
    """ What a path coloring promises at its two red endpoints """

    ENDPOINTS_SINGLETON_RED = "EndpointsSingletonRed"
    ENDPOINTS_IN_RED_K2 = "EndpointsInRedK2"
    MIXED_SINGLETON_AND_K2 = "MixedSingletonAndK2"

    @classmethod
    def from_name(cls, name):
        if isinstance(name, cls):
            return name
        for member in cls:
            if name in (member.value, member.name):
                return member
        raise ValueError("unknown pattern purpose %r" % (name,))


class PathPattern(BaseModel):
    _keys = ("k", "purpose", "colors", "attainable")

    def __init__(self, k, purpose, colors, attainable):
        self.k = k
        self.purpose = purpose
        self.colors = colors
        self.attainable = attainable

    def __str__(self):
        return self.colors if self.attainable else self.colors.upper()

    def __eq__(self, other):
        if not isinstance(other, PathPattern):
            return NotImplemented
        return self.get_appstruct() == other.get_appstruct()

    def __hash__(self):
        return hash((self.k, self.purpose, self.colors, self.attainable))
