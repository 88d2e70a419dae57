# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from enum import Enum


class GraphClass(Enum):
    """ Solver dispatch tags, listed in detection priority order """

    TREE = "Tree"
    K4_SUBDIVISION = "K4Subdivision"
    ONE_SUBDIVISION_OF_CUBIC = "OneSubdivisionOfCubic"
    DEEP_SUBDIVISION = "DeepSubdivision"
    GENUINE_SUBDIVISION = "GenuineSubdivision"
    TWO_CONNECTED_OUTERPLANAR = "TwoConnectedOuterplanar"
    CYCLE_WITH_TREES = "CycleWithTrees"
    UNKNOWN = "Unknown"

    @classmethod
    def priority(cls):
        return list(cls)

    @classmethod
    def from_name(cls, name):
        """ accepts the tag value or the member name, case-insensitively """
        key = str(name).strip().replace("-", "_").lower()
        for member in cls:
            if key in (
                member.value.lower(),
                member.name.lower(),
                member.name.lower().replace("_", ""),
            ):
                return member
        raise ValueError("unknown graph class %r" % name)
