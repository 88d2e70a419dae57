# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from enum import Enum


class TreeState(Enum):
    """
    Role of a vertex inside its own subtree.

    B_FREE   blue, no blue child
    B_PAIR   blue, one blue child, parent must be red or absent
    R_PEND   red, no red child, needs a red parent
    R_CTR1-3 red center of a star whose red children are all R_PEND
    R_LEAF   red, one red child that is a star center, parent must be blue
    """

    B_FREE = "B_free"
    B_PAIR = "B_pair"
    R_PEND = "R_pend"
    R_CTR1 = "R_ctr1"
    R_CTR2 = "R_ctr2"
    R_CTR3 = "R_ctr3"
    R_LEAF = "R_leaf"

    @property
    def is_red(self):
        return self.name.startswith("R_")

    @classmethod
    def center(cls, k):
        return CENTERS[k - 1]


CENTERS = (TreeState.R_CTR1, TreeState.R_CTR2, TreeState.R_CTR3)
BLUE_STATES = (TreeState.B_FREE, TreeState.B_PAIR)

# reconstruction preference, red first
STATE_ORDER = (
    TreeState.R_CTR1,
    TreeState.R_CTR2,
    TreeState.R_CTR3,
    TreeState.R_LEAF,
    TreeState.R_PEND,
    TreeState.B_FREE,
    TreeState.B_PAIR,
)

ROOT_STATES = frozenset(s for s in TreeState if s is not TreeState.R_PEND)
