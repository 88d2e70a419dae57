# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from collections import namedtuple

from crumby.models.base import BaseModel

BLUE_DEGREE_EXCEEDED = "BlueDegreeExceeded"
RED_ISOLATED = "RedIsolated"
RED_P4 = "RedP4"
BAD_COMPONENT_SHAPE = "BadComponentShape"

RED_STAR = "RedStar"
RED_TRIANGLE = "RedTriangle"
BLUE_SINGLETON = "BlueSingleton"
BLUE_EDGE = "BlueEdge"
OTHER = "Other"

Violation = namedtuple("Violation", ["kind", "witness"])

# kind is one of the shape constants, size is the star size for RedStar,
# center is the star center (None for a red K2, whose ends are symmetric)
ComponentShape = namedtuple(
    "ComponentShape", ["color", "kind", "vertices", "size", "center"]
)


class VerifierReport(BaseModel):
    _keys = ("ok", "violations")

    def __init__(self, violations=None):
        self.violations = list(violations or [])

    @property
    def ok(self):
        return not self.violations

    def kinds(self):
        return sorted(set(v.kind for v in self.violations))

    def witness_vertices(self):
        result = set()
        for violation in self.violations:
            result.update(violation.witness)
        return sorted(result)

    def as_record(self):
        return {
            "ok": self.ok,
            "violations": [
                {"kind": v.kind, "witness": list(v.witness)} for v in self.violations
            ],
        }

    def __bool__(self):
        return self.ok

    __nonzero__ = __bool__

    def __str__(self):
        if self.ok:
            return "ok"
        lines = ["not ok"]
        for v in self.violations:
            lines.append("%s %s" % (v.kind, " ".join(str(x) for x in v.witness)))
        return "\n".join(lines)
