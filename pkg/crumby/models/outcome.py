# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from collections import namedtuple

SAT = "Sat"
UNSAT = "Unsat"
BUDGET_EXCEEDED = "BudgetExceeded"

OracleOutcome = namedtuple("OracleOutcome", ["status", "coloring", "nodes"])
