# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from collections import namedtuple

from crumby.models.base import BaseModel

TRANSCRIBED = "transcribed"
ORACLE_GENERATED = "oracle"

FixtureEntry = namedtuple("FixtureEntry", ["table", "key", "value", "provenance"])


class FixtureSet(BaseModel):
    """ Named tables of fixture entries, keyed by table name then entry key """

    _keys = ("tables",)

    def __init__(self, entries=()):
        self.tables = {}
        for entry in entries:
            self.add(entry)

    def add(self, entry):
        self.tables.setdefault(entry.table, {})[entry.key] = entry

    def table(self, name):
        return self.tables.get(name, {})

    def get(self, table, key, default=None):
        entry = self.tables.get(table, {}).get(key)
        return entry.value if entry is not None else default

    def entries(self, provenance=None):
        for name in sorted(self.tables):
            for key in sorted(self.tables[name]):
                entry = self.tables[name][key]
                if provenance is None or entry.provenance == provenance:
                    yield entry

    def __len__(self):
        return sum(len(t) for t in self.tables.values())
