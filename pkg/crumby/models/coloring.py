# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from crumby.exc import CrumbyColoringException, CrumbyParseException
from crumby.models.base import BaseModel

__all__ = [
    "RED",
    "BLUE",
    "COLORS",
    "normalize_color",
    "opposite",
    "Coloring",
    "Prescription",
]

RED = "r"
BLUE = "b"
COLORS = (RED, BLUE)

_ALIASES = {"r": RED, "red": RED, "b": BLUE, "blue": BLUE}


def normalize_color(value):
    """
    Accepts r/b/red/blue in any case and returns RED or BLUE

    :param value:
    :return:
    """
    try:
        return _ALIASES[str(value).strip().lower()]
    except KeyError:
        raise CrumbyParseException("unknown color {!r}", value)


def opposite(color):
    return BLUE if color == RED else RED


class Coloring(BaseModel):
    """
    Total red/blue assignment over vertices 0..n-1, printed as an r/b string
    in vertex order
    """

    _keys = ("colors",)

    def __init__(self, colors):
        self._colors = tuple(normalize_color(c) for c in colors)

    @classmethod
    def from_string(cls, text):
        text = text.strip()
        for ch in text:
            if ch not in COLORS:
                raise CrumbyParseException("coloring string has character {!r}", ch)
        return cls(text)

    @classmethod
    def from_mapping(cls, vertex_count, mapping):
        missing = [v for v in range(vertex_count) if v not in mapping]
        if missing:
            raise CrumbyColoringException("coloring misses vertices {}", missing)
        return cls(mapping[v] for v in range(vertex_count))

    @property
    def colors(self):
        return "".join(self._colors)

    def check_size(self, g):
        if len(self._colors) != g.vertex_count:
            raise CrumbyColoringException(
                "coloring has {0[0]} entries for {0[1]} vertices",
                (len(self._colors), g.vertex_count),
            )

    def extends(self, prescription):
        """ True if every prescribed vertex carries its prescribed color """
        if not prescription:
            return True
        return all(
            v < len(self._colors) and self._colors[v] == c
            for v, c in prescription.items()
        )

    def recolored(self, changes):
        colors = list(self._colors)
        for v, c in changes.items():
            colors[v] = normalize_color(c)
        return Coloring(colors)

    def __len__(self):
        return len(self._colors)

    def __getitem__(self, item):
        return self._colors[item]

    def __iter__(self):
        return iter(self._colors)

    def __str__(self):
        return "".join(self._colors)

    def __eq__(self, other):
        if isinstance(other, Coloring):
            return self._colors == other._colors
        if isinstance(other, str):
            return str(self) == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._colors)


class Prescription(dict):
    """
    Partial map vertex -> color, at most one color per vertex
    """

    def __init__(self, mapping=None):
        super(Prescription, self).__init__()
        for v, c in dict(mapping or {}).items():
            self[int(v)] = normalize_color(c)

    @classmethod
    def parse(cls, items):
        """
        Builds a prescription from "v=color" strings

        :param items: iterable of strings like "3=blue"
        :return: Prescription
        """
        result = cls()
        for item in items or []:
            parts = item.split("=")
            if len(parts) != 2 or not parts[0].strip().isdigit():
                raise CrumbyParseException("bad prescription {!r}, use v=color", item)
            v = int(parts[0])
            color = normalize_color(parts[1])
            if result.get(v, color) != color:
                raise CrumbyParseException("vertex prescribed twice {}", v)
            result[v] = color
        return result

    def check_vertices(self, g):
        for v in self:
            if not 0 <= v < g.vertex_count:
                raise CrumbyColoringException("prescribed vertex {} not in graph", v)
