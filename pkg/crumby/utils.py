# -*- coding: utf-8 -*-
"""
Utility functions.
"""
import importlib

from crumby.exc import CrumbyParseException


class ModelProxy(dict):
    """
    Holds model references and settings used in services
    """

    def __setattr__(self, key, value):
        self[key] = value

    def __getattr__(self, key):
        try:
            return self[key]
        except KeyError:
            raise AttributeError(key)


def resolve_callable(value):
    """
    Returns callable for "module:attr" strings, callables are passed through

    :param value:
    :return:
    """
    if callable(value):
        return value
    parts = value.split(":")
    if len(parts) != 2:
        raise CrumbyParseException("expected module:attr, got {}", value)
    _tmp = importlib.import_module(parts[0])
    return getattr(_tmp, parts[1])


def as_bool(value):
    if isinstance(value, bool):
        return value
    return str(value).strip().lower() in ("1", "true", "yes", "on")


def as_int_list(value):
    if isinstance(value, (list, tuple)):
        return [int(v) for v in value]
    return [int(v) for v in str(value).split(",") if v.strip()]


