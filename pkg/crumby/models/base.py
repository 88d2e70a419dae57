# -*- coding: utf-8 -*-
from __future__ import unicode_literals


def plain(value):
    """ converts model attribute values into json-ready builtins """
    if isinstance(value, BaseModel):
        return value.as_record()
    if hasattr(value, "_asdict"):
        return dict((k, plain(v)) for k, v in value._asdict().items())
    if isinstance(value, dict):
        return dict((str(k), plain(v)) for k, v in value.items())
    if isinstance(value, (set, frozenset)):
        return [plain(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return value


class BaseModel(object):
    """ Basic class that all value types inherit from. Subclasses list their
    exported attributes in ``_keys``; records, reprs and equality of the
    simple models are built from them """

    _keys = ()

    @classmethod
    def _get_keys(cls):
        """ returns attribute names exported by this model """
        return list(cls._keys)

    def get_dict(self, exclude_keys=None, include_keys=None):
        """
        return dictionary of exported attributes

        :param exclude_keys: (optional) attributes left out
        :param include_keys: (optional) only these attributes, all when empty
        :return:
        """
        keys = self._get_keys()
        if include_keys:
            keys = [k for k in keys if k in include_keys]
        skip = set(exclude_keys or ())
        return dict((k, getattr(self, k)) for k in keys if k not in skip)

    def get_appstruct(self):
        """ return list of (key, value) tuples in declaration order """
        return [(k, getattr(self, k)) for k in self._get_keys()]

    def as_record(self):
        """ json-ready dict used by the ``--records`` output """
        return plain(self.get_dict())

    def __repr__(self):
        parts = ", ".join("%s=%r" % (k, v) for k, v in self.get_appstruct())
        return "<%s: %s>" % (self.__class__.__name__, parts)
