# -*- coding: utf-8 -*-


class CrumbyException(Exception):
    def __init__(self, msg, value=None):
        self.msg = msg
        self.value = value

    def __str__(self):
        return self.msg.format(self.value)


class CrumbyGraphException(CrumbyException):
    pass


class CrumbyParseException(CrumbyGraphException):
    pass


class CrumbyColoringException(CrumbyException):
    pass


class CrumbyConstructionException(CrumbyException):
    def __init__(self, msg, value=None, instance=None):
        super(CrumbyConstructionException, self).__init__(msg, value)
        self.instance = instance


class CrumbyBudgetException(CrumbyException):
    def __init__(self, msg, value=None, nodes=0):
        super(CrumbyBudgetException, self).__init__(msg, value)
        self.nodes = nodes


class CrumbyFixtureException(CrumbyException):
    pass
