# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import logging

from crumby.exc import CrumbyConstructionException

log = logging.getLogger(__name__)


class BaseService(object):
    model = None
    models_proxy = None

    @classmethod
    def setting(cls, key, default=None):
        """
        returns a "crumby.<key>" setting from the mapping bound by
        crumby_model_init

        :param key:
        :param default:
        :return:
        """
        from crumby import CONFIG_KEY

        settings = getattr(cls.models_proxy, "settings", None) or {}
        value = settings.get("%s.%s" % (CONFIG_KEY, key))
        return default if value is None else value

    @classmethod
    def finalize(cls, g, coloring, prescription=None, phase=None):
        """
        Last step of every constructive solver: returns the coloring when it
        is crumby and honors the prescription, raises otherwise

        :param g:
        :param coloring:
        :param prescription:
        :param phase: name reported on failure
        :return: Coloring
        """
        from crumby.models.services.graph import GraphService
        from crumby.models.services.verifier import VerifierService

        report = VerifierService.verify_crumby(g, coloring)
        if report.ok and coloring.extends(prescription):
            return coloring
        phase = phase or cls.__name__
        kinds = ", ".join(report.kinds()) or "prescription"
        log.error("%s produced an invalid coloring (%s)", phase, kinds)
        raise CrumbyConstructionException(
            "{} produced an invalid coloring",
            phase,
            instance=GraphService.write_graph6(g).decode("ascii"),
        )
