# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import configparser
import logging
import os

from crumby import CONFIG_KEY, DEFAULT_SETTINGS
from crumby.exc import CrumbyParseException

log = logging.getLogger(__name__)

# environment variable -> setting key
ENVIRONMENT = {
    "CRUMBY_BUDGET": "budget",
    "CRUMBY_VALIDATE": "validate",
    "CRUMBY_JOBS": "jobs",
    "CRUMBY_FIXTURES_DIR": "fixtures_dir",
}


def read_config_file(path):
    """
    Reads the [crumby] section of an ini file into dotted settings

    :param path:
    :return: dict
    """
    parser = configparser.ConfigParser()
    if not parser.read(path):
        raise CrumbyParseException("cannot read config file {}", path)
    if not parser.has_section(CONFIG_KEY):
        log.warning("config file %s has no [%s] section", path, CONFIG_KEY)
        return {}
    return dict(
        ("%s.%s" % (CONFIG_KEY, key), value)
        for key, value in parser.items(CONFIG_KEY)
    )


def load_settings(args=None, environ=None):
    """
    Merges settings from defaults, the --config file, CRUMBY_* environment
    variables and command line flags, later sources winning

    :param args: parsed argparse namespace
    :param environ: mapping, defaults to os.environ
    :return: dict of dotted settings
    """
    environ = os.environ if environ is None else environ
    settings = dict(DEFAULT_SETTINGS)
    config = getattr(args, "config", None)
    if config:
        settings.update(read_config_file(config))
    for variable, key in ENVIRONMENT.items():
        if environ.get(variable):
            settings["%s.%s" % (CONFIG_KEY, key)] = environ[variable]
    for key in ("budget", "validate", "jobs", "fixtures_dir"):
        value = getattr(args, key, None)
        if value is not None:
            settings["%s.%s" % (CONFIG_KEY, key)] = value
    return settings
