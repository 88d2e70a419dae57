# -*- coding: utf-8 -*-
from __future__ import absolute_import, unicode_literals

import io
import os

import pytest

from crumby import crumby_model_init
from crumby.models.services.fixture import FixtureService
from crumby.models.services.generator import GeneratorService

# every test run re-checks decompositions and ear ledgers
TEST_SETTINGS = {"crumby.validate": True}


@pytest.fixture(autouse=True)
def default_settings():
    crumby_model_init(settings=TEST_SETTINGS)
    yield
    crumby_model_init()


@pytest.fixture
def settings_factory():
    def factory(**values):
        settings = dict(TEST_SETTINGS)
        settings.update(("crumby.%s" % k, v) for k, v in values.items())
        return crumby_model_init(settings=settings)

    return factory


@pytest.fixture
def fixture_set():
    return FixtureService.load_fixtures()


@pytest.fixture
def fixtures_copy(tmpdir):
    """ scratch fixtures directory holding the transcribed tables only """
    source = os.path.join(FixtureService.fixtures_dir(), "tables.txt")
    with io.open(source, encoding="utf8") as handle:
        tmpdir.join("tables.txt").write_text(handle.read(), encoding="utf8")
    return str(tmpdir)


@pytest.fixture
def small_graphs():
    return {
        "k2": GeneratorService.gen_path(2),
        "p3": GeneratorService.gen_path(3),
        "c5": GeneratorService.gen_cycle(5),
        "c6": GeneratorService.gen_cycle(6),
        "claw": GeneratorService.gen_star(3),
        "k4": GeneratorService.gen_k4(),
        "prism": GeneratorService.gen_prism(),
        "petersen": GeneratorService.gen_petersen(),
    }


@pytest.fixture
def write_graph(tmpdir):
    """ writes graph text to a file and returns the path """

    def write(text, name="graph.txt"):
        path = tmpdir.join(name)
        path.write_text(text, encoding="utf8")
        return str(path)

    return write
