# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from importlib.metadata import PackageNotFoundError, version

from crumby.utils import ModelProxy  # noqa

try:
    __version__ = version("crumby")
except PackageNotFoundError:  # running from a source checkout
    __version__ = None

CONFIG_KEY = "crumby"

DEFAULT_SETTINGS = {
    "crumby.budget": 10 ** 8,
    "crumby.validate": False,
    "crumby.repair_radii": "1,2,3,5,8",
    "crumby.jobs": 1,
    "crumby.fixtures_dir": None,
}


def import_model_service_mappings():
    from crumby.models.services.graph import GraphService
    from crumby.models.services.generator import GeneratorService
    from crumby.models.services.verifier import VerifierService
    from crumby.models.services.oracle import OracleService
    from crumby.models.services.matching import MatchingService
    from crumby.models.services.tree import TreeService
    from crumby.models.services.subdivision import SubdivisionService
    from crumby.models.services.outerplanar import OuterplanarService
    from crumby.models.services.k4 import K4SubdivisionService
    from crumby.models.services.fixture import FixtureService

    return {
        "Graph": [GraphService, GeneratorService],
        "VerifierReport": [VerifierService],
        "Coloring": [OracleService, TreeService],
        "Matching": [MatchingService],
        "SubdividedGraph": [SubdivisionService],
        "EarDecomposition": [OuterplanarService],
        "K4SubdivisionVector": [K4SubdivisionService],
        "FixtureSet": [FixtureService],
    }


def crumby_model_init(
    graph=None,
    coloring=None,
    prescription=None,
    verifier_report=None,
    matching=None,
    eg_decomposition=None,
    subdivided_graph=None,
    path_pattern=None,
    embedding=None,
    ear_decomposition=None,
    k4_vector=None,
    fixture_set=None,
    settings=None,
    *args,
    **kwargs
):
    """
    This function attaches model classes to the services that build them,
    and a proxy object holding all model definitions and the settings mapping
    that services might use

    :param settings: mapping of dotted "crumby.*" keys overriding the defaults
    :return: the models proxy
    """
    from crumby.models.graph import Graph
    from crumby.models.coloring import Coloring, Prescription
    from crumby.models.report import VerifierReport
    from crumby.models.matching import Matching, EGDecomposition
    from crumby.models.subdivided import SubdividedGraph
    from crumby.models.patterns import PathPattern
    from crumby.models.embedding import OuterplanarEmbedding, EarDecomposition
    from crumby.models.k4 import K4SubdivisionVector
    from crumby.models.fixture import FixtureSet

    models = ModelProxy()
    models.Graph = graph or Graph
    models.Coloring = coloring or Coloring
    models.Prescription = prescription or Prescription
    models.VerifierReport = verifier_report or VerifierReport
    models.Matching = matching or Matching
    models.EGDecomposition = eg_decomposition or EGDecomposition
    models.SubdividedGraph = subdivided_graph or SubdividedGraph
    models.PathPattern = path_pattern or PathPattern
    models.OuterplanarEmbedding = embedding or OuterplanarEmbedding
    models.EarDecomposition = ear_decomposition or EarDecomposition
    models.K4SubdivisionVector = k4_vector or K4SubdivisionVector
    models.FixtureSet = fixture_set or FixtureSet

    merged = dict(DEFAULT_SETTINGS)
    merged.update(settings or {})
    models.settings = merged

    model_service_mapping = import_model_service_mappings()

    for name, services in model_service_mapping.items():
        for service in services:
            setattr(service, "model", models[name])
            setattr(service, "models_proxy", models)
    return models


crumby_model_init()
