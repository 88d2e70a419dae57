# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import functools
import io
import json
import logging
import sys

from crumby.exc import (
    CrumbyBudgetException,
    CrumbyConstructionException,
    CrumbyGraphException,
    CrumbyParseException,
)
from crumby.models.coloring import BLUE, RED, Coloring, Prescription
from crumby.models.graph_class import GraphClass
from crumby.models.outcome import BUDGET_EXCEEDED, SAT
from crumby.models.services.fixture import FixtureService
from crumby.models.services.generator import GeneratorService
from crumby.models.services.graph import GraphService
from crumby.models.services.k4 import K4SubdivisionService
from crumby.models.services.matching import MatchingService
from crumby.models.services.oracle import OracleService
from crumby.models.services.outerplanar import OuterplanarService
from crumby.models.services.subdivision import SubdivisionService
from crumby.models.services.tree import TreeService
from crumby.models.services.verifier import VerifierService

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def read_input(path):
    """ whole text of a file, or of stdin for "-" """
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with io.open(path, encoding="utf8") as handle:
            return handle.read()
    except (IOError, OSError) as exc:
        raise CrumbyParseException("cannot read input {}", "%s (%s)" % (path, exc))


def read_graph(path):
    text = read_input(path)
    if not text.strip():
        raise CrumbyParseException("empty graph input {}", path)
    return GraphService.read_graph(text)


def verified(solver):
    """
    Wraps a solver returning a Coloring (or None for Unsat) so that nothing
    unverified reaches the output
    """

    @functools.wraps(solver)
    def wrapper(g, prescription, *args, **kwargs):
        coloring = solver(g, prescription, *args, **kwargs)
        if coloring is None:
            return None
        report = VerifierService.verify_crumby(g, coloring)
        if not report.ok or not coloring.extends(prescription):
            raise CrumbyConstructionException(
                "refusing to print a coloring that fails verification ({})",
                ", ".join(report.kinds()) or "prescription",
                instance=GraphService.write_graph6(g).decode("ascii"),
            )
        return coloring

    return wrapper


def _structure(g):
    return GraphService.detect_subdivision_structure(g)


def _outerplanar(g, prescription):
    if prescription:
        v, color = sorted(prescription.items())[0]
    else:
        v, color = 0, RED
    return OuterplanarService.solve_outerplanar_2conn(g, v, color)


def _k4(g, prescription):
    return K4SubdivisionService.solve_subdivided(g)


def _one_subdivision(g, prescription):
    return SubdivisionService.solve_one_subdivision(_structure(g))


def _deep_subdivision(g, prescription):
    return SubdivisionService.solve_deep_subdivision(_structure(g))


def _genuine_subdivision(g, prescription):
    return SubdivisionService.solve_genuine_subdivision(_structure(g))


def _cycle_with_trees(g, prescription):
    return OuterplanarService.solve_cycle_with_trees(g)


SOLVERS = {
    GraphClass.K4_SUBDIVISION: _k4,
    GraphClass.ONE_SUBDIVISION_OF_CUBIC: _one_subdivision,
    GraphClass.DEEP_SUBDIVISION: _deep_subdivision,
    GraphClass.GENUINE_SUBDIVISION: _genuine_subdivision,
    GraphClass.TWO_CONNECTED_OUTERPLANAR: _outerplanar,
    GraphClass.CYCLE_WITH_TREES: _cycle_with_trees,
}


def solve_graph(g, prescription, graph_class):
    """
    Runs the constructive solver of a class. Trees are solved exactly with
    the prescription; other solvers honor at most one prescribed vertex and
    the remaining ones are reached through the local repair.

    :return: Coloring, or None when no coloring extends the prescription
    """
    if graph_class == GraphClass.TREE:
        return TreeService.solve_tree(g, prescription)
    if graph_class not in SOLVERS:
        raise CrumbyGraphException(
            "no constructive solver for class {}, use --exact to run the oracle",
            graph_class.value,
        )
    coloring = SOLVERS[graph_class](g, prescription)
    if coloring.extends(prescription):
        return coloring
    log.info("solver output misses the prescription, repairing")
    try:
        return OracleService.repair(g, coloring, prescription, phase="prescription")
    except CrumbyConstructionException:
        return None


def solve_exact(g, prescription, budget=None):
    outcome = OracleService.solve_exact(g, prescription, budget)
    if outcome.status == BUDGET_EXCEEDED:
        raise CrumbyBudgetException(
            "oracle exceeded the node budget {}", budget, nodes=outcome.nodes
        )
    return outcome.coloring if outcome.status == SAT else None


def to_dot(g, coloring):
    """
    Graphviz rendering: red vertices filled red, blue ones lightblue, the
    color component id of every vertex in its tooltip
    """
    component = {}
    for color, prefix in ((RED, "red"), (BLUE, "blue")):
        for i, comp in enumerate(VerifierService.color_components(g, coloring, color)):
            for v in comp:
                component[v] = "%s component %d" % (prefix, i)
    lines = ["graph crumby {", "  node [style=filled];"]
    for v in g.vertices():
        fill = "red" if coloring[v] == RED else "lightblue"
        lines.append('  %d [fillcolor=%s, tooltip="%s"];' % (v, fill, component[v]))
    for u, v in g.edges():
        lines.append("  %d -- %d;" % (u, v))
    lines.append("}")
    return "\n".join(lines)


def emit_coloring(g, coloring, fmt):
    if fmt == "dot":
        print(to_dot(g, coloring))
    else:
        print(str(coloring))


def cmd_solve(args):
    g = read_graph(args.input)
    prescription = Prescription.parse(args.prescribe)
    prescription.check_vertices(g)
    if args.exact:
        coloring = verified(lambda graph, p: solve_exact(graph, p, args.budget))(
            g, prescription
        )
    else:
        graph_class = GraphService.classify(g, hint=args.graph_class)
        log.info("dispatching %s", graph_class.value)
        coloring = verified(solve_graph)(g, prescription, graph_class)
    if coloring is None:
        print("UNSAT")
        return EXIT_NEGATIVE
    emit_coloring(g, coloring, args.format)
    return EXIT_OK


def cmd_verify(args):
    g = read_graph(args.input)
    coloring = Coloring.from_string(args.coloring)
    report = VerifierService.verify_crumby(g, coloring)
    if args.records:
        print(json.dumps(report.as_record(), sort_keys=True))
    else:
        print(str(report))
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_count(args):
    g = read_graph(args.input)
    prescription = Prescription.parse(args.prescribe)
    print(OracleService.count_colorings(g, prescription, args.budget))
    return EXIT_OK


def cmd_decompose(args):
    g = read_graph(args.input)
    if args.kind == "matching":
        matching = MatchingService.maximum_matching(g)
        record = matching.as_record()
        record["size"] = len(matching)
        text = "matching: %s\nsize: %d" % (
            " ".join("%d-%d" % e for e in matching.edges),
            len(matching),
        )
    elif args.kind == "eg":
        decomposition = MatchingService.edmonds_gallai(g)
        record = decomposition.as_record()
        text = decomposition.as_text()
    else:
        if not (GraphService.is_two_connected(g) and GraphService.is_outerplanar(g)):
            raise CrumbyGraphException(
                "ear decomposition needs a 2-connected outerplanar graph {}",
                GraphService.write_graph6(g).decode("ascii"),
            )
        e = OuterplanarService.embed_outerplanar(g)
        decomposition = OuterplanarService.ear_decomposition(e, args.vertex)
        record = decomposition.as_record()
        text = decomposition.as_text()
    if args.records:
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)
    return EXIT_OK


def _ints(value):
    try:
        return [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise CrumbyParseException("expected comma separated integers, got {}", value)


def _attachments(value):
    """ "0:K2,3:K13" -> {0: "K2", 3: "K13"} """
    result = {}
    for item in [v for v in (value or "").split(",") if v.strip()]:
        pos, _, kind = item.partition(":")
        if not pos.strip().isdigit() or kind.strip() not in ("K2", "K13"):
            raise CrumbyParseException(
                "bad attachment {!r}, use pos:K2 or pos:K13", item
            )
        result[int(pos)] = kind.strip()
    return result


def _one(params, name):
    if len(params) != 1:
        raise CrumbyParseException("family {} takes one integer", name)
    return params[0]


def generate(family, params, seed=None):
    """
    Graphs of a generator family; most families give one graph, "trees"
    gives every subcubic tree on n vertices

    :param family:
    :param params: raw parameter string
    :param seed:
    :return: list of Graph
    """
    if family == "cycle-trees":
        k, _, rest = (params or "").partition(";")
        return [
            GeneratorService.gen_cycle_with_trees(
                _one(_ints(k), family), _attachments(rest)
            )
        ]
    numbers = _ints(params or "")
    if family == "prism":
        return [GeneratorService.gen_prism()]
    if family == "k4":
        return [GeneratorService.gen_k4()]
    if family == "petersen":
        return [GeneratorService.gen_petersen()]
    if family == "nopm":
        return [GeneratorService.gen_no_perfect_matching_cubic()]
    if family == "path":
        return [GeneratorService.gen_path(_one(numbers, family))]
    if family == "cycle":
        return [GeneratorService.gen_cycle(_one(numbers, family))]
    if family == "star":
        return [GeneratorService.gen_star(numbers[0] if numbers else 3)]
    if family == "theta":
        if len(numbers) != 3:
            raise CrumbyParseException("family theta takes a,b,c, got {}", params)
        return [GeneratorService.gen_theta(*numbers)]
    if family == "k4sub":
        return [GeneratorService.gen_k4_subdivided(numbers).expanded]
    if family == "random-tree":
        return [
            GeneratorService.gen_random_subcubic_tree(_one(numbers, family), seed=seed)
        ]
    if family == "random-cubic":
        return [GeneratorService.gen_random_cubic(_one(numbers, family), seed=seed)]
    if family == "fan":
        return [GeneratorService.gen_fan_outerplanar(numbers, seed=seed)]
    if family == "trees":
        return list(GeneratorService.enumerate_trees(_one(numbers, family)))
    raise CrumbyParseException("unknown family {}", family)


FAMILIES = (
    "path", "cycle", "star", "prism", "k4", "petersen", "nopm", "theta", "k4sub",
    "random-tree", "random-cubic", "fan", "cycle-trees", "trees",
)


def cmd_gen(args):
    for g in generate(args.family, args.params, seed=args.seed):
        if args.format == "edges":
            sys.stdout.write(GraphService.write_edge_list(g))
        else:
            print(GraphService.write_graph6(g).decode("ascii"))
    return EXIT_OK


def cmd_fixtures(args):
    if args.write:
        _, diff = FixtureService.regenerate_fixtures(args.dir, write=True)
        for line in diff:
            print(line)
        return EXIT_OK
    fixtures = FixtureService.load_fixtures(args.dir, refresh=True)
    print("%d fixture entries valid" % len(fixtures))
    if args.check:
        _, diff = FixtureService.regenerate_fixtures(args.dir, write=False)
        for line in diff:
            print(line)
        return EXIT_NEGATIVE if diff else EXIT_OK
    return EXIT_OK
