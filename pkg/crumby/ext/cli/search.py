# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import json
import logging
import time
from collections import Counter, namedtuple
from concurrent.futures import ProcessPoolExecutor

from crumby.exc import CrumbyException, CrumbyParseException
from crumby.models.outcome import BUDGET_EXCEEDED, SAT, UNSAT
from crumby.models.services.graph import GraphService
from crumby.models.services.oracle import OracleService
from crumby.utils import resolve_callable

log = logging.getLogger(__name__)

SearchVerdict = namedtuple(
    "SearchVerdict",
    ["index", "graph6", "flags", "result", "nodes", "elapsed", "passes_filter"],
)

FLAGS = {
    "subcubic": GraphService.is_subcubic,
    "bipartite": GraphService.is_bipartite,
    "tree": GraphService.is_tree,
    "outerplanar": GraphService.is_outerplanar,
    "k4-minor-free": lambda g: not GraphService.has_k4_minor(g),
}


def resolve_filter(name):
    """ a builtin flag name or a "module:attr" predicate over Graph """
    if name in FLAGS:
        return FLAGS[name]
    if ":" not in name:
        raise CrumbyParseException(
            "unknown filter {}, use a class flag or module:attr", name
        )
    return resolve_callable(name)


def parse_transform(value):
    """ "subdivide=N" -> N, None for no transform """
    if not value:
        return None
    key, _, count = value.partition("=")
    if key != "subdivide" or not count.strip().isdigit():
        raise CrumbyParseException("bad transform {}, use subdivide=N", value)
    return int(count)


def class_flags(g):
    return dict((name, bool(predicate(g))) for name, predicate in sorted(FLAGS.items()))


def _init_worker(settings):
    from crumby import crumby_model_init

    crumby_model_init(settings=settings)


def search_one(task):
    """
    Verdict for one corpus graph, run in the worker processes

    :param task: (index, graph6 line, filter names, subdivide count, budget)
    :return: SearchVerdict
    """
    index, line, filters, subdivide, budget = task
    started = time.time()
    g = GraphService.parse_graph6(line)
    if subdivide:
        g = GraphService.subdivide(g, subdivide).expanded
    graph6 = GraphService.write_graph6(g).decode("ascii")
    passes = all(resolve_filter(name)(g) for name in filters)
    outcome = OracleService.solve_exact(g, None, budget)
    elapsed = time.time() - started
    log.debug("search %s %s nodes=%s", graph6, outcome.status, outcome.nodes)
    return SearchVerdict(
        index, graph6, class_flags(g), outcome.status, outcome.nodes, elapsed, passes
    )


def read_corpus(lines):
    """
    Splits corpus lines into well formed graph6 records and a count of
    malformed ones

    :param lines: iterable of text lines
    :return: (list of tasks, malformed count)
    """
    good = []
    malformed = 0
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            GraphService.parse_graph6(line)
        except CrumbyException as exc:
            log.warning("skipping malformed corpus line %s: %s", lineno, exc)
            malformed += 1
            continue
        good.append((lineno, line))
    return good, malformed


def run_search(lines, filters=(), subdivide=None, budget=None, jobs=1, settings=None):
    """
    Exact oracle verdict for every corpus graph. With jobs > 1 the graphs
    fan out to a process pool; verdicts always come back in input order.

    :param lines: graph6 lines
    :param filters: names accepted by resolve_filter
    :param subdivide: optional count applied to every edge first
    :param budget: oracle node budget per graph
    :param jobs: worker processes
    :param settings: settings mapping bound in every worker
    :return: (list of SearchVerdict, malformed count)
    """
    filters = list(filters)
    for name in filters:
        resolve_filter(name)
    corpus, malformed = read_corpus(lines)
    tasks = [
        (index, line, filters, subdivide, budget) for index, line in corpus
    ]
    if jobs > 1 and len(tasks) > 1:
        log.info("searching %s graphs with %s workers", len(tasks), jobs)
        with ProcessPoolExecutor(
            max_workers=jobs, initializer=_init_worker, initargs=(settings or {},)
        ) as executor:
            verdicts = list(executor.map(search_one, tasks, chunksize=8))
    else:
        verdicts = [search_one(task) for task in tasks]
    return verdicts, malformed


def summarize(verdicts, malformed):
    counts = Counter(v.result for v in verdicts)
    candidates = [v for v in verdicts if v.result == UNSAT and v.passes_filter]
    return {
        "total": len(verdicts),
        "sat": counts[SAT],
        "unsat": counts[UNSAT],
        "budget_exceeded": counts[BUDGET_EXCEEDED],
        "malformed": malformed,
        "candidates": [v.graph6 for v in candidates],
    }


def verdict_record(verdict):
    return {
        "line": verdict.index,
        "graph6": verdict.graph6,
        "flags": verdict.flags,
        "result": verdict.result,
        "nodes": verdict.nodes,
        "elapsed": round(verdict.elapsed, 6),
        "filter": verdict.passes_filter,
    }


def cmd_search(args):
    from crumby.ext.cli.commands import EXIT_NEGATIVE, EXIT_OK, read_input

    settings = OracleService.models_proxy.settings
    filters = list(args.filter or [])
    extra = settings.get("crumby.search.filter")
    if extra:
        filters.extend(f.strip() for f in str(extra).split(",") if f.strip())
    jobs = int(settings.get("crumby.jobs") or 1)
    verdicts, malformed = run_search(
        read_input(args.input).splitlines(),
        filters=filters,
        subdivide=parse_transform(args.transform),
        budget=args.budget,
        jobs=jobs,
        settings=settings,
    )
    for verdict in verdicts:
        if args.records:
            print(json.dumps(verdict_record(verdict), sort_keys=True))
        else:
            print("%s %s nodes=%d" % (verdict.graph6, verdict.result, verdict.nodes))
    summary = summarize(verdicts, malformed)
    if args.records:
        print(json.dumps({"summary": summary}, sort_keys=True))
    else:
        print(
            "summary: total=%(total)d sat=%(sat)d unsat=%(unsat)d "
            "budget_exceeded=%(budget_exceeded)d malformed=%(malformed)d" % summary
        )
        for graph6 in summary["candidates"]:
            print("candidate %s" % graph6)
    return EXIT_NEGATIVE if summary["candidates"] else EXIT_OK
