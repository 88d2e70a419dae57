# -*- coding: utf-8 -*-
"""
Command line front end: ``crumby solve|verify|count|decompose|gen|search|fixtures``

Exit codes are 0 for Sat or ok, 1 for Unsat, not ok or counterexample
candidates, and 2 for any error.
"""
from __future__ import unicode_literals

import argparse
import logging
import sys

from crumby import __version__, crumby_model_init
from crumby.exc import CrumbyException
from crumby.ext.cli import commands, search
from crumby.ext.cli.settings import load_settings

log = logging.getLogger(__name__)


def _add_input(parser):
    parser.add_argument(
        "input",
        nargs="?",
        default="-",
        help="graph file (graph6 or edge list), - for stdin",
    )


def _add_budget(parser):
    parser.add_argument("--budget", type=int, default=None, help="oracle node budget")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="crumby", description="Crumby colorings of subcubic graphs"
    )
    parser.add_argument("--version", action="version", version=str(__version__))
    parser.add_argument(
        "--config", default=None, help="ini file with a [crumby] section"
    )
    parser.add_argument("--fixtures-dir", dest="fixtures_dir", default=None)
    parser.add_argument(
        "--validate",
        action="store_const",
        const=True,
        default=None,
        help="check internal decompositions and ledgers on every run",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("-q", "--quiet", action="store_true")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("solve", help="construct a verified crumby coloring")
    _add_input(p)
    p.add_argument("--class", dest="graph_class", default=None, help="graph class hint")
    p.add_argument(
        "--prescribe",
        action="append",
        default=[],
        metavar="V=COLOR",
        help="prescribed vertex color, repeatable",
    )
    p.add_argument("--format", choices=("string", "dot"), default="string")
    p.add_argument("--exact", action="store_true", help="use the exact oracle")
    _add_budget(p)
    p.set_defaults(func=commands.cmd_solve)

    p = sub.add_parser("verify", help="check a coloring string")
    _add_input(p)
    p.add_argument("coloring", help="r/b string in vertex order")
    p.add_argument("--records", action="store_true", help="JSON output")
    p.set_defaults(func=commands.cmd_verify)

    p = sub.add_parser("count", help="number of crumby colorings")
    _add_input(p)
    p.add_argument("--prescribe", action="append", default=[], metavar="V=COLOR")
    _add_budget(p)
    p.set_defaults(func=commands.cmd_count)

    p = sub.add_parser("decompose", help="matching, Edmonds-Gallai or ear structure")
    _add_input(p)
    p.add_argument("--kind", choices=("matching", "eg", "ears"), default="eg")
    p.add_argument("--vertex", type=int, default=0, help="start vertex for ears")
    p.add_argument("--records", action="store_true", help="JSON output")
    p.set_defaults(func=commands.cmd_decompose)

    p = sub.add_parser("gen", help="generate instances")
    p.add_argument("family", choices=commands.FAMILIES)
    p.add_argument(
        "params",
        nargs="?",
        default="",
        help='comma separated integers, "k;pos:K2,pos:K13" for cycle-trees',
    )
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.set_defaults(func=commands.cmd_gen)

    p = sub.add_parser("search", help="oracle verdicts over a graph6 corpus")
    _add_input(p)
    p.add_argument(
        "--filter",
        action="append",
        default=[],
        help="class flag (subcubic, bipartite, tree, outerplanar, k4-minor-free) "
        "or module:attr predicate, repeatable",
    )
    p.add_argument("--transform", default=None, metavar="subdivide=N")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--records", action="store_true", help="JSON lines output")
    _add_budget(p)
    p.set_defaults(func=search.cmd_search)

    p = sub.add_parser("fixtures", help="validate or regenerate the fixture tables")
    p.add_argument("--dir", default=None)
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--check", action="store_true", help="also diff the oracle tables"
    )
    group.add_argument(
        "--write", action="store_true", help="regenerate the oracle tables"
    )
    p.set_defaults(func=commands.cmd_fixtures)
    return parser


def configure_logging(args):
    if args.quiet:
        level = logging.ERROR
    elif args.verbose > 1:
        level = logging.DEBUG
    elif args.verbose:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv=None, environ=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code == 0 else commands.EXIT_ERROR
    configure_logging(args)
    try:
        crumby_model_init(settings=load_settings(args, environ))
        return args.func(args)
    except CrumbyException as exc:
        log.debug("command failed", exc_info=True)
        sys.stderr.write("crumby: error: %s\n" % exc)
        return commands.EXIT_ERROR
    finally:
        crumby_model_init()


if __name__ == "__main__":
    sys.exit(main())
