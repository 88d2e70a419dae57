# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import difflib
import io
import logging
import os

from crumby.exc import (
    CrumbyException,
    CrumbyFixtureException,
    CrumbyParseException,
)
from crumby.models.coloring import BLUE, RED
from crumby.models.fixture import ORACLE_GENERATED, TRANSCRIBED, FixtureEntry
from crumby.models.patterns import PatternPurpose
from crumby.models.services import BaseService

__all__ = ["FixtureService"]

log = logging.getLogger(__name__)

TRANSCRIBED_FILE = "tables.txt"
# oracle generated files, rebuilt by regenerate_fixtures
ORACLE_FILES = {"k4_base": "k4_base.txt", "ear_start": "ear_start.txt"}

_cache = {}


class FixtureService(BaseService):
    @classmethod
    def fixtures_dir(cls, directory=None):
        if directory:
            return directory
        configured = cls.setting("fixtures_dir")
        if configured:
            return configured
        import crumby

        return os.path.join(
            os.path.dirname(os.path.abspath(crumby.__file__)), "fixtures"
        )

    @classmethod
    def parse_line(cls, line, provenance=TRANSCRIBED):
        """
        Parses "<table> <key...> : <value>"

        :param line:
        :param provenance:
        :return: FixtureEntry or None for blank and comment lines
        """
        text = line.strip()
        if not text or text.startswith("#"):
            return None
        left, sep, value = text.partition(":")
        parts = left.split()
        if not sep or len(parts) < 2 or not value.strip():
            raise CrumbyParseException("malformed fixture line {!r}", line)
        return FixtureEntry(parts[0], " ".join(parts[1:]), value.strip(), provenance)

    @classmethod
    def read_file(cls, path, provenance):
        entries = []
        with io.open(path, encoding="utf8") as handle:
            for number, line in enumerate(handle, 1):
                try:
                    entry = cls.parse_line(line, provenance)
                except CrumbyParseException as exc:
                    raise CrumbyParseException(
                        "{}", "%s:%d: %s" % (os.path.basename(path), number, exc)
                    )
                if entry is not None:
                    entries.append(entry)
        return entries

    @classmethod
    def load_fixtures(cls, directory=None, refresh=False):
        """
        Reads and validates every fixture file in the fixtures directory.
        Oracle generated files are optional. Results are cached per
        directory.

        :param directory: defaults to the crumby.fixtures_dir setting
        :param refresh: drop the cached copy first
        :return: FixtureSet
        """
        directory = cls.fixtures_dir(directory)
        if refresh:
            _cache.pop(directory, None)
        if directory in _cache:
            return _cache[directory]
        fixtures = cls.model()
        path = os.path.join(directory, TRANSCRIBED_FILE)
        if not os.path.exists(path):
            raise CrumbyFixtureException("missing fixture file {}", path)
        for entry in cls.read_file(path, TRANSCRIBED):
            fixtures.add(entry)
        for name in sorted(ORACLE_FILES.values()):
            path = os.path.join(directory, name)
            if os.path.exists(path):
                for entry in cls.read_file(path, ORACLE_GENERATED):
                    fixtures.add(entry)
        for entry in fixtures.entries():
            cls.validate_entry(entry)
        log.debug("loaded %s fixture entries from %s", len(fixtures), directory)
        _cache[directory] = fixtures
        return fixtures

    @classmethod
    def validate_entry(cls, entry):
        """
        Checks one entry with the validator of its table, raising
        CrumbyFixtureException that names the table and key
        """
        validators = {
            "path_patterns": cls._check_path_pattern,
            "cycle": cls._check_cycle,
            "k4_path_case": cls._check_k4_path_case,
            "k4_base": cls._check_k4_base,
            "ear_start": cls._check_ear_start,
        }
        check = validators.get(entry.table)
        if check is None:
            raise CrumbyFixtureException("unknown fixture table {}", entry.table)
        try:
            ok = check(entry.key, entry.value)
        except (CrumbyException, ValueError) as exc:
            log.debug("fixture %s %s: %s", entry.table, entry.key, exc)
            ok = False
        if not ok:
            raise CrumbyFixtureException(
                "fixture {} failed validation", "%s %s" % (entry.table, entry.key)
            )
        return True

    @classmethod
    def _check_path_pattern(cls, key, value):
        from crumby.models.services.verifier import VerifierService

        k, purpose = key.split()
        if len(value) != int(k):
            return False
        if value != value.lower():
            # unmet aim, still a crumby path coloring for some purpose
            return value == value.upper() and any(
                VerifierService.validate_pattern(value.lower(), p)
                for p in PatternPurpose
            )
        return VerifierService.validate_pattern(value, purpose)

    @classmethod
    def _check_cycle(cls, key, value):
        from crumby.models.services.generator import GeneratorService
        from crumby.models.services.verifier import VerifierService

        g = GeneratorService.gen_cycle(int(key))
        coloring = cls.models_proxy.Coloring.from_string(value)
        coloring.check_size(g)
        return VerifierService.verify_crumby(g, coloring).ok

    @classmethod
    def _check_k4_path_case(cls, key, value):
        from crumby.models.services.k4 import K4SubdivisionService
        from crumby.models.services.verifier import VerifierService

        i, j, k = [int(c) for c in key.split()]
        g, coloring = K4SubdivisionService.path_case_from_row(i, j, k, value)
        return VerifierService.verify_crumby(g, coloring).ok

    @classmethod
    def _check_k4_base(cls, key, value):
        from crumby.models.services.k4 import K4SubdivisionService
        from crumby.models.services.verifier import VerifierService

        vector = cls.models_proxy.K4SubdivisionVector.parse(key)
        g = K4SubdivisionService.instance(vector).expanded
        coloring = cls.models_proxy.Coloring.from_string(value)
        coloring.check_size(g)
        return vector.is_base() and VerifierService.verify_crumby(g, coloring).ok

    @classmethod
    def _check_ear_start(cls, key, value):
        from crumby.models.services.outerplanar import OuterplanarService

        if key not in (RED, BLUE):
            return False
        expected = OuterplanarService.enumerate_start_configurations(key)
        return value.split() == expected

    @classmethod
    def regenerate_fixtures(cls, directory=None, write=False):
        """
        Rebuilds the oracle generated tables: one base coloring for each of
        the 729 K4 vectors with counts at most 2, and the colorings of the
        two-square start configuration for either color of its start vertex

        :param directory:
        :param write: store the files in the fixtures directory
        :return: (FixtureSet, list of unified diff lines against the
            stored files)
        """
        from crumby.models.services.k4 import K4SubdivisionService
        from crumby.models.services.outerplanar import OuterplanarService

        directory = cls.fixtures_dir(directory)
        fixtures = cls.model()
        for vector in K4SubdivisionService.base_vectors():
            coloring = K4SubdivisionService.solve_k4_base(vector, use_fixtures=False)
            fixtures.add(
                FixtureEntry("k4_base", str(vector), coloring.colors, ORACLE_GENERATED)
            )
        for color in (RED, BLUE):
            value = " ".join(OuterplanarService.enumerate_start_configurations(color))
            fixtures.add(FixtureEntry("ear_start", color, value, ORACLE_GENERATED))
        log.info("regenerated %s oracle fixture entries", len(fixtures))

        diff = []
        for table, name in sorted(ORACLE_FILES.items()):
            path = os.path.join(directory, name)
            old = []
            if os.path.exists(path):
                with io.open(path, encoding="utf8") as handle:
                    old = handle.read().splitlines()
            new = cls.render(fixtures, table)
            diff.extend(
                difflib.unified_diff(old, new, fromfile=name, tofile=name, lineterm="")
            )
            if write:
                with io.open(path, "w", encoding="utf8") as handle:
                    handle.write("\n".join(new) + "\n")
                log.info("wrote %s", path)
        if write:
            _cache.pop(directory, None)
        return fixtures, diff

    @classmethod
    def render(cls, fixtures, table):
        """ file lines for one table, with a provenance header """
        lines = ["# generated by crumby fixtures --write, do not edit"]
        for key in sorted(fixtures.table(table)):
            lines.append("%s %s : %s" % (table, key, fixtures.get(table, key)))
        return lines

