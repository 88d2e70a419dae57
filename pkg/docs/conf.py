# -*- coding: utf-8 -*-
#
# crumby documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.
import os
import sys

sys.path.insert(0, os.path.abspath(".."))

# -- General configuration -----------------------------------------------------

extensions = ["sphinx.ext.autodoc", "sphinx.ext.viewcode"]

source_suffix = ".rst"
master_doc = "index"

project = u"crumby"
copyright = u"crumby contributors"

from crumby import __version__

# __version__ is None when crumby is not installed
release = __version__ or "0.1.0"
version = ".".join(release.split(".")[:2])

exclude_patterns = ["_build"]
pygments_style = "sphinx"

# -- Options for HTML output ---------------------------------------------------

on_rtd = os.environ.get("READTHEDOCS", None) == "True"

if not on_rtd:  # only import and set the theme if we're building docs locally
    import sphinx_rtd_theme

    html_theme = "sphinx_rtd_theme"
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

html_static_path = []
htmlhelp_basename = "crumbydoc"

autodoc_member_order = "bysource"
