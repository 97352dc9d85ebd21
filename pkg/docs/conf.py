# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Sphinx configuration."""

from gaptooth import __version__

# -- General configuration ------------------------------------------------

# Do not warn on external images.
suppress_warnings = ["image.nonlocal_uri"]

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.coverage",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

# General information about the project.
project = "Gaptooth"
copyright = "2026, Gaptooth contributors"
author = "Gaptooth contributors"

version = __version__
release = __version__

language = "en"
exclude_patterns = ["_build"]
pygments_style = "sphinx"
todo_include_todos = False


# -- Options for HTML output ----------------------------------------------
html_theme = "alabaster"

html_theme_options = {
    "description": "Gap-tooth multiscale laboratory",
    "github_button": False,
    "show_powered_by": False,
}

htmlhelp_basename = "gaptooth_namedoc"

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (
        master_doc,
        "gaptooth.tex",
        "Gaptooth Documentation",
        author,
        "manual",
    ),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (
        master_doc,
        "gaptooth",
        "Gaptooth Documentation",
        [author],
        1,
    )
]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    (
        master_doc,
        "gaptooth",
        "Gaptooth Documentation",
        author,
        "gaptooth",
        "Gap-tooth multiscale laboratory",
        "Miscellaneous",
    ),
]

intersphinx_mapping = {
    "python": ("https://docs.python.org/", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "flask": ("https://flask.palletsprojects.com/en/latest/", None),
    "marshmallow": ("https://marshmallow.readthedocs.io/en/stable/", None),
}

# Autodoc configuraton.
autoclass_content = "both"
