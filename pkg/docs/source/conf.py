# Configuration file for the Sphinx documentation builder.

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join("..", "..", "src")))

project = "cubepaths"
copyright = "2026, cubepaths developers"
author = "cubepaths developers"
release = "0.1.0"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx_autodoc_typehints",
    "sphinx-prompt",
]

templates_path = ["_templates"]
exclude_patterns = []

autoclass_content = "both"
autodoc_member_order = "bysource"

html_theme = "nature"
html_sidebars = {"**": ["globaltoc.html", "relations.html", "sourcelink.html", "searchbox.html"]}
