# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.abspath("../plucker"))

# Specify settings module
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "settings")

# Setup Django
import django

django.setup()


# -- Project information -----------------------------------------------------

project = "django-plucker"
copyright = "2020, The django-plucker developers"
author = "The django-plucker developers"

# The short X.Y version
version = "0.1"
# The full version, including alpha/beta/rc tags
release = "0.1.0"


# -- General configuration ---------------------------------------------------

extensions = [
    "readthedocs_ext.readthedocs",
    "sphinx.ext.autodoc",
    "sphinx.ext.viewcode",
    "sphinx_rtd_theme",
]

source_suffix = ".rst"

# The master toctree document.
master_doc = "contents"

language = None

exclude_patterns = []

pygments_style = None


# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"

htmlhelp_basename = "django-pluckerdoc"


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, "django-plucker", "django-plucker Documentation", [author], 1)
]
