#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# fpknot documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.
#
# All configuration values have a default; values that are commented out
# serve to show the default.

import sys
import os

# Get the project root dir, which is the parent dir of this
cwd = os.getcwd()
project_root = os.path.dirname(cwd)

# Insert the project root dir as the first element in the PYTHONPATH.
# This lets us ensure that the source package is imported, and that its
# version is used.
sys.path.insert(0, project_root)

import fpknot

# -- General configuration ---------------------------------------------

# Add any Sphinx extension module names here, as strings.
extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode',
              'sphinx.ext.napoleon', 'sphinx.ext.autosectionlabel']

# Add any paths that contain templates here, relative to this directory.
templates_path = ['_templates']

# The suffix of source filenames.
source_suffix = '.rst'

# The master toctree document.
master_doc = 'index'

autosectionlabel_prefix_document = True

# General information about the project.
project = 'fpknot'
copyright = '2026, The fpknot developers'

# The short X.Y version.
version = fpknot.__version__
# The full version, including alpha/beta/rc tags.
release = fpknot.__version__

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = ['_build']

highlight_language = 'python'

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = 'sphinx'

# If true, keep warnings as "system message" paragraphs in the built
# documents.
keep_warnings = True


# -- Options for HTML output -------------------------------------------

html_theme = 'alabaster'

html_theme_options = {
    'description': 'Finitely presented groups of Klein bottles',
    'fixed_sidebar': False,
    'sidebar_width': '230px',
    'show_related': True,
    'head_font_family': 'Roboto, Tahoma, Verdana, Segoe, sans-serif',
    'font_family': 'Tahoma, Verdana, Segoe, sans-serif',
    'code_font_family': 'Lucida Console, Lucida Sans Typewriter, monospace'
}

html_last_updated_fmt = '%b %d, %Y'

html_sidebars = {'**': [
    'globaltoc.html',
    'relations.html',
    'sourcelink.html',
    'searchbox.html',
    ], }

html_show_sourcelink = False
html_show_sphinx = True
html_show_copyright = True

# Output file base name for HTML help builder.
htmlhelp_basename = 'fpknotdoc'


# -- Options for LaTeX output ------------------------------------------

latex_elements = {
    # The paper size ('letterpaper' or 'a4paper').
    #'papersize': 'letterpaper',
}

latex_documents = [
    ('index', 'fpknot.tex',
     u'fpknot Documentation',
     u'The fpknot developers', 'manual'),
]


# -- Options for manual page output ------------------------------------

man_pages = [
    ('index', 'fpknot',
     u"fpknot User's Guide",
     [u'The fpknot developers'], 1)
]


# -- Options for Texinfo output ----------------------------------------

texinfo_documents = [
    ('index', 'fpknot',
     u"fpknot User's Guide",
     u'The fpknot developers',
     'fpknot',
     'Finitely presented group tools for Klein bottle knot groups.',
     'Miscellaneous'),
]
