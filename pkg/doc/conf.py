#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# facseries documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

# Extends the path with parent directory in order to
# import facseries from the project also if it's installed.
import sys
import os
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.doctest']

# Option for autodoc: do not add module name as prefix to classes or functions.
add_module_names = False

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'facseries'
copyright = '2020, facseries developers'
author = 'facseries developers'

# The short X.Y version.
version = '1.0'
# The full version, including alpha/beta/rc tags.
release = '1.0.0'

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = False

# Setup for doctest: the examples are run from the project root.
doctest_global_setup = '''
import facseries
'''

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'facseriesdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}
latex_documents = [
    (master_doc, 'facseries.tex', 'facseries Documentation',
     'facseries developers', 'manual'),
]
latex_appendices = ['api']
