# -*- coding: utf-8 -*-
#
# kcut documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.

import os
import sys

# the package version lives in kcut/__init__.py
sys.path.insert(0, os.path.abspath('..'))

from kcut import __version__  # noqa: E402

# -- General configuration -----------------------------------------------------

extensions = []
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'kcut'
copyright = u'2026, kcut authors'

# The short X.Y version.
version = '.'.join(__version__.split('.')[:2])
# The full version, including alpha/beta/rc tags.
release = __version__

exclude_patterns = ['_build', 'global.rst']
pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'kcutdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {}
latex_documents = [
    ('index', 'kcut.tex', u'kcut documentation', u'kcut authors', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'kcut', u'kcut documentation', [u'kcut authors'], 1)
]
