# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
# http://www.sphinx-doc.org/en/master/config

import os
import sys

sys.path.insert(0, os.path.abspath('../..'))

from bondtools import __version__

# -- Project information -----------------------------------------------------

project = u'bondtools'
copyright = u'2026, bondtools developers'
author = u'bondtools developers'

version = __version__
release = __version__

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = None
exclude_patterns = []
pygments_style = None
autodoc_member_order = 'bysource'

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_static_path = ['_static']
htmlhelp_basename = 'bondtoolsdoc'

# -- Options for other outputs -----------------------------------------------

latex_documents = [
    (master_doc, 'bondtools.tex', u'bondtools Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'bondtools', u'bondtools Documentation', [author], 1)
]

texinfo_documents = [
    (master_doc, 'bondtools', u'bondtools Documentation', author, 'bondtools',
     'Domination, bondage and genus computations for small graphs.', 'Miscellaneous'),
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'networkx': ('https://networkx.org/documentation/stable/', None),
    'pandas': ('https://pandas.pydata.org/docs/', None),
}
