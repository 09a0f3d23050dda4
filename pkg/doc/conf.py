# -*- coding: utf-8 -*-
#
# documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing dir.
#
# All configuration values have a default; values that are commented out
# serve to show the default.

import sys, os
import sphinx

sys.path.insert(0, os.path.abspath('..'))

pkg_name = "labelrank"

import pkg_resources
version = pkg_resources.require(pkg_name)[0].version

release = version
author = "LabelRank developers"
title = "LabelRank"
copyright = author + ", 2026"
project = 'labelrank'

# -- General configuration -----------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.coverage',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.todo',
    'sphinx.ext.ifconfig',
    'sphinx.ext.viewcode',
    'easydev.copybutton',
    ('sphinx.ext.imgmath'  # only available for sphinx >= 1.4
                  if sphinx.version_info[:2] >= (1, 4)
                  else 'sphinx.ext.pngmath'),
    ]

todo_include_todos=True
jscopybutton_path = "copybutton.js"
autoclass_content = 'both'

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

version = 'Current version: ' + str(version)

exclude_patterns = ['build']
add_module_names = False
show_authors = True
pygments_style = 'sphinx'
modindex_common_prefix = ["labelrank."]


# -- Options for HTML output ---------------------------------------------------

on_rtd = os.environ.get("READTHEDOCS", None) == "True"
if not on_rtd:
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
else:
    html_theme = "default"

html_short_title = "LabelRank"
html_last_updated_fmt = '%b %d, %Y'
html_use_modindex = True
html_domain_indices = True
html_use_index = True
html_split_index = False
html_show_sourcelink = True
html_copy_source = True
html_show_sphinx = True
htmlhelp_basename = 'doc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
  ('index', 'labelrank.tex', title, author, 'manual'),
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
    'pandas': ('https://pandas.pydata.org/docs/', None),
}
