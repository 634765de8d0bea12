#!/usr/bin/env python3
#
# PshAtlas documentation build configuration file.

from datetime import date
import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from PshAtlas import VERSION

year = date.today().year

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'PshAtlas'
copyright = '{0}, The PshAtlas Developers'.format(year)
author = 'The PshAtlas Developers'

version = VERSION
release = VERSION

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
html_sidebars = {
    '**': [
        'about.html',
        'searchbox.html',
        'navigation.html',
        'relations.html',
    ]
}
htmlhelp_basename = 'PshAtlasdoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'psh-atlas', 'PshAtlas Documentation',
     [author], 1)
]
