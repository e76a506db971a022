"""
Sphinx configuration for padic-kwapien documentation.
"""

import re
import sys
from pathlib import Path

SRC = Path(__file__).resolve().parents[1] / "src"
sys.path.insert(0, str(SRC))

__version__ = re.search(
    r'__version__ = "([^"]+)"', (SRC / "padic_kwapien" / "__init__.py").read_text()
).group(1)

project = 'padic-kwapien'
copyright = '2025, AJ Carter'
author = 'AJ Carter'
release = __version__
version = '.'.join(__version__.split('.')[:2])

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
]

# build without the numeric stack installed
autodoc_mock_imports = ['numpy']
autodoc_member_order = 'bysource'
autodoc_typehints = 'description'
autodoc_default_options = {
    'members': True,
    'show-inheritance': True,
}
napoleon_google_docstring = False
napoleon_numpy_docstring = True

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'click': ('https://click.palletsprojects.com/en/stable/', None),
}

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

html_theme = 'furo'
html_title = 'padic-kwapien'
html_static_path = ['_static']

html_theme_options = {
    "sidebar_hide_name": False,
}
