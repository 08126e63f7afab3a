"""Static figures rendered from the solver CLI's CSV tables."""

from .csvio import Table, MissingColumnError, read_table
from .spec import FigureSpec, FIGURE_IDS, build_spec, build_specs
from .render import render

__version__ = "0.1.0"
