"""Exact verification of a congruent-triangle dissection of the law of cosines."""
from .exact_geom import Point, pt
from .figure import build_figure, make_labeled_triangle
from .verify import run_all

__all__ = ["Point", "pt", "build_figure", "make_labeled_triangle", "run_all"]
__version__ = "0.1.0"
