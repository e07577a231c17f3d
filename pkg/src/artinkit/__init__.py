"""Exact computations in Coxeter groups and Artin monoids: root systems, the
word problem, a linear representation over Z[x^+-1, y^+-1], closed root sets
and the decoding of positive words, and folding into small type."""
from .graph import CoxeterGraph, GraphError, has_no_triangle, is_small_type, is_spherical, load_graph
from .roots import Root, RootSystemContext, root_context
from .coxeter import GroupElement, canonicalize, tau
from .monoid import L, lcm, monoid_eq, monoid_eq_bfs
from .rep import RepContext
from .closed import cmax, decode, eq_via_decode, star, star_word
from .fold import FoldMorphism, fold_once, fold_to_small_no_triangle

__all__ = [
    "CoxeterGraph", "GraphError", "has_no_triangle", "is_small_type", "is_spherical",
    "load_graph", "Root", "RootSystemContext", "root_context", "GroupElement",
    "canonicalize", "tau", "L", "lcm", "monoid_eq", "monoid_eq_bfs", "RepContext",
    "cmax", "decode", "eq_via_decode", "star", "star_word", "FoldMorphism",
    "fold_once", "fold_to_small_no_triangle",
]
__version__ = "0.1.0"
