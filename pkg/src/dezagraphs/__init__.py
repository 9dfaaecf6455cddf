"""Recognition, construction and enumeration of Deza graphs."""

from .analysis import DezaReport, alpha_beta, children, classify, complement_is_deza, is_divisible_design
from .graph import Graph, VertexPermutation, cayley_graph, complement, from_edges, lexicographic_product
from .graphio import from_graph6, to_graph6
from .isomorphism import is_isomorphic

__version__ = "0.1.0"
