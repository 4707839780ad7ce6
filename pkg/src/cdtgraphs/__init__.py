"""Verification toolkit for the cubic distance-transitive graphs, their
girth-cycle orientation assignments and the zipped graphs built from them."""

from .graph import Graph, GraphError, make_graph

__version__ = "0.1.0"

__all__ = ["Graph", "GraphError", "make_graph", "__version__"]
