"""coplab: constructions, certificates and exact solvers for Cops and Robbers."""

from .errors import CoplabError
from .graph import Graph

__all__ = ["CoplabError", "Graph"]
__version__ = "0.1.0"
