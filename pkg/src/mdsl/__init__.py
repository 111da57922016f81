"""Discrete mathematics toolkit with a small interpreted surface language.

The library modules (``logic``, ``sets``, ``relation``, ``graph``, ``tree``,
``numtheory``, ``linalg``, ``combinatorics``) are usable directly from Python;
``frontend`` parses and evaluates the DSL notation on top of them and ``apps``
holds the demonstration programs.
"""

from .graph import Edges, Graph, GraphMatrix, Vertices
from .linalg import Matrix, Vector
from .relation import Relation
from .sets import Set
from .tree import LEAF, Leaf, Node

__version__ = "0.1.0"

__all__ = [
    "Edges", "Graph", "GraphMatrix", "Vertices", "Matrix", "Vector",
    "Relation", "Set", "LEAF", "Leaf", "Node",
]
