"""Text rendering of DSL values, in the style of an interactive Haskell session."""

import json
import math

from ..graph import Edges, Graph, GraphMatrix, Vertices
from ..linalg import Matrix, Vector
from ..relation import Relation
from ..sets import Set
from ..tree import Leaf, Node


def render_number(x) -> str:
    if isinstance(x, bool):
        return "True" if x else "False"
    if isinstance(x, int):
        return str(x)
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return repr(x)


def _seq(items, open_, close):
    return open_ + ",".join(_inline(x) for x in items) + close


def _tree(t, nested):
    if isinstance(t, Leaf):
        return "Leaf"
    s = f"Node {_inline(t.value)} {_tree(t.left, True)} {_tree(t.right, True)}"
    return f"({s})" if nested else s


def _inline(v) -> str:
    if isinstance(v, (bool, int, float)):
        return render_number(v)
    if isinstance(v, str):
        return json.dumps(v)
    if v is None:
        return "Nothing"
    if isinstance(v, tuple):
        return _seq(v, "(", ")")
    if isinstance(v, list):
        return _seq(v, "[", "]")
    if isinstance(v, dict):
        return _seq(sorted(v.items()), "[", "]")
    if isinstance(v, Set):
        return _seq(v, "{", "}")
    if isinstance(v, Relation):
        return _seq(v.pairs, "{", "}")
    if isinstance(v, Vector):
        return _seq(v, "<", ">")
    if isinstance(v, Matrix):
        return "Matrix " + _seq([list(r) for r in v.rows], "[", "]")
    if isinstance(v, Vertices):
        return "Vertices " + _seq(v.labels, "[", "]")
    if isinstance(v, Edges):
        return "Edges " + _seq(v.triples, "[", "]")
    if isinstance(v, Graph):
        return f"Graph ({_inline(v.vertices)}, {_inline(v.edges)})"
    if isinstance(v, GraphMatrix):
        return "GraphMatrix " + _seq([list(r) for r in v.rows], "[", "]")
    if isinstance(v, (Node, Leaf)):
        return _tree(v, False)
    if callable(v):
        return f"<function {getattr(v, 'name', getattr(v, '__name__', '?'))}>"
    return repr(v)


def render(v) -> str:
    """Render a value; a top-level matrix prints one tab-separated row per line."""
    if isinstance(v, Matrix):
        return "\n".join("\t".join(render_number(x) for x in row) for row in v.rows)
    return _inline(v)
