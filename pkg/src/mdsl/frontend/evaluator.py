"""Tree-walking evaluator."""

from .. import tree as tr
from ..graph import Edges, Graph, GraphMatrix, Vertices
from ..linalg import Matrix, Vector
from ..relation import Relation
from ..sets import Set
from . import ast as A
from .builtins import BUILTINS, seeded_builtins
from .values import Function


class EvalError(Exception):
    def __init__(self, message, pos=None):
        where = f"{pos[0]}:{pos[1]}: " if pos else ""
        super().__init__(where + message)
        self.message = message
        self.pos = pos


class Environment:
    """Name bindings layered over the builtins.

    ``let`` adds to ``bindings``; nothing else mutates an environment.
    """

    def __init__(self, seed: int = 0, bindings=None):
        self.seed = seed
        self.builtins = {**BUILTINS, **seeded_builtins(seed)}
        self.bindings = dict(bindings or {})

    def lookup(self, name, pos=None):
        if name in self.bindings:
            return self.bindings[name]
        if name in self.builtins:
            return self.builtins[name]
        raise EvalError(f"unbound variable {name!r}", pos)

    def bind(self, name, value, pos=None):
        if name in self.builtins:
            raise EvalError(f"cannot rebind builtin {name!r}", pos)
        self.bindings[name] = value


def _expand_range(start, second, end, pos):
    for v in (start, second, end):
        if v is not None and (isinstance(v, bool) or not isinstance(v, int)):
            raise EvalError("range bounds must be integers", pos)
    step = 1 if second is None else second - start
    if step == 0:
        raise EvalError("range step must not be zero", pos)
    stop = end + (1 if step > 0 else -1)
    return list(range(start, stop, step))


def _as_items(v, what, pos):
    if isinstance(v, list):
        return v
    if isinstance(v, Set):
        return list(v)
    raise EvalError(f"{what} expects a list, got {type(v).__name__}", pos)


def _pairs(items, n, what, pos):
    for x in items:
        if not (isinstance(x, tuple) and len(x) == n):
            raise EvalError(f"{what} expects {n}-tuples, got {x!r}", pos)
    return items


def construct(name, args, pos=None):
    try:
        if name == "Leaf":
            return tr.LEAF
        if name == "Node":
            return tr.Node(*args)
        if name == "Graph":
            vs, es = args
            vs = vs if isinstance(vs, Vertices) else Vertices(_as_items(vs, name, pos))
            es = es if isinstance(es, Edges) else Edges(_pairs(_as_items(es, name, pos), 3, name, pos))
            return Graph(vs, es)
        (arg,) = args
        if name == "Set":
            return arg if isinstance(arg, Set) else Set(_as_items(arg, name, pos))
        if name == "Relation":
            if isinstance(arg, Relation):
                return arg
            return Relation(_pairs(_as_items(arg, name, pos), 2, name, pos))
        if name == "Vertices":
            return arg if isinstance(arg, Vertices) else Vertices(_as_items(arg, name, pos))
        if name == "Edges":
            return arg if isinstance(arg, Edges) else Edges(_pairs(_as_items(arg, name, pos), 3, name, pos))
        if name == "Vector":
            return arg if isinstance(arg, Vector) else Vector(_as_items(arg, name, pos))
        if name in ("Matrix", "GraphMatrix"):
            cls = Matrix if name == "Matrix" else GraphMatrix
            if isinstance(arg, cls):
                return arg
            rows = _as_items(arg, name, pos)
            return cls([_as_items(r, name, pos) for r in rows])
    except EvalError:
        raise
    except (TypeError, ValueError) as exc:
        raise EvalError(f"{name}: {exc}", pos) from None
    raise EvalError(f"unknown constructor {name}", pos)


def evaluate(node, env: Environment):
    if isinstance(node, A.Lit):
        return node.value
    if isinstance(node, A.Var):
        return env.lookup(node.name, node.pos)
    if isinstance(node, A.ListLit):
        return [evaluate(x, env) for x in node.items]
    if isinstance(node, A.TupleLit):
        return tuple(evaluate(x, env) for x in node.items)
    if isinstance(node, A.Range):
        second = None if node.second is None else evaluate(node.second, env)
        return _expand_range(evaluate(node.start, env), second, evaluate(node.end, env), node.pos)
    if isinstance(node, A.Ctor):
        return construct(node.name, [evaluate(x, env) for x in node.args], node.pos)
    if isinstance(node, A.BinOp):
        fn = env.lookup(A.operator_function(node.op), node.pos)
        return _call(fn, [evaluate(node.lhs, env), evaluate(node.rhs, env)], node.pos)
    if isinstance(node, A.Neg):
        return _call(env.lookup("neg"), [evaluate(node.operand, env)], node.pos)
    if isinstance(node, A.Compose):
        outer, inner = evaluate(node.outer, env), evaluate(node.inner, env)
        return _call(env.lookup("compose"), [outer, inner], node.pos)
    if isinstance(node, A.Apply):
        fn = evaluate(node.callee, env)
        return _call(fn, [evaluate(x, env) for x in node.args], node.pos)
    if isinstance(node, A.Let):
        value = evaluate(node.expr, env)
        env.bind(node.name, value, node.pos)
        return value
    raise EvalError(f"cannot evaluate {type(node).__name__}")


def _call(fn, args, pos):
    if not isinstance(fn, Function):
        raise EvalError(f"value of type {type(fn).__name__} is not a function", pos)
    try:
        return fn.apply(args)
    except EvalError:
        raise
    except (TypeError, ValueError, ArithmeticError, IndexError, RecursionError) as exc:
        raise EvalError(str(exc) or type(exc).__name__, pos) from None
