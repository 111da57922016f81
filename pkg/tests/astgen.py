"""Random surface syntax trees and a fully parenthesized surface printer.

The printer here is deliberately separate from the library's core printer so
that a roundtrip exercises the parser on surface notation too.
"""

import json
import random

from mdsl.frontend import ast as A

NAMES = ["foo", "bar", "baz", "qux", "x'", "y_1"]
OPS = sorted(A.OPERATOR_FUNCTIONS) + ["`foo`", "`bar`"]


def gen(rng: random.Random, depth: int = 4):
    if depth <= 0 or rng.random() < 0.25:
        return _leaf(rng)
    kind = rng.choice(["list", "tuple", "range", "ctor", "binop", "neg", "apply", "compose", "set"])
    d = depth - 1
    if kind == "list":
        return A.ListLit(tuple(gen(rng, d) for _ in range(rng.randint(0, 3))))
    if kind == "tuple":
        return A.TupleLit(tuple(gen(rng, d) for _ in range(rng.randint(2, 3))))
    if kind == "range":
        second = gen(rng, d) if rng.random() < 0.5 else None
        return A.Range(gen(rng, d), second, gen(rng, d))
    if kind == "ctor":
        name = rng.choice(sorted(A.CONSTRUCTORS))
        return A.Ctor(name, tuple(gen(rng, d) for _ in range(A.CONSTRUCTORS[name])))
    if kind == "set":
        return A.Ctor("Set", (A.ListLit(tuple(gen(rng, d) for _ in range(rng.randint(0, 3)))),))
    if kind == "binop":
        return A.BinOp(rng.choice(OPS), gen(rng, d), gen(rng, d))
    if kind == "neg":
        operand = gen(rng, d)
        if isinstance(operand, A.Lit) and type(operand.value) in (int, float):
            # the parser folds a minus into a numeric literal
            return A.Lit(-operand.value)
        return A.Neg(operand)
    if kind == "apply":
        return A.Apply(A.Var(rng.choice(NAMES)), tuple(gen(rng, d) for _ in range(rng.randint(1, 3))))
    return A.Compose(gen(rng, d), gen(rng, d))


def _leaf(rng):
    r = rng.random()
    if r < 0.3:
        return A.Lit(rng.randint(0, 10**rng.randint(1, 20)))
    if r < 0.45:
        return A.Lit(rng.choice([0.5, 2.25, 1e-07, 3.0e20, 123.456, rng.random()]))
    if r < 0.55:
        return A.Lit(rng.random() < 0.5)
    if r < 0.65:
        alphabet = 'ab "\\\n\tλ€z'
        return A.Lit("".join(rng.choice(alphabet) for _ in range(rng.randint(0, 5))))
    if r < 0.7:
        return A.Ctor("Leaf", ())
    return A.Var(rng.choice(NAMES))


def surface(node) -> str:
    """Print a surface tree so that it parses back to the same tree."""
    if isinstance(node, A.Lit):
        v = node.value
        if isinstance(v, bool):
            return str(v)
        if isinstance(v, str):
            return json.dumps(v, ensure_ascii=False)
        return f"({v!r})" if v < 0 else repr(v)
    if isinstance(node, A.Var):
        return node.name
    if isinstance(node, A.ListLit):
        return "[" + ", ".join(surface(x) for x in node.items) + "]"
    if isinstance(node, A.TupleLit):
        return "(" + ", ".join(surface(x) for x in node.items) + ")"
    if isinstance(node, A.Range):
        head = surface(node.start)
        if node.second is not None:
            head += ", " + surface(node.second)
        return f"[{head} .. {surface(node.end)}]"
    if isinstance(node, A.Ctor):
        if not node.args:
            return node.name
        return "(" + node.name + "".join(f" ({surface(a)})" for a in node.args) + ")"
    if isinstance(node, A.BinOp):
        return f"({surface(node.lhs)} {node.op} {surface(node.rhs)})"
    if isinstance(node, A.Neg):
        return f"(- {surface(node.operand)})"
    if isinstance(node, A.Apply):
        return "(" + surface(node.callee) + "".join(f" ({surface(a)})" for a in node.args) + ")"
    if isinstance(node, A.Compose):
        return f"({surface(node.outer)} . {surface(node.inner)})"
    if isinstance(node, A.Let):
        return f"let {node.name} = {surface(node.expr)}"
    raise TypeError(node)
