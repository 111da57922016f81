"""Expression tree for the DSL.

Source positions are carried for diagnostics but ignored by equality, so two
trees parsed from differently formatted text compare equal.
"""

from dataclasses import dataclass, field
from typing import Optional

Pos = Optional[tuple]


@dataclass(frozen=True, eq=False)
class Lit:
    value: object
    pos: Pos = field(default=None, compare=False)

    def __eq__(self, other):
        # 1, 1.0 and True are different literals
        return (
            isinstance(other, Lit)
            and type(self.value) is type(other.value)
            and self.value == other.value
        )

    def __hash__(self):
        return hash((type(self.value), self.value))


@dataclass(frozen=True)
class Var:
    name: str
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class ListLit:
    items: tuple
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class TupleLit:
    items: tuple
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class Range:
    """Arithmetic progression ``[start, second..end]``; ``second`` may be None."""

    start: object
    second: object
    end: object
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class Ctor:
    name: str
    args: tuple
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class BinOp:
    """Infix operator; ``op`` is the ASCII symbol or a backticked function name."""

    op: str
    lhs: object
    rhs: object
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class Apply:
    callee: object
    args: tuple
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class Compose:
    outer: object
    inner: object
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class Let:
    name: str
    expr: object
    pos: Pos = field(default=None, compare=False)


CONSTRUCTORS = {
    "Set": 1,
    "Relation": 1,
    "Vector": 1,
    "Matrix": 1,
    "Vertices": 1,
    "Edges": 1,
    "GraphMatrix": 1,
    "Graph": 2,
    "Node": 3,
    "Leaf": 0,
}

# surface operator -> core function
OPERATOR_FUNCTIONS = {
    "/\\": "and'",
    "\\/": "or'",
    "==>": "implies",
    "<=>": "equals",
    "<+>": "vAdd",
    "<->": "vSub",
    "<.>": "innerProd",
    "><": "crossProd",
    "<*>": "scalarMult",
    "|+|": "mAdd",
    "|-|": "mSub",
    "|*|": "mScalarMult",
    "|><|": "mMult",
    "|/|": "mDiv",
    "+": "add",
    "-": "sub",
    "*": "mul",
    "/": "divide",
}


def operator_function(op: str) -> str:
    if op.startswith("`"):
        return op.strip("`")
    return OPERATOR_FUNCTIONS[op]
