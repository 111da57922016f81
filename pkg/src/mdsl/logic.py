"""Boolean connectives and folds over lists of booleans."""

from enum import Enum
from functools import reduce


class Connective(Enum):
    AND = "and"
    OR = "or"
    XOR = "xor"
    XNOR = "xnor"
    NAND = "nand"
    NOR = "nor"
    IMPLIES = "implies"
    IFF = "iff"


_TABLE = {
    Connective.AND: lambda a, b: a and b,
    Connective.OR: lambda a, b: a or b,
    Connective.XOR: lambda a, b: a != b,
    Connective.XNOR: lambda a, b: a == b,
    Connective.NAND: lambda a, b: not (a and b),
    Connective.NOR: lambda a, b: not (a or b),
    Connective.IMPLIES: lambda a, b: not (a and not b),
    Connective.IFF: lambda a, b: a == b,
}


def _check_bool(x):
    if not isinstance(x, bool):
        raise TypeError(f"expected a boolean, got {type(x).__name__}")
    return x


def connective(kind: Connective, a: bool, b: bool) -> bool:
    return _TABLE[kind](_check_bool(a), _check_bool(b))


def fold_connective(kind: Connective, xs) -> bool:
    """Left fold of a binary connective; a singleton list yields its element."""
    xs = [_check_bool(x) for x in xs]
    if not xs:
        raise ValueError("empty fold")
    op = _TABLE[kind]
    return reduce(op, xs)


def negate_list(xs) -> list:
    return [not _check_bool(x) for x in xs]


def and_(a, b):
    return connective(Connective.AND, a, b)


def or_(a, b):
    return connective(Connective.OR, a, b)


def xor(a, b):
    return connective(Connective.XOR, a, b)


def xnor(a, b):
    return connective(Connective.XNOR, a, b)


def nand(a, b):
    return connective(Connective.NAND, a, b)


def nor(a, b):
    return connective(Connective.NOR, a, b)


def implies(a, b):
    return connective(Connective.IMPLIES, a, b)


def equals(a, b):
    return connective(Connective.IFF, a, b)
