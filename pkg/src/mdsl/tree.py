"""Immutable binary search trees."""

from dataclasses import dataclass
from enum import Enum
from typing import Any


class Leaf:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Leaf"


LEAF = Leaf()


@dataclass(frozen=True)
class Node:
    value: Any
    left: Any = LEAF
    right: Any = LEAF

    def __post_init__(self):
        for child in (self.left, self.right):
            if not isinstance(child, (Node, Leaf)):
                raise TypeError(f"tree children must be trees, got {type(child).__name__}")


def is_tree(t) -> bool:
    return isinstance(t, (Node, Leaf))


class Order(Enum):
    IN = "inorder"
    PRE = "preorder"
    POST = "postorder"


def _walk(t, kind, out):
    # explicit stack so deep degenerate trees do not hit the recursion limit
    stack = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Leaf):
            continue
        if expanded:
            out.append(node.value)
            continue
        if kind is Order.PRE:
            stack += [(node.right, False), (node.left, False), (node, True)]
        elif kind is Order.IN:
            stack += [(node.right, False), (node, True), (node.left, False)]
        else:
            stack += [(node, True), (node.right, False), (node.left, False)]
    return out


def traverse(kind: Order, t) -> list:
    return _walk(t, kind, [])


def inorder(t):
    return traverse(Order.IN, t)


def preorder(t):
    return traverse(Order.PRE, t)


def postorder(t):
    return traverse(Order.POST, t)


def singleton(x):
    return Node(x, LEAF, LEAF)


def insert(t, x):
    """Binary-search insertion; inserting a value already present is a no-op."""
    path = []
    node = t
    while isinstance(node, Node):
        if x == node.value:
            return t
        path.append(node)
        node = node.left if x < node.value else node.right
    new = singleton(x)
    for parent in reversed(path):
        if x < parent.value:
            new = Node(parent.value, new, parent.right)
        else:
            new = Node(parent.value, parent.left, new)
    return new


def from_list(xs):
    t = LEAF
    for x in xs:
        t = insert(t, x)
    return t


def search(t, x) -> bool:
    node = t
    while isinstance(node, Node):
        if x == node.value:
            return True
        node = node.left if x < node.value else node.right
    return False


def _fold(t, leaf, node_fn):
    """Bottom-up fold without recursion: node_fn(node, left_result, right_result)."""
    results = []
    stack = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Leaf):
            results.append(leaf)
        elif expanded:
            right = results.pop()
            left = results.pop()
            results.append(node_fn(node, left, right))
        else:
            stack += [(node, True), (node.right, False), (node.left, False)]
    return results[0]


def height(t) -> int:
    return _fold(t, 0, lambda _, lh, rh: 1 + max(lh, rh))


def size(t) -> int:
    return len(preorder(t))


def depth(t, x) -> int:
    """Edges from the root to the node holding x, found by binary-search descent."""
    node, d = t, 0
    while isinstance(node, Node):
        if x == node.value:
            return d
        node = node.left if x < node.value else node.right
        d += 1
    raise ValueError(f"value {x!r} is not in the tree")


def is_balanced(t) -> bool:
    # strict: the two subtrees of every node have equal height
    # (None marks an unbalanced subtree)
    def step(_, lh, rh):
        return lh + 1 if lh is not None and lh == rh else None

    return _fold(t, 0, step) is not None


def reflect(t):
    return _fold(t, LEAF, lambda n, l, r: Node(n.value, r, l))
