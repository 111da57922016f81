"""Finite sets kept as sorted, duplicate-free tuples."""

from bisect import bisect_left
from functools import total_ordering
from itertools import combinations

POWER_SET_LIMIT = 20


def _kind(x):
    # numbers compare with each other; bools deliberately do not mix with them
    if isinstance(x, bool):
        return "bool"
    if isinstance(x, (int, float)):
        return "number"
    if isinstance(x, tuple):
        return ("tuple", len(x)) + tuple(_kind(e) for e in x)
    return type(x).__name__


@total_ordering
class Set:
    """Immutable finite set.

    Elements are stored in strictly ascending order. Sets of sets order by
    size first and then lexicographically, which is the canonical order of a
    power set.
    """

    __slots__ = ("_elems",)

    def __init__(self, elements=()):
        elems = list(elements)
        if elems:
            kinds = {_kind(e) for e in elems}
            if len(kinds) > 1:
                raise TypeError("mixed element types in set: " + ", ".join(sorted(map(str, kinds))))
        try:
            elems = sorted(set(elems))
        except TypeError as exc:
            raise TypeError(f"set elements must be hashable and ordered: {exc}") from None
        self._elems = tuple(elems)

    @classmethod
    def _trusted(cls, sorted_unique):
        s = cls.__new__(cls)
        s._elems = tuple(sorted_unique)
        return s

    @property
    def elements(self):
        return self._elems

    def __iter__(self):
        return iter(self._elems)

    def __len__(self):
        return len(self._elems)

    def __contains__(self, x):
        try:
            i = bisect_left(self._elems, x)
        except TypeError:
            return False
        return i < len(self._elems) and self._elems[i] == x

    def __eq__(self, other):
        return isinstance(other, Set) and self._elems == other._elems

    def __lt__(self, other):
        if not isinstance(other, Set):
            return NotImplemented
        return (len(self._elems), self._elems) < (len(other._elems), other._elems)

    def __hash__(self):
        return hash(("Set", self._elems))

    def __repr__(self):
        return f"Set({list(self._elems)!r})"


def make_set(xs) -> Set:
    return Set(xs)


def to_list(s: Set) -> list:
    return list(s.elements)


def cardinality(s: Set) -> int:
    return len(s)


def union(s1: Set, s2: Set) -> Set:
    return Set(s1.elements + s2.elements)


def intersection(s1: Set, s2: Set) -> Set:
    other = set(s2.elements)
    return Set._trusted(e for e in s1.elements if e in other)


def difference(s1: Set, s2: Set) -> Set:
    other = set(s2.elements)
    return Set._trusted(e for e in s1.elements if e not in other)


def _fold(op, sets):
    sets = list(sets)
    if not sets:
        raise ValueError("empty list of sets")
    acc = sets[0]
    for s in sets[1:]:
        acc = op(acc, s)
    return acc


def union_many(sets) -> Set:
    return _fold(union, sets)


def intersection_many(sets) -> Set:
    return _fold(intersection, sets)


def is_member(x, s: Set) -> bool:
    return x in s


def is_null(s: Set) -> bool:
    return len(s) == 0


def is_subset(s1: Set, s2: Set) -> bool:
    other = set(s2.elements)
    return all(e in other for e in s1.elements)


def is_superset(s1: Set, s2: Set) -> bool:
    return is_subset(s2, s1)


def disjoint(s1: Set, s2: Set) -> bool:
    return is_null(intersection(s1, s2))


def disjoint_many(sets) -> bool:
    sets = list(sets)
    return all(disjoint(a, b) for a, b in combinations(sets, 2))


def power_set(s: Set, limit: int = POWER_SET_LIMIT) -> Set:
    if len(s) > limit:
        raise ValueError(f"power set of {len(s)} elements exceeds the limit of {limit}")
    subsets = [Set._trusted(c) for k in range(len(s) + 1) for c in combinations(s.elements, k)]
    # combinations of a sorted tuple already come out in size-then-lex order
    return Set._trusted(subsets)


def cart_product(s1: Set, s2: Set) -> Set:
    return Set._trusted((x, y) for x in s1.elements for y in s2.elements)


def set_map(f, s: Set) -> Set:
    return Set(f(e) for e in s.elements)
