"""Binary relations over a single element type."""

from enum import Enum

from .sets import Set


class Relation:
    """A normalized set of ordered pairs."""

    __slots__ = ("pairs",)

    def __init__(self, pairs=()):
        pairs = pairs if isinstance(pairs, Set) else Set(tuple(p) for p in pairs)
        for p in pairs:
            if not (isinstance(p, tuple) and len(p) == 2):
                raise TypeError(f"relation members must be pairs, got {p!r}")
        self.pairs = pairs

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair):
        return pair in self.pairs

    def __eq__(self, other):
        return isinstance(other, Relation) and self.pairs == other.pairs

    def __hash__(self):
        return hash(("Relation", self.pairs))

    def __repr__(self):
        return f"Relation({list(self.pairs)!r})"


def to_list(r: Relation) -> list:
    return list(r.pairs)


def first(pair):
    return pair[0]


def second(pair):
    return pair[1]


def element_set(r: Relation) -> Set:
    return Set([a for a, _ in r] + [b for _, b in r])


def _dedup(xs):
    seen = set()
    out = []
    for x in xs:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out


def firsts(r: Relation) -> list:
    return _dedup(a for a, _ in r)


def seconds(r: Relation) -> list:
    return _dedup(b for _, b in r)


class Property(Enum):
    REFLEXIVE = "reflexive"
    IRREFLEXIVE = "irreflexive"
    SYMMETRIC = "symmetric"
    ASYMMETRIC = "asymmetric"
    ANTISYMMETRIC = "antisymmetric"
    TRANSITIVE = "transitive"
    EQUIVALENCE = "equivalence"
    WEAK_PARTIAL = "weak partial order"
    STRICT_PARTIAL = "strict partial order"
    WEAK_TOTAL = "weak total order"
    STRICT_TOTAL = "strict total order"


def is_reflexive(r):
    return all((a, a) in r for a in element_set(r))


def is_irreflexive(r):
    return all(a != b for a, b in r)


def is_symmetric(r):
    return all((b, a) in r for a, b in r)


def is_asymmetric(r):
    return all((b, a) not in r for a, b in r)


def is_antisymmetric(r):
    return all(a == b or (b, a) not in r for a, b in r)


def is_transitive(r):
    succ = {}
    for a, b in r:
        succ.setdefault(a, set()).add(b)
    return all(
        c in succ.get(a, ())
        for a, bs in succ.items()
        for b in bs
        for c in succ.get(b, ())
    )


def _comparable(r):
    # every pair of distinct elements is related one way or the other
    elems = element_set(r).elements
    return all(
        (a, b) in r or (b, a) in r
        for i, a in enumerate(elems)
        for b in elems[i + 1:]
    )


def is_equivalence(r):
    return is_reflexive(r) and is_symmetric(r) and is_transitive(r)


def is_weak_partial_order(r):
    return is_reflexive(r) and is_antisymmetric(r) and is_transitive(r)


def is_strict_partial_order(r):
    return is_irreflexive(r) and is_asymmetric(r) and is_transitive(r)


def is_weak_total_order(r):
    return is_weak_partial_order(r) and _comparable(r)


def is_strict_total_order(r):
    return is_strict_partial_order(r) and _comparable(r)


_PREDICATES = {
    Property.REFLEXIVE: is_reflexive,
    Property.IRREFLEXIVE: is_irreflexive,
    Property.SYMMETRIC: is_symmetric,
    Property.ASYMMETRIC: is_asymmetric,
    Property.ANTISYMMETRIC: is_antisymmetric,
    Property.TRANSITIVE: is_transitive,
    Property.EQUIVALENCE: is_equivalence,
    Property.WEAK_PARTIAL: is_weak_partial_order,
    Property.STRICT_PARTIAL: is_strict_partial_order,
    Property.WEAK_TOTAL: is_weak_total_order,
    Property.STRICT_TOTAL: is_strict_total_order,
}


def relation_property(kind: Property, r: Relation) -> bool:
    return _PREDICATES[kind](r)


class Op(Enum):
    UNION = "union"
    INTERSECTION = "intersection"
    DIFFERENCE = "difference"
    COMPOSE = "compose"


def r_union(r1, r2):
    return Relation(r1.pairs.elements + r2.pairs.elements)


def r_intersection(r1, r2):
    return Relation(p for p in r1 if p in r2)


def r_difference(r1, r2):
    return Relation(p for p in r1 if p not in r2)


def r_compose(r1, r2):
    """Pairs (a, c) such that (a, b) is in r1 and (b, c) is in r2."""
    succ = {}
    for b, c in r2:
        succ.setdefault(b, []).append(c)
    return Relation((a, c) for a, b in r1 for c in succ.get(b, ()))


def relation_algebra(kind: Op, r1, r2):
    return {
        Op.UNION: r_union,
        Op.INTERSECTION: r_intersection,
        Op.DIFFERENCE: r_difference,
        Op.COMPOSE: r_compose,
    }[kind](r1, r2)


def r_union_many(rs):
    rs = list(rs)
    if not rs:
        raise ValueError("empty list of relations")
    return Relation(p for r in rs for p in r)


def r_intersection_many(rs):
    rs = list(rs)
    if not rs:
        raise ValueError("empty list of relations")
    acc = rs[0]
    for r in rs[1:]:
        acc = r_intersection(acc, r)
    return acc


def inverse(r):
    return Relation((b, a) for a, b in r)


def r_power(r, k: int):
    """r composed with itself k times; k = -1 gives the inverse relation."""
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError("relation power must be an integer")
    if k == -1:
        return inverse(r)
    if k < 1:
        raise ValueError(f"relation power {k} is undefined (use k >= 1 or k = -1)")
    acc = r
    for _ in range(k - 1):
        acc = r_compose(acc, r)
    return acc


class Closure(Enum):
    REFLEXIVE = "reflexive"
    SYMMETRIC = "symmetric"
    TRANSITIVE = "transitive"


def reflexive_closure(r):
    return Relation(list(r) + [(a, a) for a in element_set(r)])


def symmetric_closure(r):
    return r_union(r, r_power(r, -1))


def transitive_closure(r):
    acc = r
    while True:
        nxt = r_union(acc, r_compose(acc, acc))
        if len(nxt) == len(acc):
            return acc
        acc = nxt


def closure(kind: Closure, r):
    return {
        Closure.REFLEXIVE: reflexive_closure,
        Closure.SYMMETRIC: symmetric_closure,
        Closure.TRANSITIVE: transitive_closure,
    }[kind](r)
