import pytest
from hypothesis import given, strategies as st

from mdsl import sets as S
from mdsl.sets import Set

small_sets = st.lists(st.integers(-20, 20), max_size=50).map(Set)


def test_make_set_sorts_and_dedups():
    assert Set([2, 1, 2, 3]).elements == (1, 2, 3)
    assert Set([]).elements == ()


def test_mixed_types_rejected():
    with pytest.raises(TypeError):
        Set([1, "a"])


def test_union_example():
    assert S.union(Set([2, 4, 6]), Set([1, 2, 3])) == Set([1, 2, 3, 4, 6])


def test_intersection_by_scan():
    a, b = Set([1, 2, 3]), Set([2, 4, 6])
    assert S.intersection(a, b) == Set([x for x in a if x in list(b)]) == Set([2])


def test_difference_with_empty():
    a = Set([1, 5])
    assert S.difference(a, Set()) == a


def test_list_variants():
    assert S.union_many([Set([1]), Set([2]), Set([1, 3])]) == Set([1, 2, 3])
    assert S.intersection_many([Set([1, 2]), Set([2, 3]), Set([2])]) == Set([2])
    with pytest.raises(ValueError):
        S.union_many([])
    with pytest.raises(ValueError):
        S.intersection_many([])


def test_predicates():
    assert S.disjoint(Set(range(1, 11, 2)), Set(range(2, 11, 2)))
    assert S.is_subset(Set(), Set([1]))
    assert S.is_member(2, Set([1, 2, 3]))
    assert not S.is_member(4, Set([1, 2, 3]))
    assert S.is_null(Set())
    assert S.is_superset(Set([1, 2]), Set([2]))
    assert S.disjoint_many([Set([1]), Set([2]), Set([3])])
    assert not S.disjoint_many([Set([1]), Set([2]), Set([1, 3])])


def test_power_set():
    assert S.power_set(Set()) == Set([Set()])
    # all bitmasks of a 2-element set
    elems = [1, 2]
    masks = [Set([e for i, e in enumerate(elems) if m >> i & 1]) for m in range(4)]
    ps = S.power_set(Set(elems))
    assert ps == Set(masks)
    assert list(ps) == [Set(), Set([1]), Set([2]), Set([1, 2])]
    assert S.cardinality(S.power_set(Set([1, 2, 3]))) == 8


def test_power_set_guard():
    with pytest.raises(ValueError):
        S.power_set(Set(range(21)))
    with pytest.raises(ValueError):
        S.power_set(Set(range(5)), limit=4)


def test_cart_product_examples():
    assert list(S.cart_product(Set([1, 2]), Set([3, 4]))) == [(1, 3), (1, 4), (2, 3), (2, 4)]
    assert list(S.cart_product(Set([1, 2, 3]), Set([2, 4, 6]))) == [
        (1, 2), (1, 4), (1, 6), (2, 2), (2, 4), (2, 6), (3, 2), (3, 4), (3, 6)
    ]
    assert S.cart_product(Set([1]), Set()) == Set()


def test_map_and_cardinality():
    assert S.cardinality(Set([1, 2, 3])) == 3
    assert S.set_map(lambda x: x * x, Set([1, 2, 3])) == Set([1, 4, 9])
    assert S.set_map(lambda x: 0, Set([1, 2])) == Set([0])


@given(small_sets)
def test_normalization_idempotent(s):
    assert Set(S.to_list(s)) == s
    assert list(s.elements) == sorted(set(s.elements))


@given(small_sets, small_sets, small_sets)
def test_algebra_laws(a, b, c):
    for op in (S.union, S.intersection):
        assert op(a, b) == op(b, a)
        assert op(op(a, b), c) == op(a, op(b, c))
        assert op(a, a) == a


@given(small_sets, small_sets)
def test_subset_antisymmetry_and_disjointness(a, b):
    assert (S.is_subset(a, b) and S.is_subset(b, a)) == (a == b)
    assert S.disjoint(a, b) == (S.cardinality(S.intersection(a, b)) == 0)
    assert len(S.cart_product(a, b)) == len(a) * len(b)


@given(st.lists(st.integers(0, 30), max_size=10).map(Set))
def test_power_set_size(a):
    assert len(S.power_set(a)) == 2 ** len(a)
