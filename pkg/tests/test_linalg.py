import math
import random

import pytest
from hypothesis import given, strategies as st

from mdsl import linalg as L
from mdsl.linalg import Kind, Matrix, Vector

from oracles import leibniz_det


def test_vector_arith():
    assert L.v_add(Vector([1, 2]), Vector([3, 4])) == Vector([4, 6])
    v = Vector([1, 5, -2])
    assert L.is_null_vector(L.v_sub(v, v))
    assert L.scalar_mult(2, Vector([1, 2, 3])) == Vector([2, 4, 6])
    assert L.v_add_many([Vector([1]), Vector([2]), Vector([3])]) == Vector([6])
    assert L.extract(1, Vector([7, 8, 9])) == 8
    assert L.extract_range(0, 1, Vector([7, 8, 9])) == Vector([7, 8])
    with pytest.raises(ValueError):
        L.v_add(Vector([1]), Vector([1, 2]))
    with pytest.raises(IndexError):
        L.extract(3, Vector([7, 8, 9]))


def test_products():
    assert L.inner_prod(Vector([1, 1, 1]), Vector([2.5, 2.5, 0])) == 5.0
    e1, e2, e3 = Vector([1, 0, 0]), Vector([0, 1, 0]), Vector([0, 0, 1])
    assert L.cross_prod(e1, e2) == e3
    assert L.scalar_triple(e1, e2, e3) == 1
    assert L.vector_triple(e1, e2, e1) == e2
    with pytest.raises(ValueError):
        L.cross_prod(Vector([1, 2]), Vector([3, 4]))


def test_magnitude_and_angle():
    assert L.v_angle(Vector([1, 1, 1]), Vector([2.5, 2.5, 0])) == 0.6154797086703874
    assert L.v_norm(Vector([1, 2, 3])) == Vector([0.2672612419124244, 0.5345224838248488, 0.8017837257372732])
    v = Vector([0.3, 0.1, 0.7])
    assert abs(L.v_angle(v, v)) <= 1e-9
    with pytest.raises(ValueError):
        L.v_norm(Vector([0, 0]))
    assert L.are_orthogonal(Vector([1, 0]), Vector([0, 3]))
    assert L.is_unit_vector(Vector([0.6, 0.8]))


def test_matrix_basics():
    m2 = Matrix([[4.5, 8], [-10, 6]])
    assert L.m_mult(L.unit(2), m2) == Matrix([[4.5, 8.0], [-10.0, 6.0]])
    assert L.inverse(Matrix([[1, 1], [1, -1]])) == Matrix([[0.5, 0.5], [0.5, -0.5]])
    assert L.determinant(Matrix([[1, 2], [3, 4]])) == -2
    assert L.trace(m2) == 10.5
    assert L.m_transpose(Matrix([[1, 2, 3]])) == Matrix([[1], [2], [3]])
    assert L.m_power(Matrix([[1, 1], [0, 1]]), 3) == Matrix([[1, 3], [0, 1]])
    assert L.unit(2) == Matrix([[1, 0], [0, 1]])
    assert L.zero(2, 3) == Matrix([[0, 0, 0], [0, 0, 0]])
    assert L.one(1, 1) == Matrix([[1]])
    assert L.extract_row(1, m2) == Vector([-10, 6])
    assert L.extract_col(0, m2) == Vector([4.5, -10])
    assert L.m_div(m2, L.unit(2)) == m2


def test_matrix_errors():
    with pytest.raises(ValueError):
        L.m_mult(Matrix([[1, 2]]), Matrix([[1, 2]]))
    with pytest.raises(ValueError):
        L.inverse(Matrix([[1, 2], [2, 4]]))
    with pytest.raises(ValueError):
        L.determinant(Matrix([[1, 2, 3]]))
    with pytest.raises(ValueError):
        Matrix([[1], [1, 2]])
    with pytest.raises(ValueError):
        L.zero(0)


def test_predicates():
    assert not L.matrix_predicate(Kind.ORTHOGONAL, Matrix([[1, 1], [1.2, -1.5]]))
    assert L.is_unit(L.unit(3))
    assert L.is_symmetric(Matrix([[1, 2], [2, 1]]))
    assert L.is_skew_symmetric(Matrix([[0, 2], [-2, 0]]))
    assert L.is_involutory(Matrix([[1, 0], [0, -1]]))
    assert L.is_orthogonal(Matrix([[0, 1], [1, 0]]))
    assert L.is_zero_one(Matrix([[0, 1], [1, 1]]))
    assert L.is_zero(L.zero(2)) and L.is_one(L.one(2))
    assert L.is_row(Matrix([[1, 2]])) and L.is_column(Matrix([[1], [2]]))
    assert not L.is_invertible(Matrix([[1, 2], [2, 4]]))
    assert not L.is_symmetric(Matrix([[1, 2, 3]]))


def test_determinant_matches_leibniz():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert math.isclose(L.determinant(Matrix(rows)), leibniz_det(rows), abs_tol=1e-9)


vec3 = st.lists(st.floats(-100, 100), min_size=3, max_size=3).map(Vector)


@given(vec3, vec3)
def test_lagrange_identity(a, b):
    lhs = L.v_mag(L.cross_prod(a, b)) ** 2
    rhs = L.v_mag(a) ** 2 * L.v_mag(b) ** 2 - L.inner_prod(a, b) ** 2
    assert math.isclose(lhs, rhs, rel_tol=1e-9, abs_tol=1e-6)


@given(vec3, vec3)
def test_cross_orthogonal(a, b):
    c = L.cross_prod(a, b)
    scale = max(1.0, L.v_mag(a) * L.v_mag(b)) * max(1.0, L.v_mag(a), L.v_mag(b))
    assert abs(L.inner_prod(c, a)) <= 1e-9 * scale
    assert abs(L.inner_prod(c, b)) <= 1e-9 * scale


@given(vec3, vec3)
def test_angle_range_and_symmetry(a, b):
    if L.v_mag(a) == 0 or L.v_mag(b) == 0:
        return
    t = L.v_angle(a, b)
    assert 0 <= t <= math.pi
    assert t == L.v_angle(b, a)
    assert abs(L.v_angle(a, a)) <= 1e-9


@given(st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=8).filter(lambda xs: any(abs(x) > 1e-6 for x in xs)))
def test_norm_is_unit(xs):
    assert abs(L.v_mag(L.v_norm(Vector(xs))) - 1) <= 1e-12


def test_inverse_identity():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(1, 6)
        # diagonally dominant, hence well conditioned
        rows = [[rng.uniform(-1, 1) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            rows[i][i] += n + 1
        a = Matrix(rows)
        prod = L.m_mult(a, L.inverse(a))
        for i in range(n):
            for j in range(n):
                assert abs(prod.rows[i][j] - (i == j)) <= 1e-9
