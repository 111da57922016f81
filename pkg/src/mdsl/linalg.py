"""Dense vectors and matrices over floats.

Determinants use cofactor expansion, so they are exact in structure but cost
O(n!); ``DET_LIMIT`` keeps that at desk scale.
"""

import math
from enum import Enum

SINGULAR_TOL = 1e-10
TOL = 1e-9
DET_LIMIT = 8


def _num(x):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise TypeError(f"expected a number, got {x!r}")
    return float(x)


class Vector:
    __slots__ = ("components",)

    def __init__(self, components=()):
        self.components = tuple(_num(x) for x in components)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __eq__(self, other):
        return isinstance(other, Vector) and self.components == other.components

    def __hash__(self):
        return hash(("Vector", self.components))

    def __repr__(self):
        return f"Vector({list(self.components)!r})"


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows=()):
        rows = tuple(tuple(_num(x) for x in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows must all have the same length")
        self.rows = rows

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(("Matrix", self.rows))

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.rows]!r})"


# -- vectors -----------------------------------------------------------------

def _same_dim(v1, v2):
    if len(v1) != len(v2):
        raise ValueError(f"dimension mismatch: {len(v1)} vs {len(v2)}")


def v_dim(v):
    return len(v)


def to_list(v):
    return list(v.components)


def v_add(v1, v2):
    _same_dim(v1, v2)
    return Vector(a + b for a, b in zip(v1, v2))


def v_sub(v1, v2):
    _same_dim(v1, v2)
    return Vector(a - b for a, b in zip(v1, v2))


def _fold(op, items, what):
    items = list(items)
    if not items:
        raise ValueError(f"empty list of {what}")
    acc = items[0]
    for x in items[1:]:
        acc = op(acc, x)
    return acc


def v_add_many(vs):
    return _fold(v_add, vs, "vectors")


def v_sub_many(vs):
    return _fold(v_sub, vs, "vectors")


def scalar_mult(k, v):
    k = _num(k)
    return Vector(k * x for x in v)


def v_map(f, v):
    return Vector(f(x) for x in v)


def extract(i, v):
    if not 0 <= i < len(v):
        raise IndexError(f"index {i} out of range for dimension {len(v)}")
    return v[i]


def extract_range(i, j, v):
    """Components i..j inclusive, 0-based."""
    if not 0 <= i <= j < len(v):
        raise IndexError(f"range {i}..{j} out of bounds for dimension {len(v)}")
    return Vector(v.components[i : j + 1])


def inner_prod(v1, v2):
    _same_dim(v1, v2)
    return sum(a * b for a, b in zip(v1, v2))


def _three(*vs):
    for v in vs:
        if len(v) != 3:
            raise ValueError("cross products need 3-dimensional vectors")


def cross_prod(a, b):
    _three(a, b)
    a1, a2, a3 = a
    b1, b2, b3 = b
    return Vector((a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1))


def scalar_triple(a, b, c):
    return inner_prod(a, cross_prod(b, c))


def vector_triple(a, b, c):
    return cross_prod(a, cross_prod(b, c))


def v_mag(v):
    return math.sqrt(inner_prod(v, v))


def v_norm(v):
    mag = v_mag(v)
    if mag == 0:
        raise ValueError("cannot normalize a zero vector")
    return scalar_mult(1 / mag, v)


def v_angle(v1, v2):
    # Kahan's form 2*atan2(|u-w|, |u+w|) on the unit vectors; unlike acos of
    # the cosine it stays accurate for nearly parallel inputs
    _same_dim(v1, v2)
    if len(v1) == 0:
        return 0.0
    if v_mag(v1) == 0 or v_mag(v2) == 0:
        raise ValueError("angle with a zero vector is undefined")
    u, w = v_norm(v1), v_norm(v2)
    return 2 * math.atan2(v_mag(v_sub(u, w)), v_mag(v_add(u, w)))


def is_null_vector(v):
    return all(x == 0 for x in v)


def is_unit_vector(v, tol=TOL):
    return abs(v_mag(v) - 1) <= tol


def are_orthogonal(v1, v2, tol=TOL):
    return abs(inner_prod(v1, v2)) <= tol


# -- matrices ----------------------------------------------------------------

def num_rows(a):
    return a.shape[0]


def num_cols(a):
    return a.shape[1]


def to_lists(a):
    return [list(r) for r in a.rows]


def _same_shape(a, b):
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")


def _square(a, what="operation"):
    n, m = a.shape
    if n != m:
        raise ValueError(f"{what} needs a square matrix, got {n}x{m}")
    return n


def m_add(a, b):
    _same_shape(a, b)
    return Matrix([x + y for x, y in zip(r, s)] for r, s in zip(a.rows, b.rows))


def m_sub(a, b):
    _same_shape(a, b)
    return Matrix([x - y for x, y in zip(r, s)] for r, s in zip(a.rows, b.rows))


def m_add_many(ms):
    return _fold(m_add, ms, "matrices")


def m_sub_many(ms):
    return _fold(m_sub, ms, "matrices")


def m_scalar_mult(k, a):
    k = _num(k)
    return Matrix([k * x for x in r] for r in a.rows)


def m_map(f, a):
    return Matrix([f(x) for x in r] for r in a.rows)


def m_transpose(a):
    return Matrix(zip(*a.rows)) if a.rows else a


def m_mult(a, b):
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"cannot multiply {a.shape[0]}x{a.shape[1]} by {b.shape[0]}x{b.shape[1]}")
    cols = m_transpose(b).rows
    return Matrix([sum(x * y for x, y in zip(r, c)) for c in cols] for r in a.rows)


def m_mult_many(ms):
    return _fold(m_mult, ms, "matrices")


def unit(n):
    _dim(n)
    return Matrix([1.0 if i == j else 0.0 for j in range(n)] for i in range(n))


def m_power(a, k):
    n = _square(a, "matrix power")
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError("matrix power needs an integer k >= 1")
    acc = a
    for _ in range(k - 1):
        acc = m_mult(acc, a)
    return acc


def _minor(rows, i, j):
    return [r[:j] + r[j + 1 :] for k, r in enumerate(rows) if k != i]


def _det(rows):
    n = len(rows)
    if n == 0:
        return 1.0
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0.0
    for j, x in enumerate(rows[0]):
        if x != 0:
            total += (-1) ** j * x * _det(_minor(rows, 0, j))
    return total


def determinant(a):
    """Cofactor expansion along the first row."""
    n = _square(a, "determinant")
    if n > DET_LIMIT:
        raise ValueError(f"cofactor determinant is capped at {DET_LIMIT}x{DET_LIMIT}")
    return _det(a.rows)


def cofactor_matrix(a):
    n = _square(a, "cofactor matrix")
    if n == 1:
        return Matrix([[1.0]])
    rows = a.rows
    return Matrix(
        [(-1) ** (i + j) * _det(_minor(rows, i, j)) for j in range(n)] for i in range(n)
    )


def inverse(a, tol=SINGULAR_TOL):
    """Adjugate divided by the determinant."""
    det = determinant(a)
    if abs(det) <= tol:
        raise ValueError("matrix is singular")
    adj = m_transpose(cofactor_matrix(a))
    r = 1 / det
    return Matrix([x * r for x in row] for row in adj.rows)


def m_div(a, b):
    return m_mult(a, inverse(b))


def trace(a):
    n = _square(a, "trace")
    return sum(a.rows[i][i] for i in range(n))


def extract_row(i, a):
    if not 0 <= i < a.shape[0]:
        raise IndexError(f"row {i} out of range")
    return Vector(a.rows[i])


def extract_col(j, a):
    if not 0 <= j < a.shape[1]:
        raise IndexError(f"column {j} out of range")
    return Vector(r[j] for r in a.rows)


def extract_row_range(i, j, a):
    if not 0 <= i <= j < a.shape[0]:
        raise IndexError(f"row range {i}..{j} out of bounds")
    return Matrix(a.rows[i : j + 1])


def extract_col_range(i, j, a):
    if not 0 <= i <= j < a.shape[1]:
        raise IndexError(f"column range {i}..{j} out of bounds")
    return Matrix(r[i : j + 1] for r in a.rows)


def _dim(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"matrix dimensions must be positive integers, got {n!r}")


def zero(n, m=None):
    m = n if m is None else m
    _dim(n)
    _dim(m)
    return Matrix([0.0] * m for _ in range(n))


def one(n, m=None):
    m = n if m is None else m
    _dim(n)
    _dim(m)
    return Matrix([1.0] * m for _ in range(n))


# -- predicates --------------------------------------------------------------

class Kind(Enum):
    SYMMETRIC = "symmetric"
    SKEW_SYMMETRIC = "skew-symmetric"
    ORTHOGONAL = "orthogonal"
    INVOLUTORY = "involutory"
    ZERO_ONE = "zero-one"
    ZERO = "zero"
    ONE = "one"
    UNIT = "unit"
    ROW = "row"
    COLUMN = "column"
    SQUARE = "square"
    INVERTIBLE = "invertible"


def _close(a, b, tol=TOL):
    return a.shape == b.shape and all(
        abs(x - y) <= tol for r, s in zip(a.rows, b.rows) for x, y in zip(r, s)
    )


def is_square(a):
    n, m = a.shape
    return n == m and n > 0


def is_row(a):
    return a.shape[0] == 1


def is_column(a):
    return a.shape[1] == 1 and a.shape[0] > 0


def is_symmetric(a):
    return is_square(a) and _close(a, m_transpose(a))


def is_skew_symmetric(a):
    return is_square(a) and _close(m_transpose(a), m_scalar_mult(-1, a))


def is_invertible(a):
    if not is_square(a) or a.shape[0] > DET_LIMIT:
        return False
    return abs(determinant(a)) > SINGULAR_TOL


def is_orthogonal(a):
    if not is_invertible(a):
        return False
    return _close(m_transpose(a), inverse(a))


def is_unit(a):
    return is_square(a) and _close(a, unit(a.shape[0]))


def is_involutory(a):
    return is_square(a) and _close(m_mult(a, a), unit(a.shape[0]))


def is_zero_one(a):
    return all(x in (0.0, 1.0) for r in a.rows for x in r)


def is_zero(a):
    return all(x == 0 for r in a.rows for x in r)


def is_one(a):
    return all(x == 1 for r in a.rows for x in r)


_PREDICATES = {
    Kind.SYMMETRIC: is_symmetric,
    Kind.SKEW_SYMMETRIC: is_skew_symmetric,
    Kind.ORTHOGONAL: is_orthogonal,
    Kind.INVOLUTORY: is_involutory,
    Kind.ZERO_ONE: is_zero_one,
    Kind.ZERO: is_zero,
    Kind.ONE: is_one,
    Kind.UNIT: is_unit,
    Kind.ROW: is_row,
    Kind.COLUMN: is_column,
    Kind.SQUARE: is_square,
    Kind.INVERTIBLE: is_invertible,
}


def matrix_predicate(kind: Kind, a) -> bool:
    return _PREDICATES[kind](a)
