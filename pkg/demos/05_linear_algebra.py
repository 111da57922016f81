"""Vectors and small dense matrices."""

# %%
from mdsl import linalg as L
from mdsl.linalg import Matrix, Vector

a, b = Vector([1, 1, 1]), Vector([2.5, 2.5, 0])
print("a.b =", L.inner_prod(a, b))
print("a x b =", L.cross_prod(a, b))
print("angle =", L.v_angle(a, b))
print("unit(1,2,3) =", L.v_norm(Vector([1, 2, 3])))

# %%
m = Matrix([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
print("det =", L.determinant(m))
inv = L.inverse(m)
print(inv)
print("m * inv(m) =", L.m_mult(m, inv))

# %%
rotation = Matrix([[0, -1], [1, 0]])
print("orthogonal:", L.is_orthogonal(rotation), "involutory:", L.is_involutory(rotation))
print("rotation^4 =", L.m_power(rotation, 4))

# %%
from mdsl.apps import solve_linear

# x + 2y = 4, x + y = 1
print(solve_linear([[1, 2], [1, 1]], [[4], [1]]))
