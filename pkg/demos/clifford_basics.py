"""
Clifford algebras from a bitmask basis
======================================

Each basis monomial e_S is stored as the integer whose bits are S.
"""

import numpy as np
from quadric_k0 import PrimeField, clifford

# C(x^2 + y^2 - z^2) over F_7
A = clifford((1, 1, -1), PrimeField(7))
print(A.dim)

# structure constants: e_S e_T = coef[S, T] * e_{index[S, T]}
print(A.index)
print(A.coef)

e0, e1, e2 = (A.gen(i) for i in range(3))
print(e0 * e1 == -(e1 * e0))
print(e2 * e2 == A.one.scale(-1))

# dense vectors work too, handy for random testing
rng = np.random.default_rng(0)
x, y, z = rng.integers(0, 7, size=(3, A.dim))
lhs = A.mul(A.mul(x, y), z)
rhs = A.mul(x, A.mul(y, z))
print(np.array_equal(lhs, rhs))

# left multiplication matrices give the regular representation
L = A.left_matrix(x)
print(L.shape, np.array_equal(L @ y % 7, A.mul(x, y)))
