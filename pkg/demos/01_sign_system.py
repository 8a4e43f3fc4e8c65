"""The sign of a rectangular matrix.

A tall matrix has no determinant, but it has many square row submatrices.
Its sign is borrowed from the first nonsingular one, scanning row subsets
(i_1 < ... < i_n) in lexicographic order.
"""
import numpy as np

import gdet

A = np.array([[3.0, 6.0],
              [4.0, 8.0],
              [2.0, 1.0]])

# Rows 1 and 2 are parallel, so the first nonsingular pair is rows 1 and 3.
print("principal rows:", gdet.principal_rows(A))
print("det of rows (1, 3):", np.linalg.det(gdet.row_select(A, (1, 3))))
print("sign(A):", gdet.sign(A))

# The same sign comes out of maximizing a permutation over all of S_3
# (the order compares images from the last position backwards).
sigma = gdet.sigma_max_oracle(A)
print("maximal permutation:", sigma.images)
print("its square matrix P^T A:\n", gdet.associated_square(A, sigma))
print("sign via S_m oracle:", gdet.sign_oracle(A))

# Wide matrices have sign 0, and so do rank-deficient ones.
print("sign of (1, 0):", gdet.sign([[1.0, 0.0]]))
print("sign of a rank-one 3x2:", gdet.sign([[1, 2], [2, 4], [3, 6]]))

# Right multiplication by a square matrix multiplies signs.
B = np.array([[0.0, 1.0], [1.0, 0.0]])
print("sign(A B) =", gdet.sign(A @ B), "= sign(A) * sign(B) =", gdet.sign(A) * gdet.sign(B))
