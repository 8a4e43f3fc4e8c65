"""Three ways to the same number.

The magnitude of Gdet(A) is the square root of the sum of all squared maximal
minors. Cauchy-Binet turns that into sqrt(det(A^T A)), and a QR factorization
reads it off the diagonal of R. The singular values give it once more.
"""
import math

import numpy as np

import gdet

A = np.array([[3.0, 6.0],
              [4.0, 8.0],
              [2.0, 1.0]])

fast = gdet.gdet(A)
print("QR path:          ", fast.value)
print("minor enumeration:", gdet.gdet_minor_oracle(A).value)
print("singular values:  ", fast.sign * gdet.singular_value_magnitude(A))
print("exact integers:   ", gdet.gdet_exact_oracle(A))
print("sqrt det(A^T A):  ", math.sqrt(np.linalg.det(gdet.gram(A))))

# For square matrices nothing new happens.
S = np.array([[2.0, 1.0], [7.0, 3.0]])
print("\nsquare: Gdet =", gdet.gdet(S).value, " det =", np.linalg.det(S))

# A column vector: its length, signed by its first nonzero entry.
print("Gdet((3,4,2)^T) =", gdet.gdet([3.0, 4.0, 2.0]).value, " sqrt(29) =", math.sqrt(29))
print("Gdet((0,-3,4)^T) =", gdet.gdet([0.0, -3.0, 4.0]).value)

# Multiplication works with a square factor on the right ...
B = np.array([[1.0, 2.0], [0.5, -1.0]])
print("\nright factor:", gdet.check_multiplication(A, B)[:3])
# ... but not on the left.
print("left factor: ", gdet.check_left_multiplication([[1, 0], [0, 2]], [[1], [0]])[:3])

# Summing squared Gdets over all k-row submatrices counts each maximal minor
# C(m-n, k-n) times.
rng = np.random.default_rng(1)
M = rng.integers(-3, 4, size=(6, 2)).astype(float)
for k in range(2, 7):
    res = gdet.check_cauchy_binet(M, k)
    print(f"k={k}: C(4,{k - 2})*det(M^T M) = {res.lhs:10.3f}   sum = {res.rhs:10.3f}")
