"""Cramer's rule for tall systems.

If b is in the column space of a full-column-rank A, then Ax = b has exactly
one solution and x_i = Gdet(A_i) / Gdet(A), A_i being A with column i
replaced by b.
"""
import numpy as np

import gdet

A = np.array([[1.0, 0.0],
              [0.0, 1.0],
              [1.0, 1.0]])
b = np.array([1.0, 2.0, 3.0])

sol = gdet.cramer_solve(A, b)
print("x =", sol.x)
for i, (num, den) in enumerate(sol.per_coordinate, start=1):
    print(f"  x_{i} = Gdet(A_{i}) / Gdet(A) = {num:.6f} / {den:.6f}")
print("residual:", sol.residual_norm)

# A random consistent 8x3 system.
rng = np.random.default_rng(7)
M = rng.standard_normal((8, 3))
x_true = np.array([1.5, -2.0, 0.25])
print("\nrecovered:", gdet.cramer_solve(M, M @ x_true).x, " true:", x_true)

# b outside the column space, and a rank-deficient A.
try:
    gdet.cramer_solve([[1.0], [1.0]], [1.0, 2.0])
except gdet.InconsistentSystemError as exc:
    print("\ninconsistent:", exc)
try:
    gdet.cramer_solve([[1.0, 2.0], [2.0, 4.0]], [1.0, 2.0])
except gdet.SingularSystemError as exc:
    print("singular:", exc)
