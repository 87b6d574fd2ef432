"""Koszul-signed tensor products and their commutants.

The graded tensor product a (x)^ b is realized spatially as a G1^deg(b)
(x) b.  This demo checks the sign rule on the product of two odd
elements, builds the four small graded products of M2 and the one-
generator Clifford algebra, and compares their numerically computed
commutants against the structural prediction.
"""

import numpy as np

from fspt import (
    algebra_closure,
    commutant,
    full_matrix_algebra,
    graded_center_split,
    graded_tensor,
)

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SZ = np.diag([1.0, -1.0]).astype(complex)

print("odd times odd picks up a Koszul sign:")
lhs = graded_tensor(SX, SZ, SX, 1) @ graded_tensor(SX, SZ, SX, 1)
rhs = graded_tensor(SX @ SX, SZ, SX @ SX, 0)
print(f"  (sx (x)^ sx)^2 = -(1 (x)^ 1): {np.allclose(lhs, -rhs)}")

labels = {True: "M2", False: "C*"}
for left_full in (True, False):
    for right_full in (True, False):
        left = [(I2, 0), (SX, 1), (SZ, 0), (SX @ SZ, 1)] if left_full else [(I2, 0), (SX, 1)]
        right = list(left) if right_full == left_full else (
            [(I2, 0), (SX, 1), (SZ, 0), (SX @ SZ, 1)] if right_full else [(I2, 0), (SX, 1)]
        )
        gens = [graded_tensor(a, SZ, b, db) for a, _ in left for b, db in right]
        alg = algebra_closure(gens)
        comm = commutant(alg)
        print(f"{labels[left_full]} (x)^ {labels[right_full]}: "
              f"algebra dim {alg.dim}, commutant dim {comm.dim}")

print("\ncenter splittings:")
even, odd, b = graded_center_split(full_matrix_algebra(2), SZ)
print(f"  M2 graded by sz: even center {even.shape[0]}, odd center {odd.shape[0]} (factor)")
cl = algebra_closure([SX])
even, odd, b = graded_center_split(cl, SZ)
print(f"  C* graded by sz: even center {even.shape[0]}, odd center {odd.shape[0]}, "
      f"odd unitary = sx: {np.allclose(np.abs(b), np.abs(SX))}")
