"""Invariant functions on G_r for GL(1|1) and how nu turns them into central elements."""

import numpy as np

from frobkernel import DistAlgebra, linalg
from frobkernel import invariants as inv

A = DistAlgebra.build(1, 1, p=3)
K = A.coord

# invariants are the T-weight-zero functions killed by the odd superderivation D_12
S = inv.coord_invariants_gl11(A)
print("dim of invariants:", S.dim)

for name, f in inv.invariant_generators(A)[:5]:
    print(f"  {name:14s} D12 kills it: {K.superderive(f, 1, 2).is_zero()}")

print("listed generators span:", S.same_as([f.vector() for _, f in inv.invariant_generators(A)]))

# f -> nu f maps invariants isomorphically onto the centre
images = np.array([inv.nu_multiplication(A, K.from_vector(v)).values for v in S.basis])
Z = inv.center_basis(A)
print("rank of the images:", linalg.rank(images, A.p), "| centre dim:", Z.dim,
      "| images span the centre:", Z.same_as(images))
