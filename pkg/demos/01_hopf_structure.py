"""Build K[G_r] and its dual for GL(1|1), then poke at the Hopf structure."""

import numpy as np

from frobkernel import CoordAlgebra, DistAlgebra, GlShape, hopf_checks

K = CoordAlgebra(GlShape(1, 1, p=3, r=1))
print("dim K[G_1] for GL(1|1), p=3:", K.dim)  # 3^2 * 2^2

# odd generators anticommute and square to zero
c12, c21 = K.c(1, 2), K.c(2, 1)
print("c12 c21 + c21 c12 =", c12 * c21 + c21 * c12)
print("c12^2 =", c12 * c12)
print("c11^3 =", K.c(1, 1) ** 3)  # the Frobenius relation

# the coproduct of a generator is matrix multiplication
print("Delta(c12) =", K.comul(c12))

# every axiom, checked on the whole basis
for name, problem in hopf_checks.all_axioms(K, np.random.default_rng(0)).items():
    print(f"  {name:26s} {'ok' if problem is None else problem}")

# Dist(G_r) is the dual; odd root vectors square to zero there too
A = DistAlgebra(K)
e12, e21 = A.generator_e(1, 2), A.generator_e(2, 1)
print("e12 e12 == 0:", (e12 * e12).is_zero())
print("e12 e21 + e21 e12 == -(e11 + e22):",
      e12 * e21 + e21 * e12 == -(A.generator_e(1, 1) + A.generator_e(2, 2)))
