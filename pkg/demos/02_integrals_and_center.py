"""Integrals and the centre of Dist(G_r), found by linear algebra and by formula."""

from frobkernel import DistAlgebra
from frobkernel import invariants as inv

for p, r in [(2, 1), (3, 1), (2, 2)]:
    A = DistAlgebra.build(1, 1, p, r)
    q = A.q

    # right integrals: nu x = x(1) nu for every x
    I = inv.integral_space(A)
    nu = A.nu
    print(f"p={p} r={r}: integral space has dim {I.dim}, nu inside: {I.contains(nu.values)}")
    print("   nu also a left integral:", inv.is_left_integral(A, nu),
          "| central:", inv.supercommutes_with(A, nu))
    print("   nu == g_(1,q-1):", nu == A.g((1, q - 1)))

    # the centre has dimension q^2 + p^(r-1) and is spanned by explicit elements
    Z = inv.center_basis(A)
    gens = inv.center_generators(A)
    print(f"   centre dim {Z.dim} (q^2 + p^(r-1) = {q * q + p ** (r - 1)}),"
          f" {len(gens)} listed generators, same span: {Z.same_as([z.values for _, z in gens])}")

# a bigger shape: GL(2|1) at p=2, dim 512
A = DistAlgebra.build(2, 1, 2)
I = inv.integral_space(A)
print("GL(2|1): integral dim", I.dim, "| nu even:", A.nu.parity == 0,
      "| nu two-sided:", inv.is_left_integral(A, A.nu))
