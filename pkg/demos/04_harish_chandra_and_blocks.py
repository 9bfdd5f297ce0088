"""Central characters, the Harish-Chandra image, and three block partitions."""

from frobkernel import DistAlgebra
from frobkernel import hc_blocks as hb
from frobkernel.arith import restricted_weights

A = DistAlgebra.build(1, 1, p=2)
img = hb.image_of_center(A)
gens = hb.hc_image_generators(A)
print("dim of the image of the centre:", img.shape[0])
for name, g in gens:
    vals = [hb.eigenvalue(g, lam) for lam in restricted_weights(A.q)]
    print(f"  {name:12s} eigenvalues on {restricted_weights(A.q)}: {vals}")

# nu lives entirely in the part the projection discards
print("h(nu) == 0:", hb.hc_project(A.nu).is_zero())

# blocks on a window of weights
for p in (2, 3):
    rep = hb.compare_blocks(2 * p * p, p)
    print(f"\np={p}, |lam_i| <= {rep.window}: flags {rep.flags}")
    print({k: len(v) for k, v in rep.classes.items()}, "classes")

# a picture on a small window: points sharing a label are in one K block
print(hb.compare_blocks(4, 3).diagram("K"))

# wt is constant along lam + p Z alpha and moves under alpha when p does not divide |lam|
print("wt(1,0) =", hb.wt((1, 0), 3), "| wt(4,-3) =", hb.wt((4, -3), 3), "| wt(2,-1) =", hb.wt((2, -1), 3))
