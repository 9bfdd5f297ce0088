"""Exact computations in Frobenius kernels of GL(m|n) over F_p."""

from .arith import PrimeField, bar, frobenius_modulus, orbit
from .coord import CoordAlgebra, CoordElem, GlShape
from .dist import DistAlgebra, DistElem, SubgroupSpec

__all__ = ["PrimeField", "bar", "frobenius_modulus", "orbit", "CoordAlgebra", "CoordElem",
           "GlShape", "DistAlgebra", "DistElem", "SubgroupSpec"]
