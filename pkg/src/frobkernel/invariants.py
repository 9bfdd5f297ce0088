"""Integrals, centre, adjoint invariants and GL(1|1) coordinate invariants.

The large linear systems (one block of dim rows per basis element) are
solved by sketching: eliminate the constraints for a few random elements,
then check every candidate solution against the full basis.  A candidate
space that passes the full check is exactly the solution space, since it
always contains it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .arith import alpha_step, orbit, size
from .coord import CoordElem
from .dist import DistAlgebra, DistElem, SubgroupSpec


class VerificationError(AssertionError):
    """A computed object disagrees with the closed form it should reproduce."""


@dataclass
class Subspace:
    """A linearly independent family of vectors (rows), echelonised."""

    basis: np.ndarray
    p: int
    kind: str = "dist"
    labels: list = field(default_factory=list)

    def __post_init__(self):
        B = linalg.as_mod(self.basis, self.p) if np.size(self.basis) else np.asarray(self.basis)
        if B.size and linalg.rank(B, self.p) != B.shape[0]:
            raise ValueError("Subspace basis is not linearly independent")
        self.basis = B

    @property
    def dim(self) -> int:
        return 0 if self.basis.size == 0 else self.basis.shape[0]

    def contains(self, v) -> bool:
        if self.dim == 0:
            return not np.any(np.asarray(v) % self.p)
        return linalg.in_span(v, self.basis, self.p)

    def same_as(self, other: "Subspace | np.ndarray") -> bool:
        B = other.basis if isinstance(other, Subspace) else linalg.as_mod(other, self.p)
        return linalg.same_span(self.basis, B, self.p)

    def to_json(self) -> dict:
        return {"dim": self.dim, "basis": [[int(x) for x in row] for row in self.basis]}


def _span(rows, p, kind="dist") -> Subspace:
    rows = linalg.as_mod(np.asarray(rows).reshape(-1, np.asarray(rows).shape[-1]), p)
    return Subspace(linalg.row_basis(rows, p), p, kind)


def sketched_nullspace(n: int, p: int, sketch, check, rng, first: int = 4,
                       max_rounds: int = 64) -> np.ndarray:
    """Solution space of a constraint family too large to stack.

    ``sketch(rng)`` returns a matrix of constraints implied by the family;
    ``check(N)`` returns True iff every row of N satisfies the whole family.
    """
    ech = linalg.Echelon(n, p)
    for _ in range(first):
        ech.add(sketch(rng))
    for _ in range(max_rounds):
        N = ech.nullspace()
        if N.shape[0] == 0 or check(N):
            return N
        ech.add(sketch(rng))
    raise RuntimeError("sketched elimination did not converge")


# -- integrals ---------------------------------------------------------------

def _random_in(rng, p, B: np.ndarray) -> np.ndarray:
    return (rng.integers(0, p, size=B.shape[0]) @ B) % p


def integral_space(alg: DistAlgebra, spec: SubgroupSpec | None = None, side: str = "right",
                   seed: int = 0) -> Subspace:
    """Right (nu x = x(1) nu) or left (x nu = x(1) nu) integrals of Dist(H_r)."""
    p, dim = alg.p, alg.dim
    spec = spec or SubgroupSpec("full")
    if spec.kind == "full":
        B = np.eye(dim, dtype=np.int64)
    else:
        B = np.array([e.values for e in alg.subalgebra_basis(spec)])
    k = B.shape[0]
    rng = np.random.default_rng(seed)
    right = side == "right"

    def sketch(rng):
        x = alg.elem(_random_in(rng, p, B))
        M = alg.right_mult_matrix(x) if right else alg.left_mult_matrix(x)
        M = (M - x.counit() * np.eye(dim, dtype=np.int64)) % p
        return (M @ B.T) % p

    counits = B[:, 0]

    def check(N):
        for y in N:
            nu = alg.elem(y @ B)
            # column c: nu * b_c (right) or b_c * nu (left)
            if right:
                prod = (alg.left_mult_matrix(nu) @ B.T) % p
            else:
                prod = (alg.right_mult_matrix(nu) @ B.T) % p
            if np.any((prod - np.outer(nu.values, counits)) % p):
                return False
        return True

    N = sketched_nullspace(k, p, sketch, check, rng)
    return _span((N @ B) % p if N.size else np.zeros((0, dim), dtype=np.int64), p)


def is_right_integral(alg: DistAlgebra, nu: DistElem, basis: list[DistElem] | None = None) -> bool:
    p = alg.p
    B = np.eye(alg.dim, dtype=np.int64) if basis is None else np.array([b.values for b in basis])
    prod = (alg.left_mult_matrix(nu) @ B.T) % p
    return not np.any((prod - np.outer(nu.values, B[:, 0])) % p)


def is_left_integral(alg: DistAlgebra, nu: DistElem, basis: list[DistElem] | None = None) -> bool:
    p = alg.p
    B = np.eye(alg.dim, dtype=np.int64) if basis is None else np.array([b.values for b in basis])
    prod = (alg.right_mult_matrix(nu) @ B.T) % p
    return not np.any((prod - np.outer(nu.values, B[:, 0])) % p)


# -- centre ------------------------------------------------------------------

def supercommutes_with(alg: DistAlgebra, z: DistElem, basis: list[DistElem] | None = None) -> bool:
    """z b = (-1)^{|z||b|} b z for every b (z homogeneous; basis homogeneous)."""
    p = alg.p
    zp = z.parity
    if zp is None:
        raise ValueError("z must be parity-homogeneous")
    if basis is None:
        B = np.eye(alg.dim, dtype=np.int64)
        bpar = alg.coord.parity
    else:
        B = np.array([b.values for b in basis])
        bpar = np.array([b.parity or 0 for b in basis])
    zb = (alg.left_mult_matrix(z) @ B.T) % p
    bz = (alg.right_mult_matrix(z) @ B.T) % p
    sign = 1 - 2 * (zp * bpar)
    return not np.any((zb - bz * sign[None, :]) % p)


def center_basis(alg: DistAlgebra, seed: int = 0) -> Subspace:
    """Z(Dist(G_r)) by brute force against the full dual basis."""
    p, dim = alg.p, alg.dim
    par = alg.coord.parity
    rng = np.random.default_rng(seed)
    pieces = []
    for zp in (0, 1):
        cols = np.flatnonzero(par == zp)
        if cols.size == 0:
            continue
        P = np.zeros((cols.size, dim), dtype=np.int64)
        P[np.arange(cols.size), cols] = 1

        def sketch(rng, zp=zp, P=P):
            b = rng.integers(0, p, size=dim)
            b0, b1 = alg.elem(b * (par == 0)), alg.elem(b * (par == 1))
            sgn = 1 if zp == 0 else -1
            M = (alg.right_mult_matrix(b0) - alg.left_mult_matrix(b0)
                 + alg.right_mult_matrix(b1) - sgn * alg.left_mult_matrix(b1))
            return (M % p) @ P.T % p

        def check(N, P=P):
            return all(supercommutes_with(alg, alg.elem(y @ P)) for y in N)

        N = sketched_nullspace(cols.size, p, sketch, check, rng)
        if N.size:
            pieces.append((N @ P) % p)
    rows = np.vstack(pieces) if pieces else np.zeros((0, dim), dtype=np.int64)
    return _span(rows, p)


# -- adjoint action ----------------------------------------------------------

def ad(alg: DistAlgebra, x: DistElem, y: DistElem) -> DistElem:
    """Left adjoint action ad(x)y = sum (-1)^{|x_2||y|} x_1 y s(x_2); y homogeneous."""
    yp = y.parity
    if yp is None:
        raise ValueError("y must be parity-homogeneous")
    T = alg.comul(x)
    S = alg.coord.antipode_matrix
    par = alg.coord.parity
    out = np.zeros(alg.dim, dtype=np.int64)
    a_idx, b_idx = np.nonzero(T)
    cache: dict[int, np.ndarray] = {}
    for a, b in zip(a_idx.tolist(), b_idx.tolist()):
        if a not in cache:
            ea = np.zeros(alg.dim, dtype=np.int64)
            ea[a] = 1
            cache[a] = alg.mul_values(ea, y.values)
        sign = -1 if par[b] * yp else 1
        out += sign * int(T[a, b]) * alg.mul_values(cache[a], S[b, :])
    return alg.elem(out)


def ad_invariants(alg: DistAlgebra, seed: int = 0) -> Subspace:
    """{y : ad(x) y = x(1) y for all x}, homogeneous parts solved separately."""
    p, dim = alg.p, alg.dim
    par = alg.coord.parity
    rng = np.random.default_rng(seed)
    pieces = []
    for yp in (0, 1):
        cols = np.flatnonzero(par == yp)
        P = np.zeros((cols.size, dim), dtype=np.int64)
        P[np.arange(cols.size), cols] = 1

        def matrix_of(x, P=P):
            M = np.zeros((dim, P.shape[0]), dtype=np.int64)
            for k, row in enumerate(P):
                M[:, k] = (ad(alg, x, alg.elem(row)).values - x.counit() * row) % p
            return M

        def sketch(rng):
            return matrix_of(alg.elem(rng.integers(0, p, size=dim)))

        def check(N, P=P):
            for y in N:
                yv = alg.elem(y @ P)
                for c in range(dim):
                    x = alg.basis_vector(c)
                    if not ad(alg, x, yv) == yv.scale(x.counit()):
                        return False
            return True

        N = sketched_nullspace(cols.size, p, sketch, check, rng, first=2)
        if N.size:
            pieces.append((N @ P) % p)
    rows = np.vstack(pieces) if pieces else np.zeros((0, dim), dtype=np.int64)
    return _span(rows, p)


# -- GL(1|1): the closed forms -----------------------------------------------

def center_generators(alg: DistAlgebra) -> list[tuple[str, DistElem]]:
    """The listed generators of Z_r for GL(1|1), orbit by orbit."""
    alg._require_gl11()
    p, q = alg.p, alg.q
    gens = []
    for t in range(q):
        O = orbit(t, q)
        if t % p == 0:
            for lam in O:
                gens.append((f"g[{lam[0]},{lam[1]}]", alg.g(lam)))
            s = alg.zero()
            for lam in O:
                s = s + alg.h(lam).scale((-1) ** size(lam))
            gens.append((f"sum_h[O_{t}]", s))
        else:
            for lam in O:
                nxt = alpha_step(lam, q)
                z = (alg.g(nxt).scale((-1) ** (size(lam) + size(nxt))) - alg.g(lam)
                     + alg.h(lam).scale(size(lam)))
                gens.append((f"z[{lam[0]},{lam[1]}]", z))
    return gens


def check_center_generators(alg: DistAlgebra, brute: Subspace | None = None) -> Subspace:
    brute = brute or center_basis(alg)
    listed = np.array([z.values for _, z in center_generators(alg)])
    if not brute.same_as(listed):
        raise VerificationError("listed centre generators do not span the brute-force centre")
    return brute


def coord_invariants_gl11(alg: DistAlgebra) -> Subspace:
    """K[G_r]^G: T-weight zero and killed by D_12."""
    K = alg.coord
    K._require_gl11()
    p = alg.p
    w0 = np.flatnonzero(np.all(K.conj_weights == 0, axis=1))
    D12 = K._derivations(1, 2)
    N = linalg.nullspace(D12[:, w0], p)
    rows = np.zeros((N.shape[0], K.dim), dtype=np.int64)
    rows[:, w0] = N
    return Subspace(linalg.row_basis(rows, p), p, kind="coord")


def coord_invariants_d21(alg: DistAlgebra) -> Subspace:
    K = alg.coord
    w0 = np.flatnonzero(np.all(K.conj_weights == 0, axis=1))
    N = linalg.nullspace(K._derivations(2, 1)[:, w0], alg.p)
    rows = np.zeros((N.shape[0], K.dim), dtype=np.int64)
    rows[:, w0] = N
    return Subspace(linalg.row_basis(rows, alg.p), alg.p, kind="coord")


def sigma(alg: DistAlgebra, t: int) -> CoordElem:
    K = alg.coord
    out = K.zero()
    for lam in orbit(t, alg.q):
        out = out + K.x_monomial(lam, 1, 1)
    return out


def gamma(alg: DistAlgebra, lam) -> CoordElem:
    K = alg.coord
    nxt = alpha_step(lam, alg.q)
    return K.x_monomial(lam) - K.x_monomial(nxt) + K.x_monomial(nxt, 1, 1).scale(size(lam))


def invariant_generators(alg: DistAlgebra) -> list[tuple[str, CoordElem]]:
    K = alg.coord
    K._require_gl11()
    p, q = alg.p, alg.q
    gens = []
    for t in range(q):
        if t % p == 0:
            gens.append((f"sigma_{t}", sigma(alg, t)))
            gens += [(f"x^[{lam[0]},{lam[1]}]", K.x_monomial(lam)) for lam in orbit(t, q)]
        else:
            gens += [(f"gamma_[{lam[0]},{lam[1]}]", gamma(alg, lam)) for lam in orbit(t, q)]
    return gens


def check_invariant_generators(alg: DistAlgebra) -> Subspace:
    solved = coord_invariants_gl11(alg)
    listed = np.array([f.vector() for _, f in invariant_generators(alg)])
    if not solved.same_as(listed):
        raise VerificationError("listed invariants do not span ker D_12 on weight zero")
    return solved


def nu_multiplication(alg: DistAlgebra, f: CoordElem, nu: DistElem | None = None) -> DistElem:
    """f -> nu_r f under the right action (nu f)(f') = nu(f f')."""
    nu = alg.nu if nu is None else nu
    return nu * f
