"""Dist(G_r) = K[G_r]^* as dense dual vectors over the monomial basis.

The Hopf structure is the transpose of the one on K[G_r]:

    (phi psi)(f)   = sum (-1)^{|psi||f_1|} phi(f_1) psi(f_2)
    phi(f h)       = sum (-1)^{|phi_2||f|} phi_1(f) phi_2(h)
    s(phi)(f)      = phi(s(f)),   eps(phi) = phi(1)

Named elements (divided powers, torus binomials, the integral nu_r, the
GL(1|1) elements g_pi and h_pi) are assembled from the generators with the
product above, never from abstract PBW relations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import linalg
from .arith import binom, size
from .coord import CoordAlgebra, CoordElem, GlShape

SUBGROUP_KINDS = ("T", "U+", "U-", "V+", "V-", "P+", "P-", "Gev", "Uij", "full")


@dataclass(frozen=True)
class SubgroupSpec:
    """A closed subsupergroup of GL(m|n), by the coordinates its ideal kills.

    ``d`` is used by U+/U- (the normal series U(d)); ``ij`` by Uij.
    """

    kind: str
    d: int = 1
    ij: tuple[int, int] | None = None

    def __post_init__(self):
        if self.kind not in SUBGROUP_KINDS:
            raise ValueError(f"unknown subgroup kind {self.kind!r}")

    def ideal_generators(self, alg: CoordAlgebra) -> list[CoordElem]:
        sh = alg.shape
        N, m = sh.size, sh.m
        coords = alg.coords
        off = [(i, j) for (i, j) in coords if i != j]
        diag_t = [alg.t(i, i) for i in range(1, N + 1)]
        k = self.kind
        if k == "full":
            return []
        if k == "T":
            return [alg.c(i, j) for (i, j) in off]
        if k == "Gev":
            return [alg.c(i, j) for (i, j) in off if sh.coord_parity(i, j)]
        if k in ("U+", "U-"):
            if not 1 <= self.d <= max(N - 1, 1):
                raise ValueError(f"d={self.d} out of range")
            up = k == "U+"
            gens = [alg.c(i, j) for (i, j) in off if (i > j if up else i < j)]
            gens += [alg.c(i, j) for (i, j) in off
                     if 1 <= ((j - i) if up else (i - j)) < self.d]
            return gens + diag_t
        if k in ("V+", "V-"):
            up = k == "V+"
            gens = [alg.c(i, j) for (i, j) in off if (i > j if up else i < j)]
            gens += [alg.c(i, j) for (i, j) in off
                     if (i < j if up else i > j) and not sh.coord_parity(i, j)]
            return gens + diag_t
        if k == "P-":
            return [alg.c(i, j) for (i, j) in coords if i <= m < j]
        if k == "P+":
            return [alg.c(i, j) for (i, j) in coords if j <= m < i]
        if k == "Uij":
            if self.ij is None or self.ij[0] == self.ij[1] or self.ij not in alg.coord_index:
                raise ValueError(f"bad coordinate {self.ij}")
            return [alg.t(a, b) for (a, b) in coords if (a, b) != self.ij]
        raise AssertionError(k)


class DistAlgebra:
    """The dual Hopf superalgebra of a :class:`CoordAlgebra`."""

    def __init__(self, coord: CoordAlgebra):
        self.coord = coord
        self.shape: GlShape = coord.shape
        self.p, self.q, self.dim = coord.p, coord.q, coord.dim
        R, A, B, V = coord.coproduct_table
        par = coord.parity
        self._R, self._A, self._B = R, A, B
        # sign (-1)^{|f_1||f_2|} folded in so the product is bilinear in all parities
        self._V = (V * (1 - 2 * (par[A] * par[B]))) % self.p

    @classmethod
    def build(cls, m: int, n: int, p: int, r: int = 1, **kw) -> "DistAlgebra":
        return cls(CoordAlgebra(GlShape(m, n, p, r), **kw))

    # -- elements ----------------------------------------------------------

    def elem(self, values) -> "DistElem":
        return DistElem(self, values)

    def zero(self) -> "DistElem":
        return DistElem(self, np.zeros(self.dim, dtype=np.int64))

    @cached_property
    def unit(self) -> "DistElem":
        """The counit of K[G_r], which is the unit of Dist(G_r)."""
        return DistElem(self, self.coord.counit_vector)

    def basis_vector(self, k: int) -> "DistElem":
        v = np.zeros(self.dim, dtype=np.int64)
        v[k] = 1
        return DistElem(self, v)

    # -- structure maps ----------------------------------------------------

    def mul_values(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        w = self._V * a[self._A] * b[self._B]
        out = np.bincount(self._R, weights=w, minlength=self.dim)
        return np.rint(out).astype(np.int64) % self.p

    @cached_property
    def _by_pair(self):
        key = self._A * self.dim + self._B
        order = np.argsort(key, kind="stable")
        return key[order], self._R[order], self._V[order]

    def basis_product(self, a: int, b: int) -> tuple[np.ndarray, np.ndarray]:
        """delta_a delta_b as sparse (indices, values)."""
        key, R, V = self._by_pair
        k = a * self.dim + b
        lo, hi = np.searchsorted(key, [k, k + 1])
        return R[lo:hi], V[lo:hi]

    def right_mult_matrix(self, psi: "DistElem") -> np.ndarray:
        """Matrix of phi -> phi psi."""
        w = self._V * psi.values[self._B]
        flat = np.bincount(self._R * self.dim + self._A, weights=w, minlength=self.dim**2)
        return np.rint(flat).astype(np.int64).reshape(self.dim, self.dim) % self.p

    def left_mult_matrix(self, phi: "DistElem") -> np.ndarray:
        """Matrix of psi -> phi psi."""
        w = self._V * phi.values[self._A]
        flat = np.bincount(self._R * self.dim + self._B, weights=w, minlength=self.dim**2)
        return np.rint(flat).astype(np.int64).reshape(self.dim, self.dim) % self.p

    def comul(self, phi: "DistElem") -> np.ndarray:
        """Delta(phi) as a matrix T with Delta(phi) = sum T[a, b] delta_a (x) delta_b.

        delta_k is the dual basis.  T[a, b] = (-1)^{|a||b|} phi(m_a m_b).
        """
        idx, sgn = self._pair_products
        par = self.coord.parity
        vals = np.where(idx >= 0, phi.values[np.maximum(idx, 0)] * sgn, 0)
        return (vals * (1 - 2 * np.outer(par, par))) % self.p

    @cached_property
    def _pair_products(self):
        ar = np.arange(self.dim)
        A, B = np.meshgrid(ar, ar, indexing="ij")
        return self.coord.mono_mul(A, B)

    def eval_tensor(self, T: np.ndarray, f: CoordElem, h: CoordElem) -> int:
        """(sum T[a,b] delta_a (x) delta_b)(f (x) h), with the Koszul sign."""
        fv, hv = f.vector(), h.vector()
        par = self.coord.parity
        sign = 1 - 2 * np.outer(par, par)
        return int(np.sum(T * sign * np.outer(fv, hv)) % self.p)

    def antipode(self, phi: "DistElem") -> "DistElem":
        return DistElem(self, self.coord.antipode_matrix.T @ phi.values)

    def right_action(self, phi: "DistElem", f: CoordElem) -> "DistElem":
        """(phi f)(f') = phi(f f')."""
        L = self.coord.left_mult_matrix(f)
        return DistElem(self, L.T @ phi.values)

    # -- generators --------------------------------------------------------

    def _check_index(self, i, j):
        N = self.shape.size
        if not (1 <= i <= N and 1 <= j <= N):
            raise IndexError(f"index ({i},{j}) out of range for size {N}")

    def divided_power(self, i: int, j: int, t: int) -> "DistElem":
        """e_ij^(t) for i != j: dual to c_ij^t on the one-parameter subgroup U_ij."""
        self._check_index(i, j)
        if i == j:
            raise ValueError("use binom_diag for diagonal generators")
        odd = self.shape.coord_parity(i, j)
        if not 0 <= t < (2 if odd else self.q):
            raise ValueError(f"divided power t={t} out of range")
        alg = self.coord
        g = alg.coord_index[(i, j)]
        off = ~alg.is_diag
        others = off.copy()
        others[g] = False
        mask = (alg.exps[:, others].sum(axis=1) == 0) & (alg.exps[:, g] == t)
        return DistElem(self, mask.astype(np.int64))

    def generator_e(self, i: int, j: int) -> "DistElem":
        if i == j:
            return self.binom_diag(i, 1)
        return self.divided_power(i, j, 1)

    def torus_binom(self, s, a=None) -> "DistElem":
        """binom(e - a, s) = prod_i binom(e_ii - a_i, s_i), as a functional on c^lam."""
        N = self.shape.size
        a = tuple(a) if a is not None else (0,) * N
        if len(s) != N or len(a) != N or any(x < 0 or x >= self.q for x in s):
            raise ValueError(f"bad torus binomial index s={s}, a={a}")
        alg = self.coord
        diag_cols = [alg.coord_index[(i, i)] for i in range(1, N + 1)]
        torus = alg.counit_vector.astype(bool)
        vals = np.zeros(self.dim, dtype=np.int64)
        for k in np.flatnonzero(torus):
            lam = alg.exps[k, diag_cols]
            v = 1
            for li, ai, si in zip(lam, a, s):
                v *= binom(int(li) - ai, si)
            vals[k] = v % self.p
        return DistElem(self, vals)

    def binom_diag(self, i: int, s: int, a: int = 0) -> "DistElem":
        """binom(e_ii - a, s)."""
        self._check_index(i, i)
        N = self.shape.size
        svec = tuple(s if k == i else 0 for k in range(1, N + 1))
        avec = tuple(a if k == i else 0 for k in range(1, N + 1))
        return self.torus_binom(svec, avec)

    def delta_T(self, a=None) -> "DistElem":
        """Delta_{T,a}^{(r)} = sum_s (-1)^{|s|} binom(e - a, s) over s in [0, q)^{m+n}."""
        N = self.shape.size
        a = tuple(a) if a is not None else (0,) * N
        alg = self.coord
        diag_cols = [alg.coord_index[(i, i)] for i in range(1, N + 1)]
        vals = np.zeros(self.dim, dtype=np.int64)
        for k in np.flatnonzero(alg.counit_vector):
            lam = alg.exps[k, diag_cols]
            v = 1
            for li, ai in zip(lam, a):
                v *= sum((-1) ** s * binom(int(li) - ai, s) for s in range(self.q))
            vals[k] = v % self.p
        return DistElem(self, vals)

    def product(self, factors) -> "DistElem":
        out = self.unit
        for f in factors:
            out = out * f
        return out

    def _root_coords(self, upper: bool, parity: int):
        sh = self.shape
        return [(i, j) for (i, j) in self.coord.coords
                if (j > i if upper else i > j) and sh.coord_parity(i, j) == parity]

    def u_element(self, sign: str, parity: int, order=None) -> "DistElem":
        """u^{+/-}_0 (product of top divided powers) or u^{+/-}_1 (odd roots)."""
        coords = self._root_coords(sign == "+", parity)
        if order is not None:
            coords = [coords[k] for k in order]
        t = 1 if parity else self.q - 1
        return self.product(self.divided_power(i, j, t) for (i, j) in coords)

    @cached_property
    def nu(self) -> "DistElem":
        """nu_r = Delta_T u+_1 u+_0 u-_1 u-_0."""
        return self.product([self.delta_T(), self.u_element("+", 1), self.u_element("+", 0),
                             self.u_element("-", 1), self.u_element("-", 0)])

    # -- GL(1|1) named elements --------------------------------------------

    def _require_gl11(self):
        if (self.shape.m, self.shape.n) != (1, 1):
            raise ValueError("g_pi and h_pi are defined for GL(1|1) only")

    @cached_property
    def e21e12(self) -> "DistElem":
        return self.generator_e(2, 1) * self.generator_e(1, 2)

    def h(self, pi) -> "DistElem":
        """h_pi = sum_{pi <= beta} (-1)^{|beta|} binom(beta, pi) binom(e, beta)."""
        self._require_gl11()
        return self._signed_torus_sum(pi, shift=(0, 0))

    def g(self, pi) -> "DistElem":
        """g_pi = sum_{pi <= beta} (-1)^{|beta|} binom(beta, pi) binom(e', beta) e21 e12,
        where e' = e + eps_1 - eps_2."""
        self._require_gl11()
        return self._signed_torus_sum(pi, shift=(-1, 1)) * self.e21e12

    def _signed_torus_sum(self, pi, shift) -> "DistElem":
        q = self.q
        if not all(0 <= x < q for x in pi):
            raise ValueError(f"pi={pi} not in X^(r)(T)")
        out = self.zero()
        for beta in itertools.product(range(pi[0], q), range(pi[1], q)):
            c = (-1) ** size(beta) * binom(beta[0], pi[0]) * binom(beta[1], pi[1])
            if c % self.p:
                out = out + self.torus_binom(beta, shift).scale(c)
        return out

    def named(self, key: str) -> "DistElem":
        """Look up a named element: nu_r, delta_T, u+0, u-1, g[1,1], h[0,2]."""
        if key == "nu_r":
            return self.nu
        if key == "delta_T":
            return self.delta_T()
        if key in ("u+0", "u+1", "u-0", "u-1"):
            return self.u_element(key[1], int(key[2]))
        if key[:2] in ("g[", "h[") and key.endswith("]"):
            pi = tuple(int(x) for x in key[2:-1].split(","))
            return self.g(pi) if key[0] == "g" else self.h(pi)
        raise KeyError(key)

    # -- subalgebras -------------------------------------------------------

    def ideal_span(self, spec: SubgroupSpec) -> np.ndarray:
        """Rows spanning I_H in K[G_r]."""
        gens = spec.ideal_generators(self.coord)
        if not gens:
            return np.zeros((0, self.dim), dtype=np.int64)
        rows = [self.coord.left_mult_matrix(g).T for g in gens]
        return linalg.row_basis(np.vstack(rows), self.p)

    def subalgebra_basis(self, spec: SubgroupSpec) -> list["DistElem"]:
        """Basis of Dist(H_r) = {phi : phi(I_H) = 0}."""
        I = self.ideal_span(spec)
        if I.shape[0] == 0:
            N = np.eye(self.dim, dtype=np.int64)
        else:
            N = linalg.nullspace(I, self.p)
        return [DistElem(self, row) for row in N]

    def to_json(self, phi: "DistElem") -> dict:
        par = phi.parity
        return {"values": [int(x) for x in phi.values], "basis_order": "row-major-lex",
                "parity": {0: "even", 1: "odd", None: "mixed"}[par]}


class DistElem:
    """A functional on K[G_r], stored densely over the monomial basis."""

    __slots__ = ("alg", "values")

    def __init__(self, alg: DistAlgebra, values):
        self.alg = alg
        v = np.asarray(values, dtype=np.int64) % alg.p
        if v.shape != (alg.dim,):
            raise ValueError(f"expected {alg.dim} values, got shape {v.shape}")
        self.values = v

    def _check(self, other):
        if not isinstance(other, DistElem) or other.alg is not self.alg:
            raise ValueError("elements from different contexts")

    def __call__(self, f: CoordElem) -> int:
        if f.alg is not self.alg.coord:
            raise ValueError("context mismatch")
        return int(sum(c * int(self.values[k]) for k, c in f.terms.items()) % self.alg.p)

    def __add__(self, other):
        self._check(other)
        return DistElem(self.alg, self.values + other.values)

    def __sub__(self, other):
        self._check(other)
        return DistElem(self.alg, self.values - other.values)

    def __neg__(self):
        return DistElem(self.alg, -self.values)

    def scale(self, c: int) -> "DistElem":
        return DistElem(self.alg, self.values * (c % self.alg.p))

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        if isinstance(other, CoordElem):
            return self.alg.right_action(self, other)
        self._check(other)
        return DistElem(self.alg, self.alg.mul_values(self.values, other.values))

    def __rmul__(self, c):
        return self.scale(int(c))

    def __eq__(self, other):
        return isinstance(other, DistElem) and other.alg is self.alg and bool(
            np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash(self.values.tobytes())

    def is_zero(self) -> bool:
        return not np.any(self.values)

    @property
    def parity(self) -> int | None:
        pars = set(self.alg.coord.parity[np.flatnonzero(self.values)].tolist())
        if len(pars) > 1:
            return None
        return pars.pop() if pars else 0

    def counit(self) -> int:
        return int(self.values[0])

    def __repr__(self):
        nz = np.flatnonzero(self.values)
        body = ", ".join(f"{self.alg.coord.mono_name(k)}:{self.values[k]}" for k in nz[:8])
        more = ", ..." if nz.size > 8 else ""
        return f"DistElem({{{body}{more}}})"
