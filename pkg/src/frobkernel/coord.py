"""The coordinate Hopf superalgebra K[G_r] of the Frobenius kernel of GL(m|n).

Basis: monomials in the coordinates c_ij, odd generators written in
row-major order.  Exponents live in [0, q) for even coordinates and in
{0, 1} for odd ones; the relations are c_ii^q = 1 and c_ij^q = 0 (even
i != j), c_ij^2 = 0 (odd).  The basis is enumerated lexicographically on
exponent vectors, which makes the index of a monomial its mixed-radix value.

Indices i, j in the public API are 1-based, as in the matrix notation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import linalg
from .arith import frobenius_modulus, is_prime

DEFAULT_DIM_GUARD = 5000


@dataclass(frozen=True)
class GlShape:
    """GL(m|n) over F_p together with the Frobenius level r."""

    m: int
    n: int
    p: int
    r: int = 1

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ValueError(f"bad ranks m={self.m}, n={self.n}")
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        frobenius_modulus(self.p, self.r)

    @property
    def q(self) -> int:
        return self.p**self.r

    @property
    def size(self) -> int:
        return self.m + self.n

    def index_parity(self, i: int) -> int:
        """|w_i| for a 1-based index."""
        return 0 if i <= self.m else 1

    def coord_parity(self, i: int, j: int) -> int:
        return (self.index_parity(i) + self.index_parity(j)) % 2

    @property
    def dimension(self) -> int:
        return self.q ** (self.m**2 + self.n**2) * 2 ** (2 * self.m * self.n)

    def as_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "p": self.p, "r": self.r}


class CoordAlgebra:
    """K[G_r] for a fixed shape: basis, product, coproduct, counit, antipode."""

    def __init__(self, shape: GlShape, dim_guard: int = DEFAULT_DIM_GUARD):
        if shape.dimension > dim_guard:
            raise ValueError(
                f"dim K[G_r] = {shape.dimension} exceeds the guard {dim_guard}")
        self.shape = shape
        self.p, self.q = shape.p, shape.q
        N = shape.size
        self.coords = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1)]
        self.coord_index = {c: k for k, c in enumerate(self.coords)}
        self.coord_par = np.array([shape.coord_parity(*c) for c in self.coords])
        self.is_diag = np.array([i == j for i, j in self.coords])
        self.radix = np.where(self.coord_par == 1, 2, self.q)
        strides = np.ones(len(self.coords), dtype=np.int64)
        for k in range(len(self.coords) - 2, -1, -1):
            strides[k] = strides[k + 1] * self.radix[k + 1]
        self.strides = strides
        self.dim = int(np.prod(self.radix))
        self.exps = np.array(
            list(itertools.product(*[range(int(b)) for b in self.radix])), dtype=np.int64
        ).reshape(self.dim, len(self.coords))
        self.parity = (self.exps[:, self.coord_par == 1].sum(axis=1) % 2).astype(np.int64)
        odd = np.flatnonzero(self.coord_par == 1)
        self._odd_cols = odd
        # later[x, y] = 1 when odd coordinate x comes after y in row-major order
        self._later = np.tril(np.ones((len(odd), len(odd)), dtype=np.int64), -1)

    # -- basis -------------------------------------------------------------

    def index_of(self, exps) -> int:
        return int(np.dot(np.asarray(exps, dtype=np.int64), self.strides))

    def gen_index(self, i: int, j: int) -> int:
        return int(self.strides[self.coord_index[(i, j)]])

    def mono_name(self, idx: int) -> str:
        parts = []
        for (i, j), e in zip(self.coords, self.exps[idx]):
            if e:
                parts.append(f"c{i}{j}" if e == 1 else f"c{i}{j}^{e}")
        return "*".join(parts) if parts else "1"

    def parse_mono(self, name: str) -> int:
        exps = np.zeros(len(self.coords), dtype=np.int64)
        if name.strip() != "1":
            for factor in name.split("*"):
                base, _, e = factor.strip().partition("^")
                i, j = int(base[1]), int(base[2])
                exps[self.coord_index[(i, j)]] = int(e) if e else 1
        if np.any(exps >= self.radix):
            raise ValueError(f"exponent out of range in {name!r}")
        return self.index_of(exps)

    # -- monomial product --------------------------------------------------

    def mono_mul(self, ia, ib):
        """Vectorised product of basis monomials: returns (index, sign), index -1 for zero."""
        ia = np.asarray(ia, dtype=np.int64)
        ib = np.asarray(ib, dtype=np.int64)
        Ea, Eb = self.exps[ia], self.exps[ib]
        S = Ea + Eb
        S[..., self.is_diag] %= self.q
        dead = np.any(S >= self.radix, axis=-1)
        if self._odd_cols.size:
            Oa, Ob = Ea[..., self._odd_cols], Eb[..., self._odd_cols]
            inv = np.einsum("...x,xy,...y->...", Oa, self._later, Ob)
            sign = 1 - 2 * (inv % 2)
        else:
            sign = np.ones(S.shape[:-1], dtype=np.int64)
        idx = np.where(dead, -1, S @ self.strides)
        return idx, np.where(dead, 0, sign)

    # -- elements ----------------------------------------------------------

    def element(self, terms=None) -> "CoordElem":
        return CoordElem(self, terms or {})

    def one(self) -> "CoordElem":
        return CoordElem(self, {0: 1})

    def zero(self) -> "CoordElem":
        return CoordElem(self, {})

    def c(self, i: int, j: int) -> "CoordElem":
        return CoordElem(self, {self.gen_index(i, j): 1})

    def t(self, i: int, j: int) -> "CoordElem":
        return self.c(i, j) - (self.one() if i == j else self.zero())

    def c_weight(self, lam) -> "CoordElem":
        """c^lam = prod c_ii^{lam_i}; negative or large entries reduce mod q."""
        exps = np.zeros(len(self.coords), dtype=np.int64)
        for i, e in enumerate(lam, start=1):
            exps[self.coord_index[(i, i)]] = e % self.q
        return CoordElem(self, {self.index_of(exps): 1})

    def from_vector(self, v) -> "CoordElem":
        v = np.asarray(v, dtype=np.int64) % self.p
        nz = np.flatnonzero(v)
        return CoordElem(self, dict(zip(nz.tolist(), v[nz].tolist())))

    def mul_vectors(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        iu, iv = np.flatnonzero(u), np.flatnonzero(v)
        out = np.zeros(self.dim, dtype=np.int64)
        if iu.size == 0 or iv.size == 0:
            return out
        A, B = np.meshgrid(iu, iv, indexing="ij")
        idx, sgn = self.mono_mul(A, B)
        coef = sgn * u[A] * v[B]
        keep = idx >= 0
        np.add.at(out, idx[keep], coef[keep])
        return out % self.p

    # -- Hopf structure ----------------------------------------------------

    @cached_property
    def counit_vector(self) -> np.ndarray:
        off = self.exps[:, ~self.is_diag].sum(axis=1)
        return (off == 0).astype(np.int64)

    def counit(self, a: "CoordElem") -> int:
        return int(sum(c * self.counit_vector[i] for i, c in a.terms.items()) % self.p)

    @cached_property
    def coproduct_table(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Structure constants of Delta as flat arrays (R, A, B, V).

        Delta(basis[R[k]]) contains V[k] * basis[A[k]] (x) basis[B[k]].
        Built monomial by monomial from Delta(m) = Delta(m') Delta(c_g), where
        c_g is the last generator of m in normal order.
        """
        p, dim = self.p, self.dim
        N = self.shape.size
        gen = {(i, j): self.gen_index(i, j) for (i, j) in self.coords}
        per = [None] * dim
        per[0] = (np.array([0]), np.array([0]), np.array([1]))
        for idx in range(1, dim):
            nzc = np.flatnonzero(self.exps[idx])
            g = int(nzc[-1])
            i, j = self.coords[g]
            A0, B0, V0 = per[idx - int(self.strides[g])]
            As, Bs, Vs = [], [], []
            for k in range(1, N + 1):
                left, right = gen[(i, k)], gen[(k, j)]
                a2, s1 = self.mono_mul(A0, np.full_like(A0, left))
                b2, s2 = self.mono_mul(B0, np.full_like(B0, right))
                s3 = 1 - 2 * (self.parity[B0] * self.shape.coord_parity(i, k))
                ok = (a2 >= 0) & (b2 >= 0)
                As.append(a2[ok])
                Bs.append(b2[ok])
                Vs.append((V0 * s1 * s2 * s3)[ok])
            A1, B1, V1 = np.concatenate(As), np.concatenate(Bs), np.concatenate(Vs)
            key = A1 * dim + B1
            uk, inv = np.unique(key, return_inverse=True)
            vals = np.zeros(uk.size, dtype=np.int64)
            np.add.at(vals, inv, V1)
            vals %= p
            nz = vals != 0
            per[idx] = (uk[nz] // dim, uk[nz] % dim, vals[nz])
        R = np.concatenate([np.full(len(t[0]), k, dtype=np.int64) for k, t in enumerate(per)])
        A = np.concatenate([t[0] for t in per]).astype(np.int64)
        B = np.concatenate([t[1] for t in per]).astype(np.int64)
        V = np.concatenate([t[2] for t in per]).astype(np.int64)
        return R, A, B, V

    @cached_property
    def _coproduct_ptr(self) -> np.ndarray:
        R = self.coproduct_table[0]
        return np.searchsorted(R, np.arange(self.dim + 1))

    def comul_basis(self, idx: int) -> "TensorElem":
        _, A, B, V = self.coproduct_table
        lo, hi = self._coproduct_ptr[idx], self._coproduct_ptr[idx + 1]
        return TensorElem(self, {(int(a), int(b)): int(v)
                                 for a, b, v in zip(A[lo:hi], B[lo:hi], V[lo:hi])})

    def comul(self, a: "CoordElem") -> "TensorElem":
        out = TensorElem(self, {})
        for idx, c in a.terms.items():
            out = out + self.comul_basis(idx).scale(c)
        return out

    @cached_property
    def antipode_matrix(self) -> np.ndarray:
        """Column k holds s(basis[k]); s(C) = sum_k (-1)^k T^k with T = C - E."""
        N = self.shape.size
        p = self.p
        T = [[self.t(i, j).vector() for j in range(1, N + 1)] for i in range(1, N + 1)]
        ident = [[(self.one().vector() if i == j else np.zeros(self.dim, dtype=np.int64))
                  for j in range(N)] for i in range(N)]
        total = [[ident[i][j].copy() for j in range(N)] for i in range(N)]
        power = ident
        sign = 1
        while True:
            nxt = [[np.zeros(self.dim, dtype=np.int64) for _ in range(N)] for _ in range(N)]
            for i in range(N):
                for j in range(N):
                    acc = nxt[i][j]
                    for k in range(N):
                        acc += self.mul_vectors(power[i][k], T[k][j])
                    nxt[i][j] = acc % p
            sign = -sign
            if not any(np.any(e) for row in nxt for e in row):
                break
            for i in range(N):
                for j in range(N):
                    total[i][j] = (total[i][j] + sign * nxt[i][j]) % p
            power = nxt
        S = np.zeros((self.dim, self.dim), dtype=np.int64)
        S[0, 0] = 1
        for idx in range(1, self.dim):
            g = int(np.flatnonzero(self.exps[idx])[-1])
            i, j = self.coords[g]
            prev = S[:, idx - int(self.strides[g])]
            S[:, idx] = self.mul_vectors(prev, total[i - 1][j - 1])
        return S

    def antipode(self, a: "CoordElem") -> "CoordElem":
        return self.from_vector(self.antipode_matrix @ a.vector())

    def left_mult_matrix(self, f: "CoordElem") -> np.ndarray:
        """Matrix of g -> f g (columns indexed by basis g)."""
        M = np.zeros((self.dim, self.dim), dtype=np.int64)
        fv = f.vector()
        nz = np.flatnonzero(fv)
        cols = np.arange(self.dim)
        for i in nz:
            idx, sgn = self.mono_mul(np.full(self.dim, i), cols)
            ok = idx >= 0
            np.add.at(M, (idx[ok], cols[ok]), sgn[ok] * fv[i])
        return M % self.p

    # -- T-weights under conjugation ---------------------------------------

    @cached_property
    def conj_weights(self) -> np.ndarray:
        """Integer T-weight of each basis monomial; c_ij has weight eps_i - eps_j."""
        N = self.shape.size
        W = np.zeros((len(self.coords), N), dtype=np.int64)
        for k, (i, j) in enumerate(self.coords):
            W[k, i - 1] += 1
            W[k, j - 1] -= 1
        return self.exps @ W

    # -- superderivations --------------------------------------------------

    def superderivation_on_generator(self, i: int, j: int, k: int, l: int) -> "CoordElem":
        """c_kl D_ij from the generator table."""
        if k != i and l != j:
            return self.zero()
        if k == i and l != j:
            return self.c(j, l).scale(-1 if self.shape.coord_parity(j, l) == 0 else 1)
        if k != i and l == j:
            return self.c(k, i)
        return self.t(i, i) - self.t(j, j)

    def superderivation_matrix(self, i: int, j: int, leibniz_sign: int = 1) -> np.ndarray:
        """Column k holds (basis[k]) D_ij.

        Extended by the right Leibniz rule (uv)D = u(vD) + s (-1)^{|v|} (uD)v;
        ``leibniz_sign`` = s selects the convention.
        """
        if self.shape.coord_parity(i, j) != 1:
            raise ValueError(f"D_{i}{j} needs an odd coordinate")
        gens = {c: self.superderivation_on_generator(i, j, *c).vector() for c in self.coords}
        M = np.zeros((self.dim, self.dim), dtype=np.int64)
        for idx in range(1, self.dim):
            g = int(np.flatnonzero(self.exps[idx])[-1])
            coord = self.coords[g]
            prev = idx - int(self.strides[g])
            u = np.zeros(self.dim, dtype=np.int64)
            u[prev] = 1
            v = np.zeros(self.dim, dtype=np.int64)
            v[self.strides[g]] = 1
            term1 = self.mul_vectors(u, gens[coord])
            sgn = leibniz_sign * (-1 if self.coord_par[g] else 1)
            term2 = self.mul_vectors(M[:, prev], v)
            M[:, idx] = (term1 + sgn * term2) % self.p
        return M

    def superderive(self, a: "CoordElem", i: int, j: int) -> "CoordElem":
        return self.from_vector(self._derivations(i, j) @ a.vector())

    def _derivations(self, i, j):
        cache = self.__dict__.setdefault("_dcache", {})
        if (i, j) not in cache:
            cache[(i, j)] = self.superderivation_matrix(i, j)
        return cache[(i, j)]

    # -- the GL(1|1) x-basis -----------------------------------------------

    def _require_gl11(self):
        if (self.shape.m, self.shape.n) != (1, 1):
            raise ValueError("the x-basis is defined for GL(1|1) only")

    @cached_property
    def x_generators(self) -> dict[str, "CoordElem"]:
        self._require_gl11()
        inv11 = self.c(1, 1) ** (self.q - 1)
        x12 = inv11 * self.c(1, 2)
        x21 = inv11 * self.c(2, 1)
        return {"x11": self.c(1, 1), "x12": x12, "x21": x21,
                "x22": self.c(2, 2) - inv11 * self.c(2, 1) * self.c(1, 2)}

    def x_monomial(self, lam, a: int = 0, b: int = 0) -> "CoordElem":
        """x^lam x_21^a x_12^b (lam entries reduce mod q)."""
        g = self.x_generators
        out = (g["x11"] ** (lam[0] % self.q)) * (g["x22"] ** (lam[1] % self.q))
        if a:
            out = out * g["x21"]
        if b:
            out = out * g["x12"]
        return out

    @cached_property
    def x_basis_matrix(self) -> np.ndarray:
        """Column k = x-basis element labelled like c-basis monomial k.

        The label (e11, e12, e21, e22) stands for x^(e11, e22) x_21^e21 x_12^e12.
        """
        self._require_gl11()
        X = np.zeros((self.dim, self.dim), dtype=np.int64)
        for k, (e11, e12, e21, e22) in enumerate(self.exps.tolist()):
            X[:, k] = self.x_monomial((e11, e22), e21, e12).vector()
        return X

    @cached_property
    def x_basis_inverse(self) -> np.ndarray:
        return linalg.inverse(self.x_basis_matrix, self.p)

    def to_x_basis(self, a: "CoordElem") -> np.ndarray:
        """Coordinates of a in the x-basis (same labelling as the c-basis)."""
        return (self.x_basis_inverse @ a.vector()) % self.p

    def from_x_basis(self, coeffs) -> "CoordElem":
        return self.from_vector(self.x_basis_matrix @ np.asarray(coeffs, dtype=np.int64))

    # -- JSON --------------------------------------------------------------

    def to_json(self, a: "CoordElem") -> dict:
        return {"shape": self.shape.as_dict(),
                "terms": [{"mono": self.mono_name(i), "coef": int(c)}
                          for i, c in sorted(a.terms.items())]}

    def from_json(self, data: dict) -> "CoordElem":
        if data["shape"] != self.shape.as_dict():
            raise ValueError("shape mismatch")
        terms: dict[int, int] = {}
        for t in data["terms"]:
            k = self.parse_mono(t["mono"])
            terms[k] = terms.get(k, 0) + t["coef"]
        return CoordElem(self, terms)


class CoordElem:
    """A sparse element of K[G_r]: basis index -> residue mod p."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: CoordAlgebra, terms: dict[int, int]):
        self.alg = alg
        p = alg.p
        self.terms = {int(k): int(v) % p for k, v in terms.items() if int(v) % p}

    def _check(self, other):
        if not isinstance(other, CoordElem) or other.alg is not self.alg:
            raise ValueError("elements from different contexts")

    def vector(self) -> np.ndarray:
        v = np.zeros(self.alg.dim, dtype=np.int64)
        for k, c in self.terms.items():
            v[k] = c
        return v

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return CoordElem(self.alg, out)

    def __neg__(self):
        return CoordElem(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "CoordElem":
        return CoordElem(self.alg, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        return self.alg.from_vector(self.alg.mul_vectors(self.vector(), other.vector()))

    __rmul__ = scale

    def __pow__(self, k: int):
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.alg.one().scale(other)
        return isinstance(other, CoordElem) and other.alg is self.alg and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    @property
    def parity(self) -> int | None:
        """0 or 1 if homogeneous, None for mixed; zero counts as even."""
        pars = {int(self.alg.parity[k]) for k in self.terms}
        if len(pars) > 1:
            return None
        return pars.pop() if pars else 0

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{self.alg.mono_name(k)}" for k, c in sorted(self.terms.items()))


class TensorElem:
    """A sparse element of K[G_r] (x) K[G_r] with the super sign rule."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: CoordAlgebra, terms: dict[tuple[int, int], int]):
        self.alg = alg
        p = alg.p
        self.terms = {k: int(v) % p for k, v in terms.items() if int(v) % p}

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TensorElem(self.alg, out)

    def scale(self, c: int) -> "TensorElem":
        return TensorElem(self.alg, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "TensorElem") -> "TensorElem":
        alg = self.alg
        out: dict[tuple[int, int], int] = {}
        for (a, b), x in self.terms.items():
            for (c, d), y in other.terms.items():
                ac, s1 = alg.mono_mul(a, c)
                bd, s2 = alg.mono_mul(b, d)
                if ac < 0 or bd < 0:
                    continue
                sign = -1 if alg.parity[b] * alg.parity[c] else 1
                key = (int(ac), int(bd))
                out[key] = out.get(key, 0) + sign * int(s1) * int(s2) * x * y
        return TensorElem(alg, out)

    @classmethod
    def pure(cls, a: CoordElem, b: CoordElem) -> "TensorElem":
        return cls(a.alg, {(i, j): x * y for i, x in a.terms.items() for j, y in b.terms.items()})

    def __eq__(self, other):
        return isinstance(other, TensorElem) and self.terms == other.terms

    def __repr__(self):
        alg = self.alg
        return " + ".join(f"{c}*{alg.mono_name(a)}(x){alg.mono_name(b)}"
                          for (a, b), c in sorted(self.terms.items())) or "0"
