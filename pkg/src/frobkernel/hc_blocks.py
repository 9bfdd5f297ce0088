"""Harish-Chandra projection, central characters and the three block partitions.

Block partitions of the (infinite) weight lattice are computed on a finite
square window ``|lam_i| <= w``.  Eigenvalues of torus elements depend on a
weight only through its residue mod q, so a level r is picked large enough
that distinct central characters in the window cannot collide.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import linalg
from .arith import ALPHA, binom, is_prime, orbit, size, wadd, window, wscale
from .dist import DistAlgebra, DistElem
from .invariants import VerificationError, center_basis


# -- PBW coordinates ---------------------------------------------------------

@dataclass(frozen=True)
class PBWIndex:
    lower: tuple[int, ...]
    diag: tuple[int, ...]
    upper: tuple[int, ...]

    @property
    def is_torus(self) -> bool:
        return not any(self.lower) and not any(self.upper)


class PBW:
    """Products lower(odd, even) * binom(e, s) * upper(even, odd) as a basis of Dist(G_r)."""

    def __init__(self, alg: DistAlgebra):
        self.alg = alg
        sh = alg.shape
        lower = [(i, j) for (i, j) in alg.coord.coords if i > j]
        upper = [(i, j) for (i, j) in alg.coord.coords if i < j]
        self.lower_roots = ([c for c in lower if sh.coord_parity(*c)]
                            + [c for c in lower if not sh.coord_parity(*c)])
        self.upper_roots = ([c for c in upper if not sh.coord_parity(*c)]
                            + [c for c in upper if sh.coord_parity(*c)])
        N = sh.size

        def ranges(roots):
            return [range(2) if sh.coord_parity(*c) else range(alg.q) for c in roots]

        def monomials(roots):
            out = {}
            for ex in itertools.product(*ranges(roots)):
                out[ex] = alg.product(alg.divided_power(i, j, t)
                                      for (i, j), t in zip(roots, ex) if t)
            return out

        lows, ups = monomials(self.lower_roots), monomials(self.upper_roots)
        diags = {s: alg.torus_binom(s) for s in itertools.product(range(alg.q), repeat=N)}
        self.indices: list[PBWIndex] = []
        cols = []
        for (le, lo), (s, d), (ue, up) in itertools.product(lows.items(), diags.items(),
                                                            ups.items()):
            self.indices.append(PBWIndex(le, s, ue))
            cols.append((lo * d * up).values)
        self.matrix = np.array(cols, dtype=np.int64).T % alg.p
        try:
            self.inverse = linalg.inverse(self.matrix, alg.p)
        except np.linalg.LinAlgError as exc:
            raise VerificationError("PBW products are not a basis of Dist(G_r)") from exc
        self.torus_mask = np.array([ix.is_torus for ix in self.indices])
        self.position = {ix: k for k, ix in enumerate(self.indices)}

    def coordinates(self, z: DistElem) -> np.ndarray:
        return (self.inverse @ z.values) % self.alg.p

    def decompose(self, z: DistElem) -> dict[PBWIndex, int]:
        x = self.coordinates(z)
        return {self.indices[k]: int(x[k]) for k in np.flatnonzero(x)}

    def assemble(self, coeffs: dict[PBWIndex, int]) -> DistElem:
        x = np.zeros(len(self.indices), dtype=np.int64)
        for ix, c in coeffs.items():
            x[self.position[ix]] = c
        return self.alg.elem(self.matrix @ x)

    def project(self, z: DistElem) -> DistElem:
        """Torus component h(z) of z in Dist(T_r) + J."""
        x = self.coordinates(z) * self.torus_mask
        return self.alg.elem(self.matrix @ x)

    def torus_coefficients(self, z: DistElem) -> dict[tuple[int, ...], int]:
        x = self.coordinates(z)
        return {self.indices[k].diag: int(x[k])
                for k in np.flatnonzero(x * self.torus_mask)}


def pbw_for(alg: DistAlgebra) -> PBW:
    """The PBW basis of alg, built once per algebra instance."""
    if "_pbw" not in alg.__dict__:
        alg.__dict__["_pbw"] = PBW(alg)
    return alg.__dict__["_pbw"]


def pbw_decompose(z: DistElem) -> dict[PBWIndex, int]:
    return pbw_for(z.alg).decompose(z)


def hc_project(z: DistElem) -> DistElem:
    return pbw_for(z.alg).project(z)


def eigenvalue(z: DistElem, lam) -> int:
    """Scalar by which h(z) acts on weight lam: binom(e, beta) -> binom(lam, beta)."""
    P = pbw_for(z.alg)
    p = z.alg.p
    total = 0
    for beta, c in P.torus_coefficients(z).items():
        v = c
        for li, bi in zip(lam, beta):
            v *= binom(int(li), bi)
        total += v
    return total % p


def torus_eigenvalue(t: DistElem, lam) -> int:
    """Eigenvalue of an element already supported on Dist(T_r)."""
    P = pbw_for(t.alg)
    if np.any(P.coordinates(t) * ~P.torus_mask):
        raise ValueError("element is not supported on Dist(T_r)")
    return eigenvalue(t, lam)


# -- the image I_r of the centre ---------------------------------------------

def image_of_center(alg: DistAlgebra) -> np.ndarray:
    """Echelon basis of h(Z_r), computed from the brute-force centre."""
    Z = center_basis(alg)
    P = pbw_for(alg)
    rows = [P.project(alg.elem(v)).values for v in Z.basis]
    return linalg.row_basis(np.array(rows), alg.p)


def hc_image_generators(alg: DistAlgebra) -> list[tuple[str, DistElem]]:
    """Listed generators of I_r for GL(1|1): h_lam when p does not divide t,
    the signed orbit sum when it does."""
    alg._require_gl11()
    p, q = alg.p, alg.q
    gens = []
    for t in range(q):
        O = orbit(t, q)
        if t % p:
            gens += [(f"h[{lam[0]},{lam[1]}]", alg.h(lam)) for lam in O]
        else:
            s = alg.zero()
            for lam in O:
                s = s + alg.h(lam).scale((-1) ** size(lam))
            gens.append((f"sum_h[O_{t}]", s))
    return gens


# -- central-character tables without building Dist(G_r) ---------------------

@lru_cache(maxsize=16)
def _h_table(p: int, r: int) -> np.ndarray:
    """M[pi, u] = sum_{beta >= pi} (-1)^beta binom(beta, pi) binom(u, beta) mod p, u in [0, q).

    The one-variable factor of the eigenvalue of h_pi at a weight with residue u.
    """
    q = p**r
    B = np.zeros((q, q), dtype=np.int64)  # B[a, b] = binom(a, b) mod p
    B[:, 0] = 1
    for a in range(1, q):
        B[a, 1:] = (B[a - 1, 1:] + B[a - 1, :-1]) % p
    signs = np.where(np.arange(q) % 2, -1, 1)
    # sum over beta of binom(beta, pi) * sign(beta) * binom(u, beta)
    M = linalg._matmul_mod(B.T * signs[None, :], B.T, p)
    return M


def level_for_window(p: int, w: int) -> int:
    """Smallest r with q = p^r > 4w, so that |lam| is determined by its residue mod q."""
    r = 1
    while p**r <= 4 * w:
        r += 1
    return r


def hc_signature(lam, p: int, r: int) -> frozenset:
    """Nonzero eigenvalues of the I_r generators at lam, keyed by generator."""
    q = p**r
    M = _h_table(p, r)
    u1, u2 = lam[0] % q, lam[1] % q
    col1, col2 = np.flatnonzero(M[:, u1]), np.flatnonzero(M[:, u2])
    acc: dict[tuple, int] = defaultdict(int)
    for a in col1.tolist():
        for b in col2.tolist():
            v = int(M[a, u1] * M[b, u2]) % p
            t = (a + b) % q
            if t % p:
                acc[("h", a, b)] = (acc[("h", a, b)] + v) % p
            else:
                acc[("O", t)] = (acc[("O", t)] + (-1) ** (a + b) * v) % p
    return frozenset((k, v) for k, v in acc.items() if v % p)


def _partition(weights, key) -> list[list[tuple[int, int]]]:
    groups: dict = {}
    for lam in weights:
        groups.setdefault(key(lam), []).append(lam)
    return sorted(sorted(g) for g in groups.values())


# -- affine weights ----------------------------------------------------------

@dataclass(frozen=True)
class AffineWeight:
    """sum_s c_s Lambda_s + d delta, with s taken mod p."""

    p: int
    lambda_coeffs: tuple[tuple[int, int], ...] = ()
    delta_coeff: int = 0

    @classmethod
    def make(cls, p: int, coeffs: dict[int, int], delta: int = 0) -> "AffineWeight":
        acc: dict[int, int] = defaultdict(int)
        for s, c in coeffs.items():
            acc[s % p] += c
        return cls(p, tuple(sorted((s, c) for s, c in acc.items() if c)), delta)

    def __add__(self, other: "AffineWeight") -> "AffineWeight":
        d = dict(self.lambda_coeffs)
        for s, c in other.lambda_coeffs:
            d[s] = d.get(s, 0) + c
        return AffineWeight.make(self.p, d, self.delta_coeff + other.delta_coeff)

    def __neg__(self) -> "AffineWeight":
        return AffineWeight.make(self.p, {s: -c for s, c in self.lambda_coeffs},
                                 -self.delta_coeff)

    def __sub__(self, other: "AffineWeight") -> "AffineWeight":
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.lambda_coeffs and self.delta_coeff == 0

    def __str__(self):
        parts = [f"{c}*L{s}" for s, c in self.lambda_coeffs]
        if self.delta_coeff:
            parts.append(f"{self.delta_coeff}*delta")
        return " + ".join(parts) or "0"


def gamma_a(a: int, p: int) -> AffineWeight:
    """Lambda_s - Lambda_{s-1} - d delta where a = p d + s, 1 <= s <= p."""
    d, s = divmod(a - 1, p)
    s += 1
    return AffineWeight.make(p, {s: 1, s - 1: -1} if s % p != (s - 1) % p else {}, -d)


def wt(lam, p: int) -> AffineWeight:
    return gamma_a(lam[0], p) - gamma_a(-lam[1], p)


# -- blocks ------------------------------------------------------------------

@dataclass
class BlockDescription:
    kind: str  # "singleton" or "line"
    base: tuple[int, int]
    step: int = 1  # line lam + step * Z * alpha

    def contains(self, mu) -> bool:
        if self.kind == "singleton":
            return tuple(mu) == self.base
        k = mu[0] - self.base[0]
        return size(mu) == size(self.base) and k % self.step == 0

    def within(self, w: int) -> list[tuple[int, int]]:
        """Points of the block with |lam_i| <= w, lexicographic."""
        a, b = self.base
        if self.kind == "singleton":
            return [self.base] if max(abs(a), abs(b)) <= w else []
        k0 = -((a + w) // self.step)
        pts = ((a + k * self.step, b - k * self.step)
               for k in range(k0, k0 + (2 * w) // self.step + 2))
        return [lam for lam in pts if max(map(abs, lam)) <= w]


def block_B(lam, p: int) -> BlockDescription:
    if size(lam) % p == 0:
        return BlockDescription("line", tuple(lam))
    return BlockDescription("singleton", tuple(lam))


def predicted_HC(lam, p: int) -> BlockDescription:
    return block_B(lam, p)


def predicted_K(lam, p: int) -> BlockDescription:
    if size(lam) % p == 0:
        return BlockDescription("line", tuple(lam))
    return BlockDescription("line", tuple(lam), step=p)


def hc_partition(w: int, p: int, r: int | None = None) -> list[list[tuple[int, int]]]:
    r = level_for_window(p, w) if r is None else r
    if p**r <= 4 * w:
        raise ValueError(f"q = {p}^{r} too small to separate central characters on window {w}")
    return _partition(window(w), lambda lam: hc_signature(lam, p, r))


def block_HC(lam, w: int, p: int, r: int | None = None) -> list[tuple[int, int]]:
    for cls in hc_partition(w, p, r):
        if tuple(lam) in cls:
            got = cls
            break
    else:
        raise ValueError(f"{lam} is outside the window {w}")
    if got != predicted_HC(lam, p).within(w):
        raise VerificationError(f"HC class of {lam} disagrees with the closed form")
    return got


def k_partition(w: int, p: int) -> list[list[tuple[int, int]]]:
    return _partition(window(w), lambda lam: wt(lam, p))


def block_K(lam, w: int, p: int) -> list[tuple[int, int]]:
    for cls in k_partition(w, p):
        if tuple(lam) in cls:
            got = cls
            break
    else:
        raise ValueError(f"{lam} is outside the window {w}")
    if got != predicted_K(lam, p).within(w):
        raise VerificationError(f"K class of {lam} disagrees with the closed form")
    return got


@dataclass
class BlockReport:
    p: int
    window: int
    classes: dict[str, list[list[tuple[int, int]]]]
    flags: dict[str, bool]
    counterexamples: dict[str, list] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"p": self.p, "window": self.window,
                "classes": {k: [[list(l) for l in c] for c in v]
                            for k, v in self.classes.items()},
                "flags": dict(self.flags)}

    def diagram(self, kind: str = "HC") -> str:
        """Lattice picture of one partition; rows are lam_2 from top, columns lam_1."""
        label = {}
        for k, cls in enumerate(self.classes[kind]):
            for lam in cls:
                label[lam] = k
        width = len(str(len(self.classes[kind])))
        w = self.window
        lines = []
        for b in range(w, -w - 1, -1):
            lines.append(" ".join(str(label[(a, b)]).rjust(width) for a in range(-w, w + 1)))
        return "\n".join(lines)


def compare_blocks(w: int, p: int, r: int | None = None) -> BlockReport:
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if w < 0:
        raise ValueError("window must be non-negative")
    weights = window(w)
    HC = hc_partition(w, p, r)
    K = k_partition(w, p)
    B = _partition(weights, lambda lam: (size(lam), None) if size(lam) % p == 0 else lam)
    cls_of = {}
    for name, part in (("B", B), ("HC", HC), ("K", K)):
        for c in part:
            for lam in c:
                cls_of[name, lam] = set(c)
    bad: dict[str, list] = defaultdict(list)
    for lam in weights:
        b, h, k = cls_of["B", lam], cls_of["HC", lam], cls_of["K", lam]
        if h != b:
            bad["HC_eq_B"].append(lam)
        if not b <= k:
            bad["B_subset_K"].append(lam)
        # strictness is only visible when another point of lam + p Z alpha lies in the window
        observable = any(abs(lam[0] + j) <= w and abs(lam[1] - j) <= w for j in (p, -p))
        if observable and (b < k) != (size(lam) % p != 0):
            bad["strict_iff_p_ndiv"].append(lam)
        if b != set(block_B(lam, p).within(w)):
            bad["B_closed_form"].append(lam)
        if h != set(predicted_HC(lam, p).within(w)):
            bad["HC_closed_form"].append(lam)
        if k != set(predicted_K(lam, p).within(w)):
            bad["K_closed_form"].append(lam)
    flags = {f: not bad[f] for f in ("HC_eq_B", "B_subset_K", "strict_iff_p_ndiv")}
    return BlockReport(p, w, {"B": B, "HC": HC, "K": K}, flags,
                       {k: v for k, v in bad.items() if v})
