"""Dense Gaussian elimination over F_p.

Matrices are numpy int64 arrays holding canonical residues.  Pivoting is
deterministic (first nonzero row, left-to-right columns) so echelon bases
are reproducible across runs.
"""

from __future__ import annotations

import numpy as np


def as_mod(M, p: int) -> np.ndarray:
    A = np.array(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1)
    return A % p


def _matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    # float64 BLAS is exact while inner sums stay below 2**53
    if A.shape[1] * (p - 1) ** 2 < 2**52:
        out = A.astype(np.float64) @ B.astype(np.float64)
        return np.rint(out).astype(np.int64) % p
    return (A @ B) % p


def rref(M, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of M over F_p; returns (nonzero rows, pivot columns)."""
    A = as_mod(M, p)
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = (A[r, c:] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            A[hit, c:] = (A[hit, c:] - np.outer(col[hit], A[r, c:])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M, p: int) -> int:
    A = as_mod(M, p)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace_from_rref(R: np.ndarray, pivots: list[int], n: int, p: int) -> np.ndarray:
    free = [c for c in range(n) if c not in set(pivots)]
    N = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        N[k, f] = 1
        if pivots:
            N[k, pivots] = (-R[:, f]) % p
    return N


def nullspace(M, p: int, n: int | None = None) -> np.ndarray:
    """Basis (as rows) of {v : M v = 0} over F_p."""
    A = as_mod(M, p)
    if n is None:
        n = A.shape[1]
    if A.size == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(A, p)
    return nullspace_from_rref(R, piv, n, p)


def left_nullspace(M, p: int) -> np.ndarray:
    return nullspace(as_mod(M, p).T, p)


def row_basis(M, p: int) -> np.ndarray:
    """Echelonised basis of the row span."""
    A = as_mod(M, p)
    if A.size == 0:
        return A.reshape(0, A.shape[-1] if A.ndim == 2 else 0)
    return rref(A, p)[0]


def same_span(A, B, p: int) -> bool:
    RA, RB = row_basis(A, p), row_basis(B, p)
    return RA.shape == RB.shape and bool(np.array_equal(RA, RB))


def in_span(v, B, p: int) -> bool:
    B = as_mod(B, p)
    return rank(np.vstack([B, as_mod(v, p)]), p) == rank(B, p)


def inverse(M, p: int) -> np.ndarray:
    A = as_mod(M, p)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, piv = rref(np.hstack([A, np.eye(n, dtype=np.int64)]), p)
    if len(piv) < n or piv[:n] != list(range(n)):
        raise np.linalg.LinAlgError("matrix is singular over F_p")
    return R[:n, n:]


def solve(A, b, p: int) -> np.ndarray:
    """Some solution x of A x = b (raises if inconsistent)."""
    A = as_mod(A, p)
    b = as_mod(b, p).reshape(-1, 1)
    n = A.shape[1]
    R, piv = rref(np.hstack([A, b]), p)
    if piv and piv[-1] == n:
        raise np.linalg.LinAlgError("inconsistent system over F_p")
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = R[i, n]
    return x


class Echelon:
    """Incrementally maintained reduced echelon basis of a growing row space."""

    def __init__(self, n: int, p: int):
        self.n, self.p = n, p
        self.R = np.zeros((0, n), dtype=np.int64)
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, X) -> int:
        """Absorb the rows of X; returns the rank gained."""
        p = self.p
        X = as_mod(X, p)
        if X.size == 0:
            return 0
        if self.pivots:
            X = (X - _matmul_mod(X[:, self.pivots], self.R, p)) % p
        X = X[np.any(X != 0, axis=1)]
        if X.shape[0] == 0:
            return 0
        S, spiv = rref(X, p)
        if self.pivots:
            # clear the new pivot columns out of the old rows
            self.R = (self.R - _matmul_mod(self.R[:, spiv], S, p)) % p
        rows = np.vstack([self.R, S])
        piv = self.pivots + spiv
        order = np.argsort(piv, kind="stable")
        self.R = rows[order]
        self.pivots = [piv[i] for i in order]
        return len(spiv)

    def nullspace(self) -> np.ndarray:
        return nullspace_from_rref(self.R, self.pivots, self.n, self.p)
