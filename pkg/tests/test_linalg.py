import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from frobkernel import linalg
from frobkernel.invariants import sketched_nullspace


def brute_kernel_size(M, p):
    n = M.shape[1]
    return sum(1 for v in itertools.product(range(p), repeat=n) if not np.any(M @ v % p))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(1, 4), st.integers(1, 5), st.data())
def test_nullspace_against_enumeration(p, rows, cols, data):
    M = data.draw(arrays(np.int64, (rows, cols), elements=st.integers(0, p - 1)))
    N = linalg.nullspace(M, p)
    assert not np.any((M @ N.T) % p)
    assert p ** N.shape[0] == brute_kernel_size(M, p)
    assert linalg.rank(M, p) + N.shape[0] == cols


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 6), st.integers(0, 10**6))
def test_inverse_and_solve(p, n, seed):
    rng = np.random.default_rng(seed)
    M = rng.integers(0, p, (n, n))
    if linalg.rank(M, p) < n:
        with pytest.raises(Exception):
            linalg.inverse(M, p)
        return
    Minv = linalg.inverse(M, p)
    assert np.array_equal(M @ Minv % p, np.eye(n, dtype=np.int64))
    b = rng.integers(0, p, n)
    x = linalg.solve(M, b, p)
    assert np.array_equal(M @ x % p, b % p)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(0, 10**6))
def test_echelon_matches_rref(p, seed):
    rng = np.random.default_rng(seed)
    blocks = [rng.integers(0, p, (int(rng.integers(1, 4)), 7)) for _ in range(3)]
    ech = linalg.Echelon(7, p)
    for b in blocks:
        ech.add(b)
    M = np.vstack(blocks)
    assert ech.rank == linalg.rank(M, p)
    N1, N2 = ech.nullspace(), linalg.nullspace(M, p)
    assert N1.shape[0] == N2.shape[0]
    if N1.size:
        assert linalg.same_span(N1, N2, p)


def test_sketched_nullspace_recovers_full_kernel():
    p = 3
    rng = np.random.default_rng(1)
    M = rng.integers(0, p, (40, 12))
    M[:, -3:] = 0  # a 3-dimensional kernel at least
    exact = linalg.nullspace(M, p)

    def sketch(r):
        return (r.integers(0, p, (2, M.shape[0])) @ M) % p

    def check(N):
        return not np.any((M @ N.T) % p)

    N = sketched_nullspace(12, p, sketch, check, np.random.default_rng(0))
    assert linalg.same_span(N, exact, p)


def test_span_helpers():
    p = 5
    B = np.array([[1, 0, 2], [0, 1, 3]])
    assert linalg.in_span([2, 3, 4 + 9], B, p)
    assert not linalg.in_span([0, 0, 1], B, p)
    assert linalg.same_span(B, [[1, 1, 0], [1, 4, 4]], p)
