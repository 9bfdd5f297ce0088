import numpy as np
import pytest

from frobkernel import SubgroupSpec, linalg
from frobkernel import invariants as inv

from conftest import algebra


def dense_right_integrals(A):
    # nu * b = b(1) nu for every basis b, stacked in full
    p, dim = A.p, A.dim
    rows = []
    for k in range(dim):
        b = A.basis_vector(k)
        M = (A.right_mult_matrix(b) - b.counit() * np.eye(dim, dtype=np.int64)) % p
        rows.append(M)
    return linalg.nullspace(np.vstack(rows), p)


def dense_center(A):
    p, dim = A.p, A.dim
    rows = []
    par = A.coord.parity
    for k in range(dim):
        b = A.basis_vector(k)
        for zpar in (0, 1):
            sign = -1 if zpar and par[k] else 1
            M = (A.right_mult_matrix(b) - sign * A.left_mult_matrix(b)) % p
            rows.append((zpar, M))
    parts = []
    for zpar in (0, 1):
        cols = np.flatnonzero(par == zpar)
        M = np.vstack([m[:, cols] for z, m in rows if z == zpar])
        N = linalg.nullspace(M, p)
        full = np.zeros((N.shape[0], dim), dtype=np.int64)
        full[:, cols] = N
        parts.append(full)
    return np.vstack(parts)


@pytest.mark.parametrize("shape", [(1, 1, 2, 1), (1, 1, 3, 1)], ids=str)
def test_sketched_integrals_match_dense(shape):
    A = algebra(*shape)
    I = inv.integral_space(A)
    assert I.dim == 1
    assert I.same_as(dense_right_integrals(A))
    assert I.contains(A.nu.values)


@pytest.mark.parametrize("shape", [(1, 1, 2, 1), (1, 1, 3, 1)], ids=str)
def test_sketched_center_matches_dense(shape):
    A = algebra(*shape)
    Z = inv.center_basis(A)
    assert Z.same_as(dense_center(A))


@pytest.mark.parametrize("pr", [(2, 1), (3, 1), (2, 2), (5, 1)], ids=str)
def test_center_dimension_and_generators(pr):
    p, r = pr
    A = algebra(1, 1, p, r)
    Z = inv.check_center_generators(A)
    assert Z.dim == A.q**2 + p ** (r - 1)
    assert Z.contains(A.nu.values)


def test_integral_is_two_sided_and_central():
    for shape in [(1, 1, 3, 1), (2, 1, 2, 1)]:
        A = algebra(*shape)
        assert inv.is_right_integral(A, A.nu)
        assert inv.is_left_integral(A, A.nu)
        assert inv.supercommutes_with(A, A.nu)


def test_non_integral_rejected():
    A = algebra(1, 1, 3)
    assert not inv.is_right_integral(A, A.nu + A.unit)
    assert not inv.is_right_integral(A, A.generator_e(1, 2))
    assert not inv.supercommutes_with(A, A.generator_e(1, 2))


def test_lemma_integral_sign():
    # nu spans the integrals and equals +g_(1,q-1); the single-sum form equals -g_(1,q-1)
    from frobkernel.verify import lemma_integral
    for p in (2, 3, 5):
        A = algebra(1, 1, p)
        g = A.g((1, A.q - 1))
        assert A.nu == g
        assert lemma_integral(A) == -g


def test_parabolic_integrals():
    A = algebra(2, 1, 2)
    for kind in ("P+", "P-", "T"):
        I = inv.integral_space(A, SubgroupSpec(kind))
        assert I.dim == 1


@pytest.mark.parametrize("pr", [(2, 1), (3, 1), (2, 2)], ids=str)
def test_coordinate_invariants(pr):
    A = algebra(1, 1, *pr)
    S = inv.check_invariant_generators(A)
    assert S.same_as(inv.coord_invariants_d21(A))
    Z = inv.center_basis(A)
    images = np.array([inv.nu_multiplication(A, A.coord.from_vector(v)).values
                       for v in S.basis])
    assert linalg.rank(images, A.p) == S.dim == Z.dim
    assert all(Z.contains(v) for v in images)


def test_coordinate_generators_are_invariant():
    A = algebra(1, 1, 3)
    K = A.coord
    for name, f in inv.invariant_generators(A):
        assert K.superderive(f, 1, 2).is_zero(), name
        w = K.conj_weights[list(f.terms)]
        assert not np.any(w), name


def test_generator_names():
    A = algebra(1, 1, 2)
    names = [n for n, _ in inv.center_generators(A)]
    assert "g[0,0]" in names and "sum_h[O_0]" in names and "z[0,1]" in names
    assert all(" " not in n for n in names)


def test_ad_invariants_equal_center():
    A = algebra(1, 1, 2)
    assert inv.ad_invariants(A).same_as(inv.center_basis(A))


def test_subspace_rejects_dependent_rows():
    with pytest.raises(ValueError):
        inv.Subspace(np.array([[1, 2], [2, 4]]), 3)
    S = inv.Subspace(np.array([[1, 2]]), 3)
    assert S.to_json() == {"dim": 1, "basis": [[1, 2]]}


def test_gl11_only_helpers():
    with pytest.raises(ValueError):
        inv.center_generators(algebra(2, 1, 2))
