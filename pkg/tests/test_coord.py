import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from frobkernel import CoordAlgebra, GlShape
from frobkernel import hopf_checks
from frobkernel.coord import TensorElem

SHAPES = [(1, 1, 2, 1), (1, 1, 3, 1), (1, 1, 5, 1), (1, 1, 2, 2), (2, 1, 2, 1)]
_cache = {}


def coord(m, n, p, r=1) -> CoordAlgebra:
    key = (m, n, p, r)
    if key not in _cache:
        _cache[key] = CoordAlgebra(GlShape(m, n, p, r))
    return _cache[key]


def fresh(m, n, p, r=1) -> CoordAlgebra:
    return CoordAlgebra(GlShape(m, n, p, r))


@pytest.mark.parametrize("shape", SHAPES, ids=str)
def test_dimension_formula(shape):
    m, n, p, r = shape
    q = p**r
    assert coord(*shape).dim == q ** (m * m + n * n) * 2 ** (2 * m * n)


def test_dim_guard():
    with pytest.raises(ValueError):
        CoordAlgebra(GlShape(2, 1, 2, 1), dim_guard=100)


@pytest.mark.parametrize("shape", [(1, 1, 2, 1), (1, 1, 3, 1), (1, 1, 2, 2)], ids=str)
def test_hopf_axioms(shape):
    rng = np.random.default_rng(0)
    assert all(v is None for v in hopf_checks.all_axioms(coord(*shape), rng).values())


def test_corrupted_coproduct_is_detected():
    K = fresh(1, 1, 3)
    R, A, B, V = K.coproduct_table
    V = V.copy()
    V[len(V) // 2] = (V[len(V) // 2] + 1) % 3
    K.__dict__["coproduct_table"] = (R, A, B, V)
    assert hopf_checks.coassociativity(K) or hopf_checks.counit(K) or hopf_checks.antipode(K)


def test_corrupted_antipode_is_detected():
    K = fresh(1, 1, 2)
    S = K.antipode_matrix.copy()
    S[:, K.gen_index(1, 2)] = 0
    K.__dict__["antipode_matrix"] = S
    assert hopf_checks.antipode(K) is not None


def test_comul_of_generators():
    K = coord(2, 1, 2)
    for i in range(1, 4):
        for j in range(1, 4):
            expected = TensorElem(K, {})
            for k in range(1, 4):
                expected = expected + TensorElem.pure(K.c(i, k), K.c(k, j))
            assert K.comul(K.c(i, j)) == expected


@pytest.mark.parametrize("shape", [(1, 1, 2, 1), (1, 1, 3, 1)], ids=str)
def test_comul_table_matches_generator_products(shape):
    # Delta of every monomial, rebuilt by multiplying Delta of its factors
    K = coord(*shape)
    for idx in range(K.dim):
        out = TensorElem(K, {(0, 0): 1})
        for (i, j), e in zip(K.coords, K.exps[idx]):
            for _ in range(int(e)):
                out = out * K.comul(K.c(i, j))
        assert out == K.comul_basis(idx), K.mono_name(idx)


def test_antipode_inverts_matrix():
    K = coord(2, 1, 2)
    for i in range(1, 4):
        for j in range(1, 4):
            tot = K.zero()
            for k in range(1, 4):
                tot = tot + K.antipode(K.c(i, k)) * K.c(k, j)
            assert tot == (1 if i == j else 0)


def test_relations():
    for shape in [(1, 1, 3, 1), (1, 1, 2, 2)]:
        K = coord(*shape)
        assert K.c(1, 1) ** K.q == 1
        assert (K.c(1, 2) * K.c(1, 2)).is_zero()
        assert K.t(1, 1) ** K.q == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 35), st.integers(0, 35))
def test_supercommutative(a, b):
    K = coord(1, 1, 3)
    x, y = K.from_vector(np.eye(K.dim, dtype=np.int64)[a]), \
        K.from_vector(np.eye(K.dim, dtype=np.int64)[b])
    sign = -1 if K.parity[a] and K.parity[b] else 1
    assert x * y == (y * x).scale(sign)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 35), st.integers(0, 35), st.integers(0, 35))
def test_associative(a, b, c):
    K = coord(1, 1, 3)
    e = np.eye(K.dim, dtype=np.int64)
    x, y, z = (K.from_vector(e[k]) for k in (a, b, c))
    assert (x * y) * z == x * (y * z)


# -- superderivations against an independent dual-number computation ----------
#
# Evaluate every monomial at C + D(C) x with x odd, coefficients written to the
# left of x: (a + b x)(c + d x) = ac + (ad + (-1)^{|c|} bc) x.
# The generator values D(c_kl) come from the x-coefficient of g^{-1} C g,
# g = E + x E_ij.


def _dual_mul(u, v, K):
    a, b = u
    c, d = v
    par = c.parity
    return a * c, a * d + (b * c).scale(-1 if par else 1)


def _conj_generator(K, i, j, k, l):
    # g^{-1} C g = C + C x E_ij - x E_ij C ; move x to the right of every c
    out = K.zero()
    if l == j:
        out = out + K.c(k, i)
    if k == i:
        out = out - K.c(j, l).scale(-1 if K.shape.coord_parity(j, l) else 1)
    return out


def _dual_numbers_derivation(K, i, j):
    M = np.zeros((K.dim, K.dim), dtype=np.int64)
    gens = {c: (K.c(*c), _conj_generator(K, i, j, *c)) for c in K.coords}
    for idx in range(K.dim):
        val = (K.one(), K.zero())
        for c, e in zip(K.coords, K.exps[idx]):
            for _ in range(int(e)):
                val = _dual_mul(val, gens[c], K)
        M[:, idx] = val[1].vector()
    return M % K.p


@pytest.mark.parametrize("shape,ij", [((1, 1, 2, 1), (1, 2)), ((1, 1, 3, 1), (1, 2)),
                                      ((1, 1, 3, 1), (2, 1)), ((1, 1, 5, 1), (1, 2)),
                                      ((2, 1, 2, 1), (1, 3)), ((2, 1, 2, 1), (3, 2))], ids=str)
def test_superderivation_matches_dual_numbers(shape, ij):
    K = coord(*shape)
    for c in K.coords:
        assert K.superderivation_on_generator(*ij, *c) == _conj_generator(K, *ij, *c)
    assert np.array_equal(K._derivations(*ij), _dual_numbers_derivation(K, *ij))


def test_opposite_leibniz_sign_disagrees():
    K = coord(1, 1, 3)
    assert not np.array_equal(K.superderivation_matrix(1, 2, leibniz_sign=-1),
                              _dual_numbers_derivation(K, 1, 2))


def test_superderivation_needs_odd_coordinate():
    with pytest.raises(ValueError):
        coord(1, 1, 2).superderivation_matrix(1, 1)


# -- x-basis, names and JSON --------------------------------------------------

@pytest.mark.parametrize("shape", [(1, 1, 2, 1), (1, 1, 3, 1), (1, 1, 2, 2)], ids=str)
def test_x_basis_is_basis(shape):
    K = coord(*shape)
    X = K.x_basis_matrix
    assert np.array_equal((X @ K.x_basis_inverse) % K.p, np.eye(K.dim, dtype=np.int64))
    g = K.x_generators
    assert g["x11"] * g["x12"] == K.c(1, 2)
    assert g["x11"] * g["x21"] == K.c(2, 1)


def test_x_basis_rejects_other_shapes():
    with pytest.raises(ValueError):
        coord(2, 1, 2).x_generators


@pytest.mark.parametrize("shape", [(1, 1, 3, 1), (2, 1, 2, 1)], ids=str)
def test_monomial_names_roundtrip(shape):
    K = coord(*shape)
    for idx in range(0, K.dim, 7):
        assert K.parse_mono(K.mono_name(idx)) == idx
    assert K.mono_name(0) == "1"


def test_monomial_name_format():
    K = coord(1, 1, 3)
    assert K.mono_name(K.c(1, 1).terms.popitem()[0]) == "c11"
    (idx, _), = (K.c(1, 1) ** 2 * K.c(1, 2)).terms.items()
    assert K.mono_name(idx) == "c11^2*c12"
    with pytest.raises(ValueError):
        K.parse_mono("c12^2")


def test_json_roundtrip():
    K = coord(1, 1, 3)
    f = K.c(1, 1) ** 2 * K.c(1, 2) + K.c(2, 1).scale(2) + K.one()
    data = json.loads(json.dumps(K.to_json(f)))
    assert K.from_json(data) == f
    with pytest.raises(ValueError):
        coord(1, 1, 2).from_json(data)


def test_weights_under_conjugation():
    K = coord(1, 1, 2)
    (idx, _), = (K.c(1, 2) * K.c(2, 2)).terms.items()
    assert K.conj_weights[idx].tolist() == [1, -1]
