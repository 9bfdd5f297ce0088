import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from frobkernel import hc_blocks as hb
from frobkernel import invariants as inv, linalg
from frobkernel.arith import restricted_weights, size, window

from conftest import algebra

GL11 = [(2, 1), (3, 1), (2, 2)]


@pytest.mark.parametrize("pr", GL11, ids=str)
def test_pbw_roundtrip(pr):
    A = algebra(1, 1, *pr)
    P = hb.pbw_for(A)
    rng = np.random.default_rng(0)
    for _ in range(5):
        z = A.elem(rng.integers(0, A.p, A.dim))
        assert P.assemble(P.decompose(z)) == z


def test_pbw_on_larger_shape():
    A = algebra(2, 1, 2)
    P = hb.pbw_for(A)
    z = A.nu
    assert P.assemble(P.decompose(z)) == z
    assert int(P.torus_mask.sum()) == A.q ** 3


@pytest.mark.parametrize("pr", GL11, ids=str)
def test_projection_is_multiplicative_on_center(pr):
    A = algebra(1, 1, *pr)
    Z = inv.center_basis(A)
    rng = np.random.default_rng(1)
    for _ in range(6):
        x = A.elem(rng.integers(0, A.p, Z.dim) @ Z.basis)
        y = A.elem(rng.integers(0, A.p, Z.dim) @ Z.basis)
        assert hb.hc_project(x * y) == hb.hc_project(x) * hb.hc_project(y)


@pytest.mark.parametrize("pr", GL11, ids=str)
def test_eigenvalue_is_value_on_diagonal_monomial(pr):
    # binom(e, beta) evaluated on c^lam is binom(lam, beta)
    A = algebra(1, 1, *pr)
    K = A.coord
    Z = inv.center_basis(A)
    for v in Z.basis[:8]:
        z = A.elem(v)
        hz = hb.hc_project(z)
        for lam in restricted_weights(A.q):
            (idx, _), = K.c_weight(lam).terms.items()
            assert hb.eigenvalue(z, lam) == hz.values[idx]


@pytest.mark.parametrize("pr", GL11, ids=str)
def test_image_matches_listed_generators(pr):
    A = algebra(1, 1, *pr)
    img = hb.image_of_center(A)
    listed = [g.values for _, g in hb.hc_image_generators(A)]
    assert linalg.same_span(img, listed, A.p)
    assert img.shape[0] == len(listed)


def test_projection_kills_nu():
    A = algebra(1, 1, 3)
    assert hb.hc_project(A.nu).is_zero()
    d = hb.pbw_decompose(A.nu)
    assert all(k.lower == (1,) and k.upper == (1,) for k in d)


def test_torus_eigenvalue_rejects_non_torus():
    A = algebra(1, 1, 2)
    with pytest.raises(ValueError):
        hb.torus_eigenvalue(A.generator_e(1, 2), (0, 0))
    assert hb.torus_eigenvalue(A.h((1, 0)), (1, 0)) in range(A.p)


@pytest.mark.parametrize("pr", [(2, 1), (2, 2), (3, 1)], ids=str)
def test_h_table_matches_brute_force(pr):
    p, r = pr
    A = algebra(1, 1, p, r)
    M = hb._h_table(p, r)
    for pi in restricted_weights(A.q):
        h = A.h(pi)
        for lam in restricted_weights(A.q):
            assert hb.eigenvalue(h, lam) == M[pi[0], lam[0]] * M[pi[1], lam[1]] % p


@pytest.mark.parametrize("pr", [(2, 1), (2, 2), (3, 1)], ids=str)
def test_signature_separates_like_brute_eigenvalues(pr):
    p, r = pr
    A = algebra(1, 1, p, r)
    gens = [g for _, g in hb.hc_image_generators(A)]
    weights = restricted_weights(A.q)
    brute = {lam: tuple(hb.eigenvalue(g, lam) for g in gens) for lam in weights}
    sig = {lam: hb.hc_signature(lam, p, r) for lam in weights}
    for a in weights:
        for b in weights:
            assert (brute[a] == brute[b]) == (sig[a] == sig[b])


def test_level_for_window():
    assert hb.level_for_window(2, 8) == 6
    assert 3 ** hb.level_for_window(3, 18) > 72
    with pytest.raises(ValueError):
        hb.hc_partition(8, 2, r=4)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(-60, 60), st.integers(-60, 60), st.integers(-5, 5))
def test_wt_is_constant_along_p_alpha(p, a, b, k):
    assert hb.wt((a + k * p, b - k * p), p) == hb.wt((a, b), p)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(-60, 60), st.integers(-60, 60))
def test_wt_alpha_step(p, a, b):
    same = hb.wt((a + 1, b - 1), p) == hb.wt((a, b), p)
    assert same == ((a + b) % p == 0)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(-30, 30))
def test_gamma_sums_telescope(p, d):
    # gamma_{pd+1} + ... + gamma_{pd+p} = -p d delta
    tot = hb.AffineWeight.make(p, {})
    for s in range(1, p + 1):
        tot = tot + hb.gamma_a(p * d + s, p)
    assert tot == hb.AffineWeight.make(p, {}, -p * d)
    x = hb.gamma_a(d, p)
    assert (x - x).is_zero()


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(-9, 9), st.integers(-9, 9), st.integers(0, 9))
def test_block_within_matches_filter(p, a, b, w):
    for desc in (hb.block_B((a, b), p), hb.predicted_K((a, b), p)):
        brute = [lam for lam in window(w) if desc.contains(lam)]
        assert desc.within(w) == sorted(brute)


@pytest.mark.parametrize("p", [2, 3])
def test_compare_blocks(p):
    rep = hb.compare_blocks(2 * p * p, p)
    assert all(rep.flags.values()), rep.counterexamples
    assert not rep.counterexamples
    data = rep.to_json()
    assert set(data) == {"p", "window", "classes", "flags"}
    assert set(data["classes"]) == {"B", "HC", "K"}
    assert sum(len(c) for c in data["classes"]["HC"]) == (4 * p * p + 1) ** 2


def test_strictness_pattern():
    p, w = 3, 9
    rep = hb.compare_blocks(w, p)
    K = {lam: set(c) for c in rep.classes["K"] for lam in c}
    B = {lam: set(c) for c in rep.classes["B"] for lam in c}
    assert B[(1, 0)] == {(1, 0)} and (4, -3) in K[(1, 0)]
    assert B[(1, 2)] == K[(1, 2)] and (2, 1) in B[(1, 2)]


def test_block_lookups():
    assert hb.block_HC((1, 1), 4, 2) == hb.block_B((1, 1), 2).within(4)
    assert hb.block_K((1, 0), 4, 2) == [(-3, 4), (-1, 2), (1, 0), (3, -2)]
    with pytest.raises(ValueError):
        hb.block_K((9, 9), 4, 2)


def test_diagram_shape():
    rep = hb.compare_blocks(2, 2)
    rows = rep.diagram("B").splitlines()
    assert len(rows) == 5 and all(len(r.split()) == 5 for r in rows)


def test_bad_arguments():
    with pytest.raises(ValueError):
        hb.compare_blocks(3, 4)
    with pytest.raises(ValueError):
        hb.compare_blocks(-1, 2)
