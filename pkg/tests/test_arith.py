import itertools
import math

import pytest
from hypothesis import given, strategies as st

from frobkernel.arith import (ALPHA, PrimeField, bar, binom, frobenius_modulus, is_prime,
                              lucas_binom, orbit, preceq, restricted_weights, size, wadd, window)

PRIMES = [2, 3, 5, 7]


@pytest.mark.parametrize("p", PRIMES)
def test_field_axioms_exhaustive(p):
    F = PrimeField(p)
    els = list(F.elements())
    for a, b, c in itertools.product(els, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        assert F.sub(a, a) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        PrimeField(5).inv(0)


@pytest.mark.parametrize("n", [0, 1, 4, 6, 9])
def test_non_primes_rejected(n):
    assert not is_prime(n)
    with pytest.raises(ValueError):
        PrimeField(n)


def test_frobenius_modulus_guards():
    assert frobenius_modulus(3, 2) == 9
    with pytest.raises(ValueError):
        frobenius_modulus(4, 1)
    with pytest.raises(ValueError):
        frobenius_modulus(2, 0)
    with pytest.raises(ValueError):
        frobenius_modulus(2, 10)


def test_binom_values():
    assert binom(5, 2) == 10
    assert binom(3, 5) == 0
    assert binom(-1, 3) == -1
    assert binom(-2, 2) == 3
    with pytest.raises(ValueError):
        binom(3, -1)


@given(st.integers(-50, 50), st.integers(1, 12))
def test_pascal_rule(n, k):
    assert binom(n, k) == binom(n - 1, k) + binom(n - 1, k - 1)


@given(st.sampled_from(PRIMES), st.integers(0, 5000), st.integers(0, 5000))
def test_lucas_matches_exact(p, n, k):
    assert lucas_binom(n, k, p) == math.comb(n, k) % p


@given(st.integers(2, 30), st.tuples(st.integers(-200, 200), st.integers(-200, 200)))
def test_bar_is_reduction(q, lam):
    b = bar(lam, q)
    assert all(0 <= x < q for x in b)
    assert all((x - y) % q == 0 for x, y in zip(b, lam))
    assert bar(b, q) == b


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_orbits_partition_restricted_weights(q):
    seen = []
    for t in range(q):
        O = orbit(t, q)
        assert len(O) == q
        assert all(size(l) % q == t for l in O)
        assert all(bar(wadd(l, ALPHA), q) in O for l in O)
        seen += O
    assert sorted(seen) == restricted_weights(q)


def test_dominance_order():
    assert preceq((0, 1), (1, 1))
    assert not preceq((0, 0), (1, -1))
    assert not preceq((1, -1), (0, 0))
    assert preceq((2, 3), (2, 3))


def test_window_size():
    assert len(window(3)) == 49
