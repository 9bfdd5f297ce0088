"""Prime-field arithmetic, binomial coefficients and weight-lattice helpers.

Weights are plain tuples of ints.  Everything here is immutable and cheap;
the heavier algebra lives in :mod:`frobkernel.coord` and friends.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

# Weights bigger than this exponent budget are not desk-scale.
MAX_Q = 125


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p with canonical representatives in ``[0, p)``."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")

    def __call__(self, x: int) -> int:
        return x % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return pow(a, -1, self.p)

    def elements(self) -> range:
        return range(self.p)


def frobenius_modulus(p: int, r: int, limit: int | None = MAX_Q) -> int:
    """Return q = p**r, rejecting non-primes, r < 1 and (optionally) q > limit."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if r < 1:
        raise ValueError(f"Frobenius level r={r} must be >= 1")
    q = p**r
    if limit is not None and q > limit:
        raise ValueError(f"q = {p}^{r} = {q} exceeds the desk-scale limit {limit}")
    return q


def binom(n: int, k: int) -> int:
    """Generalised binomial n(n-1)...(n-k+1)/k! for any integer n, k >= 0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if n >= 0:
        return math.comb(n, k)
    # falling factorial with negative top
    num = 1
    for i in range(k):
        num *= n - i
    return num // math.factorial(k)


def binom_mod(n: int, k: int, p: int) -> int:
    return binom(n, k) % p


def lucas_binom(n: int, k: int, p: int) -> int:
    """binom(n, k) mod p via base-p digits; n, k >= 0."""
    result = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        result = result * math.comb(ni, ki) % p
        n //= p
        k //= p
    return result


def weight_binom(lam, s) -> int:
    """Product of binom(lam_i, s_i) over coordinates (exact integer)."""
    out = 1
    for a, b in zip(lam, s):
        out *= binom(a, b)
    return out


# -- weights -----------------------------------------------------------------

def bar(lam, q: int) -> tuple[int, ...]:
    """Coordinatewise representative of lam modulo q in [0, q)."""
    if q < 2:
        raise ValueError("q must be >= 2")
    return tuple(x - q * (x // q) for x in lam)


def size(lam) -> int:
    """|lam|, the coordinate sum."""
    return sum(lam)


def unit(i: int, length: int) -> tuple[int, ...]:
    """epsilon_i (0-based index)."""
    return tuple(1 if k == i else 0 for k in range(length))


def wadd(a, b) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def wsub(a, b) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def wscale(c: int, a) -> tuple[int, ...]:
    return tuple(c * x for x in a)


ALPHA = (1, -1)


def preceq(mu, lam) -> bool:
    """The coordinatewise partial order mu <= lam."""
    return all(a <= b for a, b in zip(mu, lam))


def restricted_weights(q: int, length: int = 2) -> list[tuple[int, ...]]:
    """X^{(r)}(T): all weights with entries in [0, q), lexicographic order."""
    return list(itertools.product(range(q), repeat=length))


def is_dominant(lam, m: int, n: int) -> bool:
    even, odd = lam[:m], lam[m:m + n]
    return all(a >= b for a, b in zip(even, even[1:])) and all(
        a >= b for a, b in zip(odd, odd[1:]))


def orbit(t: int, q: int) -> list[tuple[int, int]]:
    """The orbit O_t of lam -> bar(lam + alpha) on X^{(r)}(T) for GL(1|1).

    Consists of the restricted weights with |lam| = t (mod q); returned in
    lexicographic order.
    """
    if not 0 <= t < q:
        raise ValueError(f"orbit index t={t} out of range [0, {q})")
    return [lam for lam in restricted_weights(q, 2) if (lam[0] + lam[1]) % q == t]


def alpha_step(lam, q: int) -> tuple[int, int]:
    return bar(wadd(lam, ALPHA), q)


def window(w: int, length: int = 2) -> list[tuple[int, ...]]:
    """All weights with |lam_i| <= w, lexicographic."""
    return list(itertools.product(range(-w, w + 1), repeat=length))
