"""The weight ideals I_n and their minimal generators.

I_n is spanned by the monomials of weight > n in x_1..x_r, r = r(n).
Generators are handled through their weights (the weight map is a
bijection), so divisibility of monomials is divisibility of integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .numtheory import (
    Monomial,
    get_sieve,
    lam,
    largest_prime_factor,
    monomial_of,
    nth_prime,
    prime_count,
    primes_up_to,
    smallest_prime_factor,
)


def _ensure_table(top: int) -> list[int]:
    smallest_prime_factor(max(top, 2))
    return get_sieve()._spf


def _check_level(n: int) -> None:
    if n < 2:
        raise ValueError("minimal generators are defined for n >= 2")


def in_ideal(m: Monomial, n: int) -> bool:
    return m.weight > n


@dataclass(frozen=True)
class GenTable:
    """G(I_n) together with its counts by minimal index and degree."""

    n: int
    r: int
    weights: tuple[int, ...]
    by_min: tuple[int, ...] = field(repr=False)
    graded: dict[tuple[int, int], int] = field(repr=False, compare=False)

    @classmethod
    def from_weights(cls, n: int, weights) -> GenTable:
        r = prime_count(n)
        ws = tuple(sorted(set(weights)))
        sieve = get_sieve()
        by_min = [0] * r
        graded: Counter = Counter()
        for w in ws:
            v = sieve.prime_index(smallest_prime_factor(w))
            by_min[v - 1] += 1
            graded[(v, lam(w))] += 1
        return cls(n, r, ws, tuple(by_min), dict(graded))

    @cached_property
    def gens(self) -> tuple[Monomial, ...]:
        """Generators in canonical order (ascending weight)."""
        return tuple(monomial_of(w, self.r) for w in self.weights)

    @property
    def total(self) -> int:
        """C_n."""
        return len(self.weights)

    def count(self, v: int) -> int:
        """C_{n,v}; zero outside 1..r."""
        return self.by_min[v - 1] if 1 <= v <= self.r else 0

    def count_graded(self, v: int, d: int) -> int:
        """C_{n,v,d}."""
        return self.graded.get((v, d), 0)

    def graded_list(self, v: int) -> list[int]:
        """[C_{n,v,2}, C_{n,v,3}, ...] up to the last nonzero entry."""
        ds = [d for (vv, d) in self.graded if vv == v]
        if not ds:
            return []
        return [self.count_graded(v, d) for d in range(2, max(ds) + 1)]

    def as_set(self) -> frozenset[int]:
        return frozenset(self.weights)


def min_gens(n: int) -> GenTable:
    """Integer scan: x_v * x for n/p_v < x <= n with no prime factor below p_v."""
    _check_level(n)
    r = prime_count(n)
    sieve = get_sieve()
    spf = sieve._spf
    weights = []
    for v in range(1, r + 1):
        p = nth_prime(v)
        for x in range(n // p + 1, n + 1):
            # x = 1 has no prime factors at all, so it passes the filter
            if x == 1 or spf[x] >= p:
                weights.append(p * x)
    return GenTable.from_weights(n, weights)


def min_gens_brute(n: int) -> GenTable:
    """Weights y = h * p (h <= n, p <= n prime) with n < y <= n * spf(y).

    Every minimal generator g satisfies w(g)/p_j <= n for each j in its
    support, so it arises as (g / x_j) * x_j for any such j; the condition
    w(g) <= p_j * n is tightest at the smallest prime dividing w(g).
    """
    _check_level(n)
    top = n * max(primes_up_to(n))
    spf = _ensure_table(top)
    found = set()
    for p in primes_up_to(n):
        for h in range(n // p + 1, n + 1):
            y = h * p
            if y <= n * spf[y]:
                found.add(y)
    return GenTable.from_weights(n, found)


def graded_counts(n: int) -> dict[tuple[int, int], int]:
    """{(v, d): C_{n,v,d}} over the nonzero entries."""
    return dict(min_gens(n).graded)


def is_strongly_stable_reversed(n: int) -> bool:
    """Check g * x_j / x_i stays in I_n for i in supp(g), i <= j <= r."""
    _check_level(n)
    table = min_gens(n)
    primes = primes_up_to(n)
    for g in table.gens:
        w = g.weight
        for i in g.support:
            pi = primes[i - 1]
            for pj in primes[i - 1 :]:
                if w // pi * pj <= n:
                    return False
    return True


def generates_ideal(weights, n: int) -> bool:
    """Does the monomial set (given by weights) generate exactly I_n?

    Every element must lie in I_n, and every monomial of I_n with weight up
    to p_r * n must be divisible by one of them; that range contains all
    minimal generators.
    """
    ws = sorted(set(weights))
    if any(w <= n for w in ws):
        return False
    primes = primes_up_to(n)
    if not primes:
        return not ws
    for y in range(n + 1, primes[-1] * n + 1):
        if largest_prime_factor(y) > primes[-1]:
            continue
        if not any(y % w == 0 for w in ws if w <= y):
            return False
    return True
