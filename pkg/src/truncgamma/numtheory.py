"""Primes, factorizations and the weight bijection between monomials and N+.

Everything here is driven by one smallest-prime-factor table, built lazily
the first time it is needed and read-only afterwards.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import cached_property

import numpy as np

DEFAULT_SIEVE_LIMIT = 10**6


class Sieve:
    """Smallest-prime-factor table for 0..limit."""

    def __init__(self, limit: int = DEFAULT_SIEVE_LIMIT):
        if limit < 2:
            raise ValueError("sieve limit must be at least 2")
        self.limit = limit
        spf = np.zeros(limit + 1, dtype=np.int64)
        for p in range(2, int(limit**0.5) + 1):
            if spf[p] == 0:
                block = spf[p * p :: p]
                block[block == 0] = p
        idx = np.nonzero(spf == 0)[0]
        spf[idx] = idx
        spf[0] = spf[1] = 0
        self._spf = spf.tolist()
        self.primes = [p for p in range(2, limit + 1) if self._spf[p] == p]

    def check(self, m: int) -> None:
        if m > self.limit:
            raise ValueError(f"{m} exceeds the sieve limit {self.limit}")

    def spf(self, m: int) -> int:
        self.check(m)
        return self._spf[m]

    def prime_index(self, p: int) -> int:
        """1-based index of the prime p (p_1 = 2)."""
        i = bisect.bisect_left(self.primes, p)
        if i == len(self.primes) or self.primes[i] != p:
            raise ValueError(f"{p} is not a prime")
        return i + 1


_sieve: Sieve | None = None


def get_sieve() -> Sieve:
    global _sieve
    if _sieve is None:
        _sieve = Sieve()
    return _sieve


def set_sieve_limit(limit: int) -> None:
    """Rebuild the shared table with a new bound."""
    global _sieve
    _sieve = Sieve(limit)


def _ensure(m: int) -> Sieve:
    s = get_sieve()
    if m > s.limit:
        set_sieve_limit(max(m, 2 * s.limit))
        s = get_sieve()
    return s


def nth_prime(i: int) -> int:
    """p_i with p_1 = 2."""
    if i < 1:
        raise ValueError("prime index starts at 1")
    s = get_sieve()
    if i > len(s.primes):
        raise ValueError(f"p_{i} lies beyond the sieve limit")
    return s.primes[i - 1]


def primes_up_to(n: int) -> list[int]:
    s = _ensure(n)
    return s.primes[: bisect.bisect_right(s.primes, n)]


def prime_count(n: int) -> int:
    """r(n), the number of primes <= n."""
    s = _ensure(n)
    return bisect.bisect_right(s.primes, n)


def smallest_prime_factor(m: int) -> int:
    if m < 2:
        raise ValueError("smallest_prime_factor needs m >= 2")
    return _ensure(m).spf(m)


@dataclass(frozen=True)
class Factorization:
    """Canonical factorization as (prime_index, exponent) pairs."""

    value: int
    pairs: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def primes(self) -> list[tuple[int, int]]:
        return [(nth_prime(i), a) for i, a in self.pairs]


def _prime_powers(m: int) -> list[tuple[int, int]]:
    if m < 1:
        raise ValueError("factorize needs m >= 1")
    s = _ensure(m)
    out: list[tuple[int, int]] = []
    while m > 1:
        p = s._spf[m]
        a = 0
        while m % p == 0:
            m //= p
            a += 1
        out.append((p, a))
    return out


def factorize(m: int) -> Factorization:
    s = _ensure(m)
    pairs = tuple((s.prime_index(p), a) for p, a in _prime_powers(m))
    return Factorization(m, pairs)


def lam(m: int) -> int:
    """lambda(m): prime factors counted with multiplicity."""
    return sum(a for _, a in _prime_powers(m))


def lambda_tilde(m: int) -> int:
    """Sum of a_i * p_i over the factorization of m."""
    return sum(a * p for p, a in _prime_powers(m))


def moebius(m: int) -> int:
    pp = _prime_powers(m)
    if any(a > 1 for _, a in pp):
        return 0
    return -1 if len(pp) % 2 else 1


def largest_prime_factor(m: int) -> int:
    """Largest prime dividing m; 1 for m = 1."""
    pp = _prime_powers(m)
    return pp[-1][0] if pp else 1


@dataclass(frozen=True, order=False)
class Monomial:
    """x_1^{a_1} ... x_r^{a_r}; trailing zero exponents are trimmed."""

    exponents: tuple[int, ...] = ()

    def __post_init__(self):
        e = tuple(int(a) for a in self.exponents)
        if any(a < 0 for a in e):
            raise ValueError("negative exponent")
        while e and e[-1] == 0:
            e = e[:-1]
        object.__setattr__(self, "exponents", e)

    @classmethod
    def from_dict(cls, powers: dict[int, int]) -> Monomial:
        if not powers:
            return cls()
        e = [0] * max(powers)
        for i, a in powers.items():
            if i < 1:
                raise ValueError("variable indices start at 1")
            e[i - 1] = a
        return cls(tuple(e))

    @cached_property
    def weight(self) -> int:
        w = 1
        for i, a in enumerate(self.exponents, start=1):
            if a:
                w *= nth_prime(i) ** a
        return w

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.exponents, start=1) if a)

    @property
    def min_index(self) -> int:
        s = self.support
        if not s:
            raise ValueError("the unit monomial has empty support")
        return s[0]

    @property
    def max_index(self) -> int:
        if not self.exponents:
            raise ValueError("the unit monomial has empty support")
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def exponent(self, i: int) -> int:
        return self.exponents[i - 1] if 1 <= i <= len(self.exponents) else 0

    def __mul__(self, other: Monomial) -> Monomial:
        k = max(len(self.exponents), len(other.exponents))
        a = self.exponents + (0,) * (k - len(self.exponents))
        b = other.exponents + (0,) * (k - len(other.exponents))
        return Monomial(tuple(x + y for x, y in zip(a, b)))

    def divides(self, other: Monomial) -> bool:
        return all(a <= other.exponent(i) for i, a in enumerate(self.exponents, start=1))

    def __lt__(self, other: Monomial) -> bool:
        return self.weight < other.weight

    def __str__(self):
        if not self.exponents:
            return "1"
        parts = []
        for i, a in enumerate(self.exponents, start=1):
            if a == 1:
                parts.append(f"x{i}")
            elif a > 1:
                parts.append(f"x{i}^{a}")
        return "*".join(parts)

    def __repr__(self):
        return f"Monomial({self})"


def variable(i: int) -> Monomial:
    return Monomial.from_dict({i: 1})


def weight(mono: Monomial) -> int:
    return mono.weight


def monomial_of(m: int, r: int | None = None) -> Monomial:
    """Inverse of `weight`; r bounds the admissible variable indices."""
    f = factorize(m)
    if r is not None and f.pairs and f.pairs[-1][0] > r:
        raise ValueError(f"{m} uses p_{f.pairs[-1][0]}, beyond x_{r}")
    return Monomial.from_dict(dict(f.pairs))
