"""The truncated rings Gamma_n of number-theoretic functions.

An element is a coefficient vector f(1), ..., f(n) of exact rationals; the
product is Dirichlet convolution with every index above n discarded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .numtheory import Monomial, lam, moebius, nth_prime


class LevelMismatchError(ValueError):
    pass


class NonUnitError(ArithmeticError):
    pass


@dataclass(frozen=True)
class TruncFn:
    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("truncation level must be positive")
        c = tuple(Fraction(x) for x in self.coeffs)
        if len(c) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(c)}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_values(cls, values: Sequence) -> TruncFn:
        return cls(len(values), tuple(values))

    @classmethod
    def zero(cls, n: int) -> TruncFn:
        return cls(n, (Fraction(0),) * n)

    def __getitem__(self, m: int) -> Fraction:
        if not 1 <= m <= self.n:
            raise IndexError(m)
        return self.coeffs[m - 1]

    def __iter__(self):
        return iter(self.coeffs)

    def support(self) -> list[int]:
        return [m for m, c in enumerate(self.coeffs, start=1) if c]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: TruncFn) -> None:
        if self.n != other.n:
            raise LevelMismatchError(f"levels differ: {self.n} vs {other.n}")

    def __add__(self, other: TruncFn) -> TruncFn:
        self._check(other)
        return TruncFn(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> TruncFn:
        return TruncFn(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other: TruncFn) -> TruncFn:
        return self + (-other)

    def scale(self, c) -> TruncFn:
        c = Fraction(c)
        return TruncFn(self.n, tuple(c * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, TruncFn):
            return convolve(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __str__(self):
        return " ".join(str(c) for c in self.coeffs)


def convolve(f: TruncFn, g: TruncFn) -> TruncFn:
    f._check(g)
    n = f.n
    out = [Fraction(0)] * (n + 1)
    fc, gc = f.coeffs, g.coeffs
    for a in range(1, n + 1):
        fa = fc[a - 1]
        if not fa:
            continue
        for b in range(1, n // a + 1):
            gb = gc[b - 1]
            if gb:
                out[a * b] += fa * gb
    return TruncFn(n, tuple(out[1:]))


def epsilon(n: int) -> TruncFn:
    return TruncFn(n, (1,) + (0,) * (n - 1))


def nu0(n: int) -> TruncFn:
    return TruncFn(n, (1,) * n)


def moebius_fn(n: int) -> TruncFn:
    return TruncFn(n, tuple(moebius(m) for m in range(1, n + 1)))


def chi(i: int, n: int) -> TruncFn:
    """Indicator of the i-th prime; the zero function when p_i > n."""
    p = nth_prime(i)
    return TruncFn(n, tuple(1 if m == p else 0 for m in range(1, n + 1)))


def monomial_element(mono: Monomial, n: int) -> TruncFn:
    """Image of a monomial in Gamma_n: the indicator of its weight."""
    w = mono.weight
    return TruncFn(n, tuple(1 if m == w else 0 for m in range(1, n + 1)))


def invert(f: TruncFn) -> TruncFn:
    """Convolution inverse, solved as a triangular system in index order."""
    f1 = f.coeffs[0]
    if not f1:
        raise NonUnitError("f(1) = 0, so f is not a unit")
    n = f.n
    g = [Fraction(0)] * (n + 1)
    # acc[m] collects f(a) g(b) over ab = m, a > 1, with g(b) already known
    acc = [Fraction(0)] * (n + 1)
    for b in range(1, n + 1):
        g[b] = 1 / f1 if b == 1 else -acc[b] / f1
        gb = g[b]
        if not gb:
            continue
        for a in range(2, n // b + 1):
            fa = f.coeffs[a - 1]
            if fa:
                acc[a * b] += fa * gb
    return TruncFn(n, tuple(g[1:]))


def truncate(f: TruncFn, level: int) -> TruncFn:
    if level > f.n:
        raise LevelMismatchError(f"cannot truncate level {f.n} to {level}")
    if level < 1:
        raise ValueError("truncation level must be positive")
    return TruncFn(level, f.coeffs[:level])


def _nonzero_support(f: TruncFn) -> list[int]:
    s = f.support()
    if not s:
        raise ValueError("the zero function has no norm or degree")
    return s


def norm_N(f: TruncFn) -> int:
    return _nonzero_support(f)[0]


def degree_D(f: TruncFn) -> int:
    return min(lam(m) for m in _nonzero_support(f))


def norm_M(f: TruncFn) -> int:
    s = _nonzero_support(f)
    d = min(lam(m) for m in s)
    return next(m for m in s if lam(m) == d)


def is_multiplicative(f: TruncFn) -> bool:
    if f.coeffs[0] != 1:
        return False
    n = f.n
    for a in range(2, n + 1):
        for b in range(a + 1, n // a + 1):
            if gcd(a, b) == 1 and f[a * b] != f[a] * f[b]:
                return False
    return True
