"""Hilbert series of A_n, Poincare series of I_n over the polynomial ring,
and the Poincare-Betti series of K over A_n.

x_i carries bidegree (1, p_i) for the Hilbert series.  For the Poincare
series u records the internal degree with every x_i of degree 1; each
homological step of a generator with largest (here: smallest) index i
contributes a factor (1 + t*u).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .exactalg import ONE, T, U, BiPoly, RatFn, divide_by_one_plus, ratfn_canonicalize
from .ideal import min_gens
from .numtheory import lam, lambda_tilde, prime_count, primes_up_to


@dataclass(frozen=True)
class HilbertSeries:
    n: int
    poly: BiPoly

    def by_degree(self) -> list[int]:
        """d_i: how many w <= n have lambda(w) = i."""
        return self.poly.specialize_u(1).t_coeffs()

    def by_weight_degree(self) -> list[int]:
        """e_j: how many w <= n have lambda_tilde(w) = j."""
        p = self.poly.specialize_t(1)
        return [p.coeff(0, j) for j in range(p.degree_u() + 1)]


def hilbert_bigraded(n: int) -> HilbertSeries:
    if n < 1:
        raise ValueError("n must be positive")
    c: dict[tuple[int, int], int] = {}
    for m in range(1, n + 1):
        k = (lam(m), lambda_tilde(m))
        c[k] = c.get(k, 0) + 1
    return HilbertSeries(n, BiPoly(c))


def ek_poincare_ideal(n: int) -> BiPoly:
    """sum_i C_{n,1+r-i} (1+t)^(i-1)."""
    table = min_gens(n)
    r = table.r
    total = BiPoly()
    for i in range(1, r + 1):
        total = total + table.count(1 + r - i) * (ONE + T) ** (i - 1)
    return total


def ek_poincare_ideal_graded(n: int) -> BiPoly:
    """sum_i (1+tu)^(i-1) sum_d C_{n,1+r-i,d} u^d."""
    table = min_gens(n)
    r = table.r
    tu = ONE + T * U
    total = BiPoly()
    for i in range(1, r + 1):
        v = 1 + r - i
        gens_poly = BiPoly({(0, d): c for (vv, d), c in table.graded.items() if vv == v})
        total = total + tu ** (i - 1) * gens_poly
    return total


def betti_numbers_ideal(n: int) -> list[int]:
    """beta_q(I_n) = sum_i C_{n,1+r-i} binom(i-1, q), q = 0..r-1."""
    table = min_gens(n)
    r = table.r
    return [sum(table.count(1 + r - i) * comb(i - 1, q) for i in range(1, r + 1)) for q in range(r)]


def golod_poincare(n: int) -> RatFn:
    r = prime_count(n)
    return ratfn_canonicalize((ONE + T) ** r, ONE - T * T * ek_poincare_ideal(n))


def golod_poincare_graded(n: int) -> RatFn:
    r = prime_count(n)
    return ratfn_canonicalize((ONE + T * U) ** r, ONE - T * T * ek_poincare_ideal_graded(n))


def odd_primes_with_square_below(n: int) -> int:
    return sum(1 for p in primes_up_to(n) if p > 2 and p * p <= n)


@dataclass
class ConjectureReport:
    n: int
    l1: int | None
    l2: int
    h: list[int]
    q_at_minus_one: int
    flags: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.flags.values())

    def failures(self) -> list[str]:
        return [k for k, ok in self.flags.items() if not ok]


def _power_of_one_plus_t(p: BiPoly) -> int | None:
    """k with p == (1+t)^k, or None."""
    k = 0
    while p != ONE:
        if p.degree_t() < 1:
            return None
        q = divide_by_one_plus(p, 0)
        if q is None:
            return None
        p, k = q, k + 1
    return k


def check_conjecture(n: int) -> ConjectureReport:
    """Evaluate each clause on the canonical series; q_n = -(denominator)."""
    f = golod_poincare(n)
    q = -f.den
    h = q.t_coeffs()
    l1 = _power_of_one_plus_t(f.num)
    l2 = len(h) - 1
    q_m1 = sum(c * (-1) ** i for i, c in enumerate(h))
    r = prime_count(n)
    expected_l1 = odd_primes_with_square_below(n)
    c_n1 = min_gens(n).count(1)
    flags = {
        "q(-1) != 0": q_m1 != 0,
        "l1 = #odd p, p^2 <= n": l1 is not None and l1 == expected_l1,
        "l2 = l1 + 1": l1 is not None and l2 == l1 + 1,
        "h0 = -1": h[0] == -1,
        "h1 = r - l1": l1 is not None and len(h) > 1 and h[1] == r - l1,
        "h_l2 = C_n1 = ceil(n/2)": h[l2] == c_n1 == -(-n // 2),
    }
    return ConjectureReport(n, l1, l2, h, q_m1, flags)
