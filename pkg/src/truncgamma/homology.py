"""Brute-force Tor computations used to check the closed formulas.

* Koszul complex A_n (x) Lambda(K^r): its homology is Tor^S(A_n, K),
  S = K[x_1..x_r].
* Normalized bar complex on the augmentation ideal of A_n: its homology is
  Tor^{A_n}(K, K).

Both complexes are multigraded by the exponent vector; a multidegree is
stored as the integer with that factorization, so blocks are keyed by
plain ints and the total degree of a block is lam(key).
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt, lcm

from .numtheory import Monomial, lam, monomial_of, prime_count, primes_up_to

EXACT_MAX_N = 8
EXACT_MAX_Q = 4


class OracleBudgetExceeded(RuntimeError):
    pass


@dataclass
class ExactMatrix:
    """Sparse matrix: one {column: value} dict per row."""

    nrows: int
    ncols: int
    rows: list[dict[int, int]] = field(default_factory=list)

    @classmethod
    def from_dense(cls, dense) -> ExactMatrix:
        rows = [{j: v for j, v in enumerate(r) if v} for r in dense]
        ncols = len(dense[0]) if dense else 0
        return cls(len(dense), ncols, rows)

    def integer_rows(self) -> list[dict[int, int]]:
        out = []
        for r in self.rows:
            if not r:
                continue
            vals = [Fraction(v) for v in r.values()]
            den = lcm(*(v.denominator for v in vals))
            out.append({j: int(Fraction(v) * den) for j, v in r.items() if v})
        return out


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {j: v // g for j, v in row.items()}


def exact_rank(m: ExactMatrix) -> int:
    """Rank over Q by fraction-free elimination (R <- a*R - b*P, content removed)."""
    rows = [_primitive(r) for r in m.integer_rows() if r]
    rank = 0
    while rows:
        k = min(range(len(rows)), key=lambda i: (len(rows[i]), min(rows[i])))
        piv = rows.pop(k)
        c = min(piv)
        a = piv[c]
        nxt = []
        for r in rows:
            b = r.get(c)
            if b is None:
                nxt.append(r)
                continue
            new = {j: a * v for j, v in r.items()}
            for j, v in piv.items():
                w = new.get(j, 0) - b * v
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            if new:
                nxt.append(_primitive(new))
        rows = nxt
        rank += 1
    return rank


def modular_rank(m: ExactMatrix, p: int) -> int:
    """Rank over F_p; never exceeds the rank over Q."""
    rows = []
    for r in m.integer_rows():
        rr = {j: v % p for j, v in r.items() if v % p}
        if rr:
            rows.append(rr)
    rank = 0
    while rows:
        k = min(range(len(rows)), key=lambda i: (len(rows[i]), min(rows[i])))
        piv = rows.pop(k)
        c = min(piv)
        inv = pow(piv[c], -1, p)
        piv = {j: v * inv % p for j, v in piv.items()}
        nxt = []
        for r in rows:
            b = r.get(c)
            if b is None:
                nxt.append(r)
                continue
            new = dict(r)
            for j, v in piv.items():
                w = (new.get(j, 0) - b * v) % p
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            if new:
                nxt.append(new)
        rows = nxt
        rank += 1
    return rank


def random_prime(seed=0, lo: int = 2**30, hi: int = 2**31) -> int:
    """Deterministic (given seed) prime in [lo, hi), checked by trial division."""
    rng = random.Random(seed)
    small = primes_up_to(isqrt(hi) + 1)
    while True:
        c = rng.randrange(lo, hi) | 1
        if all(c % q for q in small if q * q <= c):
            return c


@dataclass
class GradedVectorSpaceDims:
    """dim of a bigraded space: {(homological q, internal degree j): dim}."""

    dims: dict[tuple[int, int], int] = field(default_factory=dict)
    multi: dict[tuple[int, int], int] = field(default_factory=dict, repr=False)
    label: str = ""

    def add(self, q: int, key: int, d: int) -> None:
        if d < 0:
            raise ArithmeticError(f"negative homology dimension at q={q}")
        if d:
            self.multi[(q, key)] = self.multi.get((q, key), 0) + d
            j = lam(key)
            self.dims[(q, j)] = self.dims.get((q, j), 0) + d

    def total(self, q: int) -> int:
        return sum(d for (qq, _), d in self.dims.items() if qq == q)

    def totals(self, q_max: int) -> list[int]:
        return [self.total(q) for q in range(q_max + 1)]

    def slice(self, q: int) -> dict[int, int]:
        return {j: d for (qq, j), d in sorted(self.dims.items()) if qq == q}


def basis_A(n: int) -> list[Monomial]:
    """Monomials of weight <= n, ascending weight: a K-basis of A_n."""
    if n < 1:
        raise ValueError("n must be positive")
    r = prime_count(n)
    return [monomial_of(m, r) for m in range(1, n + 1)]


def _rank(mat: ExactMatrix, prime: int | None) -> int:
    if not mat.rows:
        return 0
    return exact_rank(mat) if prime is None else modular_rank(mat, prime)


def _homology(cells: dict[int, dict[int, list]], boundary, q_max: int, prime: int | None, label: str):
    """cells[q][key] -> ordered basis; boundary(q, cell) -> [(coef, cell)]."""
    out = GradedVectorSpaceDims(label=label)
    ranks: dict[tuple[int, int], int] = {}

    def rank_of(q: int, key: int) -> int:
        if (q, key) in ranks:
            return ranks[(q, key)]
        src = cells.get(q, {}).get(key, [])
        tgt = cells.get(q - 1, {}).get(key, [])
        if not src or not tgt:
            ranks[(q, key)] = 0
            return 0
        index = {c: i for i, c in enumerate(tgt)}
        rows = []
        for cell in src:
            row: dict[int, int] = {}
            for coef, image in boundary(q, cell):
                i = index[image]
                row[i] = row.get(i, 0) + coef
            rows.append({i: v for i, v in row.items() if v})
        rk = _rank(ExactMatrix(len(src), len(tgt), rows), prime)
        ranks[(q, key)] = rk
        return rk

    for q in range(q_max + 1):
        for key in sorted(cells.get(q, {})):
            dim = len(cells[q][key])
            out.add(q, key, dim - rank_of(q, key) - rank_of(q + 1, key))
    return out


def koszul_tor_dims(n: int, q_max: int | None = None, prime: int | None = None) -> GradedVectorSpaceDims:
    """Tor^S_q(A_n, K) for q = 0..q_max from the Koszul complex."""
    if n < 2:
        raise ValueError("n must be at least 2")
    r = prime_count(n)
    if q_max is None:
        q_max = r
    if q_max > r:
        raise ValueError(f"q_max={q_max} exceeds r(n)={r}")
    primes = primes_up_to(n)
    cells: dict[int, dict[int, list]] = {}
    for q in range(min(q_max + 1, r) + 1):
        blocks = defaultdict(list)
        for subset in combinations(range(r), q):
            e = 1
            for s in subset:
                e *= primes[s]
            for w in range(1, n + 1):
                blocks[w * e].append((w, subset))
        cells[q] = dict(blocks)

    def boundary(q, cell):
        w, subset = cell
        out = []
        for k, s in enumerate(subset):
            w2 = w * primes[s]
            if w2 <= n:
                out.append(((-1) ** k, (w2, subset[:k] + subset[k + 1 :])))
        return out

    return _homology(cells, boundary, q_max, prime, "koszul")


def bar_tor_dims(n: int, q_max: int, mode: str = "exact", prime: int | None = None, seed=0) -> GradedVectorSpaceDims:
    """Tor^{A_n}_q(K, K), q = 0..q_max, from the normalized bar complex.

    mode is "exact" (rank over Q, bounded to n <= 8, q_max <= 4) or
    "modular" (rank over F_p for a random prime p > 2^30; probabilistic,
    can only undercount rank, hence only overcount homology).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if mode == "exact":
        if n > EXACT_MAX_N or q_max > EXACT_MAX_Q:
            raise OracleBudgetExceeded(
                f"exact bar complex limited to n <= {EXACT_MAX_N}, q <= {EXACT_MAX_Q} (got n={n}, q={q_max})"
            )
        prime = None
    elif mode == "modular":
        if prime is None:
            prime = random_prime(seed)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    ideal_basis = range(2, n + 1)
    cells: dict[int, dict[int, list]] = {0: {1: [()]}}
    layer = {(): 1}
    for q in range(1, q_max + 2):
        needed = set(cells[q - 1]) if q == q_max + 1 else None
        blocks = defaultdict(list)
        nxt = {}
        for tup, key in layer.items():
            for a in ideal_basis:
                k2 = key * a
                t2 = tup + (a,)
                nxt[t2] = k2
                if needed is None or k2 in needed:
                    blocks[k2].append(t2)
        cells[q] = dict(blocks)
        layer = nxt

    def boundary(q, cell):
        out = []
        for i in range(q - 1):
            prod = cell[i] * cell[i + 1]
            if prod <= n:
                out.append(((-1) ** (i + 1), cell[:i] + (prod,) + cell[i + 2 :]))
        return out

    label = "bar-exact" if prime is None else f"bar-mod-{prime}"
    return _homology(cells, boundary, q_max, prime, label)
