"""Verification suites behind `truncgamma verify`.

Each suite yields Check records; a suite passes when every check does.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import reference
from .exactalg import format_canonical, series_expand
from .gamma import (
    TruncFn,
    convolve,
    epsilon,
    invert,
    moebius_fn,
    norm_N,
    nu0,
    truncate,
)
from .homology import bar_tor_dims, koszul_tor_dims, random_prime
from .ideal import is_strongly_stable_reversed, min_gens, min_gens_brute
from .numtheory import get_sieve, prime_count
from .series import (
    betti_numbers_ideal,
    ek_poincare_ideal,
    ek_poincare_ideal_graded,
    golod_poincare,
    golod_poincare_graded,
    hilbert_bigraded,
)

SUITES = ("figures", "oracles", "theorems", "gamma")


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f"  [{self.detail}]" if self.detail else "")


def _timed(name, fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    return Check(name, bool(ok), detail, time.perf_counter() - t0)


# -- figures ---------------------------------------------------------------


def counts_row(n: int) -> list[int]:
    t = min_gens(n)
    return [n, t.total, *t.by_min]


def check_counts_table(nmax: int = 30) -> Check:
    def run():
        ref = reference.counts()
        bad = [n for n in range(2, min(nmax, 30) + 1) if counts_row(n)[1:] != ref[n]]
        return not bad, f"n=2..{min(nmax, 30)}" + (f", mismatches at {bad}" if bad else "")

    return _timed("counts C_n, C_n_i", run)


def check_graded_table(nmax: int = 30) -> Check:
    def run():
        ref = reference.graded_counts()
        bad = []
        for n in range(2, min(nmax, 30) + 1):
            t = min_gens(n)
            if [t.graded_list(v) for v in range(1, t.r + 1)] != ref[n]:
                bad.append(n)
        return not bad, f"n=2..{min(nmax, 30)}" + (f", mismatches at {bad}" if bad else "")

    return _timed("graded counts C_n_i_d", run)


def check_poincare_table(nmax: int = 25) -> list[Check]:
    ref = reference.poincare()
    top = min(nmax, 25)

    def plain():
        bad = [n for n in range(2, top + 1) if format_canonical(golod_poincare(n)) != ref[n][1]]
        return not bad, f"n=2..{top}" + (f", mismatches at {bad}" if bad else "")

    def graded():
        ns = [n for n in range(2, top + 1) if ref[n][0] is not None]
        bad = [n for n in ns if format_canonical(golod_poincare_graded(n)) != ref[n][0]]
        return not bad, f"n={ns[0]}..{ns[-1]}" + (f", mismatches at {bad}" if bad else "")

    def unprinted():
        # rows without a published graded entry: check against u = 1
        ns = [n for n in range(2, top + 1) if ref[n][0] is None]
        bad = [n for n in ns if golod_poincare_graded(n).specialize_u(1) != golod_poincare(n)]
        return not bad, f"n in {ns}, u=1 specialization"

    return [
        _timed("poincare non-graded", plain),
        _timed("poincare graded", graded),
        _timed("poincare graded (unpublished rows)", unprinted),
    ]


def suite_figures(nmax: int = 30, **_) -> list[Check]:
    return [check_counts_table(nmax), check_graded_table(nmax), *check_poincare_table(nmax)]


# -- oracles ---------------------------------------------------------------


def koszul_checks(nmax: int = 12, graded_nmax: int = 9) -> list[Check]:
    out = []
    for n in range(2, nmax + 1):
        r = prime_count(n)

        def run(n=n, r=r):
            dims = koszul_tor_dims(n, r)
            betti = betti_numbers_ideal(n)
            ok = dims.totals(r)[1:] == betti and dims.total(0) == 1
            detail = f"Tor_1..{r}={dims.totals(r)[1:]} beta={betti}"
            if n <= graded_nmax:
                p = ek_poincare_ideal_graded(n)
                slices = {(q + 1, j): c for (q, j), c in p.coeffs.items()}
                got = {k: v for k, v in dims.dims.items() if k[0] >= 1}
                ok = ok and got == slices
                detail += ", graded slices compared"
            return ok, detail

        out.append(_timed(f"koszul n={n} q<={r}", run))
    return out


def _bar_expected(n: int, q_max: int):
    plain = series_expand(golod_poincare(n), q_max)
    graded = series_expand(golod_poincare_graded(n), q_max)
    return plain, graded


def bar_checks(ns, q_max: int, mode: str, seed=0) -> list[Check]:
    out = []
    prime = random_prime(seed) if mode == "modular" else None
    for n in ns:

        def run(n=n):
            dims = bar_tor_dims(n, q_max, mode=mode, prime=prime)
            plain, graded = _bar_expected(n, q_max)
            got = dims.totals(q_max)
            ok = got == plain
            for q in range(q_max + 1):
                want = {j: c for (_, j), c in graded[q].coeffs.items()}
                ok = ok and dims.slice(q) == want
            tag = "exact" if prime is None else f"mod p={prime} (probabilistic)"
            return ok, f"{tag}: Tor={got} series={plain}"

        out.append(_timed(f"bar n={n} q<={q_max}", run))
    return out


def suite_oracles(nmax: int = 12, qmax: int = 4, modular: bool = False, seed=0, **_) -> list[Check]:
    checks = koszul_checks(nmax=nmax, graded_nmax=min(nmax, 9))
    checks += bar_checks(range(2, min(nmax, 6) + 1), qmax, "exact")
    if modular:
        checks += bar_checks(range(7, min(max(nmax, 10), 10) + 1), qmax, "modular", seed=seed)
    return checks


# -- theorems --------------------------------------------------------------


def _scan(nmax: int, pred) -> tuple[bool, str]:
    bad = [n for n in range(2, nmax + 1) if not pred(n)]
    return not bad, f"n=2..{nmax}" + (f", fails at {bad[:10]}" if bad else "")


def tail_start(nmax: int, v: int, pred) -> int:
    """Smallest N with pred(n, v) true for every n in N..nmax."""
    start = nmax + 1
    for n in range(nmax, 1, -1):
        if not pred(n, v):
            break
        start = n
    return start


def suite_theorems(nmax: int = 500, **_) -> list[Check]:
    tables = {n: min_gens(n) for n in range(2, nmax + 1)}
    checks = []

    def gens_oracle():
        return _scan(nmax, lambda n: tables[n].as_set() == min_gens_brute(n).as_set())

    checks.append(_timed("generators: integer scan == brute force", gens_oracle))
    checks.append(_timed("C_n_v = 0 for v > r", lambda: _scan(nmax, lambda n: all(
        tables[n].count(v) == 0 for v in range(tables[n].r + 1, tables[n].r + 4)))))
    checks.append(_timed("C_{n,1+r-v} >= v", lambda: _scan(nmax, lambda n: all(
        tables[n].count(1 + tables[n].r - v) >= v for v in range(1, tables[n].r + 1)))))
    checks.append(_timed("C_n >= binom(r+1, 2)", lambda: _scan(
        nmax, lambda n: tables[n].total >= comb(tables[n].r + 1, 2))))
    checks.append(_timed("n even => C_n_v = C_{n-1}_v", lambda: _scan(
        nmax, lambda n: n % 2 or n == 2 or tables[n].by_min == tables[n - 1].by_min)))
    checks.append(_timed("C_n_1 = ceil(n/2)", lambda: _scan(nmax, lambda n: tables[n].count(1) == -(-n // 2))))
    checks.append(_timed("C_n_v_d = 0 for d < 2", lambda: _scan(
        nmax, lambda n: all(d >= 2 for (_, d) in tables[n].graded))))
    spf = get_sieve()._spf
    checks.append(_timed("w(g) in (n, p_min(g) n]", lambda: _scan(nmax, lambda n: all(
        n < w <= n * spf[w] for w in tables[n].weights))))

    def lin_tail(n, v):
        t = tables[n]
        return v <= t.r and t.count(1 + t.r - v) == v

    def graded_tail(n, v):
        t = tables[n]
        if v > t.r:
            return False
        w = 1 + t.r - v
        return t.count_graded(w, 2) == v and all(d == 2 for (vv, d) in t.graded if vv == w)

    for v in (1, 2, 3):
        def tail(v=v):
            a = tail_start(nmax, v, lin_tail)
            b = tail_start(nmax, v, graded_tail)
            return a < nmax and b < nmax, f"C_{{n,1+r-{v}}} = {v} from n={a}; degree-2 only from n={b}"

        checks.append(_timed(f"eventual C_{{n,1+r-v}} = v, v={v}", tail))

    checks.append(_timed("I_n strongly stable (reversed order)", lambda: _scan(
        min(nmax, 100), is_strongly_stable_reversed)))

    def hilbert():
        def ok(n):
            h = hilbert_bigraded(n)
            d = h.by_degree()
            return h.poly.evaluate(1, 1) == n and (len(d) > 1 and d[1] == prime_count(n) or n == 1)
        bad = [n for n in range(1, nmax + 1) if not ok(n)]
        return not bad, f"n=1..{nmax}" + (f", fails at {bad[:10]}" if bad else "")

    checks.append(_timed("A_n(1,1) = n and d_1 = r(n)", hilbert))

    def betti_identity():
        def ok(n):
            p = ek_poincare_ideal(n).t_coeffs()
            return p == betti_numbers_ideal(n) and ek_poincare_ideal_graded(n).specialize_u(1) == ek_poincare_ideal(n)
        return _scan(min(nmax, 200), ok)

    checks.append(_timed("betti numbers == t-coefficients of P_I", betti_identity))
    return checks


# -- gamma -----------------------------------------------------------------


def _random_fn(rng: random.Random, n: int, unit: bool = False) -> TruncFn:
    vals = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)]
    if unit and not vals[0]:
        vals[0] = Fraction(1)
    return TruncFn(n, tuple(vals))


def suite_gamma(seed=0, trials: int = 20, **_) -> list[Check]:
    rng = random.Random(seed)
    checks = []

    def ring_laws():
        for _ in range(trials):
            n = rng.randint(1, 50)
            f, g, h = (_random_fn(rng, n) for _ in range(3))
            if convolve(f, g) != convolve(g, f):
                return False, f"commutativity fails at n={n}"
            if convolve(convolve(f, g), h) != convolve(f, convolve(g, h)):
                return False, f"associativity fails at n={n}"
            if convolve(f, g + h) != convolve(f, g) + convolve(f, h):
                return False, f"distributivity fails at n={n}"
            if convolve(epsilon(n), f) != f:
                return False, f"unit law fails at n={n}"
        return True, f"{trials} random triples, n<=50"

    def mobius():
        bad = [n for n in range(1, 201) if convolve(moebius_fn(n), nu0(n)) != epsilon(n)]
        return not bad, "n=1..200"

    def inverse_nu0():
        bad = [n for n in range(1, 201) if invert(nu0(n)) != moebius_fn(n)]
        return not bad, "n=1..200"

    def inverses():
        for _ in range(trials):
            n = rng.randint(1, 50)
            f = _random_fn(rng, n, unit=True)
            if convolve(f, invert(f)) != epsilon(n):
                return False, f"n={n}"
        return True, f"{trials} random units"

    def norm():
        count = 0
        for _ in range(trials * 5):
            n = rng.randint(2, 50)
            f, g = _random_fn(rng, n), _random_fn(rng, n)
            if f.is_zero() or g.is_zero() or norm_N(f) * norm_N(g) > n:
                continue
            count += 1
            if norm_N(convolve(f, g)) != norm_N(f) * norm_N(g):
                return False, f"n={n}"
        return True, f"{count} pairs with N(f)N(g) <= n"

    def tower():
        for n2 in range(1, 31):
            f, g = _random_fn(rng, n2), _random_fn(rng, n2)
            for n1 in range(1, n2 + 1):
                if truncate(convolve(f, g), n1) != convolve(truncate(f, n1), truncate(g, n1)):
                    return False, f"ring map fails {n2}->{n1}"
                for n0 in range(1, n1 + 1):
                    if truncate(truncate(f, n1), n0) != truncate(f, n0):
                        return False, f"coherence fails {n2}->{n1}->{n0}"
        return True, "levels <= 30"

    for name, fn in [
        ("ring laws", ring_laws),
        ("mu * nu0 = epsilon", mobius),
        ("invert(nu0) = mu", inverse_nu0),
        ("f * invert(f) = epsilon", inverses),
        ("N(fg) = N(f) N(g)", norm),
        ("truncation tower", tower),
    ]:
        checks.append(_timed(name, fn))
    return checks


def run_suite(name: str, **kw) -> list[Check]:
    fn = {
        "figures": suite_figures,
        "oracles": suite_oracles,
        "theorems": suite_theorems,
        "gamma": suite_gamma,
    }[name]
    return fn(**kw)

