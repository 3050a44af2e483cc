"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -s` to see the lines inline; they are
also collected into the terminal summary.
"""

import time

from truncgamma import reference
from truncgamma.cli import run
from truncgamma.exactalg import ONE, T, U, RatFn, format_canonical
from truncgamma.ideal import min_gens, min_gens_brute
from truncgamma.series import (
    ek_poincare_ideal,
    golod_poincare,
    golod_poincare_graded,
)
from truncgamma.verify import bar_checks, koszul_checks, suite_gamma, suite_theorems

RESULTS = []


def report(number, title, ok, detail, seconds, limit=None):
    timing = f"{seconds:.2f}s" + (f" (limit {limit:g}s)" if limit else "")
    within = limit is None or seconds < limit
    status = "PASS" if ok and within else "FAIL"
    line = f"{status}  criterion {number:>2}: {title}  [{detail}; {timing}]"
    RESULTS.append(line)
    print(line)
    assert ok, detail
    assert within, f"took {seconds:.2f}s, limit {limit}s"


def timed(fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - t0


def all_pass(checks):
    bad = [c.name for c in checks if not c.passed]
    return not bad, f"{len(checks) - len(bad)}/{len(checks)} checks" + (f", failing: {bad}" if bad else "")


def test_criterion_01_counts_table():
    def go():
        status, out = run(["counts", "--nmax", "30"])
        rows = out.splitlines()[1:]
        return status == 0 and out == reference.counts_csv(), f"{len(rows)} rows, n=2..30"

    report(1, "generator counts table", *timed(go), limit=1)


def test_criterion_02_graded_table():
    def go():
        want = reference.graded_counts()
        bad = []
        for n in range(2, 31):
            t = min_gens(n)
            if [t.graded_list(v) for v in range(1, t.r + 1)] != want[n]:
                bad.append(n)
        return not bad, "n=2..30" + (f", mismatches at {bad}" if bad else "")

    report(2, "graded counts table", *timed(go))


def test_criterion_03_worked_example():
    def go():
        gens = {str(g) for g in min_gens(5).gens}
        checks = {
            "generators": gens == {"x1^3", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"},
            "P_I": ek_poincare_ideal(5) == 6 + 8 * T + 3 * T**2,
            "P_K": golod_poincare(5) == RatFn(ONE, ONE - 3 * T),
            "graded P_K": golod_poincare_graded(5) == RatFn(ONE + T * U, ONE - 2 * T * U - (2 * U**2 + U**3) * T**2),
            "reference row": format_canonical(golod_poincare_graded(5)) == reference.poincare()[5][0],
        }
        bad = [k for k, v in checks.items() if not v]
        return not bad, "n=5 " + ("all exact" if not bad else f"mismatch: {bad}")

    report(3, "worked example n=5", *timed(go))


def test_criterion_04_poincare_table():
    def go():
        table = reference.poincare()
        bad = []
        for n in range(2, 26):
            graded_ref, plain_ref = table[n]
            plain = golod_poincare(n)
            graded = golod_poincare_graded(n)
            if format_canonical(plain) != plain_ref:
                bad.append((n, "non-graded"))
            if n <= 24 and format_canonical(graded) != graded_ref:
                bad.append((n, "graded"))
            if graded.specialize_u() != plain:
                bad.append((n, "u=1"))
        return not bad, "non-graded n=2..25, graded n=2..24, u=1 for all" + (f", mismatches {bad}" if bad else "")

    report(4, "Poincare series table", *timed(go))


def test_criterion_05_koszul():
    report(5, "Koszul oracle n<=12", *timed(lambda: all_pass(koszul_checks(nmax=12, graded_nmax=9))), limit=120)


def test_criterion_06_bar():
    def go():
        checks = bar_checks(range(2, 7), 4, "exact")
        checks += bar_checks(range(7, 11), 4, "modular", seed=0)
        return all_pass(checks)

    report(6, "bar complex oracle", *timed(go), limit=600)


def test_criterion_07_generators():
    def go():
        bad = [n for n in range(2, 501) if min_gens(n).as_set() != min_gens_brute(n).as_set()]
        return not bad, "n=2..500" + (f", mismatches at {bad[:10]}" if bad else "")

    report(7, "generator oracle", *timed(go), limit=30)


def test_criterion_08_theorems():
    report(8, "theorem suite n<=500", *timed(lambda: all_pass(suite_theorems(nmax=500))))


def test_criterion_09_gamma():
    report(9, "gamma suite", *timed(lambda: all_pass(suite_gamma(seed=0))))


def test_criterion_10_conjecture():
    def go():
        status, out = run(["conjecture", "--nmax", "60"])
        lines = out.splitlines()
        rows = {int(line.split()[0]): line for line in lines[1:-1]}
        anchored = all(rows[n].split()[4] == "ok" for n in (2, 9, 25))
        failures = int(lines[-1].rsplit(" ", 1)[1])
        ok = status == 0 and len(rows) == 59 and anchored and failures == 0
        return ok, f"{len(rows)} rows, clause failures: {failures}, n=2,9,25 " + ("ok" if anchored else "FAIL")

    report(10, "conjecture scan n<=60", *timed(go))
