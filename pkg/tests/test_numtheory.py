import pytest
from hypothesis import given
from hypothesis import strategies as st

from truncgamma.numtheory import (
    Monomial,
    factorize,
    lam,
    lambda_tilde,
    moebius,
    monomial_of,
    prime_count,
    primes_up_to,
    smallest_prime_factor,
    weight,
)


def trial_division_primes(n):
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, int(p**0.5) + 1))]


def test_primes_up_to():
    assert primes_up_to(1) == []
    assert primes_up_to(10) == [2, 3, 5, 7]
    ps = primes_up_to(30)
    assert ps == trial_division_primes(30)
    assert len(ps) == 10 and ps[-1] == 29


@pytest.mark.parametrize("n, r", [(1, 0), (5, 3), (25, len(trial_division_primes(25)))])
def test_prime_count(n, r):
    assert prime_count(n) == r


def test_prime_count_25_is_nine():
    assert len(trial_division_primes(25)) == 9
    assert prime_count(25) == 9


def test_prime_count_steps():
    primes = set(trial_division_primes(2000))
    for n in range(2, 2000):
        step = prime_count(n) - prime_count(n - 1)
        assert step == (1 if n in primes else 0)


def test_factorize():
    assert factorize(1).pairs == ()
    assert factorize(12).pairs == ((1, 2), (2, 1))
    assert factorize(30).pairs == ((1, 1), (2, 1), (3, 1))


@given(st.integers(min_value=1, max_value=10**5))
def test_factorization_invariants(m):
    f = factorize(m)
    idx = [i for i, _ in f.pairs]
    assert idx == sorted(set(idx))
    assert all(a > 0 for _, a in f.pairs)
    prod = 1
    for p, a in f.primes():
        prod *= p**a
    assert prod == m


def test_lambda_values():
    assert [lam(1), lam(12), lam(30)] == [0, 3, 3]
    assert [lambda_tilde(1), lambda_tilde(12), lambda_tilde(8)] == [0, 7, 6]


def test_moebius_values():
    assert [moebius(1), moebius(4), moebius(6)] == [1, 0, 1]


def test_complete_additivity():
    for a in range(1, 101):
        for b in range(1, 101):
            assert lam(a * b) == lam(a) + lam(b)
            assert lambda_tilde(a * b) == lambda_tilde(a) + lambda_tilde(b)


def test_moebius_divisor_sum():
    for m in range(1, 1001):
        s = sum(moebius(d) for d in range(1, m + 1) if m % d == 0)
        assert s == (1 if m == 1 else 0)


def test_smallest_prime_factor():
    assert [smallest_prime_factor(m) for m in (2, 15, 49)] == [2, 3, 7]
    with pytest.raises(ValueError):
        smallest_prime_factor(1)


def test_weight_examples():
    m = Monomial((2, 0, 1))
    assert weight(m) == 20
    assert monomial_of(20, 3) == m
    assert weight(Monomial()) == 1
    assert str(m) == "x1^2*x3"


def test_monomial_of_rejects_large_prime():
    with pytest.raises(ValueError):
        monomial_of(7, 3)


def test_weight_roundtrip():
    for m in range(1, 10**4 + 1):
        assert weight(monomial_of(m, prime_count(m))) == m


def test_monomial_support():
    m = Monomial((0, 3, 0, 1, 0, 0))
    assert m.exponents == (0, 3, 0, 1)
    assert m.support == (2, 4)
    assert (m.min_index, m.max_index, m.degree) == (2, 4, 4)
    assert Monomial((0, 1)).divides(m) and not Monomial((1,)).divides(m)
