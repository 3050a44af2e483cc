import pytest
from hypothesis import given
from hypothesis import strategies as st

from truncgamma.exactalg import (
    ONE,
    T,
    U,
    BiPoly,
    RatFn,
    format_canonical,
    parse_canonical,
    parse_poly,
    poly_mul,
    poly_pow,
    ratfn_canonicalize,
    series_expand,
    specialize_u,
)


def test_poly_arithmetic():
    assert poly_mul(ONE + T, ONE + T) == BiPoly({(0, 0): 1, (1, 0): 2, (2, 0): 1})
    assert poly_pow(ONE + U * T, 0) == ONE
    assert poly_pow(ONE + U * T, 2) == BiPoly({(0, 0): 1, (1, 1): 2, (2, 2): 1})


def test_specialize():
    p = U * U + 2 * U * T + T * T
    assert specialize_u(p) == ONE.__class__({(2, 0): 1, (1, 0): 2, (0, 0): 1})
    assert specialize_u(BiPoly.const(5)) == BiPoly.const(5)
    assert specialize_u((ONE + U * T) ** 3) == (ONE + T) ** 3


def test_canonicalize_graded_n5():
    den = (ONE - 2 * T * U - (2 * U**2 + U**3) * T**2) * (ONE + T * U) ** 2
    f = ratfn_canonicalize((ONE + U * T) ** 3, den)
    assert f.num == ONE + T * U
    assert f.den == ONE - 2 * T * U - (2 * U**2 + U**3) * T**2


def test_canonicalize_univariate():
    f = ratfn_canonicalize((ONE + T) ** 4, (ONE - 3 * T - 5 * T * T) * (ONE + T) ** 3)
    assert format_canonical(f) == "(1 + t)/(1 - 3*t - 5*t^2)"
    assert ratfn_canonicalize(ONE, ONE) == RatFn(ONE, ONE)


def test_canonicalize_sign_and_content():
    f = ratfn_canonicalize(BiPoly.const(-2) * (ONE + T), BiPoly.const(-2) + 6 * T)
    assert f.num == ONE + T and f.den == ONE - 3 * T


def test_canonicalize_errors():
    with pytest.raises(ZeroDivisionError):
        ratfn_canonicalize(ONE, BiPoly())
    with pytest.raises(ValueError):
        ratfn_canonicalize(ONE, T)


def test_canonicalize_idempotent():
    f = ratfn_canonicalize((ONE + T * U) ** 3, (ONE + T * U) * (ONE - T * U - 3 * T * T * U**3))
    assert ratfn_canonicalize(f.num, f.den) == f


def recurrence(c0, c1, a, b, k):
    out = [c0, c1]
    while len(out) < k:
        out.append(a * out[-1] + b * out[-2])
    return out[:k]


def test_series_expand():
    assert series_expand(RatFn(ONE, ONE - 3 * T), 3) == [3**q for q in range(4)]
    f = RatFn(ONE + T, ONE - 3 * T - 5 * T * T)
    assert series_expand(f, 2) == [1, 4, 17]
    assert series_expand(f, 10) == recurrence(1, 4, 3, 5, 11)
    assert series_expand(RatFn(ONE, ONE), 4) == [1, 0, 0, 0, 0]


def test_series_expand_bivariate_reconstructs():
    f = RatFn(ONE + T * U, ONE - 2 * T * U - (2 * U**2 + U**3) * T**2)
    q = 6
    s = series_expand(f, q)
    approx = BiPoly()
    for i, c in enumerate(s):
        approx = approx + c * T**i
    diff = approx * f.den - f.num
    assert all(i > q for (i, _) in diff.coeffs)


def test_format_examples():
    assert format_canonical(BiPoly({(0, 0): 1, (1, 0): -3})) == "1 - 3*t"
    assert format_canonical(6 + 8 * T + 3 * T * T) == "6 + 8*t + 3*t^2"
    assert format_canonical(BiPoly()) == "0"
    assert format_canonical(-T * U**2 + 1) == "1 - t*u^2"


small_polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-20, 20), max_size=8
).map(BiPoly)


@given(small_polys)
def test_format_roundtrip(p):
    assert parse_poly(format_canonical(p)) == p


@given(small_polys, small_polys)
def test_ring_laws(p, q):
    assert p * q == q * p
    assert (p + q) - q == p
    assert (p + q).specialize_u() == p.specialize_u() + q.specialize_u()


def test_ratfn_roundtrip():
    f = RatFn(ONE + T, ONE - 3 * T - 5 * T * T)
    assert parse_canonical(format_canonical(f)) == f
