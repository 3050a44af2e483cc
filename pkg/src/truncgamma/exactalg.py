"""Integer polynomials in t and u, canonical rational functions in them,
and the text format shared by the CLI and the reference tables.

Scalars are `fractions.Fraction`; polynomial coefficients are plain ints.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

ExactRational = Fraction


class BiPoly:
    """Sparse polynomial in t and u: {(t_degree, u_degree): coefficient}."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for (i, j), v in dict(coeffs).items():
                if i < 0 or j < 0:
                    raise ValueError("negative degree")
                v = int(v)
                if v:
                    c[(int(i), int(j))] = v
        self._c = c
        self._hash = None

    @classmethod
    def const(cls, c: int) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int = 0, c: int = 1) -> BiPoly:
        return cls({(i, j): c})

    @classmethod
    def from_t_coeffs(cls, coeffs) -> BiPoly:
        return cls({(i, 0): c for i, c in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._c)

    def terms(self):
        return sorted(self._c.items())

    def coeff(self, i: int, j: int = 0) -> int:
        return self._c.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._c

    def has_u(self) -> bool:
        return any(j for _, j in self._c)

    def degree_t(self) -> int:
        return max((i for i, _ in self._c), default=-1)

    def degree_u(self) -> int:
        return max((j for _, j in self._c), default=-1)

    def t_coeffs(self) -> list[int]:
        """Coefficient list in t; only valid for polynomials free of u."""
        if self.has_u():
            raise ValueError("polynomial involves u")
        return [self.coeff(i) for i in range(self.degree_t() + 1)]

    def t_slice(self, i: int) -> BiPoly:
        """Coefficient of t^i, as a polynomial in u."""
        return BiPoly({(0, j): v for (a, j), v in self._c.items() if a == i})

    def content(self) -> int:
        g = 0
        for v in self._c.values():
            g = math.gcd(g, v)
        return g

    def __add__(self, other):
        other = _coerce(other)
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return BiPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        c: dict[tuple[int, int], int] = {}
        for (i1, j1), v1 in self._c.items():
            for (i2, j2), v2 in other._c.items():
                k = (i1 + i2, j1 + j2)
                c[k] = c.get(k, 0) + v1 * v2
        return BiPoly(c)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale_div(self, d: int) -> BiPoly:
        """Exact division of every coefficient by the integer d."""
        out = {}
        for k, v in self._c.items():
            q, rem = divmod(v, d)
            if rem:
                raise ArithmeticError(f"{v} not divisible by {d}")
            out[k] = q
        return BiPoly(out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        return f"BiPoly({format_canonical(self)!r})"

    def __str__(self):
        return format_canonical(self)

    def specialize_u(self, value=1) -> BiPoly:
        c: dict[tuple[int, int], int] = {}
        for (i, j), v in self._c.items():
            c[(i, 0)] = c.get((i, 0), 0) + v * value**j
        return BiPoly(c)

    def specialize_t(self, value=1) -> BiPoly:
        """Substitute t := value; the result is returned as a polynomial in u."""
        c: dict[tuple[int, int], int] = {}
        for (i, j), v in self._c.items():
            c[(0, j)] = c.get((0, j), 0) + v * value**i
        return BiPoly(c)

    def evaluate(self, t, u=1):
        return sum(Fraction(v) * Fraction(t) ** i * Fraction(u) ** j for (i, j), v in self._c.items())


def _coerce(x) -> BiPoly:
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, int):
        return BiPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


T = BiPoly.monomial(1, 0)
U = BiPoly.monomial(0, 1)
ONE = BiPoly.const(1)


def poly_add(p: BiPoly, q: BiPoly) -> BiPoly:
    return p + q


def poly_mul(p: BiPoly, q: BiPoly) -> BiPoly:
    return p * q


def poly_pow(p: BiPoly, e: int) -> BiPoly:
    return p**e


def specialize_u(p: BiPoly, value=1) -> BiPoly:
    return p.specialize_u(value)


def specialize_t(p: BiPoly, value=1) -> BiPoly:
    return p.specialize_t(value)


def divide_by_one_plus(p: BiPoly, u_power: int) -> BiPoly | None:
    """Quotient of p by (1 + t*u^u_power), or None if it does not divide.

    Coefficients satisfy p[a, b] = q[a, b] + q[a-1, b-u_power], so q is
    recovered in increasing t-degree.
    """
    if p.is_zero():
        return p
    q: dict[tuple[int, int], int] = {}
    for a in range(p.degree_t() + 1):
        js = {j for (i, j) in p._c if i == a} | {j + u_power for (i, j) in q if i == a - 1}
        for j in js:
            v = p.coeff(a, j) - q.get((a - 1, j - u_power), 0)
            if v:
                q[(a, j)] = v
    top = p.degree_t()
    if any(i == top for i, _ in q):
        return None
    quotient = BiPoly(q)
    if quotient * (ONE + BiPoly.monomial(1, u_power)) != p:
        return None
    return quotient


@dataclass(frozen=True)
class RatFn:
    num: BiPoly
    den: BiPoly

    @property
    def bivariate(self) -> bool:
        return self.num.has_u() or self.den.has_u()

    def specialize_u(self, value=1) -> RatFn:
        return ratfn_canonicalize(self.num.specialize_u(value), self.den.specialize_u(value))

    def __str__(self):
        return format_canonical(self)


def ratfn_canonicalize(num: BiPoly, den: BiPoly) -> RatFn:
    """Strip common (1+ut) or (1+t) powers and integer content; den(0,0) = +1."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if den.coeff(0, 0) == 0:
        raise ValueError("denominator has zero constant term")
    k = 1 if (num.has_u() or den.has_u()) else 0
    while not num.is_zero():
        qn = divide_by_one_plus(num, k)
        if qn is None:
            break
        qd = divide_by_one_plus(den, k)
        if qd is None:
            break
        num, den = qn, qd
    g = math.gcd(num.content(), den.content())
    if den.coeff(0, 0) < 0:
        g = -g
    num, den = num.scale_div(g), den.scale_div(g)
    c0 = den.coeff(0, 0)
    if c0 != 1:
        # denominators with |constant| > 1 are kept as rationals scaled by c0
        raise ValueError(f"denominator constant term {c0} cannot be normalized to +1 over the integers")
    return RatFn(num, den)


def series_expand(f: RatFn, order: int):
    """Power-series coefficients of f in t through t^order.

    Returns ints for a function free of u, otherwise one polynomial in u
    (a BiPoly with t-degree 0) per power of t.
    """
    if f.den.t_slice(0) != ONE:
        raise ValueError("series expansion needs the t^0 part of the denominator to be 1")
    den_slices = [f.den.t_slice(i) for i in range(f.den.degree_t() + 1)]
    out: list[BiPoly] = []
    for q in range(order + 1):
        c = f.num.t_slice(q)
        for i in range(1, min(q, len(den_slices) - 1) + 1):
            if not den_slices[i].is_zero():
                c = c - den_slices[i] * out[q - i]
        out.append(c)
    if f.bivariate:
        return out
    return [c.coeff(0, 0) for c in out]


def _format_term(c: int, i: int, j: int, first: bool) -> str:
    factors = []
    if i:
        factors.append("t" if i == 1 else f"t^{i}")
    if j:
        factors.append("u" if j == 1 else f"u^{j}")
    mag = abs(c)
    if not factors:
        body = str(mag)
    elif mag == 1:
        body = "*".join(factors)
    else:
        body = "*".join([str(mag)] + factors)
    if first:
        return ("-" if c < 0 else "") + body
    return (" - " if c < 0 else " + ") + body


def format_canonical(p) -> str:
    if isinstance(p, RatFn):
        return f"({format_canonical(p.num)})/({format_canonical(p.den)})"
    if isinstance(p, int):
        p = BiPoly.const(p)
    terms = p.terms()
    if not terms:
        return "0"
    return "".join(_format_term(c, i, j, k == 0) for k, ((i, j), c) in enumerate(terms))


_TERM = re.compile(r"^(\d+)?(?:\*?(t)(?:\^(\d+))?)?(?:\*?(u)(?:\^(\d+))?)?$")


def parse_poly(text: str) -> BiPoly:
    """Inverse of format_canonical on polynomials."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[tuple[int, int], int] = {}
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = _TERM.match(body)
        if not m or not body:
            raise ValueError(f"bad term {body!r}")
        num, tv, te, uv, ue = m.groups()
        c = int(num) if num else 1
        i = (int(te) if te else 1) if tv else 0
        j = (int(ue) if ue else 1) if uv else 0
        if num is None and not tv and not uv:
            raise ValueError(f"bad term {body!r}")
        k = (i, j)
        coeffs[k] = coeffs.get(k, 0) + (-c if sign == "-" else c)
    return BiPoly(coeffs)


def parse_canonical(text: str):
    """Parse a polynomial or '(num)/(den)' rational function."""
    s = text.strip()
    m = re.fullmatch(r"\((.*)\)/\((.*)\)", s)
    if m:
        return RatFn(parse_poly(m.group(1)), parse_poly(m.group(2)))
    return parse_poly(s)
