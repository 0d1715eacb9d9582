"""Exact truncated power series in q over the rationals.

A :class:`TruncatedSeries` stores the coefficients of q^0 .. q^N together with
the truncation order N. Binary operations truncate to the smaller order, so the
order attached to a result always says how far it is actually known.

Coefficients are :class:`fractions.Fraction`; nothing here ever rounds.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from .errors import (
    InsufficientOrder,
    InvalidArgument,
    InvalidConstantTerm,
    NoMatch,
    NotInvertible,
)

ExactRational = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed")
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise InvalidArgument("order must be nonnegative")
        coeffs = tuple(_frac(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise InvalidArgument(
                f"expected {self.order + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int | None = None) -> "TruncatedSeries":
        """Build a series from leading coefficients, zero-padding up to ``order``."""
        cs = list(coeffs)
        if order is None:
            order = max(len(cs) - 1, 0)
        cs = cs[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        return cls(order, tuple(cs))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, (0,) * (order + 1))

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([c], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.constant(1, order)

    @classmethod
    def monomial(cls, c, power: int, order: int) -> "TruncatedSeries":
        cs = [0] * (order + 1)
        if power <= order:
            cs[power] = c
        return cls(order, tuple(cs))

    # -- basic access -------------------------------------------------------
    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise InvalidArgument("cannot raise the truncation order of a series")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def as_ints(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by q^k (k >= 0), keeping the order."""
        if k < 0:
            raise InvalidArgument("use divide_by_q_power for negative shifts")
        cs = ((0,) * k + self.coeffs)[: self.order + 1]
        return TruncatedSeries(self.order, cs)

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    # -- operators ----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.order)
        return ps_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.order)
        return ps_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return ps_mul(self, other)
        c = _frac(other)
        return TruncatedSeries(self.order, tuple(c * x for x in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return ps_pow(self, e)

    def __str__(self):
        return ",".join(format_coeff(c) for c in self.coeffs)

    # -- serialization ------------------------------------------------------
    def to_dict(self) -> dict:
        return {"order": self.order,
                "coefficients": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "TruncatedSeries":
        return cls(int(d["order"]), tuple(Fraction(s) for s in d["coefficients"]))

    @classmethod
    def from_json(cls, s: str) -> "TruncatedSeries":
        return cls.from_dict(json.loads(s))


def format_coeff(c: Fraction) -> str:
    """'p' for integers, 'p/q' otherwise."""
    return str(c)


# ---------------------------------------------------------------------------
# arithmetic

def ps_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(n, tuple(a.coeffs[i] + b.coeffs[i] for i in range(n + 1)))


def ps_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        x = ac[i]
        if not x:
            continue
        for j in range(n + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(n, tuple(out))


def ps_inv(a: TruncatedSeries) -> TruncatedSeries:
    c0 = a.coeffs[0]
    if not c0:
        raise NotInvertible("constant coefficient is zero")
    n = a.order
    inv0 = 1 / c0
    out = [inv0] + [Fraction(0)] * n
    for k in range(1, n + 1):
        s = sum((a.coeffs[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
        out[k] = -s * inv0
    return TruncatedSeries(n, tuple(out))


def ps_pow(a: TruncatedSeries, e: int) -> TruncatedSeries:
    if e < 0:
        return ps_pow(ps_inv(a), -e)
    result = TruncatedSeries.one(a.order)
    base = a
    while e:
        if e & 1:
            result = ps_mul(result, base)
        e >>= 1
        if e:
            base = ps_mul(base, base)
    return result


def ps_substitute_power(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Return a(q^k), truncated at the order of ``a``."""
    if k < 1:
        raise InvalidArgument("substitution power must be >= 1")
    out = [Fraction(0)] * (a.order + 1)
    for m in range(a.order // k + 1):
        out[k * m] = a.coeffs[m]
    return TruncatedSeries(a.order, tuple(out))


def ps_exp(a: TruncatedSeries) -> TruncatedSeries:
    # g' = a' g  =>  n g_n = sum_{k=1}^n k a_k g_{n-k}
    if a.coeffs[0]:
        raise InvalidConstantTerm("exp needs constant term 0")
    n = a.order
    g = [Fraction(1)] + [Fraction(0)] * n
    for m in range(1, n + 1):
        s = Fraction(0)
        for k in range(1, m + 1):
            if a.coeffs[k]:
                s += k * a.coeffs[k] * g[m - k]
        g[m] = s / m
    return TruncatedSeries(n, tuple(g))


def ps_log(a: TruncatedSeries) -> TruncatedSeries:
    # a' = h' a  =>  m a_m = sum_{k=1}^m k h_k a_{m-k}, with a_0 = 1
    if a.coeffs[0] != 1:
        raise InvalidConstantTerm("log needs constant term 1")
    n = a.order
    h = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        s = m * a.coeffs[m]
        for k in range(1, m):
            if h[k]:
                s -= k * h[k] * a.coeffs[m - k]
        h[m] = s / m
    return TruncatedSeries(n, tuple(h))


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if n < 1:
        raise InvalidArgument("mobius is defined for n >= 1")
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def pexp(f: TruncatedSeries) -> TruncatedSeries:
    """Plethystic exponential exp(sum_{n>=1} f(q^n)/n)."""
    if f.coeffs[0]:
        raise InvalidConstantTerm("pexp needs constant term 0")
    acc = TruncatedSeries.zero(f.order)
    for n in range(1, f.order + 1):
        acc = acc + ps_substitute_power(f, n) * Fraction(1, n)
    return ps_exp(acc)


def plog(g: TruncatedSeries) -> TruncatedSeries:
    """Inverse of :func:`pexp`: sum_n mu(n)/n (log g)(q^n)."""
    if g.coeffs[0] != 1:
        raise InvalidConstantTerm("plog needs constant term 1")
    lg = ps_log(g)
    acc = TruncatedSeries.zero(g.order)
    for n in range(1, g.order + 1):
        mu = mobius(n)
        if mu:
            acc = acc + ps_substitute_power(lg, n) * Fraction(mu, n)
    return acc


# ---------------------------------------------------------------------------
# dense polynomials, lowest degree first

def _trim(p: Sequence[Fraction]) -> tuple:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def _pmul(a, b) -> tuple:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pdivmod(a, b):
    a, b = list(_trim(a)), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        s = len(a) - len(b)
        q[s] = c
        for i, y in enumerate(b):
            a[s + i] -= c * y
        a = list(_trim(a))
    return _trim(q), _trim(a)


def _pgcd(a, b) -> tuple:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return ()
    return tuple(c / a[-1] for c in a)


@dataclass(frozen=True)
class RationalFunction:
    """numerator/denominator as coefficient tuples, lowest degree first."""
    numerator: tuple
    denominator: tuple

    def __post_init__(self):
        num = _trim(_frac(c) for c in self.numerator)
        den = _trim(_frac(c) for c in self.denominator)
        if not den:
            raise InvalidArgument("zero denominator")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @property
    def num_degree(self) -> int:
        return len(self.numerator) - 1

    @property
    def den_degree(self) -> int:
        return len(self.denominator) - 1

    def reduced(self) -> "RationalFunction":
        """Lowest terms; denominator normalized to constant term 1 if possible,
        otherwise to leading coefficient 1."""
        num, den = self.numerator, self.denominator
        g = _pgcd(num, den) if num else (Fraction(1),)
        if len(g) > 1:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
        if not num:
            den = (Fraction(1),)
        scale = den[0] if den[0] else den[-1]
        return RationalFunction(tuple(c / scale for c in num),
                                tuple(c / scale for c in den))

    def expand(self, order: int) -> TruncatedSeries:
        num = TruncatedSeries.from_coeffs(self.numerator, order)
        den = TruncatedSeries.from_coeffs(self.denominator, order)
        return ps_mul(num, ps_inv(den))

    def to_dict(self) -> dict:
        fmt = lambda p: [f"{c.numerator}/{c.denominator}" for c in p]
        return {"numerator": fmt(self.numerator), "denominator": fmt(self.denominator)}

    @classmethod
    def from_dict(cls, d: dict) -> "RationalFunction":
        return cls(tuple(Fraction(s) for s in d["numerator"]),
                   tuple(Fraction(s) for s in d["denominator"]))

    def __str__(self):
        def poly(p):
            if not p:
                return "0"
            terms = []
            for i, c in enumerate(p):
                if c:
                    terms.append(str(c) if i == 0 else f"{c}*q^{i}" if i > 1 else f"{c}*q")
            return " + ".join(terms)
        return f"({poly(self.numerator)}) / ({poly(self.denominator)})"


# ---------------------------------------------------------------------------
# Pade reconstruction

def _integer_rows(rows):
    out = []
    for row in rows:
        m = lcm(*(c.denominator for c in row)) if row else 1
        out.append([int(c * m) for c in row])
    return out


def _null_vector(rows: list[list[Fraction]], ncols: int) -> list[Fraction] | None:
    """A nonzero vector in the kernel of ``rows`` when the kernel is nonzero.

    Elimination is fraction-free (integer row operations with content removal);
    the free variable of largest index is set to 1 and the rest back-substituted.
    """
    from math import gcd

    m = _integer_rows(rows)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [p * x - f * y for x, y in zip(m[i], m[r])]
                g = 0
                for x in m[i]:
                    g = gcd(g, x)
                if g > 1:
                    m[i] = [x // g for x in m[i]]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    chosen = free[-1]
    vec = [Fraction(0)] * ncols
    vec[chosen] = Fraction(1)
    for i, col in enumerate(pivots):
        vec[col] = Fraction(-m[i][chosen], m[i][col])
    return vec


def rational_reconstruct(a: TruncatedSeries, max_num_deg: int,
                         max_den_deg: int) -> RationalFunction:
    """Find p/q with deg p <= max_num_deg, deg q <= max_den_deg expanding to ``a``.

    The denominator degree is searched upward from 0, so the first solution is
    the minimal-degree one. Raises :class:`NoMatch` when nothing in the bounds
    reproduces every stored coefficient.
    """
    if max_num_deg < 0 or max_den_deg < 0:
        raise InvalidArgument("degree bounds must be nonnegative")
    N = a.order
    if max_num_deg + max_den_deg + 1 > N:
        raise InsufficientOrder(
            f"need order >= {max_num_deg + max_den_deg + 1}, series has order {N}")
    c = a.coeffs
    at = lambda i: c[i] if i >= 0 else Fraction(0)
    for d in range(max_den_deg + 1):
        rows = [[at(i - j) for j in range(d + 1)]
                for i in range(max_num_deg + 1, N + 1)]
        qv = _null_vector(rows, d + 1)
        if qv is None:
            continue
        pv = [sum((qv[j] * at(i - j) for j in range(d + 1)), Fraction(0))
              for i in range(max_num_deg + 1)]
        f = RationalFunction(tuple(pv), tuple(qv)).reduced()
        if not f.denominator[0]:
            raise NoMatch("reconstructed function has a pole at q = 0")
        if f.expand(N) != a:
            raise NoMatch("re-expansion does not reproduce the series")
        return f
    raise NoMatch(f"no rational function with degrees <= ({max_num_deg}, {max_den_deg})")


@dataclass(frozen=True)
class SymmetryReport:
    symmetric: bool
    defect_power: int | None  # k with f(1/q) = q^k f(q), or None if no such k

    def to_dict(self) -> dict:
        return {"symmetric": self.symmetric, "defect_power": self.defect_power}


def check_q_inversion_symmetry(f: RationalFunction) -> SymmetryReport:
    """Decide whether f(1/q) = q^k f(q) and report k.

    With f = N/D, f(1/q) = q^(deg D - deg N) rev(N)/rev(D), so the question is
    whether q^(deg D - deg N) rev(N) D equals q^k N rev(D) as polynomials.
    """
    num, den = f.numerator, f.denominator
    if not num:
        return SymmetryReport(True, 0)
    lhs = _pmul(tuple(reversed(num)), den)
    rhs = _pmul(num, tuple(reversed(den)))
    vl = next(i for i, x in enumerate(lhs) if x)
    vr = next(i for i, x in enumerate(rhs) if x)
    if lhs[vl:] != rhs[vr:]:
        return SymmetryReport(False, None)
    k = f.den_degree - f.num_degree + vl - vr
    return SymmetryReport(k == 0, k)
