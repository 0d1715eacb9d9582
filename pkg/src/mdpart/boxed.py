"""Boxed plane partitions and the r = 3 ratio identity.

pi_{k,l}(n; q) is the generating function of plane partitions with at most k
rows, at most l columns and entries <= n. The punctual variant deletes the
origin cell. Everything here is checked two ways: closed products of
q-Pochhammer symbols against direct enumeration, and the column recursion for
fixed first columns (``pi_profile``) against both.

Infinite limits (k, l, n -> oo) are replaced by stabilization: the q^m
coefficient of pi_{k,l}(n; q) no longer changes once k, l, n > m.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import DivisibilityFailure, InvalidArgument, NonMonotoneProfile
from .series import TruncatedSeries, ps_inv, ps_mul


@dataclass(frozen=True)
class BoxSpec:
    rows: int
    cols: int
    cap: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1 or self.cap < 0:
            raise InvalidArgument(f"bad box {self.rows}x{self.cols} with cap {self.cap}")

    @property
    def max_weight(self) -> int:
        return self.rows * self.cols * self.cap


def pochhammer(i: int, order: int) -> TruncatedSeries:
    """(q)_i = (1-q)(1-q^2)...(1-q^i); (q)_0 = 1."""
    if i < 0:
        raise InvalidArgument("pochhammer index must be >= 0")
    return _pochhammer(i, order)


@lru_cache(maxsize=None)
def _pochhammer(i: int, order: int) -> TruncatedSeries:
    if i == 0:
        return TruncatedSeries.one(order)
    factor = TruncatedSeries.one(order) - TruncatedSeries.monomial(1, i, order)
    return ps_mul(_pochhammer(i - 1, order), factor)


def _poch_prod(indices, order: int) -> TruncatedSeries:
    out = TruncatedSeries.one(order)
    for i in indices:
        out = ps_mul(out, _pochhammer(i, order))
    return out


def _check_polynomial_counts(s: TruncatedSeries, what: str):
    for c in s.coeffs:
        if c.denominator != 1 or c < 0:
            raise ArithmeticError(f"{what}: coefficient {c} is not a nonnegative integer")


def pi_closed(k: int, l: int, n: int, order: int | None = None) -> TruncatedSeries:
    """pi_{k,l}(n; q) from the product of q-Pochhammer quotients.

    The quotient is taken as a truncated power series division; the result is
    checked to be a series of nonnegative integers.
    """
    spec = BoxSpec(k, l, n)
    if order is None:
        order = spec.max_weight
    num = ps_mul(_poch_prod(range(1, k), order),
                 _poch_prod(range(n + l, n + l + k), order))
    den = ps_mul(_poch_prod(range(l, l + k), order),
                 _poch_prod(range(n, n + k), order))
    out = ps_mul(num, ps_inv(den))
    _check_polynomial_counts(out, "pi_closed")
    return out


def _decreasing_rows(bounds: Sequence[int], max_weight: int) -> Iterator[tuple]:
    """Weakly decreasing tuples with row[j] <= bounds[j] and sum <= max_weight."""
    def rec(j, prev, budget):
        if j == len(bounds):
            yield ()
            return
        hi = min(prev, bounds[j], budget)
        for v in range(hi, -1, -1):
            for rest in rec(j + 1, v, budget - v):
                yield (v,) + rest
    yield from rec(0, max_weight, max_weight)


def enumerate_boxed(spec: BoxSpec, punctual: bool = False,
                    max_weight: int | None = None) -> Iterator[tuple]:
    """Plane partitions in the box, as tuples of rows.

    With ``punctual`` the origin cell is absent: row 0 covers columns 1..l-1,
    and cell (1, 0) is bounded only by the cap.
    """
    if max_weight is None:
        max_weight = spec.max_weight

    def rec(i, above, budget):
        if i == spec.rows:
            yield ()
            return
        if i == 0:
            width = spec.cols - 1 if punctual else spec.cols
            bounds = [spec.cap] * width
        elif i == 1 and punctual:
            bounds = [spec.cap] + list(above)
        else:
            bounds = list(above)
        for row in _decreasing_rows(bounds, budget):
            for rest in rec(i + 1, row, budget - sum(row)):
                yield (row,) + rest

    yield from rec(0, (), max_weight)


def _brute_series(spec: BoxSpec, punctual: bool, order: int) -> TruncatedSeries:
    counts = [0] * (order + 1)
    for pp in enumerate_boxed(spec, punctual, order):
        counts[sum(map(sum, pp))] += 1
    return TruncatedSeries(order, tuple(counts))


def pi_brute(k: int, l: int, n: int, order: int | None = None) -> TruncatedSeries:
    spec = BoxSpec(k, l, n)
    return _brute_series(spec, False, spec.max_weight if order is None else order)


def tilde_pi_brute(k: int, l: int, n: int, order: int | None = None) -> TruncatedSeries:
    spec = BoxSpec(k, l, n)
    if order is None:
        order = (k * l - 1) * n
    return _brute_series(spec, True, order)


def tilde_pi(k: int, l: int, n: int, order: int | None = None) -> TruncatedSeries:
    """q^-n [pi_{k,l}(n; q) - pi_{k,l}(n-1; q)] from the closed form."""
    spec = BoxSpec(k, l, n)
    if order is None:
        order = (k * l - 1) * n
    if n == 0:
        return TruncatedSeries.one(order)
    diff = pi_closed(spec.rows, spec.cols, n, order + n) - pi_closed(spec.rows, spec.cols, n - 1, order + n)
    if any(diff.coeffs[:n]):
        raise DivisibilityFailure(f"pi({k},{l},{n}) - pi({k},{l},{n - 1}) not divisible by q^{n}")
    return TruncatedSeries(order, diff.coeffs[n:])


def check_profile(profile: Sequence[int]) -> tuple:
    profile = tuple(profile)
    if any(x < 0 for x in profile) or any(a < b for a, b in zip(profile, profile[1:])):
        raise NonMonotoneProfile(f"profile {profile} is not weakly decreasing and nonnegative")
    return profile


def _nested_below(profile: tuple) -> Iterator[tuple]:
    """All weakly decreasing m with m_i <= profile_i."""
    def rec(i, prev):
        if i == len(profile):
            yield ()
            return
        for v in range(min(prev, profile[i]) + 1):
            for rest in rec(i + 1, v):
                yield (v,) + rest
    yield from rec(0, profile[0] if profile else 0)


def pi_profile(l: int, profile: Sequence[int], order: int | None = None) -> TruncatedSeries:
    """Plane partitions with at most l columns whose first column is ``profile``.

    pi_1(n) = q^(n_1+...+n_k); pi_{l+1}(n) = q^(sum n) * sum over nested m of pi_l(m).
    """
    if l < 1:
        raise InvalidArgument("need at least one column")
    profile = check_profile(profile)
    if order is None:
        order = l * sum(profile)
    return _pi_profile(l, profile, order)


@lru_cache(maxsize=None)
def _pi_profile(l: int, profile: tuple, order: int) -> TruncatedSeries:
    s = sum(profile)
    if l == 1:
        return TruncatedSeries.monomial(1, s, order)
    acc = TruncatedSeries.zero(order)
    for m in _nested_below(profile):
        acc = acc + _pi_profile(l - 1, m, order)
    return acc.shift(s)


def verify_constant_profile(k: int, l: int, n: int, order: int | None = None) -> bool:
    """pi_{l+1}(n, ..., n) == q^(kn) pi_{k,l}(n)."""
    BoxSpec(k, l, n)
    if order is None:
        order = k * n * (l + 1)
    lhs = pi_profile(l + 1, (n,) * k, order)
    rhs = pi_closed(k, l, n, order).shift(k * n)
    return lhs == rhs


def tilde_pi_from_profiles(k: int, l: int, n: int, order: int | None = None) -> TruncatedSeries:
    """q^-n times the sum of pi_l(n, m_2, ..., m_k) over m_k <= ... <= m_2 <= n.

    This is the punctual count obtained by placing n at the origin.
    """
    BoxSpec(k, l, n)
    if order is None:
        order = (k * l - 1) * n
    acc = TruncatedSeries.zero(order + n)
    for tail in _nested_below((n,) * (k - 1)):
        acc = acc + pi_profile(l, (n,) + tail, order + n)
    if any(acc.coeffs[:n]):
        raise DivisibilityFailure("profile sum not divisible by q^n")
    return TruncatedSeries(order, acc.coeffs[n:])


def constant_profile_via_punctual(k: int, l: int, n: int, order: int) -> TruncatedSeries:
    """q^(kn) * sum_{m <= n} q^m tilde_pi_{k,l-1}(m), the right side of the
    identity for pi_l(n, ..., n) (requires l >= 2)."""
    if l < 2:
        raise InvalidArgument("need l >= 2")
    acc = TruncatedSeries.zero(order)
    for m in range(n + 1):
        acc = acc + tilde_pi(k, l - 1, m, order).shift(m)
    return acc.shift(k * n)


def stabilized_ratio_check(order: int) -> bool:
    """(sum P~_3(m) q^m)(1 - q) == sum P_3(m) q^m through ``order``.

    Both sides are computed from boxed generating functions with every bound
    equal to order + 1, where coefficients up to q^order have stabilized, and
    also by the layered partition counter; all four series must agree.
    """
    from .partitions import partition_series

    if order < 0:
        raise InvalidArgument("order must be >= 0")
    K = order + 1
    plain = pi_closed(K, K, K, order)
    punct = tilde_pi(K, K, K, order)
    one_minus_q = TruncatedSeries.from_coeffs([1, -1], order)
    ok = ps_mul(punct, one_minus_q) == plain
    ok &= plain == partition_series(3, order, punctual=False)
    ok &= punct == partition_series(3, order, punctual=True)
    return ok
