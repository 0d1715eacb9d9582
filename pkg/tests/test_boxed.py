import itertools

import pytest

from mdpart.boxed import (
    BoxSpec,
    constant_profile_via_punctual,
    enumerate_boxed,
    pi_brute,
    pi_closed,
    pi_profile,
    pochhammer,
    stabilized_ratio_check,
    tilde_pi,
    tilde_pi_brute,
    tilde_pi_from_profiles,
    verify_constant_profile,
)
from mdpart.errors import InvalidArgument, NonMonotoneProfile
from mdpart.series import TruncatedSeries as S
from mdpart.staircase import oracle_counts

SMALL = [(k, l, n) for k in (1, 2, 3) for l in (1, 2, 3) for n in range(4)]


def product_brute(k, l, n, punctual=False):
    """Count arrays over all cells by itertools.product and a monotonicity test."""
    cells = [(i, j) for i in range(k) for j in range(l) if not (punctual and i == j == 0)]
    counts = [0] * (k * l * n + 1)
    for vals in itertools.product(range(n + 1), repeat=len(cells)):
        a = dict(zip(cells, vals))
        if all(a[(i, j)] <= a.get((i - 1, j), n) and a[(i, j)] <= a.get((i, j - 1), n)
               for (i, j) in cells):
            counts[sum(vals)] += 1
    while len(counts) > 1 and counts[-1] == 0 and punctual:
        counts.pop()
    return counts


def test_pochhammer():
    assert pochhammer(0, 5) == S.one(5)
    assert pochhammer(1, 3) == S.from_coeffs([1, -1], 3)
    assert pochhammer(2, 4) == S.from_coeffs([1, -1, -1, 1], 4)
    with pytest.raises(InvalidArgument):
        pochhammer(-1, 3)


def test_pi_closed_examples():
    for k, l in [(1, 1), (2, 3), (3, 2)]:
        assert pi_closed(k, l, 0) == S.one(0)
    for n in range(5):
        assert pi_closed(1, 1, n) == S(n, (1,) * (n + 1))
    # 6 order ideals of the 2x2 grid, by subset size
    grid = [(0, 0), (0, 1), (1, 0), (1, 1)]
    sizes = [0] * 5
    for bits in itertools.product((0, 1), repeat=4):
        s = {c for c, b in zip(grid, bits) if b}
        if all((i - 1, j) in s or i == 0 for i, j in s) and all((i, j - 1) in s or j == 0 for i, j in s):
            sizes[len(s)] += 1
    assert sizes == [1, 1, 2, 1, 1]
    assert pi_closed(2, 2, 1).as_ints() == sizes


def test_pi_brute_examples():
    assert pi_brute(1, 1, 1).as_ints() == [1, 1]
    assert pi_brute(2, 2, 1).as_ints() == [1, 1, 2, 1, 1]
    assert pi_brute(3, 2, 0).as_ints() == [1]


@pytest.mark.parametrize("k,l,n", SMALL)
def test_pi_closed_equals_brute(k, l, n):
    assert pi_closed(k, l, n) == pi_brute(k, l, n)


@pytest.mark.parametrize("k,l,n", [(2, 2, 2), (2, 3, 1), (3, 2, 2), (1, 3, 3)])
def test_row_enumeration_matches_product(k, l, n):
    assert pi_brute(k, l, n).as_ints() == product_brute(k, l, n)
    assert tilde_pi_brute(k, l, n).as_ints() == product_brute(k, l, n, punctual=True)


@pytest.mark.parametrize("k,l,n", SMALL)
def test_transpose_symmetry(k, l, n):
    assert pi_brute(k, l, n) == pi_brute(l, k, n)


def test_stabilization():
    plane = oracle_counts(3, 10)
    for m in range(11):
        K = m + 1
        assert pi_brute(K, K, K, order=m)[m] == plane[m]


def test_profile_examples():
    assert pi_profile(1, (3, 1)) == S.monomial(1, 4, 4)
    assert pi_profile(2, (1,)).as_ints() == [0, 1, 1]
    assert pi_profile(2, (0, 0, 0)) == S.one(0)
    with pytest.raises(NonMonotoneProfile):
        pi_profile(2, (1, 2))
    with pytest.raises(NonMonotoneProfile):
        pi_profile(2, (2, -1))


def test_profile_against_enumeration():
    # plane partitions in a k x l box whose first column is fixed
    for k, l, cap in [(2, 2, 2), (3, 2, 2), (2, 3, 2)]:
        byprof = {}
        for pp in enumerate_boxed(BoxSpec(k, l, cap)):
            prof = tuple(row[0] for row in pp)
            w = sum(map(sum, pp))
            byprof.setdefault(prof, [0] * (k * l * cap + 1))[w] += 1
        for prof, counts in byprof.items():
            assert pi_profile(l, prof, k * l * cap).as_ints() == counts


def test_verify_constant_profile_examples():
    assert verify_constant_profile(1, 1, 1)
    assert verify_constant_profile(2, 2, 1)
    for k, l in [(1, 2), (3, 3)]:
        assert verify_constant_profile(k, l, 0)


@pytest.mark.parametrize("k,l,n", [(k, l, n) for k in (1, 2, 3) for l in (1, 2, 3) for n in range(3)])
def test_constant_profile_identity(k, l, n):
    assert verify_constant_profile(k, l, n)


def test_tilde_pi_examples():
    assert tilde_pi(2, 3, 0) == S.one(0)
    for n in range(1, 5):
        assert tilde_pi(1, 1, n) == S.one(0)
    assert tilde_pi(2, 2, 1).as_ints() == [1, 2, 1, 1]
    assert tilde_pi_brute(2, 2, 1).as_ints() == [1, 2, 1, 1]
    assert tilde_pi_brute(2, 2, 1)[1] == 2
    assert tilde_pi_brute(3, 1, 0).as_ints() == [1]


@pytest.mark.parametrize("k,l,n", SMALL)
def test_tilde_pi_equals_brute(k, l, n):
    assert tilde_pi(k, l, n) == tilde_pi_brute(k, l, n)
    assert tilde_pi_from_profiles(k, l, n) == tilde_pi_brute(k, l, n)


@pytest.mark.parametrize("k,l,n", [(k, l, n) for k in (1, 2, 3) for l in (2, 3) for n in range(3)])
def test_profile_sum_chain(k, l, n):
    order = k * l * n
    assert pi_profile(l, (n,) * k, order) == constant_profile_via_punctual(k, l, n, order)


def test_stabilized_ratio_check():
    assert stabilized_ratio_check(0)
    assert stabilized_ratio_check(5)
    assert stabilized_ratio_check(12)


def test_punctual_cumulative_sums():
    plain = oracle_counts(3, 5)
    punct = tilde_pi(6, 6, 6, order=5).as_ints()
    assert punct == [1, 2, 5, 11, 24, 48]
    assert punct == list(itertools.accumulate(plain))


def test_bad_box():
    with pytest.raises(InvalidArgument):
        pi_closed(0, 2, 1)
    with pytest.raises(InvalidArgument):
        pi_brute(2, 2, -1)
