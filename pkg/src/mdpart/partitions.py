"""r-dimensional and punctual r-dimensional partitions.

An r-dimensional partition of n is a finitely supported array of nonnegative
integers indexed by Z_{>=0}^{r-1}, weakly decreasing in every coordinate, with
total n. The punctual version drops the origin from the index set.

Counting uses a layer decomposition along the first index: the slices
i_1 = 0, 1, 2, ... are (r-1)-dimensional partitions, pointwise weakly
decreasing. A slice is stored as nested tuples ("layers"):

* depth 0: an int,
* depth d: a tuple of nonzero depth-(d-1) layers, pointwise weakly decreasing,

with trailing zeros dropped, so every layer has one canonical form. ``None``
stands for an unbounded layer. For punctual partitions the missing origin is
modelled as an entry equal to a cap that is never counted in the weight.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping

from .errors import InvalidArgument
from .series import TruncatedSeries

# bump when the counting code changes; cache entries carry this stamp
ALGORITHM_VERSION = "layer-dp-1"

MultiIndex = tuple


@dataclass(frozen=True)
class MultiPartition:
    dim: int
    punctual: bool
    entries: tuple  # sorted ((index, value), ...), values > 0
    weight: int = field(default=-1)

    def __post_init__(self):
        entries = tuple(sorted((tuple(i), int(v)) for i, v in self.entries))
        object.__setattr__(self, "entries", entries)
        if self.weight < 0:
            object.__setattr__(self, "weight", sum(v for _, v in entries))

    @classmethod
    def from_dict(cls, dim: int, entries: Mapping, punctual: bool = False,
                  weight: int | None = None) -> "MultiPartition":
        items = tuple((tuple(i), v) for i, v in entries.items() if v)
        return cls(dim, punctual, items, -1 if weight is None else weight)

    def as_dict(self) -> dict:
        return dict(self.entries)

    def __getitem__(self, index) -> int:
        return self.as_dict().get(tuple(index), 0)

    def sort_key(self):
        return self.entries


def is_valid_partition(p: MultiPartition) -> bool:
    if p.dim < 2:
        return False
    d = {}
    for idx, v in p.entries:
        if len(idx) != p.dim - 1 or any(x < 0 for x in idx) or v <= 0:
            return False
        if p.punctual and not any(idx):
            return False
        d[idx] = v
    if sum(d.values()) != p.weight:
        return False
    # checking immediate predecessors suffices: any i <= j is joined by a
    # chain of unit steps, and for punctual arrays the chain avoids the origin
    for idx, v in d.items():
        for k, x in enumerate(idx):
            if x:
                lower = idx[:k] + (x - 1,) + idx[k + 1:]
                if p.punctual and not any(lower):
                    continue
                if d.get(lower, 0) < v:
                    return False
    return True


# ---------------------------------------------------------------------------
# layer primitives

def _zero(d: int):
    return 0 if d == 0 else ()


def _is_zero(a, d: int) -> bool:
    return a is not None and (a == 0 if d == 0 else a == ())


def _meet(a, b, d: int):
    """Pointwise minimum; None is +infinity."""
    if a is None:
        return b
    if b is None:
        return a
    if d == 0:
        return a if a < b else b
    rows = []
    for x, y in zip(a, b):
        m = _meet(x, y, d - 1)
        if _is_zero(m, d - 1):
            break
        rows.append(m)
    return tuple(rows)


def _clamp(a, cap: int, d: int):
    """Replace entries above ``cap`` by ``cap``; drop rows beyond index ``cap``.

    Neither change affects which sub-layers of weight <= cap exist.
    """
    if a is None:
        return None
    if d == 0:
        return a if a < cap else cap
    return tuple(_clamp(x, cap, d - 1) for x in a[:cap])


def _rows_under(bound, i: int, upper, dr: int, remaining: int):
    b_i = None if bound is None else (bound[i] if i < len(bound) else _zero(dr))
    u = _meet(upper, b_i, dr)
    yield (), 0
    if _is_zero(u, dr):
        return
    for row, w in _layers(u, dr, remaining):
        if w == 0:
            continue
        for rest, w2 in _rows_under(bound, i + 1, row, dr, remaining - w):
            yield (row,) + rest, w + w2


def _layers(bound, d: int, maxw: int):
    """All depth-d layers below ``bound`` with weight <= maxw, as (layer, weight)."""
    if d == 0:
        hi = maxw if bound is None else min(bound, maxw)
        for v in range(hi + 1):
            yield v, v
        return
    yield from _rows_under(bound, 0, None, d - 1, maxw)


def _punctual_layers(d: int, maxw: int, cap: int):
    """Depth-d layers whose origin entry is pinned to ``cap`` (uncounted)."""
    if d == 0:
        yield cap, 0
        return
    for row0, w0 in _punctual_layers(d - 1, maxw, cap):
        for rest, w in _rows_under(None, 0, row0, d - 1, maxw - w0):
            yield (row0,) + rest, w0 + w


@lru_cache(maxsize=None)
def _count_tail(prev, w: int, d: int) -> int:
    """Chains of nonzero depth-d slices, each below its predecessor (the first
    below ``prev``), of total weight exactly w."""
    if w == 0:
        return 1
    total = 0
    for layer, wl in _layers(prev, d, w):
        if wl:
            rem = w - wl
            total += _count_tail(_clamp(layer, rem, d), rem, d)
    return total


def _first_slices(r: int, n_max: int, punctual: bool):
    d = r - 2
    if punctual:
        return list(_punctual_layers(d, n_max, n_max))
    return [(None, 0)]


def _slice_counts(args) -> list[int]:
    r, n_max, first, w0 = args
    out = [0] * (n_max + 1)
    for n in range(w0, n_max + 1):
        rem = n - w0
        out[n] = _count_tail(_clamp(first, rem, r - 2), rem, r - 2)
    return out


def _check(r, n):
    if isinstance(r, bool) or not isinstance(r, int) or isinstance(n, bool) or not isinstance(n, int):
        raise InvalidArgument("r and n must be integers")
    if r < 2:
        raise InvalidArgument(f"need r >= 2, got r = {r}")
    if n < 0:
        raise InvalidArgument(f"need n >= 0, got n = {n}")


def count_table(r: int, n_max: int, punctual: bool = False, workers: int = 1) -> list[int]:
    """[P_r(0), ..., P_r(n_max)] (or the punctual counts) by the layered DP.

    With ``workers > 1`` the choices of the first slice are farmed out to a
    process pool; partial tables are summed in submission order, so the result
    does not depend on scheduling.
    """
    _check(r, n_max)
    jobs = [(r, n_max, first, w0) for first, w0 in _first_slices(r, n_max, punctual)]
    total = [0] * (n_max + 1)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_slice_counts, jobs))
    else:
        parts = map(_slice_counts, jobs)
    for part in parts:
        for n, v in enumerate(part):
            total[n] += v
    return total


def count_partitions(r: int, n: int, workers: int = 1) -> int:
    return count_table(r, n, False, workers)[n]


def count_punctual(r: int, n: int, workers: int = 1) -> int:
    return count_table(r, n, True, workers)[n]


def partition_series(r: int, order: int, punctual: bool = False, workers: int = 1) -> TruncatedSeries:
    _check(r, order)
    return TruncatedSeries(order, tuple(count_table(r, order, punctual, workers)))


# ---------------------------------------------------------------------------
# enumeration

def _flatten(layer, d: int, prefix=()):
    if d == 0:
        yield prefix, layer
        return
    for i, row in enumerate(layer):
        yield from _flatten(row, d - 1, prefix + (i,))


def enumerate_partitions(r: int, n: int, punctual: bool = False) -> Iterator[MultiPartition]:
    """Every (punctual) r-dimensional partition of n, each exactly once.

    Yielded in lexicographic order of the sorted (index, entry) pairs. The
    whole class is materialized before sorting, which is fine at the sizes
    where enumeration is useful.
    """
    _check(r, n)
    d = r - 1
    if punctual:
        source = _punctual_layers(d, n, n)
    else:
        source = _layers(None, d, n)
    found = []
    for layer, w in source:
        if w != n:
            continue
        entries = {}
        for idx, v in _flatten(layer, d):
            if punctual and not any(idx):
                continue
            if v:
                entries[idx] = v
        found.append(MultiPartition.from_dict(r, entries, punctual))
    found.sort(key=MultiPartition.sort_key)
    yield from found
