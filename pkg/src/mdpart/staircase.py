"""Torus-fixed points as monomial ideals, enumerated by brute force.

A monomial ideal of colength n in C[z_1, ..., z_r] is determined by its
staircase: the set of exponent vectors of monomials outside the ideal. These
are exactly the downward-closed n-element subsets of Z_{>=0}^r. In the
punctual setting the ideal sits inside (z_1, ..., z_{r-1}) and the staircase
lives in the region where the first r-1 coordinates are not all zero.

The enumeration adds boxes in increasing lexicographic order. Lex order
extends the componentwise order, so every staircase has exactly one such
build sequence, and the DFS never produces duplicates.
"""
from __future__ import annotations

import bisect
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidArgument
from .partitions import MultiPartition

Box = tuple

ALGORITHM_VERSION = "lex-dfs-1"


@dataclass(frozen=True)
class StaircaseIdeal:
    dim: int
    diagram: frozenset
    punctual: bool = False

    @property
    def colength(self) -> int:
        return len(self.diagram)

    def sorted_boxes(self) -> list:
        return sorted(self.diagram)

    def is_valid(self) -> bool:
        for b in self.diagram:
            if len(b) != self.dim or min(b, default=0) < 0:
                return False
            if not _in_region(b, self.punctual):
                return False
            for lower in _lower_covers(b, self.punctual):
                if lower not in self.diagram:
                    return False
        return True

    def minimal_generators(self) -> list:
        """Exponent vectors of the minimal monomial generators of the ideal."""
        return minimal_generators(self.diagram, self.dim, self.punctual)

    def to_json_obj(self) -> list:
        return [list(b) for b in self.sorted_boxes()]


def _in_region(b: Box, punctual: bool) -> bool:
    return not punctual or any(b[:-1])


def _lower_covers(b: Box, punctual: bool):
    for j, x in enumerate(b):
        if x:
            lower = b[:j] + (x - 1,) + b[j + 1:]
            if _in_region(lower, punctual):
                yield lower


def _region_minima(r: int, punctual: bool) -> list:
    if not punctual:
        return [(0,) * r]
    return sorted(tuple(1 if k == j else 0 for k in range(r)) for j in range(r - 1))


def _check(r: int, n: int, punctual: bool):
    if not isinstance(r, int) or not isinstance(n, int):
        raise InvalidArgument("r and n must be integers")
    if r < 1 or (punctual and r < 2):
        raise InvalidArgument("need r >= 1 (r >= 2 when punctual)")
    if n < 0:
        raise InvalidArgument("need n >= 0")


def _dfs(diagram: set, path: list, frontier: list, n_max: int, punctual: bool):
    """Yield every staircase reachable from ``diagram`` by adding frontier boxes
    in increasing order, as the sorted list of boxes (including the start)."""
    yield path
    if len(path) == n_max:
        return
    for idx, b in enumerate(frontier):
        diagram.add(b)
        path.append(b)
        rest = frontier[idx + 1:]
        for j in range(len(b)):
            up = b[:j] + (b[j] + 1,) + b[j + 1:]
            if all(lc in diagram for lc in _lower_covers(up, punctual)):
                bisect.insort(rest, up)
        yield from _dfs(diagram, path, rest, n_max, punctual)
        path.pop()
        diagram.discard(b)


def _walk(r: int, n_max: int, punctual: bool) -> Iterator[list]:
    yield from _dfs(set(), [], _region_minima(r, punctual), n_max, punctual)


def enumerate_ideals(r: int, n: int, punctual: bool = False) -> Iterator[StaircaseIdeal]:
    """Every colength-n monomial ideal (punctual: inside (z_1..z_{r-1})).

    Order is the DFS order of lexicographic build sequences, which is
    deterministic.
    """
    _check(r, n, punctual)
    for path in _walk(r, n, punctual):
        if len(path) == n:
            yield StaircaseIdeal(r, frozenset(path), punctual)


# -- parallel counting -------------------------------------------------------

def _subtree_roots(r: int, n_max: int, punctual: bool, depth: int):
    """Split the DFS tree at ``depth``: returns (shallow size counts, roots)."""
    counts = Counter()
    roots = []

    def rec(diagram, path, frontier):
        counts[len(path)] += 1
        if len(path) == n_max:
            return
        if len(path) == depth:
            counts[len(path)] -= 1
            roots.append((list(path), list(frontier)))
            return
        for idx, b in enumerate(frontier):
            diagram.add(b)
            path.append(b)
            rest = frontier[idx + 1:]
            for j in range(len(b)):
                up = b[:j] + (b[j] + 1,) + b[j + 1:]
                if all(lc in diagram for lc in _lower_covers(up, punctual)):
                    bisect.insort(rest, up)
            rec(diagram, path, rest)
            path.pop()
            diagram.discard(b)

    rec(set(), [], _region_minima(r, punctual))
    return counts, roots


def _count_subtree(args) -> list:
    path, frontier, n_max, punctual = args
    tally = [0] * (n_max + 1)
    for p in _dfs(set(path), list(path), frontier, n_max, punctual):
        tally[len(p)] += 1
    return tally


def oracle_counts(r: int, n_max: int, punctual: bool = False, workers: int = 1) -> list[int]:
    """Number of staircases of each size 0..n_max."""
    _check(r, n_max, punctual)
    if workers <= 1 or n_max < 4:
        tally = [0] * (n_max + 1)
        for p in _walk(r, n_max, punctual):
            tally[len(p)] += 1
        return tally
    shallow, roots = _subtree_roots(r, n_max, punctual, depth=3)
    tally = [shallow.get(k, 0) for k in range(n_max + 1)]
    jobs = [(p, f, n_max, punctual) for p, f in roots]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(_count_subtree, jobs, chunksize=max(1, len(jobs) // (4 * workers))):
            for k, v in enumerate(part):
                tally[k] += v
    return tally


def oracle_count(r: int, n: int, punctual: bool = False, workers: int = 1) -> int:
    return oracle_counts(r, n, punctual, workers)[n]


# -- bijection with multi-dimensional partitions ----------------------------

def ideal_to_partition(ideal: StaircaseIdeal) -> MultiPartition:
    """Column heights of the staircase over the first r-1 coordinates.

    The height over (i_1..i_{r-1}) is min{i_r : z^(i, i_r) in I}, i.e. the
    number of staircase boxes in that column.
    """
    if ideal.dim < 2:
        raise InvalidArgument("partitions need r >= 2")
    heights = Counter(b[:-1] for b in ideal.diagram)
    return MultiPartition.from_dict(ideal.dim, dict(heights), punctual=ideal.punctual)


def partition_to_ideal(p: MultiPartition) -> StaircaseIdeal:
    """The ideal generated by z^i z_r^{n_i}; its staircase is the union of columns."""
    boxes = frozenset(idx + (h,) for idx, v in p.entries for h in range(v))
    return StaircaseIdeal(p.dim, boxes, p.punctual)


def minimal_generators(diagram, r: int, punctual: bool) -> list:
    diagram = set(diagram)
    candidates = set(_region_minima(r, punctual))
    for b in diagram:
        for j in range(r):
            candidates.add(b[:j] + (b[j] + 1,) + b[j + 1:])
    gens = []
    for c in candidates:
        if c in diagram:
            continue
        # minimal in the ideal: every lower cover inside the region is a standard monomial
        if all(lc in diagram for lc in _lower_covers(c, punctual)):
            gens.append(c)
    return sorted(gens)
