"""Dyadic/triadic grids, finite scan families, partitions, stopping cubes.

Every "sup over all cubes / all decompositions" in the library is estimated
from the finite candidate families defined here, so the reported values are
certified lower bounds of the true suprema.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .errors import FamilyTooLargeError
from .measure import Interval, Measure, rat


@dataclass(frozen=True, slots=True)
class GridRef:
    """Cell [index*base^level, (index+1)*base^level] of the base-2/3 grid."""

    base: int
    level: int
    index: int

    def __post_init__(self):
        if self.base not in (2, 3):
            raise ValueError("base must be 2 or 3")

    @property
    def width(self) -> Fraction:
        return Fraction(self.base) ** self.level

    def interval(self) -> Interval:
        h = self.width
        return Interval(self.index * h, (self.index + 1) * h)

    def parent(self) -> "GridRef":
        return GridRef(self.base, self.level + 1, self.index // self.base)

    def children(self) -> list["GridRef"]:
        return [GridRef(self.base, self.level - 1, self.index * self.base + j)
                for j in range(self.base)]

    @classmethod
    def containing(cls, x, base: int, level: int) -> "GridRef":
        h = Fraction(base) ** level
        return cls(base, level, math.floor(rat(x) / h))


@dataclass(frozen=True)
class ScanFamily:
    """Finite family of grid intervals (with fractional translates) in a window."""

    window: Interval
    min_level: int
    max_level: int
    base: int = 2
    shifts: int = 1
    max_candidates: int = 200_000

    def __post_init__(self):
        if self.min_level > self.max_level:
            raise ValueError("min_level must not exceed max_level")
        if self.shifts < 1:
            raise ValueError("shifts must be >= 1")

    def _level_range(self, level: int, shift: int) -> tuple[Fraction, int, int]:
        h = Fraction(self.base) ** level
        off = h * shift / self.shifts
        k0 = math.floor((self.window.lo - off) / h)
        if (k0 + 1) * h + off <= self.window.lo:
            k0 += 1
        k1 = math.ceil((self.window.hi - off) / h) - 1
        if k1 * h + off >= self.window.hi:
            k1 -= 1
        return off, k0, k1

    def count(self) -> int:
        total = 0
        for level in range(self.min_level, self.max_level + 1):
            for shift in range(self.shifts):
                _, k0, k1 = self._level_range(level, shift)
                total += max(0, k1 - k0 + 1)
        return total

    def intervals(self) -> Iterator[Interval]:
        """Candidates, exactly once each, in (level, shift, index) order."""
        if self.count() > self.max_candidates:
            raise FamilyTooLargeError(
                f"family of {self.count()} candidates exceeds cap {self.max_candidates}")
        for level in range(self.min_level, self.max_level + 1):
            h = Fraction(self.base) ** level
            for shift in range(self.shifts):
                off, k0, k1 = self._level_range(level, shift)
                for k in range(k0, k1 + 1):
                    yield Interval(k * h + off, (k + 1) * h + off)


@dataclass(frozen=True)
class Partition:
    """Disjoint half-open cover of a parent interval by ordered subintervals.

    Cells are stored as Interval values; all mass bookkeeping over a
    partition treats them as [lo, hi) so that cell masses add exactly.
    """

    parent: Interval
    cells: tuple[Interval, ...]

    def __post_init__(self):
        prev = self.parent.lo
        for c in self.cells:
            if c.lo != prev:
                raise ValueError("partition cells must tile the parent")
            prev = c.hi
        if prev != self.parent.hi:
            raise ValueError("partition cells must tile the parent")


def split_cell(cell: Interval, base: int) -> list[Interval]:
    h = cell.length / base
    return [Interval(cell.lo + j * h, cell.lo + (j + 1) * h) for j in range(base)]


def partition_count(base: int, max_depth: int) -> int:
    c = 1
    for _ in range(max_depth):
        c = 1 + c ** base
    return c


def partitions(parent: Interval, base: int = 2, max_depth: int = 2,
               cap: int = 200_000) -> Iterator[Partition]:
    """All grid-aligned recursive partitions of the parent up to max_depth."""
    if partition_count(base, max_depth) > cap:
        raise FamilyTooLargeError(
            f"{partition_count(base, max_depth)} partitions exceed cap {cap}")

    def rec(cell: Interval, depth: int) -> list[tuple[Interval, ...]]:
        out = [(cell,)]
        if depth > 0:
            kids = split_cell(cell, base)
            sub = [rec(k, depth - 1) for k in kids]
            combos = [()]
            for options in sub:
                combos = [c + o for c in combos for o in options]
            out.extend(combos)
        return out

    for cells in rec(parent, max_depth):
        yield Partition(parent, cells)


def greedy_refine(parent: Interval, evaluator: Callable[[Partition], float],
                  max_cells: int, base: int = 2) -> Partition:
    """Adversarial lower-bound search: split whichever cell raises the value.

    The returned partition's value dominates every partition visited, and the
    value is non-decreasing over refinement steps.
    """
    part = Partition(parent, (parent,))
    best = evaluator(part)
    while len(part.cells) + base - 1 <= max_cells:
        improved = None
        for idx, cell in enumerate(part.cells):
            cells = part.cells[:idx] + tuple(split_cell(cell, base)) + part.cells[idx + 1:]
            cand = Partition(parent, cells)
            v = evaluator(cand)
            if v > best:
                best, improved = v, cand
        if improved is None:
            break
        part = improved
    return part


def snap_to_dyadic(interval: Interval) -> tuple[Interval, bool]:
    """Minimal dyadic cell containing the interval.

    Intervals straddling 0 have no enclosing dyadic cell; they are snapped
    to the smallest symmetric [-2^a, 2^a], whose halves are dyadic.
    """
    lo, hi = interval.lo, interval.hi
    if lo < 0 < hi:
        a = 0
        while Fraction(2) ** a < max(-lo, hi):
            a += 1
        while Fraction(2) ** (a - 1) >= max(-lo, hi):
            a -= 1
        root = Interval(-(Fraction(2) ** a), Fraction(2) ** a)
        return root, root != interval
    level = 0
    while Fraction(2) ** level < interval.length:
        level += 1
    while Fraction(2) ** (level - 1) >= interval.length:
        level -= 1
    while True:
        h = Fraction(2) ** level
        k = math.floor(lo / h)
        if (k + 1) * h >= hi:
            root = Interval(k * h, (k + 1) * h)
            return root, root != interval
        level += 1


@dataclass
class StoppingForest:
    """Maximal dyadic cells where the running average beats K^m, per level m."""

    root: Interval
    snapped: bool
    threshold_base: Fraction
    levels: dict[int, list[tuple[Interval, Fraction]]] = field(default_factory=dict)
    truncated: list[tuple[int, Interval, Fraction]] = field(default_factory=list)
    depth_exhausted: bool = False

    def level_mass(self, m: int) -> Fraction:
        return sum((mass for _, mass in self.levels.get(m, ())), Fraction(0))

    def total(self) -> Fraction:
        return sum((self.level_mass(m) for m in self.levels), Fraction(0))


def stopping_cubes(sigma: Measure, interval: Interval, K, max_depth: int) -> StoppingForest:
    """Calderon-Zygmund selection: per threshold K^m, the maximal dyadic
    subcells of the (snapped) interval whose sigma-average exceeds K^m."""
    K = rat(K)
    if K <= 1:
        raise ValueError("threshold base K must exceed 1")
    root, snapped = snap_to_dyadic(interval)
    forest = StoppingForest(root=root, snapped=snapped, threshold_base=K)

    def cell_mass(cell: Interval) -> Fraction:
        return sigma.mass(cell, include_hi=(cell.hi == root.hi))

    total = cell_mass(root)
    if total == 0:
        return forest
    root_avg = total / root.length
    m = 0
    while K ** m < root_avg:
        m += 1

    def search(cell: Interval, depth: int, m: int, thresh: Fraction,
               found: list, is_root: bool):
        mass = cell_mass(cell)
        if mass == 0:
            return
        if not is_root and mass / cell.length > thresh:
            found.append((cell, mass))
            return
        if depth >= max_depth:
            # An interior atom makes averages blow up on descent; report the
            # truncation instead of recursing forever.
            if any(cell.lo <= a.x < cell.hi or a.x == cell.hi == root.hi
                   for a in sigma.atoms):
                forest.truncated.append((m, cell, mass))
                forest.depth_exhausted = True
            return
        mid = cell.midpoint
        search(Interval(cell.lo, mid), depth + 1, m, thresh, found, False)
        search(Interval(mid, cell.hi), depth + 1, m, thresh, found, False)

    while True:
        thresh = K ** m
        found: list[tuple[Interval, Fraction]] = []
        search(root, 0, m, thresh, found, True)
        if not found:
            break
        forest.levels[m] = found
        m += 1
    return forest


def brute_force_sup(functional: Callable[[Interval], float], window: Interval,
                    q: int, cap: int = 10_000) -> tuple[float, Interval]:
    """Exact max over every interval with endpoints on the 1/q lattice."""
    lo_ticks = math.ceil(window.lo * q)
    hi_ticks = math.floor(window.hi * q)
    n = hi_ticks - lo_ticks + 1
    if n * (n - 1) // 2 > cap:
        raise FamilyTooLargeError(
            f"{n * (n - 1) // 2} lattice intervals exceed cap {cap}")
    best = None
    witness = None
    for i in range(lo_ticks, hi_ticks):
        for j in range(i + 1, hi_ticks + 1):
            cand = Interval(Fraction(i, q), Fraction(j, q))
            v = functional(cand)
            if best is None or v > best:
                best, witness = v, cand
    return best, witness
