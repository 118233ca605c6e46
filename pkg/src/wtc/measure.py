"""Exact measures on the real line: point atoms plus piecewise-constant densities.

All data is stored as `fractions.Fraction`, so interval masses, restrictions
and moments are computed without rounding.  Measures are immutable after
construction and canonicalized (sorted, merged, zero parts dropped), which
makes equality structural and every operation safe to share across workers.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import OverlappingStepsError, ZeroMassError

RatLike = Union[Fraction, int, str]


def rat(x: RatLike) -> Fraction:
    """Coerce ints, strings ('3/2', '0.25') and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        # Floats are accepted but converted exactly (they are binary rationals).
        return Fraction(x)
    return Fraction(x)


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval [lo, hi] with lo < hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", rat(self.lo))
        object.__setattr__(self, "hi", rat(self.hi))
        if not self.lo < self.hi:
            raise ValueError(f"degenerate interval [{self.lo}, {self.hi}]")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains_point(self, x: RatLike) -> bool:
        x = rat(x)
        return self.lo <= x <= self.hi

    def contains(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersection(self, other: "Interval") -> "Interval | None":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo < hi:
            return Interval(lo, hi)
        return None

    def dilate(self, factor: RatLike) -> "Interval":
        """Concentric dilation factor*I."""
        factor = rat(factor)
        half = self.length * factor / 2
        c = self.midpoint
        return Interval(c - half, c + half)

    def translate(self, dx: RatLike) -> "Interval":
        dx = rat(dx)
        return Interval(self.lo + dx, self.hi + dx)

    def dist(self, x: RatLike) -> Fraction:
        """Distance from a point to the interval (0 inside)."""
        x = rat(x)
        if x < self.lo:
            return self.lo - x
        if x > self.hi:
            return x - self.hi
        return Fraction(0)

    def __str__(self):
        return f"[{self.lo},{self.hi}]"


@dataclass(frozen=True, slots=True)
class Atom:
    """Point mass at x."""

    x: Fraction
    mass: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", rat(self.x))
        object.__setattr__(self, "mass", rat(self.mass))
        if self.mass < 0:
            raise ValueError(f"negative atom mass {self.mass}")


@dataclass(frozen=True, slots=True)
class StepPiece:
    """Constant density on a support interval."""

    support: Interval
    density: Fraction

    def __post_init__(self):
        object.__setattr__(self, "density", rat(self.density))
        if self.density < 0:
            raise ValueError(f"negative density {self.density}")

    @property
    def mass(self) -> Fraction:
        return self.density * self.support.length


class Measure:
    """A locally finite positive measure: finitely many atoms + step pieces.

    Pieces must be disjoint up to shared endpoints.  Use ``a + b`` to
    superpose measures with overlapping supports (densities add).
    """

    __slots__ = ("atoms", "pieces", "_axs", "_acum", "_plo", "_phi", "_pcum",
                 "_floats")

    def __init__(self, atoms: Iterable[Atom] = (), pieces: Iterable[StepPiece] = ()):
        atoms = _canonical_atoms(atoms)
        pieces = _canonical_pieces(pieces)
        self.atoms: tuple[Atom, ...] = atoms
        self.pieces: tuple[StepPiece, ...] = pieces
        # Cumulative tables for O(log n) interval-mass queries.
        self._axs = [a.x for a in atoms]
        acum = [Fraction(0)]
        for a in atoms:
            acum.append(acum[-1] + a.mass)
        self._acum = acum
        self._plo = [p.support.lo for p in pieces]
        self._phi = [p.support.hi for p in pieces]
        pcum = [Fraction(0)]
        for p in pieces:
            pcum.append(pcum[-1] + p.mass)
        self._pcum = pcum
        self._floats = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "Measure":
        return cls()

    @classmethod
    def point_mass(cls, x: RatLike, mass: RatLike = 1) -> "Measure":
        return cls(atoms=[Atom(rat(x), rat(mass))])

    @classmethod
    def lebesgue(cls, interval: Interval, density: RatLike = 1) -> "Measure":
        return cls(pieces=[StepPiece(interval, rat(density))])

    @classmethod
    def from_steps(cls, steps: Sequence[tuple[RatLike, RatLike, RatLike]]) -> "Measure":
        return cls(pieces=[StepPiece(Interval(a, b), rat(d)) for a, b, d in steps])

    # -- algebra -------------------------------------------------------------

    def __add__(self, other: "Measure") -> "Measure":
        if not isinstance(other, Measure):
            return NotImplemented
        atoms = list(self.atoms) + list(other.atoms)
        pieces = _superpose(list(self.pieces) + list(other.pieces))
        return Measure(atoms, pieces)

    def scale(self, c: RatLike) -> "Measure":
        c = rat(c)
        if c < 0:
            raise ValueError("scale factor must be nonnegative")
        return Measure(
            [Atom(a.x, a.mass * c) for a in self.atoms],
            [StepPiece(p.support, p.density * c) for p in self.pieces],
        )

    def translate(self, dx: RatLike) -> "Measure":
        """Pushforward under x -> x + dx."""
        dx = rat(dx)
        return Measure(
            [Atom(a.x + dx, a.mass) for a in self.atoms],
            [StepPiece(p.support.translate(dx), p.density) for p in self.pieces],
        )

    def dilate(self, lam: RatLike) -> "Measure":
        """Pushforward under x -> lam*x (lam > 0); masses are preserved."""
        lam = rat(lam)
        if lam <= 0:
            raise ValueError("dilation factor must be positive")
        return Measure(
            [Atom(a.x * lam, a.mass) for a in self.atoms],
            [StepPiece(Interval(p.support.lo * lam, p.support.hi * lam),
                       p.density / lam) for p in self.pieces],
        )

    # -- queries -------------------------------------------------------------

    def mass(self, interval: Interval, include_hi: bool = True) -> Fraction:
        """Exact mass of [lo, hi] (closed) or [lo, hi) when include_hi=False.

        Step pieces contribute by overlap length either way; only atoms on
        the right endpoint are affected by the convention.
        """
        a, b = interval.lo, interval.hi
        i0 = bisect_left(self._axs, a)
        i1 = bisect_right(self._axs, b) if include_hi else bisect_left(self._axs, b)
        total = self._acum[i1] - self._acum[i0] if i1 > i0 else Fraction(0)
        return total + self._density_mass(a, b)

    def _density_mass(self, a: Fraction, b: Fraction) -> Fraction:
        pieces = self.pieces
        if not pieces or b <= self._plo[0] or a >= self._phi[-1]:
            return Fraction(0)
        k0 = bisect_right(self._phi, a)          # first piece with hi > a
        k1 = bisect_left(self._plo, b) - 1       # last piece with lo < b
        if k1 < k0:
            return Fraction(0)
        if k0 == k1:
            p = pieces[k0]
            lo = max(a, p.support.lo)
            hi = min(b, p.support.hi)
            return p.density * (hi - lo) if hi > lo else Fraction(0)
        total = self._pcum[k1] - self._pcum[k0 + 1]   # fully covered middles
        first = pieces[k0]
        total += first.density * (first.support.hi - max(a, first.support.lo))
        last = pieces[k1]
        total += last.density * (min(b, last.support.hi) - last.support.lo)
        return total

    def total_mass(self) -> Fraction:
        return self._acum[-1] + self._pcum[-1]

    def is_zero(self) -> bool:
        return not self.atoms and not self.pieces

    def restrict(self, interval: Interval) -> "Measure":
        """The measure 1_I * mu (closed-interval convention for atoms)."""
        i0 = bisect_left(self._axs, interval.lo)
        i1 = bisect_right(self._axs, interval.hi)
        atoms = self.atoms[i0:i1]
        pieces = []
        for p in self.pieces:
            inter = p.support.intersection(interval)
            if inter is not None:
                pieces.append(StepPiece(inter, p.density))
        return Measure(atoms, pieces)

    def complement_restrict(self, interval: Interval) -> "Measure":
        """The measure restricted to the open complement of the interval."""
        atoms = [a for a in self.atoms if not interval.contains_point(a.x)]
        pieces = []
        for p in self.pieces:
            s = p.support
            if s.hi <= interval.lo or s.lo >= interval.hi:
                pieces.append(p)
                continue
            if s.lo < interval.lo:
                pieces.append(StepPiece(Interval(s.lo, min(s.hi, interval.lo)), p.density))
            if s.hi > interval.hi:
                pieces.append(StepPiece(Interval(max(s.lo, interval.hi), s.hi), p.density))
        return Measure(atoms, pieces)

    def moments(self, interval: Interval) -> tuple[Fraction, Fraction, Fraction]:
        """(mass, mean, second moment E[x^2]) of the restriction; exact.

        Raises ZeroMassError when the restricted mass vanishes.
        """
        m = self.mass(interval)
        if m == 0:
            raise ZeroMassError(f"no mass on {interval}")
        first = Fraction(0)
        second = Fraction(0)
        i0 = bisect_left(self._axs, interval.lo)
        i1 = bisect_right(self._axs, interval.hi)
        for a in self.atoms[i0:i1]:
            first += a.mass * a.x
            second += a.mass * a.x * a.x
        for p in self.pieces:
            inter = p.support.intersection(interval)
            if inter is None:
                continue
            lo, hi = inter.lo, inter.hi
            first += p.density * (hi * hi - lo * lo) / 2
            second += p.density * (hi ** 3 - lo ** 3) / 3
        return m, first / m, second / m

    def variance(self, interval: Interval) -> Fraction:
        m, mean, second = self.moments(interval)
        return second - mean * mean

    def density_at(self, x: RatLike) -> Fraction:
        """Density of the absolutely continuous part, half-open convention."""
        x = rat(x)
        k = bisect_right(self._plo, x) - 1
        if k >= 0 and x < self._phi[k]:
            return self.pieces[k].density
        return Fraction(0)

    def support(self) -> Interval | None:
        """Smallest closed interval carrying all mass, or None if zero."""
        xs = [a.x for a in self.atoms] + [p.support.lo for p in self.pieces]
        ys = [a.x for a in self.atoms] + [p.support.hi for p in self.pieces]
        if not xs:
            return None
        lo, hi = min(xs), max(ys)
        if lo == hi:  # single atom: pad so the result is a valid interval
            return Interval(lo - 1, hi + 1)
        return Interval(lo, hi)

    def float_data(self):
        """Cached numpy views (piece lo/hi/density, atom x/mass) for fast paths."""
        if self._floats is None:
            import numpy as np

            self._floats = (
                np.array([float(p.support.lo) for p in self.pieces]),
                np.array([float(p.support.hi) for p in self.pieces]),
                np.array([float(p.density) for p in self.pieces]),
                np.array([float(a.x) for a in self.atoms]),
                np.array([float(a.mass) for a in self.atoms]),
            )
        return self._floats

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Measure) and self.atoms == other.atoms
                and self.pieces == other.pieces)

    def __hash__(self):
        return hash((self.atoms, self.pieces))

    def __repr__(self):
        return f"Measure(atoms={len(self.atoms)}, pieces={len(self.pieces)})"


def _canonical_atoms(atoms: Iterable[Atom]) -> tuple[Atom, ...]:
    merged: dict[Fraction, Fraction] = {}
    for a in atoms:
        merged[a.x] = merged.get(a.x, Fraction(0)) + a.mass
    return tuple(Atom(x, m) for x, m in sorted(merged.items()) if m > 0)


def _canonical_pieces(pieces: Iterable[StepPiece]) -> tuple[StepPiece, ...]:
    live = sorted((p for p in pieces if p.density > 0),
                  key=lambda p: (p.support.lo, p.support.hi))
    out: list[StepPiece] = []
    for p in live:
        if out and p.support.lo < out[-1].support.hi:
            raise OverlappingStepsError(
                f"pieces {out[-1].support} and {p.support} overlap")
        if (out and p.support.lo == out[-1].support.hi
                and p.density == out[-1].density):
            prev = out.pop()
            p = StepPiece(Interval(prev.support.lo, p.support.hi), p.density)
        out.append(p)
    return tuple(out)


def _superpose(pieces: list[StepPiece]) -> list[StepPiece]:
    """Sum of step densities with arbitrary overlaps, as disjoint pieces."""
    if not pieces:
        return []
    cuts = sorted({p.support.lo for p in pieces} | {p.support.hi for p in pieces})
    events = sorted(pieces, key=lambda p: p.support.lo)
    out = []
    j = 0
    active: list[StepPiece] = []
    for lo, hi in zip(cuts, cuts[1:]):
        while j < len(events) and events[j].support.lo <= lo:
            active.append(events[j])
            j += 1
        active = [p for p in active if p.support.hi > lo]
        dens = sum((p.density for p in active), Fraction(0))
        if dens > 0:
            out.append(StepPiece(Interval(lo, hi), dens))
    return out
