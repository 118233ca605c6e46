"""Parameterized gallery of the counterexample measures.

Everything is built as exact step/atom data on a finite window; "infinite"
objects take a size parameter and the interesting behaviour is read off as a
trend across sizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import NonIntegrableError, ParamDomainError, StageOverflowError
from .functionals import maximal_indicator_integral
from .measure import Atom, Interval, Measure, StepPiece, rat


@dataclass(frozen=True)
class StageWitness:
    """Per-stage data certifying the flat-mass/small-size worst set.

    e_mass_fraction = w(E)/w(J) and e_size_fraction = |E|/|J| for the
    extremal prefix set E of the depth-i cascade cells inside J.
    """

    k: int
    n: int
    i: int
    il0: Interval
    j_interval: Interval
    e_mass_fraction: Fraction
    e_size_fraction: Fraction
    scanned: tuple[Interval, ...]


@dataclass(frozen=True)
class ConstructionOutput:
    measure: Measure
    witnesses: dict = field(default_factory=dict)


def lebesgue_on(interval: Interval, density=1) -> Measure:
    return Measure.lebesgue(interval, rat(density))


def power_weight(alpha_exp, window: Interval, resolution_level: int = 6) -> Measure:
    """Step approximation of |x|^alpha_exp by exact cell averages.

    Cells straddling 0 are split there so every average uses the closed-form
    antiderivative on one side.  Averages are computed in floating point and
    snapped to (binary) rationals, so the output is deterministic.
    """
    a = float(alpha_exp)
    if a <= -1:
        raise NonIntegrableError(f"|x|^{alpha_exp} is not locally integrable")
    n = 2 ** resolution_level
    h = window.length / n
    pieces = []
    for j in range(n):
        lo = window.lo + j * h
        hi = lo + h
        avg = _abs_power_integral(float(lo), float(hi), a) / float(h)
        if avg > 0:
            pieces.append(StepPiece(Interval(lo, hi), Fraction(avg)))
    return Measure(pieces=pieces)


def _abs_power_integral(lo: float, hi: float, a: float) -> float:
    """Integral of |x|^a over [lo, hi]."""
    def one_side(u: float) -> float:  # integral over [0, u], u >= 0
        return u ** (a + 1) / (a + 1)

    if lo >= 0:
        return one_side(hi) - one_side(lo)
    if hi <= 0:
        return one_side(-lo) - one_side(-hi)
    return one_side(-lo) + one_side(hi)


def gks_cascade(delta, depth: int) -> Measure:
    """Triadic multiplicative cascade on [0,1] with total mass 1.

    Children sharing an endpoint with their parent get (1-delta)/2 of its
    mass, the middle child gets delta.  Doubling for every delta, singular
    in the depth limit when delta != 1/3.
    """
    delta = rat(delta)
    if not 0 < delta < Fraction(1, 3):
        raise ParamDomainError(f"cascade delta {delta} outside (0, 1/3)")
    side = (1 - delta) / 2
    masses = [Fraction(1)]
    for _ in range(depth):
        masses = [m * f for m in masses for f in (side, delta, side)]
    h = Fraction(1, 3 ** depth)
    pieces = [StepPiece(Interval(j * h, (j + 1) * h), m / h)
              for j, m in enumerate(masses)]
    return Measure(pieces=pieces)


def cascade_half_mass_prefix(delta, depth: int) -> tuple[Fraction, Fraction]:
    """(mass fraction, Lebesgue fraction) of the densest-prefix set reaching
    half the cascade mass at the given depth, computed combinatorially."""
    delta = rat(delta)
    side = (1 - delta) / 2
    target = Fraction(1, 2)
    cum_mass = Fraction(0)
    cum_cells = 0
    for j in range(depth + 1):  # j = number of middle choices, densest first
        count = math.comb(depth, j) * 2 ** (depth - j)
        cell_mass = side ** (depth - j) * delta ** j
        if cum_mass + count * cell_mass < target:
            cum_mass += count * cell_mass
            cum_cells += count
            continue
        need = math.ceil((target - cum_mass) / cell_mass)
        cum_mass += need * cell_mass
        cum_cells += need
        break
    return cum_mass, Fraction(cum_cells, 3 ** depth)


def _pick_stage_depth(delta2, k: int, i_max: int = 40) -> int:
    """Smallest cascade depth whose half-mass prefix has size <= 2^-k."""
    for i in range(1, i_max + 1):
        mass, size = cascade_half_mass_prefix(delta2, i)
        if size <= Fraction(1, 2 ** k) and Fraction(3, 10) <= mass <= Fraction(7, 10):
            return i
    raise StageOverflowError(f"no cascade depth up to {i_max} reaches 2^-{k}")


def _stage_pieces(center: Fraction, n: int, i: int, delta2: Fraction,
                  w_left_third: Fraction) -> list[StepPiece]:
    """Step pieces of one stage tower inside a left ring third.

    The third has length 3^(n-1) and total mass w_left_third; the tower is
    the concentric family of lengths 3^m, m = 0..n-1, with masses
    delta2^(n-1-m) * w_left_third (mass-conserving indexing).
    """
    lmax = n - 1
    side = (1 - delta2) / 2
    pieces = []
    # annuli m >= 2: uniform density over the two flanking thirds
    for m in range(2, lmax + 1):
        tower_mass = delta2 ** (lmax - m) * w_left_third
        ann_mass = (1 - delta2) * tower_mass
        third = Fraction(3) ** (m - 1)
        dens = ann_mass / (2 * third)
        half = Fraction(3) ** m / 2
        pieces.append(StepPiece(Interval(center - half, center - half + third), dens))
        pieces.append(StepPiece(Interval(center + half - third, center + half), dens))
    # m = 1 annulus: the two graded boundary cells J^l, J^r
    wj = side * delta2 ** (lmax - 1) * w_left_third if lmax >= 1 else Fraction(0)
    pieces += _graded_cell(Interval(center - Fraction(3, 2), center - Fraction(1, 2)),
                           wj, delta2, i, inner_right=True)
    pieces += _graded_cell(Interval(center + Fraction(1, 2), center + Fraction(3, 2)),
                           wj, delta2, i, inner_right=False)
    # the central cell carries the depth-i cascade
    w0 = delta2 ** lmax * w_left_third
    masses = [w0]
    for _ in range(i):
        masses = [m * f for m in masses for f in (side, delta2, side)]
    h = Fraction(1, 3 ** i)
    lo0 = center - Fraction(1, 2)
    pieces += [StepPiece(Interval(lo0 + j * h, lo0 + (j + 1) * h), m / h)
               for j, m in enumerate(masses)]
    return pieces


def _graded_cell(cell: Interval, mass: Fraction, delta2: Fraction, depth: int,
                 inner_right: bool) -> list[StepPiece]:
    """Graded third-splitting toward the inner edge; keeps w doubling.

    At each step the outer third gets (1-delta2)/2 of the current mass, the
    middle gets delta2, and the inner third recurses; the final inner cell is
    uniform.
    """
    if mass == 0:
        return []
    side = (1 - delta2) / 2
    pieces = []
    lo, hi = cell.lo, cell.hi
    for _ in range(depth):
        h = (hi - lo) / 3
        if inner_right:
            pieces.append(StepPiece(Interval(lo, lo + h), side * mass / h))
            pieces.append(StepPiece(Interval(lo + h, lo + 2 * h), delta2 * mass / h))
            lo = lo + 2 * h
        else:
            pieces.append(StepPiece(Interval(hi - h, hi), side * mass / h))
            pieces.append(StepPiece(Interval(hi - 2 * h, hi - h), delta2 * mass / h))
            hi = hi - 2 * h
        mass = side * mass
    pieces.append(StepPiece(Interval(lo, hi), mass / (hi - lo)))
    return pieces


def _stage_scan_intervals(center: Fraction, n: int, i: int) -> tuple[Interval, ...]:
    """Intervals whose maximal-integral gain must reach 2^k.

    Only the stage core matters: the central cell, its triple, the graded
    boundary cells and the extreme cascade cells.  The worst sets live
    there; for the outer tower members the flat-set mass ratio is already
    harmless, and their gain saturates at a constant by construction.
    """
    out = []
    for m in range(min(n, 2)):
        half = Fraction(3) ** m / 2
        out.append(Interval(center - half, center + half))
    x0 = center + Fraction(1, 2)
    for j in range(i + 1):
        out.append(Interval(x0, x0 + Fraction(1, 3 ** j)))
    lo0 = center - Fraction(1, 2)
    for j in range(1, i + 1):
        out.append(Interval(lo0, lo0 + Fraction(1, 3 ** j)))          # all-side corner
        half = Fraction(1, 2 * 3 ** j)
        out.append(Interval(center - half, center + half))            # all-middle core
    return tuple(out)


def _build_cp_measure(delta1: Fraction, delta2: Fraction,
                      stages: Sequence[tuple[int, int]], n_total: int) -> Measure:
    pieces = [StepPiece(Interval(Fraction(-1, 2), Fraction(1, 2)), Fraction(1))]
    stage_at = {n: i for n, i in stages}
    for n in range(1, n_total + 1):
        ring_half_mass = (1 - delta1) / (2 * delta1 ** n)
        third = Fraction(3) ** (n - 1)
        dens = ring_half_mass / third
        half = Fraction(3) ** n / 2
        pieces.append(StepPiece(Interval(half - third, half), dens))
        if n in stage_at:
            center = -third  # midpoint of the left ring third
            pieces += _stage_pieces(center, n, stage_at[n], delta2, ring_half_mass)
        else:
            pieces.append(StepPiece(Interval(-half, -half + third), dens))
    return Measure(pieces=pieces)


def cp_weight(p: int = 2, delta1=None, delta2=None,
              stages: Sequence[tuple[int | None, int | None]] | None = None,
              K: int = 1, n_max: int = 60) -> ConstructionOutput:
    """Doubling weight with small-set mass concentration at K nested scales.

    Ring masses grow like delta1^-n (delta1 > 3^-p keeps maximal-function
    integrals finite); each stage k installs a concentric tower whose mass
    collapses like delta2^-m with delta2 <= 3^-p/2, which makes the
    maximal-integral gain at stage-k intervals reach 2^k once the stage
    scale n_k is large enough.  n_k is found by direct search; i_k is the
    smallest cascade depth whose half-mass set has size <= 2^-k.
    """
    three_mp = Fraction(1, 3 ** p)
    delta1 = rat(delta1) if delta1 is not None else (three_mp + Fraction(1, 3)) / 2
    delta2 = rat(delta2) if delta2 is not None else three_mp / 2
    if not three_mp < delta1 < Fraction(1, 3):
        raise ParamDomainError(f"delta1 {delta1} outside (3^-{p}, 1/3)")
    if not 0 < delta2 <= three_mp:
        raise ParamDomainError(f"delta2 {delta2} outside (0, 3^-{p}]")

    if stages is None:
        stages = [(None, None)] * K
    resolved: list[tuple[int, int]] = []
    witnesses = []
    for k, (n_given, i_given) in enumerate(stages, start=1):
        i_k = i_given if i_given is not None else _pick_stage_depth(delta2, k)
        prev_n = resolved[-1][0] if resolved else 1
        n_k = n_given if n_given is not None else max(prev_n + 1, i_k + 2, 3)
        target = 2.0 ** k
        while True:
            if n_k > n_max:
                raise StageOverflowError(
                    f"stage {k} needs scale beyond n_max={n_max}")
            trial = resolved + [(n_k, i_k)]
            w = _build_cp_measure(delta1, delta2, trial, n_k + 1)
            center = -(Fraction(3) ** (n_k - 1))
            # gain check in floats on a recentered copy; the ratio is
            # translation invariant and the recentering keeps it well
            # conditioned for intervals tiny next to the stage coordinate
            wc = w.translate(-center)
            ratio = min(
                maximal_indicator_integral(wc, I, p, exact=False)
                / float(wc.mass(I))
                for I in _stage_scan_intervals(Fraction(0), n_k, i_k))
            if ratio >= target * 1.01 or n_given is not None:
                break
            n_k += max(1, math.ceil(math.log2(target * 1.01 / ratio)))
        resolved.append((n_k, i_k))
        mass_frac, size_frac = cascade_half_mass_prefix(delta2, i_k)
        center = -(Fraction(3) ** (n_k - 1))
        il0 = Interval(center - Fraction(1, 2), center + Fraction(1, 2))
        witnesses.append(StageWitness(k, n_k, i_k, il0, il0,
                                      mass_frac, size_frac,
                                      _stage_scan_intervals(center, n_k, i_k)))

    n_total = resolved[-1][0] + 1
    w = _build_cp_measure(delta1, delta2, resolved, n_total)
    return ConstructionOutput(w, {
        "stages": tuple(witnesses),
        "delta1": delta1,
        "delta2": delta2,
        "n_total": n_total,
    })


def _block_train(base: Fraction, count: int) -> list[StepPiece]:
    """Pieces of the dyadic-block measure: density 2^i on [base+2^i, base+2^(i+1)],
    i = 0..count."""
    return [StepPiece(Interval(base + 2 ** i, base + 2 ** (i + 1)), Fraction(2 ** i))
            for i in range(count + 1)]


def thm5_part1_pair(K: int = 3) -> tuple[Measure, Measure, dict]:
    """Pair with bounded classical A2 but both tailed variants failing.

    omega carries a unit block at 100^k and a dyadic block train at -100^k;
    sigma mirrors them.  Witnesses are the unit blocks [100^k, 100^k+1].
    """
    if not 1 <= K <= 6:
        raise ParamDomainError("stage count must be in 1..6")
    om_pieces = []
    sg_pieces = []
    for k in range(1, K + 1):
        c = Fraction(100) ** k
        om_pieces.append(StepPiece(Interval(c, c + 1), Fraction(1)))
        om_pieces += _block_train(-c, k)
        sg_pieces.append(StepPiece(Interval(-c, -c + 1), Fraction(1)))
        sg_pieces += _block_train(c, k)
    witnesses = {"blocks": tuple(Interval(Fraction(100) ** k, Fraction(100) ** k + 1)
                                 for k in range(1, K + 1))}
    return Measure(pieces=om_pieces), Measure(pieces=sg_pieces), witnesses


def thm5_part2_pair(N: int = 8) -> tuple[Measure, Measure]:
    """omega = dyadic blocks 2^n on [2^n, 2^(n+1)], sigma = Lebesgue on [0,1].

    The two-tailed quantity at [0,1] grows linearly in N while the one-tailed
    one stays bounded.
    """
    if not 1 <= N <= 20:
        raise ParamDomainError("N must be in 1..20")
    omega = Measure(pieces=[StepPiece(Interval(2 ** n, 2 ** (n + 1)), Fraction(2 ** n))
                            for n in range(1, N + 1)])
    sigma = Measure.lebesgue(Interval(0, 1))
    return omega, sigma


def pivotal_example_pair(N: int = 10) -> tuple[Measure, Measure]:
    """omega = point mass at 0, sigma = sum of n * delta_n for n = 2..N."""
    if N < 2:
        raise ParamDomainError("N must be at least 2")
    omega = Measure.point_mass(0, 1)
    sigma = Measure(atoms=[Atom(Fraction(n), Fraction(n)) for n in range(2, N + 1)])
    return omega, sigma


def remark2_weight(radius=8) -> Measure:
    """Lebesgue measure with the unit interval removed (zero unit-ball mass)."""
    r = rat(radius)
    if r <= 1:
        raise ParamDomainError("radius must exceed 1")
    return Measure.from_steps([(-r, -1, 1), (1, r, 1)])
