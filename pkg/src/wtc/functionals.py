"""Weighted-condition functionals on exact measures.

Closed-form 1D kernel integrals throughout: Poisson tails, the maximal
function of an interval indicator, Riesz potentials.  Quantities that are
rational for alpha = 0 (Poisson, integer-p maximal integrals, energy, masses)
have exact paths; everything else runs in floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import AtomPresentError, SingularSampleError, ZeroDensityError, ZeroMassError
from .grid import Partition, ScanFamily
from .measure import Interval, Measure, rat

AP_KINDS = ("classical", "one_tailed", "one_tailed_dual", "two_tailed", "offset")
POISSON_KINDS = ("standard", "reproducing")


def avg_density(mu: Measure, interval: Interval, alpha=0):
    """mu(I)/|I|^(1-alpha); exact rational when alpha = 0."""
    m = mu.mass(interval)
    if alpha == 0:
        return m / interval.length
    return float(m) / float(interval.length) ** (1 - float(alpha))


def poisson(interval: Interval, mu: Measure, kind: str = "standard",
            alpha=0, exact: bool | None = None):
    """Poisson-type integral of mu against the tail kernel of the interval.

    kind 'standard': kernel |I|/(|I|+d)^(2-alpha); kind 'reproducing':
    (|I|/(|I|+d)^2)^(1-alpha), d = dist(x, I).  The two agree at alpha = 0.
    """
    if kind not in POISSON_KINDS:
        raise ValueError(f"unknown poisson kind {kind!r}")
    if exact is None:
        exact = alpha == 0
    if exact:
        if alpha != 0:
            raise ValueError("exact evaluation requires alpha = 0")
        return _poisson_exact(interval, mu)
    return _poisson_float(interval, mu, kind, float(alpha))


def _poisson_exact(interval: Interval, mu: Measure) -> Fraction:
    a, b, L = interval.lo, interval.hi, interval.length
    total = Fraction(0)
    for atom in mu.atoms:
        d = interval.dist(atom.x)
        total += atom.mass * L / (L + d) ** 2
    for p in mu.pieces:
        lo, hi = p.support.lo, p.support.hi
        olo, ohi = max(lo, a), min(hi, b)
        if ohi > olo:
            total += p.density * (ohi - olo) / L
        if hi > b:
            t0, t1 = max(lo, b) - b, hi - b
            total += p.density * L * (Fraction(1, 1) / (L + t0) - Fraction(1, 1) / (L + t1))
        if lo < a:
            u0, u1 = a - min(hi, a), a - lo
            total += p.density * L * (Fraction(1, 1) / (L + u0) - Fraction(1, 1) / (L + u1))
    return total


def _tail_integral_float(L: float, t0, t1, kind: str, alpha: float):
    """Integral of the tail kernel in the distance variable over [t0, t1]."""
    if kind == "standard":
        # antiderivative of L*(L+t)^(alpha-2)
        return L / (1 - alpha) * ((L + t0) ** (alpha - 1) - (L + t1) ** (alpha - 1))
    if alpha == 0.5:
        return np.sqrt(L) * (np.log(L + t1) - np.log(L + t0))
    e = 2 * alpha - 1
    return L ** (1 - alpha) * ((L + t1) ** e - (L + t0) ** e) / e


def _poisson_float(interval: Interval, mu: Measure, kind: str, alpha: float) -> float:
    a, b = float(interval.lo), float(interval.hi)
    L = b - a
    plo, phi, pden, ax, am = mu.float_data()
    total = 0.0
    if ax.size:
        d = np.maximum(np.maximum(a - ax, ax - b), 0.0)
        if kind == "standard":
            total += float(np.sum(am * L / (L + d) ** (2 - alpha)))
        else:
            total += float(np.sum(am * (L / (L + d) ** 2) ** (1 - alpha)))
    if plo.size:
        inside = np.clip(np.minimum(phi, b) - np.maximum(plo, a), 0.0, None)
        if kind == "standard":
            total += float(np.sum(pden * inside) * L ** (alpha - 1))
        else:
            total += float(np.sum(pden * inside) * L ** (alpha - 1))
        right = phi > b
        if right.any():
            t0 = np.maximum(plo[right], b) - b
            t1 = phi[right] - b
            total += float(np.sum(pden[right] * _tail_integral_float(L, t0, t1, kind, alpha)))
        left = plo < a
        if left.any():
            u0 = a - np.minimum(phi[left], a)
            u1 = a - plo[left]
            total += float(np.sum(pden[left] * _tail_integral_float(L, u0, u1, kind, alpha)))
    return total


def ap_local(omega: Measure, sigma: Measure, interval: Interval, p=2,
             alpha=0, kind: str = "classical",
             poisson_kind: str = "standard") -> float:
    """Local two-weight Ap quantity at one interval.

    classical: avg(w)^(1/p) avg(s)^(1/p'); one_tailed replaces the sigma
    average by its Poisson integral; two_tailed replaces both; offset (p=2)
    is avg(w) times the Poisson integral of sigma off the interval.
    """
    if kind not in AP_KINDS:
        raise ValueError(f"unknown Ap kind {kind!r}")
    if kind == "offset":
        off = sigma.complement_restrict(interval)
        return float(avg_density(omega, interval, alpha)) * float(
            poisson(interval, off, poisson_kind, alpha, exact=False))
    p = float(p)
    pp = p / (p - 1)
    if kind in ("classical", "one_tailed"):
        w_factor = float(avg_density(omega, interval, alpha))
    else:
        w_factor = float(poisson(interval, omega, poisson_kind, alpha, exact=False))
    if kind in ("classical", "one_tailed_dual"):
        s_factor = float(avg_density(sigma, interval, alpha))
    else:
        s_factor = float(poisson(interval, sigma, poisson_kind, alpha, exact=False))
    return w_factor ** (1 / p) * s_factor ** (1 / pp)


def ap_local_squared(omega: Measure, sigma: Measure, interval: Interval,
                     kind: str = "classical") -> Fraction:
    """Exact square of ap_local for p = 2, alpha = 0."""
    if kind not in AP_KINDS:
        raise ValueError(f"unknown Ap kind {kind!r}")
    if kind == "offset":
        off = sigma.complement_restrict(interval)
        return avg_density(omega, interval) * _poisson_exact(interval, off)
    if kind in ("classical", "one_tailed"):
        w_factor = avg_density(omega, interval)
    else:
        w_factor = _poisson_exact(interval, omega)
    if kind in ("classical", "one_tailed_dual"):
        s_factor = avg_density(sigma, interval)
    else:
        s_factor = _poisson_exact(interval, sigma)
    return w_factor * s_factor


def sup_over_family(functional: Callable[[Interval], float],
                    family: ScanFamily) -> tuple[float, Interval | None]:
    """Max of a local functional over the scan family, with a witness.

    Ties keep the first candidate in enumeration order, so the witness is
    deterministic.
    """
    best = None
    witness = None
    for cand in family.intervals():
        v = functional(cand)
        if best is None or v > best:
            best, witness = v, cand
    return best, witness


def maximal_indicator_integral(w: Measure, interval: Interval, p=2,
                               exact: bool | None = None):
    """Integral of (M 1_I)^p against w, M the Hardy-Littlewood maximal operator.

    In 1D, M1_[a,b](x) is 1 on the interval, (b-a)/(x-a) to the right and
    (b-a)/(b-x) to the left, so each step piece integrates in closed form.
    Exact rational for integer p >= 2.
    """
    if w.atoms:
        raise AtomPresentError("maximal-function integrals require an atom-free weight")
    if exact is None:
        exact = isinstance(p, int) and p >= 2
    if exact and not (isinstance(p, int) and p >= 2):
        raise ValueError("exact evaluation requires integer p >= 2")
    a, b = interval.lo, interval.hi
    L = interval.length
    if not exact:
        return _maximal_integral_float(w, float(a), float(b), p)
    total = Fraction(0)
    for piece in w.pieces:
        lo, hi = piece.support.lo, piece.support.hi
        den = piece.density
        olo, ohi = max(lo, a), min(hi, b)
        if ohi > olo:
            total += den * (ohi - olo)
        if hi > b:
            total += den * _power_tail(L, max(lo, b) - a, hi - a, p, True)
        if lo < a:
            total += den * _power_tail(L, b - min(hi, a), b - lo, p, True)
    return total


def _maximal_integral_float(w: Measure, a: float, b: float, p) -> float:
    """Vectorized float path.  Coordinates are floated before differencing,
    so callers should keep the data's dynamic range moderate (translate
    toward the origin first when the interval is tiny and far away)."""
    p = float(p)
    L = b - a
    plo, phi, pden, _, _ = w.float_data()
    total = float(np.sum(pden * np.clip(np.minimum(phi, b) - np.maximum(plo, a),
                                        0.0, None)))
    right = phi > b
    if right.any():
        u0 = np.maximum(plo[right], b) - a
        u1 = phi[right] - a
        if p == 1:
            total += float(np.sum(pden[right] * L * np.log(u1 / u0)))
        else:
            total += float(np.sum(pden[right] * L ** p
                                  * (u0 ** (1 - p) - u1 ** (1 - p)) / (p - 1)))
    left = plo < a
    if left.any():
        u0 = b - np.minimum(phi[left], a)
        u1 = b - plo[left]
        if p == 1:
            total += float(np.sum(pden[left] * L * np.log(u1 / u0)))
        else:
            total += float(np.sum(pden[left] * L ** p
                                  * (u0 ** (1 - p) - u1 ** (1 - p)) / (p - 1)))
    return total


def _power_tail(L, u0, u1, p, exact: bool):
    """Exact integral of (L/u)^p du over [u0, u1], u0 >= L > 0, integer p >= 2."""
    return L ** p * (u0 ** (1 - p) - u1 ** (1 - p)) / (p - 1)


def _extremal_prefixes(w: Measure, interval: Interval, resolution_level: int):
    """Cells of the 2^level split of I sorted densest first, with masses."""
    n = 2 ** resolution_level
    h = interval.length / n
    cells = [Interval(interval.lo + j * h, interval.lo + (j + 1) * h) for j in range(n)]
    masses = [w.mass(c, include_hi=(c.hi == interval.hi)) for c in cells]
    order = sorted(range(n), key=lambda j: (-masses[j], j))
    return [(cells[j], masses[j]) for j in order]


def cp_profile(w: Measure, interval: Interval, p=2, resolution_level: int = 6):
    """Extremal curve t -> w(E_t)/integral((M 1_I)^p w) over prefix sets E_t.

    E_t is the union of the t*2^level densest resolution cells; among cell
    unions this maximizes the numerator at each Lebesgue size.
    """
    if w.atoms:
        raise AtomPresentError("profile requires an atom-free weight")
    denom = maximal_indicator_integral(w, interval, p)
    ranked = _extremal_prefixes(w, interval, resolution_level)
    n = len(ranked)
    curve = []
    acc = Fraction(0)
    for j, (_, mass) in enumerate(ranked, start=1):
        acc += mass
        curve.append((Fraction(j, n), acc / denom if denom else Fraction(0)))
    return curve


def a_infinity_profile(w: Measure, interval: Interval, resolution_level: int = 6):
    """Extremal curve t -> w(E_t)/w(I) over the same prefix sets."""
    total = w.mass(interval)
    if total == 0:
        raise ZeroMassError(f"no mass on {interval}")
    ranked = _extremal_prefixes(w, interval, resolution_level)
    n = len(ranked)
    curve = []
    acc = Fraction(0)
    for j, (_, mass) in enumerate(ranked, start=1):
        acc += mass
        curve.append((Fraction(j, n), acc / total))
    return curve


@dataclass(frozen=True)
class DoublingScan:
    value: Fraction | None
    witness: Interval | None
    skipped: tuple[Interval, ...]


def doubling_constant(mu: Measure, family: ScanFamily, factor: int = 2) -> DoublingScan:
    """Max over the family of mu(factor*I)/mu(I), dilation concentric.

    Intervals with zero mass are skipped and reported; a growing value as
    the family deepens is the non-doubling signal.
    """
    return _doubling_scan(mu, family, factor, want_max=True)


def reverse_doubling_constant(mu: Measure, family: ScanFamily,
                              factor: int = 2) -> DoublingScan:
    """Min over the family of mu(factor*I)/mu(I); > 1 uniformly for doubling mu."""
    return _doubling_scan(mu, family, factor, want_max=False)


def _doubling_scan(mu, family, factor, want_max):
    best = None
    witness = None
    skipped = []
    for cand in family.intervals():
        m = mu.mass(cand)
        if m == 0:
            skipped.append(cand)
            continue
        ratio = mu.mass(cand.dilate(factor)) / m
        if best is None or (ratio > best if want_max else ratio < best):
            best, witness = ratio, cand
    return DoublingScan(best, witness, tuple(skipped))


def a1_constant(w: Measure, sample_points: Sequence, family: ScanFamily):
    """Lower bound for the A1 constant from finitely many sample points.

    For each sample x, max over family intervals containing x of
    avg(w)/w(x); then max over samples.
    """
    if w.atoms:
        raise AtomPresentError("A1 is a condition on weights, not atoms")
    candidates = list(family.intervals())
    best = Fraction(0)
    for x in sample_points:
        x = rat(x)
        d = w.density_at(x)
        if d == 0:
            raise ZeroDensityError(f"weight vanishes at sample {x}")
        for cand in candidates:
            if cand.contains_point(x):
                ratio = avg_density(w, cand) / d
                if ratio > best:
                    best = ratio
    return best


def energy_e2(interval: Interval, omega: Measure) -> Fraction:
    """Normalized energy: Var(x) under omega restricted to I, over |I|^2.

    Always in [0, 1/4]; zero exactly when the restriction is a point mass.
    """
    return omega.variance(interval) / interval.length ** 2


def pivotal_sum(omega: Measure, sigma: Measure, parent: Interval,
                part: Partition, p=2, alpha=0, with_energy: bool = False,
                exact: bool | None = None):
    """Sum over partition cells of w(I_r) [E(I_r,w)^2] P(I_r, 1_I sigma)^p,
    normalized by sigma(I).  Standard Poisson kind; exact for alpha=0, int p.
    Pass exact=False during sup searches over many partitions: rational sums
    over atoms at many distinct distances grow huge common denominators."""
    s_total = sigma.mass(parent)
    if s_total == 0:
        raise ZeroMassError(f"sigma has no mass on {parent}")
    sigma_in = sigma.restrict(parent)
    if exact is None:
        exact = alpha == 0 and isinstance(p, int)
    if exact and not (alpha == 0 and isinstance(p, int)):
        raise ValueError("exact evaluation requires alpha = 0 and integer p")
    total = Fraction(0) if exact else 0.0
    for cell in part.cells:
        wm = omega.mass(cell, include_hi=(cell.hi == parent.hi))
        if wm == 0:
            continue
        pv = poisson(cell, sigma_in, "standard", alpha, exact=exact)
        term = wm * pv ** p
        if with_energy:
            term *= energy_e2(cell, omega)
        total += term
    return total / s_total if exact else float(total) / float(s_total)


def dyadic_maximal_integral(sigma: Measure, omega: Measure, interval: Interval,
                            p=2, max_depth: int = 8):
    """Leaf-level lower bound for the integral of (M_d 1_I sigma)^p d omega.

    Each depth-max_depth cell of the bisection tree gets the max sigma-average
    over its ancestors within I; that value is integrated against omega.
    Returns (value, diagnostics) where diagnostics lists omega atoms sitting
    on internal cell boundaries (their assignment is the half-open one).
    """
    boundary_atoms = []

    def rec(cell: Interval, depth: int, best_avg: Fraction) -> Fraction:
        avg = sigma.mass(cell, include_hi=(cell.hi == interval.hi)) / cell.length
        best_avg = max(best_avg, avg)
        if depth >= max_depth:
            return best_avg ** p * omega.mass(cell, include_hi=(cell.hi == interval.hi))
        mid = cell.midpoint
        for a in omega.atoms:
            if a.x == mid:
                boundary_atoms.append((cell, a))
        return (rec(Interval(cell.lo, mid), depth + 1, best_avg)
                + rec(Interval(mid, cell.hi), depth + 1, best_avg))

    value = rec(interval, 0, Fraction(0))
    return value, boundary_atoms


def sawyer_ratio(omega: Measure, sigma: Measure, interval: Interval, p=2,
                 max_depth: int = 8):
    """Dyadic testing quantity: integral of (M_d 1_I sigma)^p d omega over sigma(I)."""
    s = sigma.mass(interval)
    if s == 0:
        raise ZeroMassError(f"sigma has no mass on {interval}")
    value, _ = dyadic_maximal_integral(sigma, omega, interval, p, max_depth)
    return value / s


@dataclass(frozen=True)
class RieszReport:
    sup: float
    normalized: float
    witness: Fraction | None


def riesz_potential_sup(mu: Measure, interval: Interval, alpha,
                        sample_points: Iterable) -> RieszReport:
    """Max over samples of the restricted Riesz potential
    integral over I of |x-y|^(alpha-1) d mu(y), alpha in (0, 1).

    The normalized value divides by mu(I)|I|^(alpha-1), which is the scale
    at which boundedness is dimension-free.
    """
    alpha = float(alpha)
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1)")
    mu_in = mu.restrict(interval)
    total = mu_in.total_mass()
    if total == 0:
        return RieszReport(0.0, 0.0, None)
    plo, phi, pden, ax, am = mu_in.float_data()
    best = None
    witness = None
    for x in sample_points:
        x = rat(x)
        if not (interval.lo <= x <= interval.hi):
            raise ValueError(f"sample {x} outside {interval}")
        if any(a.x == x for a in mu_in.atoms):
            raise SingularSampleError(f"sample {x} hits an atom")
        xf = float(x)
        val = 0.0
        if ax.size:
            val += float(np.sum(am * np.abs(xf - ax) ** (alpha - 1)))
        if plo.size:
            # split each piece at x; each side integrates to |x-y|^alpha/alpha
            left_hi = np.minimum(phi, xf)
            left_lo = np.minimum(plo, xf)
            right_lo = np.maximum(plo, xf)
            right_hi = np.maximum(phi, xf)
            val += float(np.sum(pden * (
                (xf - left_lo) ** alpha - (xf - left_hi) ** alpha
                + (right_hi - xf) ** alpha - (right_lo - xf) ** alpha))) / alpha
        if best is None or val > best:
            best, witness = val, x
    norm = best / (float(total) * float(interval.length) ** (alpha - 1))
    return RieszReport(best, norm, witness)


def power_weight_ap_bound(alpha_exp, p) -> tuple[bool, float]:
    """One-weight Ap comparability value for |x|^alpha_exp in 1D.

    Finite exactly when -1 < alpha_exp < p - 1; the returned value is
    (alpha_exp+1)^(-1) (1 - alpha_exp p'/p)^(-p/p') at that exponent.
    """
    a = float(alpha_exp)
    p = float(p)
    if p <= 1:
        raise ValueError("p must exceed 1")
    if not -1 < a < p - 1:
        return False, math.inf
    pp = p / (p - 1)
    return True, (a + 1) ** -1 * (1 - a * pp / p) ** (-p / pp)
