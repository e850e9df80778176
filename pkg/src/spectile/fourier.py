"""Fourier transforms of box-union indicators and their structured zero sets.

For a union of boxes the transform is a finite sum of products of complex
sinc factors, so 1̂_U(ξ) is evaluated in closed form.  In one dimension the
real zero set is decided exactly: with all endpoints on the grid (1/q)·Z,
2πiξ·1̂_U(ξ) becomes an integer polynomial P in z = exp(-2πiξ/q), the
roots of unity among P's roots are extracted by cyclotomic divisibility
(giving exact rational phases of the periodic root families), and the
remaining unit-circle roots are isolated numerically with an error bound.
Declared product domains inherit per-axis root families; everything else
falls back to a membership-test-only numeric form.

Rational frequencies are decided against rational phases with no tolerance;
a rational ξ can never coincide with an irrational phase, so the exact path
stays exact even when irrational families exist.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import NonRationalEndpoints, RadiusTooSmall
from .exact import (
    Vec,
    as_fraction,
    cyclotomic,
    lcm_int,
    poly_divmod,
    poly_trim,
    rational_gcd,
    totient,
)
from .geometry import Domain

_SINC_SWITCH = 1e-6
_UNIT_CIRCLE_TOL = 1e-8


def _sinc(x: float) -> float:
    # sin(pi x)/(pi x) with the removable singularity filled in
    if abs(x) < 1e-9:
        return 1.0
    return math.sin(math.pi * x) / (math.pi * x)


def _axis_factor(lo: float, hi: float, xi: float) -> complex:
    """∫_lo^hi exp(-2πi ξ t) dt, stable near ξ = 0."""
    w = hi - lo
    if abs(xi * w) < _SINC_SWITCH:
        mid = 0.5 * (lo + hi)
        return w * _sinc(w * xi) * cmath.exp(-2j * math.pi * xi * mid)
    a = 2.0 * math.pi * xi
    return (cmath.exp(-1j * a * lo) - cmath.exp(-1j * a * hi)) / (1j * a)


def ft_indicator(u: Domain, xi: Sequence) -> complex:
    """1̂_U(ξ) = ∫_U exp(-2πi⟨ξ,t⟩) dt, summed in closed form over boxes."""
    x = [float(v) for v in xi]
    if len(x) != u.dim:
        raise ValueError(f"frequency dimension {len(x)} != domain dimension {u.dim}")
    total = 0j
    for b in u.boxes:
        f = 1 + 0j
        for j in range(u.dim):
            f *= _axis_factor(float(b.lo[j]), float(b.hi[j]), x[j])
        total += f
    return total


def power_spectrum(u: Domain, xi: Sequence) -> float:
    """|1̂_U(ξ)|², the tile whose packings/tilings encode orthogonality/completeness."""
    v = ft_indicator(u, xi)
    return v.real * v.real + v.imag * v.imag


# ---------------------------------------------------------------------------
# Structured zero sets


@dataclass(frozen=True)
class AxisRoots:
    """1D root family (phases + period·Z) ∖ {0}; phases exact or bounded."""

    period: Fraction
    rational_phases: tuple[Fraction, ...]
    irrational_phases: tuple[tuple[float, float], ...] = ()  # (approx, error_bound)

    def phase_set(self) -> frozenset[Fraction]:
        return frozenset(self.rational_phases)

    def contains_rational(self, x: Fraction) -> bool:
        """Exact membership of a rational value in the root family."""
        if x == 0:
            return False
        return (x % self.period) in self.phase_set()


@dataclass(frozen=True)
class ZeroSet:
    """Z(1̂_U): per-axis families for products/1D, else numeric-only."""

    domain: Domain
    kind: str  # "product" | "roots1d" | "numeric"
    axes: tuple[AxisRoots, ...] | None
    tol: float

    @property
    def structured(self) -> bool:
        return self.axes is not None


class Membership(Enum):
    YES = "yes"
    NO = "no"
    NEAR = "near"


def default_tol(u: Domain) -> float:
    return 1e-9 * max(1.0, float(u.measure()))


def roots_1d(i: Domain) -> AxisRoots:
    """Complete periodic description of the real zeros of 1̂_I for a 1D union.

    Substituting z = exp(-2πiξ/q) (q = lcm of endpoint denominators) turns
    2πiξ·1̂_I(ξ) into P(z) = Σ_k (z^{q·lo_k} - z^{q·hi_k}).  Roots of unity
    among P's roots give the exact rational phases; the rest of the
    unit-circle roots come from the companion matrix with a ±1e-8 bound.
    """
    if i.dim != 1:
        raise ValueError("roots_1d needs a one-dimensional domain")
    try:
        endpoints = [as_fraction(b.lo[0]) for b in i.boxes] + [
            as_fraction(b.hi[0]) for b in i.boxes
        ]
    except TypeError as exc:
        raise NonRationalEndpoints(str(exc)) from None
    q = lcm_int([e.denominator for e in endpoints])
    exps = []
    for b in i.boxes:
        exps.append((int(b.lo[0] * q), 1))
        exps.append((int(b.hi[0] * q), -1))
    emin = min(e for e, _ in exps)
    coeffs = [0] * (max(e for e, _ in exps) - emin + 1)
    for e, s in exps:
        coeffs[e - emin] += s
    p = poly_trim(coeffs)
    # Strip z^s: roots at z=0 never lie on the unit circle.
    s = next(k for k, c in enumerate(p) if c != 0)
    p = p[s:]

    phases: set[Fraction] = set()
    deg0 = len(p) - 1
    # φ(n) ≥ sqrt(n/2), so no n beyond 2·deg² can have φ(n) ≤ deg; totients are
    # not monotone, so every n up to that bound must be tried.
    for n in range(1, 2 * deg0 * deg0 + 5):
        if len(p) <= 1:
            break
        if totient(n) > len(p) - 1:
            continue
        phi = list(cyclotomic(n))
        changed = False
        while len(p) >= len(phi):
            quot, rem = poly_divmod(p, phi)
            if rem:
                break
            p = quot if quot else [1]
            changed = True
        if changed:
            if n == 1:
                phases.add(Fraction(0))
            else:
                for k in range(1, n):
                    if math.gcd(k, n) == 1:
                        phases.add(Fraction(-q * k, n) % q)

    irrational: list[tuple[float, float]] = []
    if len(p) > 1:
        roots = np.roots(list(reversed(p)))
        for z in roots:
            if abs(abs(z) - 1.0) < _UNIT_CIRCLE_TOL:
                xi = (-q * math.atan2(z.imag, z.real) / (2 * math.pi)) % q
                irrational.append((xi, _UNIT_CIRCLE_TOL))
        irrational.sort()

    period = Fraction(q)
    rational = sorted(phases)
    if rational and not irrational:
        period, rational = _reduce_period(period, rational)
    return AxisRoots(period, tuple(rational), tuple(irrational))


def _reduce_period(q: Fraction, phases: list[Fraction]) -> tuple[Fraction, list[Fraction]]:
    """Canonicalize: shrink the period when the phase set is shift-closed."""
    while True:
        n = len(phases)
        found = False
        for m in range(n, 1, -1):
            if n % m:
                continue
            p = q / m
            ok = all(((ph + p) % q) in set(phases) for ph in phases)
            if ok:
                q = p
                phases = sorted({ph % p for ph in phases})
                found = True
                break
        if not found:
            return q, phases


def zero_set(u: Domain, tol: float | None = None) -> ZeroSet:
    """Structured root description when available, numeric fallback otherwise."""
    t = default_tol(u) if tol is None else tol
    if u.dim == 1:
        return ZeroSet(u, "roots1d", (roots_1d(u),), t)
    if u.product_factors is not None:
        return ZeroSet(u, "product", tuple(roots_1d(f) for f in u.product_factors), t)
    return ZeroSet(u, "numeric", None, t)


def in_zero_set(z: ZeroSet, xi: Sequence, tol: float | None = None) -> Membership:
    """Ternary membership of ξ in Z(1̂_U).

    Rational ξ against a structured set is decided exactly (Yes/No); anything
    else compares |1̂_U(ξ)| to tol, answering Near inside [tol, 11·tol] so a
    borderline value is surfaced instead of silently classified.
    """
    t = z.tol if tol is None else tol
    coords = list(xi)
    if z.structured:
        exact = [not isinstance(c, float) for c in coords]
        for j, ar in enumerate(z.axes):
            if exact[j] and ar.contains_rational(as_fraction(coords[j])):
                return Membership.YES  # one exact axis hit decides membership
        if all(exact):
            return Membership.NO
    v = abs(ft_indicator(z.domain, coords))
    if v < t:
        return Membership.YES
    if v <= 11 * t:
        return Membership.NEAR
    return Membership.NO


# ---------------------------------------------------------------------------
# Whole-coset membership (exact): drives orthogonality and Keller checks.


def coset_in_zero_set(
    z: ZeroSet, delta: Vec, periods: Vec
) -> tuple[bool, Vec | None]:
    """Decide (δ + diag(periods)·Z^d) ∖ {0} ⊆ Z(1̂_U) exactly.

    Rational cosets never meet irrational phase families, so only the
    rational phases matter and membership of the whole coset reduces to
    finitely many residues modulo each axis period.  Returns (holds,
    witness), the witness being a nonzero coset point outside the zero set.
    """
    if not z.structured:
        raise ValueError("coset test needs a structured zero set")
    axes = z.axes
    d = len(axes)
    delta = tuple(as_fraction(x) for x in delta)
    periods = tuple(as_fraction(x) for x in periods)

    infos = []
    for j in range(d):
        ar = axes[j]
        q, c, dj = ar.period, periods[j], delta[j]
        g = rational_gcd(c, q)
        t = int(q / g)
        phase_set = ar.phase_set()
        bad_k: list[int] = [k for k in range(t) if ((dj + k * c) % q) not in phase_set]
        zero_hit = (dj % c) == 0
        k0 = int(-dj / c) if zero_hit else None
        infos.append((bad_k, zero_hit, k0, c, dj, t))

    for bad_k, zero_hit, _, _, _, _ in infos:
        if not bad_k and not zero_hit:
            return True, None  # this axis alone covers every coset point

    # Build a nonzero point failing every axis, if one exists.
    witness: list[Fraction] = []
    any_nonzero = False
    for bad_k, zero_hit, k0, c, dj, t in infos:
        if bad_k:
            k = bad_k[0]
            val = dj + k * c
            if val == 0:
                val = dj + (k + t) * c  # same residue class, nonzero value
            witness.append(val)
            if val != 0:
                any_nonzero = True
        else:
            witness.append(dj + k0 * c)  # = 0: the only value outside this axis family
    if not any_nonzero:
        return True, None  # the only candidate was the origin, which is excluded
    return False, tuple(witness)


# ---------------------------------------------------------------------------
# Root family vs interval intersections (exact): drives packing-region checks.


def rational_family_in_interval(
    phase: Fraction, period: Fraction, a: Fraction, b: Fraction
) -> Fraction | None:
    """A nonzero member of (phase + period·Z) inside the open interval, or None."""
    n = (a - phase) / period
    from .exact import floor_frac

    k = floor_frac(n) + 1
    while phase + k * period < b:
        v = phase + k * period
        if v != 0:
            return v
        k += 1
    return None


def irrational_family_in_interval(
    approx: float, err: float, period: float, a: float, b: float
) -> tuple[str, float] | None:
    """('inside'|'straddle', value) when [approx±err] + period·Z meets [a, b]."""
    k = math.floor((a - approx - err) / period)
    while True:
        v = approx + k * period
        if v - err > b:
            return None
        if v + err < a:
            k += 1
            continue
        if a < v - err and v + err < b:
            return ("inside", v)
        return ("straddle", v)


# ---------------------------------------------------------------------------
# Truncation tails


@dataclass(frozen=True)
class TailBound:
    radius: float
    bound: float
    rigorous: bool


def _g_sq(t: float, k: int, length: float) -> float:
    # pointwise bound on |1̂|² along one axis: min(L², K²/(π² t²))
    cap = length * length
    if t <= 0:
        return cap
    return min(cap, (k * k) / (math.pi * math.pi * t * t))


def _g_sq_integral(r: float, k: int, length: float) -> float:
    # ∫_r^∞ min(L², K²/(π² t²)) dt
    tstar = k / (math.pi * length)
    if r >= tstar:
        return (k * k) / (math.pi * math.pi * r)
    return length * length * (tstar - r) + (k * k) / (math.pi * math.pi * tstar)


def _axis_sum_all(k: int, length: float) -> float:
    # Σ over side-2 cells of sup |1̂_axis|², any grid offset
    total = _g_sq(0.0, k, length)
    j = 1
    tstar = k / (math.pi * length)
    while 2 * j - 1 <= tstar + 2:
        total += 2 * _g_sq(2 * j - 1, k, length)
        j += 1
    t0 = 2 * j - 1
    total += 2 * (_g_sq(t0, k, length) + 0.5 * _g_sq_integral(t0, k, length))
    return total


def _axis_sum_tail(t: float, k: int, length: float) -> float:
    t0 = max(t - 2.0, 1e-9)
    return 2.0 * (_g_sq(t0, k, length) + 0.5 * _g_sq_integral(t0, k, length))


def _unit_ball_volume(d: int) -> float:
    return math.pi ** (d / 2) / math.gamma(d / 2 + 1)


def _product_tail(axes: list[tuple[int, float]], rho: float, r: float) -> float:
    d = len(axes)
    if d == 1:
        k, length = axes[0]
        return 4.0 * rho * (
            _g_sq(r, k, length) + 0.5 * _g_sq_integral(r, k, length)
        )
    n_cell = rho * _unit_ball_volume(d) * d ** (d / 2)
    fulls = [_axis_sum_all(k, length) for k, length in axes]
    total = 0.0
    for j, (k, length) in enumerate(axes):
        term = _axis_sum_tail(r, k, length)
        for i, f in enumerate(fulls):
            if i != j:
                term *= f
        total += term
    return n_cell * total


def tail_bound(u: Domain, rho: float, r: float) -> TailBound:
    """Upper bound on sup_x Σ_{|λ-x|_∞ > R} |1̂_U(x-λ)|² over sets of density ≤ ρ.

    Rigorous for 1D unions and declared products (per-axis |1̂| ≤ min(L, K/(π|ξ|))
    plus integral comparison against the density bound); for other unions the
    same machinery runs per box and the result is flagged non-rigorous.
    """
    if rho <= 0:
        raise ValueError("density bound must be positive")
    if r <= float(u.diameter()):
        raise RadiusTooSmall(f"radius {r} must exceed the domain diameter")
    if u.dim == 1:
        bound = _product_tail([(len(u.boxes), float(u.measure()))], rho, r)
        return TailBound(r, bound, True)
    if u.product_factors is not None:
        axes = [(len(f.boxes), float(f.measure())) for f in u.product_factors]
        return TailBound(r, _product_tail(axes, rho, r), True)
    total = 0.0
    nb = len(u.boxes)
    for b in u.boxes:
        axes = [(1, float(w)) for w in b.widths]
        total += _product_tail(axes, rho, r)
    return TailBound(r, nb * total, False)
