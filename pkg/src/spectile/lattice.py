"""Periodic and windowed point sets, lattice duality, dual-point weights.

A periodic set Λ = A + M·Z^d is stored as a rational lattice basis M
(columns generate) plus finitely many coset representatives A reduced into
the fundamental cell.  The Fourier transform of its Dirac comb is supported
on the dual lattice M^{-T}·Z^d with atom mass Σ_a exp(-2πi⟨ξ,a⟩) at each
dual point ξ; whether such a mass vanishes is decided exactly through
cyclotomic divisibility whenever the phases are rational.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatch,
    NotDualPoint,
    RadiusTooLarge,
)
from .exact import (
    Mat,
    Vec,
    as_fraction,
    ceil_frac,
    floor_frac,
    lcm_int,
    mat_det,
    mat_inv,
    mat_transpose,
    mat_vec,
    sum_of_roots_of_unity_is_zero,
)
from .geometry import Box, DifferenceBody

# Cyclotomic zero tests are skipped above this common denominator (memory guard).
_CYCLOTOMIC_CAP = 10**6
_ENUM_CAP = 5_000_000


@dataclass(frozen=True)
class Lattice:
    basis: Mat  # columns generate

    def __post_init__(self):
        if mat_det(self.basis) == 0:
            raise ValueError("lattice basis must be invertible")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def det(self) -> Fraction:
        return mat_det(self.basis)

    def column(self, j: int) -> Vec:
        return tuple(self.basis[i][j] for i in range(self.dim))

    def is_diagonal(self) -> bool:
        return all(
            self.basis[i][j] == 0
            for i in range(self.dim)
            for j in range(self.dim)
            if i != j
        )

    def to_coordinates(self, p: Sequence[Fraction]) -> Vec:
        """Coefficients y with basis·y = p, exact."""
        return mat_vec(mat_inv(self.basis), tuple(as_fraction(x) for x in p))

    def contains(self, p: Sequence[Fraction]) -> bool:
        return all(y.denominator == 1 for y in self.to_coordinates(p))


def diagonal_lattice(entries: Sequence) -> Lattice:
    es = [as_fraction(e) for e in entries]
    d = len(es)
    return Lattice(
        tuple(
            tuple(es[j] if i == j else Fraction(0) for j in range(d)) for i in range(d)
        )
    )


def integer_lattice(d: int) -> Lattice:
    return diagonal_lattice([1] * d)


def dual(lat: Lattice) -> Lattice:
    """Dual lattice: inverse-transpose basis, exact."""
    return Lattice(mat_transpose(mat_inv(lat.basis)))


def _reduce_mod(lat: Lattice, p: Vec) -> Vec:
    y = lat.to_coordinates(p)
    frac = tuple(c - floor_frac(c) for c in y)
    return mat_vec(lat.basis, frac)


@dataclass(frozen=True)
class PeriodicSet:
    lattice: Lattice
    reps: tuple[Vec, ...]
    contains_zero: bool = field(default=False)

    @property
    def dim(self) -> int:
        return self.lattice.dim

    def density(self) -> Fraction:
        return Fraction(len(self.reps)) / abs(self.lattice.det)

    def translate(self, t: Sequence[Fraction]) -> "PeriodicSet":
        t = tuple(as_fraction(x) for x in t)
        return periodic_set(self.lattice, [tuple(a + b for a, b in zip(r, t)) for r in self.reps])

    def normalized_to_zero(self) -> tuple["PeriodicSet", Vec]:
        """Translate so 0 ∈ Λ; returns (set, applied offset)."""
        if self.contains_zero:
            return self, tuple(Fraction(0) for _ in range(self.dim))
        off = tuple(-x for x in self.reps[0])
        return self.translate(off), off

    def rectangularized(self) -> "PeriodicSet":
        """Equal point set over a diagonal sublattice c·Z^d (reps enlarged).

        If the basis is already diagonal it is returned unchanged (signs
        normalized).  Otherwise c is the least integer clearing every
        denominator of basis⁻¹, so that c·Z^d ⊆ M·Z^d.
        """
        if self.lattice.is_diagonal():
            entries = [abs(self.lattice.basis[j][j]) for j in range(self.dim)]
            lat = diagonal_lattice(entries)
            if lat.basis == self.lattice.basis:
                return self
            return periodic_set(lat, self.reps)
        minv = mat_inv(self.lattice.basis)
        c = lcm_int([e.denominator for row in minv for e in row])
        lat = diagonal_lattice([c] * self.dim)
        cf = Fraction(c)
        pts: list[Vec] = []
        for rep in self.reps:
            # All points rep + M·k inside [0, c)^d.
            corners = itertools.product(*[(Fraction(0) - rep[j], cf - rep[j]) for j in range(self.dim)])
            images = [mat_vec(minv, tuple(corner)) for corner in corners]
            ranges = []
            for j in range(self.dim):
                lo = min(img[j] for img in images)
                hi = max(img[j] for img in images)
                ranges.append(range(floor_frac(lo) - 1, ceil_frac(hi) + 2))
            for k in itertools.product(*ranges):
                p = tuple(
                    rep[i] + sum(self.lattice.basis[i][j] * k[j] for j in range(self.dim))
                    for i in range(self.dim)
                )
                if all(0 <= x < cf for x in p):
                    pts.append(p)
        expected = len(self.reps) * (cf ** self.dim) / abs(self.lattice.det)
        assert Fraction(len(pts)) == expected, "rectangularization lost points"
        return periodic_set(lat, pts)


def periodic_set(lattice: Lattice, reps: Sequence[Sequence]) -> PeriodicSet:
    """Checked constructor: reps reduced into the fundamental cell, deduplicated."""
    reduced = sorted({_reduce_mod(lattice, tuple(as_fraction(x) for x in r)) for r in reps})
    if len(reduced) != len(reps):
        raise ValueError("coset representatives are not distinct mod the lattice")
    zero = tuple(Fraction(0) for _ in range(lattice.dim))
    return PeriodicSet(lattice, tuple(reduced), contains_zero=zero in reduced)


def density(lam: PeriodicSet) -> Fraction:
    return lam.density()


def normalize_rectangular(lam: PeriodicSet) -> PeriodicSet:
    """Equal point set over a diagonal period; see PeriodicSet.rectangularized."""
    return lam.rectangularized()


@dataclass(frozen=True)
class WindowSet:
    """Finite point list inside a box window; entries may be exact or float."""

    points: tuple[tuple, ...]
    window: Box

    @property
    def dim(self) -> int:
        return self.window.dim

    def float_points(self) -> list[tuple[float, ...]]:
        return [tuple(float(x) for x in p) for p in self.points]


@dataclass(frozen=True)
class DualWeight:
    xi: Vec
    weight: complex
    exact_zero: bool | None = None


def weight(lam: PeriodicSet, xi: Sequence) -> DualWeight:
    """Atom mass of the dual comb at ξ: Σ_a exp(-2πi⟨ξ,a⟩).

    ξ must lie on the dual lattice (checked exactly).  When the inner
    products are rational with common denominator q ≤ 10^6 the vanishing of
    the sum is decided exactly: Σ ζ_q^{p_a} = 0 iff Φ_q divides Σ x^{p_a}.
    """
    xi = tuple(as_fraction(x) for x in xi)
    if len(xi) != lam.dim:
        raise DimensionMismatch("dual point dimension mismatch")
    coords = mat_vec(mat_transpose(lam.lattice.basis), xi)
    if not all(c.denominator == 1 for c in coords):
        raise NotDualPoint(f"{xi} is not in the dual lattice")
    phases = [sum(x * a for x, a in zip(xi, rep)) % 1 for rep in lam.reps]
    w = sum(cmath.exp(-2j * cmath.pi * float(ph)) for ph in phases)
    q = lcm_int([ph.denominator for ph in phases]) if phases else 1
    exact: bool | None = None
    if q <= _CYCLOTOMIC_CAP:
        exact = sum_of_roots_of_unity_is_zero(
            [int(ph * q) for ph in phases], q
        )
    return DualWeight(xi, w, exact)


def enumerate_dual_in(lam: PeriodicSet, body: DifferenceBody) -> list[Vec]:
    """All nonzero dual-lattice points strictly inside the open body, sorted."""
    if body.dim != lam.dim:
        raise DimensionMismatch("body dimension mismatch")
    dl = dual(lam.lattice)
    bb = body.bounding()
    # Integer coordinates m with dual_basis·m in the bounding box.
    corners = itertools.product(*zip(bb.lo, bb.hi))
    to_coords = mat_transpose(lam.lattice.basis)  # inverse of dual basis
    images = [mat_vec(to_coords, tuple(c)) for c in corners]
    ranges = []
    total = 1
    for j in range(lam.dim):
        lo = min(img[j] for img in images)
        hi = max(img[j] for img in images)
        r = range(floor_frac(lo) - 1, ceil_frac(hi) + 2)
        total *= len(r)
        ranges.append(r)
    if total > _ENUM_CAP:
        raise RadiusTooLarge("dual enumeration window too large")
    zero = tuple(Fraction(0) for _ in range(lam.dim))
    out = []
    for m in itertools.product(*ranges):
        xi = mat_vec(dl.basis, tuple(Fraction(k) for k in m))
        if xi == zero:
            continue
        if any(b.contains(xi) for b in body.boxes):
            out.append(xi)
    return sorted(out)


def window(lam: PeriodicSet, w: Box) -> WindowSet:
    """All points of Λ strictly inside the box window, exact coordinates."""
    if w.dim != lam.dim:
        raise DimensionMismatch("window dimension mismatch")
    minv = mat_inv(lam.lattice.basis)
    pts: list[Vec] = []
    for rep in lam.reps:
        corners = itertools.product(
            *[(w.lo[j] - rep[j], w.hi[j] - rep[j]) for j in range(lam.dim)]
        )
        images = [mat_vec(minv, tuple(c)) for c in corners]
        ranges = []
        total = 1
        for j in range(lam.dim):
            lo = min(img[j] for img in images)
            hi = max(img[j] for img in images)
            r = range(floor_frac(lo) - 1, ceil_frac(hi) + 2)
            total *= len(r)
            ranges.append(r)
        if total > _ENUM_CAP:
            raise RadiusTooLarge("window enumeration too large")
        for k in itertools.product(*ranges):
            p = tuple(
                rep[i] + sum(lam.lattice.basis[i][j] * k[j] for j in range(lam.dim))
                for i in range(lam.dim)
            )
            if w.contains(p):
                pts.append(p)
    return WindowSet(tuple(sorted(pts)), w)


def shifted_column_cubes(shifts: Sequence, w: Box) -> WindowSet:
    """Planar column tiling translates: column n carries points (n, m + s_{n mod len}).

    Shifts may be exact rationals or floats; floats make the set suitable only
    for the numeric (windowed) checks.
    """
    if w.dim != 2:
        raise DimensionMismatch("shifted columns live in the plane")
    parsed = [as_fraction(s) if not isinstance(s, float) else s for s in shifts]
    if not parsed:
        raise ValueError("need at least one shift")
    pts = []
    n_lo, n_hi = floor_frac(as_fraction(w.lo[0])) , ceil_frac(as_fraction(w.hi[0]))
    for n in range(n_lo, n_hi + 1):
        if not (w.lo[0] < n < w.hi[0]):
            continue
        s = parsed[n % len(parsed)]
        if isinstance(s, Fraction):
            m_lo = floor_frac(w.lo[1] - s)
            m_hi = ceil_frac(w.hi[1] - s)
            for m in range(m_lo, m_hi + 1):
                y = m + s
                if w.lo[1] < y < w.hi[1]:
                    pts.append((Fraction(n), y))
        else:
            m_lo = floor_frac(as_fraction(w.lo[1])) - 2
            m_hi = ceil_frac(as_fraction(w.hi[1])) + 2
            for m in range(m_lo, m_hi + 1):
                y = m + s
                if float(w.lo[1]) < y < float(w.hi[1]):
                    pts.append((float(n), y))
    return WindowSet(tuple(sorted(pts, key=lambda p: tuple(map(float, p)))), w)


def density_estimate(s: WindowSet, r: float) -> dict:
    """Sampled density over boxes of side 2r: mean estimate and sup bound.

    Windows are boxes throughout this toolkit (not balls); for periodic sets
    the asymptotic density is the same either way, for irregular sets this is
    an estimate over sampled centers, never a certificate.
    """
    d = s.dim
    lo = [float(x) for x in s.window.lo]
    hi = [float(x) for x in s.window.hi]
    if any(hi[j] - lo[j] <= 2 * r for j in range(d)):
        raise RadiusTooLarge("sampling radius exceeds half the window side")
    pts = s.float_points()
    centers_axes = []
    for j in range(d):
        a, b = lo[j] + r, hi[j] - r
        n = max(2, min(8, int((b - a) / max(r, 1e-9)) + 1))
        centers_axes.append([a + (b - a) * i / (n - 1) for i in range(n)])
    counts = []
    for c in itertools.product(*centers_axes):
        k = sum(
            1 for p in pts if all(abs(p[j] - c[j]) < r for j in range(d))
        )
        counts.append(k)
    vol = (2 * r) ** d
    return {
        "estimate": (sum(counts) / len(counts)) / vol,
        "sup_bound": max(counts) / vol,
    }
