"""Executable criteria: orthogonality, spectra, tilings, packing regions.

Each check returns a ternary Verdict with witness data.  Exact paths
(rational lattices, structured zero sets, exact multiplicity) emit bare
Holds/Fails certificates; numeric paths (windowed point sets, grid scans)
never emit a bare Holds when a tolerance was load-bearing; they either
carry their margins or come back Inconclusive.

The three theorem-shaped harnesses (transfer, duality round-trip, measure
bound) treat a violated conclusion as Fails: the underlying implications
hold unconditionally, so a failure there flags an implementation bug, not
a mathematical discovery.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    IntegralMismatch,
    MeasureNotOne,
    PreconditionFailed,
    RadiusTooSmall,
)
from .fourier import (
    Membership,
    ZeroSet,
    coset_in_zero_set,
    default_tol,
    ft_indicator,
    in_zero_set,
    irrational_family_in_interval,
    rational_family_in_interval,
    tail_bound,
    zero_set,
)
from .geometry import Box, Domain, box, minkowski_difference, multiplicity
from .kernels import power_sum_field
from .lattice import (
    DualWeight,
    PeriodicSet,
    WindowSet,
    enumerate_dual_in,
    weight,
    window,
)

DEFAULT_TOL = 1e-9
DEFAULT_GRID = 64
DEFAULT_WINDOW_RADIUS = {1: 1000.0, 2: 60.0, 3: 30.0}


class Status(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: dict | None = None
    margins: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.status == Status.FAILS and self.witness is None:
            raise ValueError("a failing verdict needs a witness")
        if self.status == Status.INCONCLUSIVE and not any(
            k.startswith("near") for k in self.margins
        ):
            raise ValueError("an inconclusive verdict needs a near margin")


def _holds(margins: dict | None = None, notes: Sequence[str] = ()) -> Verdict:
    return Verdict(Status.HOLDS, None, margins or {}, tuple(notes))


def _fails(witness: dict, margins: dict | None = None, notes: Sequence[str] = ()) -> Verdict:
    return Verdict(Status.FAILS, witness, margins or {}, tuple(notes))


def _inconclusive(
    margins: dict, witness: dict | None = None, notes: Sequence[str] = ()
) -> Verdict:
    return Verdict(Status.INCONCLUSIVE, witness, margins, tuple(notes))


@dataclass(frozen=True)
class SpectrumCertificate:
    density: Fraction
    dual_points_checked: tuple[DualWeight, ...]
    all_exact: bool


@dataclass(frozen=True)
class GridSpec:
    """Sampling grid: points_per_axis offsets i/n per axis over an open cell."""

    cell: Box
    points_per_axis: int = DEFAULT_GRID

    def points(self) -> np.ndarray:
        n = self.points_per_axis
        axes = [
            float(lo) + (float(hi) - float(lo)) * np.arange(n) / n
            for lo, hi in zip(self.cell.lo, self.cell.hi)
        ]
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)


def unit_cell_grid(dim: int, points_per_axis: int = DEFAULT_GRID) -> GridSpec:
    return GridSpec(box([0] * dim, [1] * dim), points_per_axis)


@dataclass(frozen=True)
class TileSpec:
    """A nonnegative unit-integral tile: an indicator or a power spectrum."""

    kind: str  # "indicator" | "power_spectrum"
    domain: Domain

    def integral(self) -> Fraction:
        # Both integrals equal |Ω|: trivially for the indicator, by Parseval for |1̂_Ω|².
        return self.domain.measure()


# ---------------------------------------------------------------------------
# Orthogonality


def _pair_difference(a: tuple, b: tuple):
    out = []
    for x, y in zip(a, b):
        if isinstance(x, float) or isinstance(y, float):
            out.append(float(x) - float(y))
        else:
            out.append(x - y)
    return tuple(out)


def _orthogonality_over_pairs(z: ZeroSet, points: Sequence[tuple], tol: float) -> Verdict:
    near_worst = None
    numeric_used = False
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            diff = _pair_difference(points[i], points[j])
            exact = all(not isinstance(c, float) for c in diff)
            numeric_used = numeric_used or not exact or not z.structured
            m = in_zero_set(z, diff, tol)
            if m == Membership.NO:
                value = abs(ft_indicator(z.domain, [float(c) for c in diff]))
                return _fails(
                    {
                        "kind": "pair",
                        "a": points[i],
                        "b": points[j],
                        "difference": diff,
                        "abs_ft": value,
                    }
                )
            if m == Membership.NEAR:
                value = abs(ft_indicator(z.domain, [float(c) for c in diff]))
                near_worst = max(near_worst or 0.0, value)
    if near_worst is not None:
        return _inconclusive(
            {"near_zero_margin": near_worst, "tol": tol},
            notes=("some pairwise differences sit in the near band of the zero test",),
        )
    margins = {"pairs_checked": float(len(points) * (len(points) - 1) // 2)}
    if numeric_used:
        margins["tol"] = tol
    return _holds(margins)


def check_orthogonality(om: Domain, lam, tol: float | None = None) -> Verdict:
    """Are all nonzero differences of Λ zeros of 1̂_Ω?

    Periodic Λ with a structured zero set is decided exactly, whole cosets
    at a time; windowed sets are checked pairwise (exact where the points
    are rational).  A numeric-only zero set downgrades a pass to
    Inconclusive since a grid tolerance was load-bearing.
    """
    t = default_tol(om) if tol is None else tol
    z = zero_set(om, t)
    if isinstance(lam, PeriodicSet):
        if z.structured:
            rect = lam.rectangularized()
            periods = tuple(rect.lattice.basis[j][j] for j in range(rect.dim))
            deltas = sorted(
                {
                    tuple(a - b for a, b in zip(r1, r2))
                    for r1 in rect.reps
                    for r2 in rect.reps
                }
            )
            for delta in deltas:
                ok, witness = coset_in_zero_set(z, delta, periods)
                if not ok:
                    value = abs(ft_indicator(om, [float(c) for c in witness]))
                    return _fails(
                        {
                            "kind": "difference",
                            "difference": witness,
                            "coset_offset": delta,
                            "abs_ft": value,
                        }
                    )
            return _holds({"cosets_checked": float(len(deltas))})
        rect = lam.rectangularized()
        radius = 3 * max(rect.lattice.basis[j][j] for j in range(rect.dim))
        radius += om.diameter()
        ws = window(lam, box([-radius] * lam.dim, [radius] * lam.dim))
        verdict = _orthogonality_over_pairs(z, ws.points, t)
        if verdict.status == Status.HOLDS:
            return _inconclusive(
                {"near_zero_margin": t, **verdict.margins},
                notes=("numeric-only zero set: windowed pass is evidence, not a certificate",),
            )
        return verdict
    return _orthogonality_over_pairs(z, lam.points, t)


# ---------------------------------------------------------------------------
# Spectra (periodic, exact dual route)


def check_spectrum_periodic(
    om: Domain, lam: PeriodicSet, tol: float = DEFAULT_TOL
) -> tuple[Verdict, SpectrumCertificate]:
    """Spectrum test in the dual lattice: density 1 and no surviving dual atom.

    Λ is a spectrum of Ω (measure 1) iff dens Λ = 1 and every nonzero dual
    point inside the open difference body Ω-Ω carries a vanishing
    exponential-sum weight.  Weights with rational phases are decided
    exactly via cyclotomic divisibility.
    """
    if om.measure() != 1:
        raise MeasureNotOne(f"|Ω| = {om.measure()} but the spectrum test needs measure 1")
    dens = lam.density()
    if dens != 1:
        cert = SpectrumCertificate(dens, (), True)
        return _fails({"kind": "density", "value": dens}), cert
    body = minkowski_difference(om, om)
    weights = tuple(weight(lam, xi) for xi in enumerate_dual_in(lam, body))
    cert = SpectrumCertificate(
        dens, weights, all(w.exact_zero is not None for w in weights)
    )
    scale = max(1, len(lam.reps))
    near = []
    for dw in weights:
        if dw.exact_zero is True:
            continue
        if dw.exact_zero is False:
            return (
                _fails({"kind": "dual_point", "xi": dw.xi, "weight": dw.weight}),
                cert,
            )
        a = abs(dw.weight)
        if a < tol * scale:
            continue
        if a <= 11 * tol * scale:
            near.append((dw, a))
            continue
        return _fails({"kind": "dual_point", "xi": dw.xi, "weight": dw.weight}), cert
    if near:
        dw, a = max(near, key=lambda p: p[1])
        return (
            _inconclusive(
                {"near_weight": a, "tol": tol},
                witness={"kind": "dual_point", "xi": dw.xi, "weight": dw.weight},
                notes=("dual weight in the near band; exact test unavailable",),
            ),
            cert,
        )
    return _holds({"dual_points_checked": float(len(weights))}), cert


# ---------------------------------------------------------------------------
# Set tilings (exact multiplicity)


def check_set_tiling(om: Domain, lam: PeriodicSet, level: int = 1) -> Verdict:
    """Does Ω + Λ tile at the given level?  Exact cell-slicing verdict."""
    mult = multiplicity(om, lam, target_level=level)
    if mult.is_tiling(level):
        return _holds({"cells": float(len(mult.cells))})
    cell, lv = mult.defect_cells[0]
    kind = "gap" if lv < level else "overlap"
    return _fails(
        {
            "kind": "defect_cell",
            "defect": kind,
            "cell_lo": cell.lo,
            "cell_hi": cell.hi,
            "level": lv,
        },
        margins={"level_min": float(mult.level_min), "level_max": float(mult.level_max)},
    )


# ---------------------------------------------------------------------------
# Windowed defect checks (numeric route for non-periodic sets)


def _effective_radius(ws: WindowSet, grid: GridSpec) -> float:
    gaps = []
    for j in range(ws.dim):
        gaps.append(float(grid.cell.lo[j]) - float(ws.window.lo[j]))
        gaps.append(float(ws.window.hi[j]) - float(grid.cell.hi[j]))
    return min(gaps)


def _field(om: Domain, ws: WindowSet, grid: GridSpec, threads: int) -> tuple[np.ndarray, np.ndarray]:
    xs = grid.points()
    pts = np.asarray(ws.float_points(), dtype=np.float64).reshape(-1, om.dim)
    lo = np.array([[float(v) for v in b.lo] for b in om.boxes])
    hi = np.array([[float(v) for v in b.hi] for b in om.boxes])
    if threads <= 1 or len(xs) < 2 * threads:
        return xs, power_sum_field(lo, hi, pts, xs)
    chunks = np.array_split(np.arange(len(xs)), threads)
    out = np.empty(len(xs))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            (idx, pool.submit(power_sum_field, lo, hi, pts, xs[idx]))
            for idx in chunks
            if len(idx)
        ]
        for idx, fut in futures:
            out[idx] = fut.result()
    return xs, out


def _estimate_density_bound(ws: WindowSet) -> float:
    from .lattice import density_estimate

    side = min(
        float(hi) - float(lo) for lo, hi in zip(ws.window.lo, ws.window.hi)
    )
    r = min(5.0, side / 4)
    est = density_estimate(ws, r)
    return max(est["sup_bound"] * 1.1, 1e-6)


def _defect_scan(
    om: Domain,
    ws: WindowSet,
    grid: GridSpec | None,
    rho: float | None,
    tol: float,
    mode: str,
    level: float,
    threads: int,
) -> Verdict:
    g = grid or unit_cell_grid(om.dim)
    r_eff = _effective_radius(ws, g)
    if r_eff <= float(om.diameter()):
        raise RadiusTooSmall(
            f"window radius leaves effective tail radius {r_eff}, "
            f"need more than the domain diameter {float(om.diameter())}"
        )
    density_bound = _estimate_density_bound(ws) if rho is None else rho
    tail = tail_bound(om, density_bound, r_eff)
    xs, vals = _field(om, ws, g, threads)
    if mode == "packing":
        idx = int(np.argmax(vals))
        defect = float(vals[idx]) - 1.0
        ok = float(vals[idx]) <= 1.0 + tail.bound + tol
    else:
        idx = int(np.argmax(np.abs(vals - level)))
        defect = float(abs(vals[idx] - level))
        ok = defect <= tail.bound + tol
    margins = {
        "max_defect": defect if mode != "packing" else max(defect, 0.0),
        "max_value": float(vals[idx]),
        "tail_bound": tail.bound,
        "tol": tol,
        "effective_radius": r_eff,
        "density_bound": density_bound,
    }
    witness = {"kind": "grid_point", "x": tuple(float(c) for c in xs[idx]), "value": float(vals[idx])}
    if not tail.rigorous:
        margins["near_tail_margin"] = tail.bound
        return _inconclusive(
            margins,
            witness=witness,
            notes=("tail bound is not rigorous for this domain; defect is evidence only",),
        )
    if ok:
        return _holds(margins, notes=("defect within rigorous tail allowance",))
    return _fails(witness, margins)


def check_packing_defect(
    om: Domain,
    ws: WindowSet,
    grid: GridSpec | None = None,
    rho: float | None = None,
    tol: float = DEFAULT_TOL,
    threads: int = 1,
) -> Verdict:
    """Windowed packing check of |1̂_Ω|² + S: max sampled sum vs 1 plus tail."""
    return _defect_scan(om, ws, grid, rho, tol, "packing", 1.0, threads)


def check_tiling_defect(
    om: Domain,
    ws: WindowSet,
    grid: GridSpec | None = None,
    rho: float | None = None,
    tol: float = 1e-9,
    level: float = 1.0,
    threads: int = 1,
) -> Verdict:
    """Windowed tiling check of |1̂_Ω|² + S: max sampled |sum - level| vs tail."""
    return _defect_scan(om, ws, grid, rho, tol, "tiling", level, threads)


def check_set_tiling_windowed(
    om: Domain, ws: WindowSet, grid: GridSpec | None = None
) -> Verdict:
    """Sampled indicator-coverage check for non-periodic translate sets.

    Counts translates covering each grid point (skipping points too close
    to a translate boundary for float membership to be trustworthy).  A
    clean count of 1 everywhere is evidence, not a certificate, so a pass
    comes back Inconclusive.
    """
    g = grid or unit_cell_grid(om.dim)
    xs = g.points()
    pts = ws.float_points()
    lo = np.array([[float(v) for v in b.lo] for b in om.boxes])
    hi = np.array([[float(v) for v in b.hi] for b in om.boxes])
    eps = 1e-9
    diam = float(om.diameter())
    checked = 0
    for x in xs:
        count = 0
        boundary = False
        for p in pts:
            if any(abs(x[j] - p[j]) > diam for j in range(len(x))):
                continue
            u = x - np.asarray(p)
            inside = np.all((u > lo + eps) & (u < hi - eps), axis=1)
            near = np.all((u > lo - eps) & (u < hi + eps), axis=1)
            count += int(np.count_nonzero(inside))
            if np.count_nonzero(near) != np.count_nonzero(inside):
                boundary = True
        if boundary:
            continue
        checked += 1
        if count != 1:
            return _fails(
                {
                    "kind": "coverage_point",
                    "x": tuple(float(c) for c in x),
                    "count": count,
                },
                margins={"points_checked": float(checked)},
            )
    return _inconclusive(
        {"near_boundary_eps": eps, "points_checked": float(checked)},
        notes=("sampled coverage equals 1 everywhere checked; not a certificate",),
    )


# ---------------------------------------------------------------------------
# Orthogonal packing regions


def check_opr(om: Domain, region: Domain, tol: float | None = None) -> Verdict:
    """Is (region - region) disjoint from Z(1̂_Ω)?

    Exact for structured zero sets: each rational phase family is
    intersected with every open box of the difference body; irrational
    families use their error bounds (strictly inside → Fails, straddling a
    boundary → Inconclusive).  Numeric-only zero sets get a grid scan and
    can never certify, so they return Inconclusive either way.
    """
    t = default_tol(om) if tol is None else tol
    z = zero_set(om, t)
    body = minkowski_difference(region, region)
    if z.structured:
        near_hits: list[float] = []
        for j, ar in enumerate(z.axes):
            for b in body.boxes:
                a_j, b_j = b.lo[j], b.hi[j]
                for phase in ar.rational_phases:
                    v = rational_family_in_interval(phase, ar.period, a_j, b_j)
                    if v is not None:
                        point = list(b.midpoint())
                        point[j] = v
                        return _fails(
                            {"kind": "zero_in_difference_body", "point": tuple(point)}
                        )
                for approx, err in ar.irrational_phases:
                    hit = irrational_family_in_interval(
                        approx, err, float(ar.period), float(a_j), float(b_j)
                    )
                    if hit is None:
                        continue
                    kind, v = hit
                    point = [float(c) for c in b.midpoint()]
                    point[j] = v
                    if kind == "inside":
                        return _fails(
                            {"kind": "zero_in_difference_body", "point": tuple(point)}
                        )
                    near_hits.append(v)
        if near_hits:
            return _inconclusive(
                {"near_boundary_roots": float(len(near_hits))},
                notes=("an irrational root family straddles the difference-body boundary",),
            )
        return _holds({"boxes_checked": float(len(body.boxes))})
    # numeric fallback: scan each box of the difference body
    n = 33
    vmin, argmin = float("inf"), None
    for b in body.boxes:
        axes = [
            np.linspace(float(lo), float(hi), n + 2)[1:-1]
            for lo, hi in zip(b.lo, b.hi)
        ]
        mesh = np.meshgrid(*axes, indexing="ij")
        pts = np.stack([m.ravel() for m in mesh], axis=-1)
        for p in pts:
            v = abs(ft_indicator(om, list(p)))
            if v < vmin:
                vmin, argmin = v, tuple(float(c) for c in p)
    if vmin < t:
        return _inconclusive(
            {"near_zero_value": vmin, "tol": t},
            witness={"kind": "near_zero", "point": argmin, "abs_ft": vmin},
            notes=("grid scan found a near-zero of 1̂_Ω inside the difference body",),
        )
    return _inconclusive(
        {"near_zero_value": vmin, "grid_per_axis": float(n)},
        notes=("numeric zero set: no near-zero found on the scan grid; not a certificate",),
    )


def check_tight_pair(om: Domain, region: Domain, tol: float | None = None) -> Verdict:
    """Mutually tight: both measures 1 and packing regions for each other."""
    m_om, m_d = om.measure(), region.measure()
    if m_om != 1 or m_d != 1:
        return _fails(
            {"kind": "measure", "omega_measure": m_om, "region_measure": m_d}
        )
    forward = check_opr(om, region, tol)
    backward = check_opr(region, om, tol)
    for name, v in (("region vs Z(1̂_Ω)", forward), ("Ω vs Z(1̂_region)", backward)):
        if v.status == Status.FAILS:
            return _fails(v.witness, v.margins, notes=(f"direction failed: {name}",))
    for v in (forward, backward):
        if v.status == Status.INCONCLUSIVE:
            return _inconclusive(v.margins, v.witness, v.notes)
    return _holds(
        {
            **{f"forward_{k}": v for k, v in forward.margins.items()},
            **{f"backward_{k}": v for k, v in backward.margins.items()},
        }
    )


# ---------------------------------------------------------------------------
# Keller-type condition


def check_keller(om: Domain, lam: PeriodicSet, region: Domain) -> Verdict:
    """Every nonzero λ of a tiling set lies in Z(1̂_D) for the tight partner D."""
    tp = check_tight_pair(om, region)
    if tp.status != Status.HOLDS:
        raise PreconditionFailed("(Ω, D) is not a verified tight pair")
    lam0, offset = lam.normalized_to_zero()
    notes = []
    if any(c != 0 for c in offset):
        notes.append(f"Λ translated by {offset} so that 0 ∈ Λ")
    st = check_set_tiling(om, lam0)
    if st.status != Status.HOLDS:
        raise PreconditionFailed("Ω + Λ is not a tiling")
    zd = zero_set(region)
    if not zd.structured:
        return _inconclusive(
            {"near_zero_margin": zd.tol},
            notes=tuple(notes) + ("numeric-only zero set for the packing region",),
        )
    rect = lam0.rectangularized()
    periods = tuple(rect.lattice.basis[j][j] for j in range(rect.dim))
    for rep in rect.reps:
        ok, witness = coset_in_zero_set(zd, rep, periods)
        if not ok:
            return _fails(
                {"kind": "lattice_point", "point": witness, "coset_offset": rep},
                notes=tuple(notes),
            )
    return _holds({"cosets_checked": float(len(rect.reps))}, notes=tuple(notes))


# ---------------------------------------------------------------------------
# Two-tile transfer harness


def _packs(spec: TileSpec, lam: PeriodicSet) -> bool:
    if spec.kind == "indicator":
        return multiplicity(spec.domain, lam).level_max <= 1
    return check_orthogonality(spec.domain, lam).status == Status.HOLDS


def _tiles(spec: TileSpec, lam: PeriodicSet, tol: float) -> bool:
    if spec.kind == "indicator":
        return check_set_tiling(spec.domain, lam).status == Status.HOLDS
    verdict, _ = check_spectrum_periodic(spec.domain, lam, tol)
    return verdict.status == Status.HOLDS


def transfer_harness(
    f_spec: TileSpec, g_spec: TileSpec, lam: PeriodicSet, tol: float = DEFAULT_TOL
) -> Verdict:
    """Cross-check: two unit-integral tiles that both pack with Λ must agree
    on whether they tile.  Disagreement flags a bug in one of the pipelines
    (exact multiplicity vs the dual-lattice route)."""
    if f_spec.integral() != g_spec.integral() or f_spec.integral() != 1:
        raise IntegralMismatch(
            f"tile integrals {f_spec.integral()} and {g_spec.integral()} must both be 1"
        )
    packs_f, packs_g = _packs(f_spec, lam), _packs(g_spec, lam)
    if not (packs_f and packs_g):
        return _inconclusive(
            {"near_packing_precondition": 0.0},
            notes=(
                f"packing precondition not established (f packs: {packs_f}, g packs: {packs_g})",
            ),
        )
    tiles_f, tiles_g = _tiles(f_spec, lam, tol), _tiles(g_spec, lam, tol)
    if tiles_f == tiles_g:
        return _holds(
            {"both_tile": float(tiles_f)},
            notes=(f"tiling statuses agree (f: {tiles_f}, g: {tiles_g})",),
        )
    return _fails(
        {
            "kind": "transfer_disagreement",
            "f": {"kind": f_spec.kind, "tiles": tiles_f},
            "g": {"kind": g_spec.kind, "tiles": tiles_g},
        }
    )


# ---------------------------------------------------------------------------
# Measure bound and duality round-trip harnesses


def check_opr_measure_bound(om: Domain, lam: PeriodicSet, region: Domain) -> Verdict:
    """For a tiling Ω and verified packing region D, |D| ≤ 1 must hold exactly."""
    if check_set_tiling(om, lam).status != Status.HOLDS:
        raise PreconditionFailed("Ω + Λ is not a tiling")
    opr = check_opr(om, region)
    if opr.status != Status.HOLDS:
        raise PreconditionFailed("D is not a verified packing region for Ω")
    m = region.measure()
    if m <= 1:
        return _holds({"region_measure": float(m)})
    return _fails({"kind": "measure_bound", "region_measure": m})


def duality_roundtrip(
    om: Domain, region: Domain, lam: PeriodicSet, tol: float = DEFAULT_TOL
) -> Verdict:
    """For a tight pair, 'Λ is a spectrum of Ω' and 'D + Λ tiles' must agree."""
    tp = check_tight_pair(om, region)
    if tp.status != Status.HOLDS:
        raise PreconditionFailed("(Ω, D) is not a verified tight pair")
    spec_verdict, _ = check_spectrum_periodic(om, lam, tol)
    tile_verdict = check_set_tiling(region, lam)
    if Status.INCONCLUSIVE in (spec_verdict.status, tile_verdict.status):
        return _inconclusive(
            {"near_subcheck": 0.0},
            notes=(
                f"sub-verdicts: spectrum {spec_verdict.status.value}, "
                f"tiling {tile_verdict.status.value}",
            ),
        )
    agree = spec_verdict.status == tile_verdict.status
    if agree:
        return _holds(
            {"both_hold": float(spec_verdict.status == Status.HOLDS)},
            notes=(f"agreement: both {spec_verdict.status.value}",),
        )
    return _fails(
        {
            "kind": "duality_disagreement",
            "spectrum_status": spec_verdict.status.value,
            "tiling_status": tile_verdict.status.value,
            "spectrum_witness": spec_verdict.witness,
            "tiling_witness": tile_verdict.witness,
        }
    )
