"""Criteria checks: orthogonality, spectra, tilings, packing regions, harnesses."""

import math
from fractions import Fraction

import pytest

from spectile.criteria import (
    GridSpec,
    Status,
    TileSpec,
    check_keller,
    check_opr,
    check_opr_measure_bound,
    check_orthogonality,
    check_packing_defect,
    check_set_tiling,
    check_set_tiling_windowed,
    check_spectrum_periodic,
    check_tight_pair,
    check_tiling_defect,
    duality_roundtrip,
    transfer_harness,
    unit_cell_grid,
)
from spectile.errors import (
    IntegralMismatch,
    MeasureNotOne,
    PreconditionFailed,
    RadiusTooSmall,
)
from spectile.geometry import (
    box,
    interval,
    two_interval_domain,
    unit_cube,
    validate_domain,
)
from spectile.lattice import (
    WindowSet,
    diagonal_lattice,
    integer_lattice,
    periodic_set,
    shifted_column_cubes,
    window,
)

F = Fraction


def zd(d):
    return periodic_set(integer_lattice(d), [[0] * d])


def half_shift_2z():
    return periodic_set(diagonal_lattice([2]), [[0], [F(1, 2)]])


# ---------------------------------------------------------------------------
# Orthogonality


def test_orthogonality_cube_lattice():
    for d in (1, 2):
        v = check_orthogonality(unit_cube(d), zd(d))
        assert v.status == Status.HOLDS


def test_orthogonality_cube_window_fails():
    ws = WindowSet(((F(0),), (F(1, 2),)), box([-1], [1]))
    v = check_orthogonality(unit_cube(1), ws)
    assert v.status == Status.FAILS
    assert abs(v.witness["difference"][0]) == F(1, 2)
    assert v.witness["abs_ft"] == pytest.approx(2 / math.pi)


def test_orthogonality_two_interval_window_holds():
    ws = WindowSet(((F(0),), (F(1, 2),)), box([-1], [1]))
    v = check_orthogonality(two_interval_domain(), ws)
    assert v.status == Status.HOLDS


def test_orthogonality_periodic_two_interval():
    v = check_orthogonality(two_interval_domain(), half_shift_2z())
    assert v.status == Status.HOLDS


def test_orthogonality_periodic_fails_with_witness():
    v = check_orthogonality(unit_cube(1), half_shift_2z())
    assert v.status == Status.FAILS
    assert abs(v.witness["difference"][0]) % 2 == F(1, 2)


# ---------------------------------------------------------------------------
# Spectrum (periodic)


def test_spectrum_cube_z2():
    v, cert = check_spectrum_periodic(unit_cube(2), zd(2))
    assert v.status == Status.HOLDS
    assert cert.all_exact
    assert cert.density == 1


def test_spectrum_cube_halfints_fails():
    v, cert = check_spectrum_periodic(unit_cube(1), half_shift_2z())
    assert v.status == Status.FAILS
    assert abs(v.witness["xi"][0]) == F(1, 2)
    assert abs(v.witness["weight"]) == pytest.approx(math.sqrt(2))


def test_spectrum_two_interval_half_shift():
    v, cert = check_spectrum_periodic(two_interval_domain(), half_shift_2z())
    assert v.status == Status.HOLDS
    assert sorted(w.xi for w in cert.dual_points_checked) == [(-1,), (1,)]
    assert all(w.exact_zero for w in cert.dual_points_checked)


def test_spectrum_shifted_columns_periodic():
    lam = periodic_set(diagonal_lattice([2, 1]), [[0, 0], [1, F(1, 2)]])
    v, cert = check_spectrum_periodic(unit_cube(2), lam)
    assert v.status == Status.HOLDS
    assert sorted(w.xi for w in cert.dual_points_checked) == [
        (F(-1, 2), F(0)),
        (F(1, 2), F(0)),
    ]


def test_spectrum_requires_measure_one():
    with pytest.raises(MeasureNotOne):
        check_spectrum_periodic(validate_domain([interval(0, 2)]), zd(1))


def test_spectrum_density_witness():
    lam = periodic_set(diagonal_lattice([2]), [[0]])
    v, _ = check_spectrum_periodic(unit_cube(1), lam)
    assert v.status == Status.FAILS
    assert v.witness["kind"] == "density"
    assert v.witness["value"] == F(1, 2)


def test_spectrum_implies_orthogonality():
    cases = [
        (unit_cube(1), zd(1)),
        (two_interval_domain(), half_shift_2z()),
        (two_interval_domain(), periodic_set(diagonal_lattice([2]), [[0], [F(3, 2)]])),
        (unit_cube(2), periodic_set(diagonal_lattice([2, 1]), [[0, 0], [1, F(1, 2)]])),
    ]
    for om, lam in cases:
        sv, _ = check_spectrum_periodic(om, lam)
        if sv.status == Status.HOLDS:
            assert check_orthogonality(om, lam).status == Status.HOLDS


# ---------------------------------------------------------------------------
# Set tilings


def test_set_tiling_cube():
    for d in (1, 2, 3):
        assert check_set_tiling(unit_cube(d), zd(d)).status == Status.HOLDS


def test_set_tiling_two_interval_three_half():
    lam = periodic_set(diagonal_lattice([2]), [[0], [F(3, 2)]])
    assert check_set_tiling(two_interval_domain(), lam).status == Status.HOLDS


def test_set_tiling_gap_witness():
    lam = periodic_set(diagonal_lattice([2]), [[0], [F(1, 3)]])
    v = check_set_tiling(unit_cube(1), lam)
    assert v.status == Status.FAILS
    assert v.witness["kind"] == "defect_cell"


def test_set_tiling_holds_implies_unit_density_times_measure():
    cases = [
        (unit_cube(1), zd(1)),
        (two_interval_domain(), half_shift_2z()),
        (unit_cube(2), periodic_set(diagonal_lattice([2, 1]), [[0, 0], [1, F(1, 3)]])),
    ]
    for om, lam in cases:
        if check_set_tiling(om, lam).status == Status.HOLDS:
            assert lam.density() * om.measure() == 1


# ---------------------------------------------------------------------------
# Windowed defect checks


def test_tiling_defect_cube_z_window():
    lam = zd(1)
    ws = window(lam, box([-1000], [1000]))
    grid = GridSpec(box([0], [1]), 512)
    v = check_tiling_defect(unit_cube(1), ws, grid, rho=1.0)
    assert v.status == Status.HOLDS
    assert v.margins["max_defect"] <= 3e-4
    assert v.margins["max_defect"] <= v.margins["tail_bound"] + 1e-9


def test_packing_defect_single_point():
    ws = WindowSet(((F(0),), ), box([-8], [8]))
    grid = GridSpec(box([0], [1]), 64)
    v = check_packing_defect(unit_cube(1), ws, grid, rho=0.5)
    assert v.status == Status.HOLDS
    assert v.margins["max_value"] == pytest.approx(1.0)
    assert v.witness is None


def test_packing_defect_overlap_fails():
    # {0, 1/4} is not orthogonal for Q: sampled sum exceeds 1 + tail
    lam = periodic_set(diagonal_lattice([1]), [[0], [F(1, 4)]])
    ws = window(lam, box([-500], [500]))
    grid = GridSpec(box([0], [1]), 64)
    v = check_packing_defect(unit_cube(1), ws, grid, rho=2.0)
    assert v.status == Status.FAILS
    assert v.witness["kind"] == "grid_point"


def test_tiling_defect_2d_columns_inconclusive():
    # undeclared 2D cube: numeric-only tail, so the verdict stays Inconclusive
    q2_plain = validate_domain([box([F(-1, 2), F(-1, 2)], [F(1, 2), F(1, 2)])])
    ws = shifted_column_cubes([F(0), F(1, 3)], box([-60, -60], [60, 60]))
    grid = GridSpec(box([0, 0], [1, 1]), 16)
    v = check_tiling_defect(q2_plain, ws, grid, rho=1.0)
    assert v.status == Status.INCONCLUSIVE
    assert v.margins["max_defect"] <= 2.5e-2


def test_defect_radius_guard():
    ws = window(zd(1), box([-1], [1]))
    with pytest.raises(RadiusTooSmall):
        check_tiling_defect(unit_cube(1), ws, GridSpec(box([0], [1]), 8), rho=1.0)


def test_set_tiling_windowed_columns():
    ws = shifted_column_cubes([F(0), F(1, 2)], box([-6, -6], [6, 6]))
    v = check_set_tiling_windowed(unit_cube(2), ws, unit_cell_grid(2, 8))
    assert v.status == Status.INCONCLUSIVE  # pass is evidence, not certificate
    bad = shifted_column_cubes([F(0), F(0)], box([-6, -6], [6, 6]))
    # columns without relative shift still tile; break it with a sparse set
    sparse = WindowSet(((0.0, 0.0),), box([-6, -6], [6, 6]))
    v2 = check_set_tiling_windowed(unit_cube(2), sparse, unit_cell_grid(2, 8))
    assert v2.status == Status.FAILS
    assert v2.witness["count"] == 0


# ---------------------------------------------------------------------------
# Orthogonal packing regions


def test_opr_cube_self():
    for d in (1, 2):
        assert check_opr(unit_cube(d), unit_cube(d)).status == Status.HOLDS


def test_opr_two_interval_self():
    om = two_interval_domain()
    assert check_opr(om, om).status == Status.HOLDS


def test_opr_long_interval_fails():
    v = check_opr(unit_cube(1), validate_domain([interval(0, 2)]))
    assert v.status == Status.FAILS
    (root,) = v.witness["point"]
    assert root != 0 and root % 1 == 0  # a nonzero integer root inside (-2, 2)


def test_tight_pair_examples():
    assert check_tight_pair(unit_cube(1), unit_cube(1)).status == Status.HOLDS
    om = two_interval_domain()
    assert check_tight_pair(om, om).status == Status.HOLDS
    v = check_tight_pair(unit_cube(1), validate_domain([interval(0, F(1, 2))]))
    assert v.status == Status.FAILS
    assert v.witness["kind"] == "measure"


def test_tight_pair_mixed_pair():
    # (0,1) is a tight packing region for Q and vice versa
    shifted = validate_domain([interval(0, 1)])
    assert check_tight_pair(unit_cube(1), shifted).status == Status.HOLDS


# ---------------------------------------------------------------------------
# Keller


def test_keller_cube_lattice():
    assert check_keller(unit_cube(2), zd(2), unit_cube(2)).status == Status.HOLDS


def test_keller_shifted_columns():
    lam = periodic_set(diagonal_lattice([2, 1]), [[0, 0], [1, F(1, 2)]])
    assert check_keller(unit_cube(2), lam, unit_cube(2)).status == Status.HOLDS


def test_keller_precondition_not_tiling():
    lam = periodic_set(diagonal_lattice([2]), [[0], [F(1, 3)]])
    with pytest.raises(PreconditionFailed):
        check_keller(unit_cube(1), lam, unit_cube(1))


def test_keller_precondition_not_tight_pair():
    with pytest.raises(PreconditionFailed):
        check_keller(unit_cube(1), zd(1), validate_domain([interval(0, F(1, 2))]))


# ---------------------------------------------------------------------------
# Transfer harness


def test_transfer_cube_lattice_both_tile():
    for d in (1, 2):
        v = transfer_harness(
            TileSpec("power_spectrum", unit_cube(d)),
            TileSpec("indicator", unit_cube(d)),
            zd(d),
        )
        assert v.status == Status.HOLDS
        assert v.margins["both_tile"] == 1.0


def test_transfer_sparse_lattice_neither_tiles():
    lam = periodic_set(diagonal_lattice([2]), [[0]])
    v = transfer_harness(
        TileSpec("power_spectrum", unit_cube(1)),
        TileSpec("indicator", unit_cube(1)),
        lam,
    )
    assert v.status == Status.HOLDS
    assert v.margins["both_tile"] == 0.0


def test_transfer_integral_mismatch():
    with pytest.raises(IntegralMismatch):
        transfer_harness(
            TileSpec("indicator", unit_cube(1)),
            TileSpec("indicator", validate_domain([interval(0, 2)])),
            zd(1),
        )


def test_transfer_packing_precondition():
    lam = periodic_set(diagonal_lattice([1]), [[0], [F(1, 4)]])
    v = transfer_harness(
        TileSpec("power_spectrum", unit_cube(1)),
        TileSpec("indicator", unit_cube(1)),
        lam,
    )
    assert v.status == Status.INCONCLUSIVE


# ---------------------------------------------------------------------------
# Measure bound and duality round-trip


def test_measure_bound_examples():
    assert (
        check_opr_measure_bound(unit_cube(1), zd(1), unit_cube(1)).status
        == Status.HOLDS
    )
    small = validate_domain([interval(F(-1, 4), F(1, 4))])
    v = check_opr_measure_bound(unit_cube(1), zd(1), small)
    assert v.status == Status.HOLDS
    assert v.margins["region_measure"] == 0.5
    om = two_interval_domain()
    assert (
        check_opr_measure_bound(om, half_shift_2z(), om).status == Status.HOLDS
    )


def test_measure_bound_precondition():
    lam = periodic_set(diagonal_lattice([2]), [[0]])
    with pytest.raises(PreconditionFailed):
        check_opr_measure_bound(unit_cube(1), lam, unit_cube(1))


def test_duality_roundtrip_agreement():
    assert duality_roundtrip(unit_cube(1), unit_cube(1), zd(1)).status == Status.HOLDS
    om = two_interval_domain()
    lam32 = periodic_set(diagonal_lattice([2]), [[0], [F(3, 2)]])
    assert duality_roundtrip(om, om, lam32).status == Status.HOLDS
    v = duality_roundtrip(unit_cube(1), unit_cube(1), half_shift_2z())
    assert v.status == Status.HOLDS  # both fail → agreement
    assert v.margins["both_hold"] == 0.0


def test_duality_roundtrip_precondition():
    with pytest.raises(PreconditionFailed):
        duality_roundtrip(unit_cube(1), validate_domain([interval(0, 2)]), zd(1))


# ---------------------------------------------------------------------------
# Translation invariance of verdict statuses


def test_translation_invariance_of_checks():
    om = two_interval_domain()
    lam = half_shift_2z()
    base_spec, _ = check_spectrum_periodic(om, lam)
    base_tile = check_set_tiling(om, lam)
    for t in (F(1, 3), F(-3, 4)):
        sv, _ = check_spectrum_periodic(om.translate([t]), lam.translate([t]))
        assert sv.status == base_spec.status
        tv = check_set_tiling(om.translate([t]), lam)
        assert tv.status == base_tile.status
        tv2 = check_set_tiling(om, lam.translate([t]))
        assert tv2.status == base_tile.status


def test_orthogonality_translation_invariance():
    om = two_interval_domain()
    lam = half_shift_2z()
    base = check_orthogonality(om, lam).status
    for t in (F(1, 5), F(-7, 3)):
        assert check_orthogonality(om.translate([t]), lam.translate([t])).status == base


def test_orthogonality_numeric_only_inconclusive_on_pass():
    # an undeclared 2D box has no structured zero set: a windowed pass is
    # evidence, so the verdict must stay Inconclusive
    q2_plain = validate_domain([box([F(-1, 2), F(-1, 2)], [F(1, 2), F(1, 2)])])
    v = check_orthogonality(q2_plain, zd(2))
    assert v.status == Status.INCONCLUSIVE
    v2 = check_orthogonality(q2_plain, periodic_set(diagonal_lattice([1, 1]), [[0, 0], [F(1, 4), 0]]))
    assert v2.status == Status.FAILS


def test_opr_numeric_only_inconclusive():
    q2_plain = validate_domain([box([F(-1, 2), F(-1, 2)], [F(1, 2), F(1, 2)])])
    v = check_opr(q2_plain, q2_plain)
    assert v.status == Status.INCONCLUSIVE


def test_defect_scan_empty_pointset():
    ws = WindowSet((), box([-8], [8]))
    v = check_packing_defect(unit_cube(1), ws, GridSpec(box([0], [1]), 8), rho=0.1)
    assert v.status == Status.HOLDS
    assert v.margins["max_value"] == 0.0


def _irrational_union():
    from spectile.geometry import interval, validate_domain

    return validate_domain(
        [
            (interval(0, F(3, 5))),
            (interval(1, F(6, 5))),
            (interval(F(7, 5), F(8, 5))),
            (interval(2, F(13, 5))),
        ]
    )


def test_opr_with_irrational_roots_holds_below_first_root():
    # D-D = (-1/4, 1/4) misses every root family (first root ≈ 0.3027)
    small = validate_domain([interval(0, F(1, 8))])
    assert check_opr(_irrational_union(), small).status == Status.HOLDS


def test_opr_irrational_root_inside_fails():
    # D-D = (-2/5, 2/5) strictly contains the irrational root ≈ 0.3027
    region = validate_domain([interval(0, F(2, 5))])
    v = check_opr(_irrational_union(), region)
    assert v.status == Status.FAILS
    (root,) = v.witness["point"]
    assert 0.30 < abs(root) < 0.31


def test_opr_irrational_root_straddling_boundary_inconclusive():
    from spectile.fourier import roots_1d

    ar = roots_1d(_irrational_union())
    approx = min(a for a, _ in ar.irrational_phases)
    # a rational body edge within the root's error bound: cannot certify
    edge = F(round(approx * 10**9), 10**9)
    region = validate_domain([interval(0, edge)])
    v = check_opr(_irrational_union(), region)
    assert v.status == Status.INCONCLUSIVE
