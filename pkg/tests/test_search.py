"""Search: compatibility graphs, clique enumeration, duality scans."""

import itertools
from fractions import Fraction

import pytest

from spectile.criteria import Status, check_set_tiling, check_spectrum_periodic
from spectile.errors import PreconditionFailed, UnstructuredZeroSet
from spectile.geometry import (
    Box,
    Domain,
    interval,
    two_interval_domain,
    unit_cube,
    validate_domain,
)
from spectile.lattice import diagonal_lattice, periodic_set
from spectile.search import (
    Mode,
    SearchProblem,
    compatibility_graph,
    duality_scan,
    search_spectra,
    search_tilings,
)

F = Fraction


def problem(dom, period_entries, step, mode, normalize=True):
    return SearchProblem(
        dom, diagonal_lattice(period_entries), as_frac(step), mode, normalize
    )


def as_frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def reps_of(solutions):
    return sorted(s.reps for s in solutions)


def test_compatibility_graph_cube():
    p = problem(unit_cube(1), [2], F(1, 2), Mode.SPECTRA)
    g = compatibility_graph(p)
    assert g.vertices == ((F(0),), (F(1, 2),), (F(1),), (F(3, 2),))
    assert sorted(g.edges()) == [(0, 2), (1, 3)]


def test_compatibility_graph_two_interval():
    p = problem(two_interval_domain(), [2], F(1, 2), Mode.SPECTRA)
    g = compatibility_graph(p)
    assert sorted(g.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_compatibility_graph_no_edges():
    # period 1 with a half-step grid: difference 1/2 is never orthogonal for Q
    p = problem(unit_cube(1), [1], F(1, 2), Mode.SPECTRA)
    g = compatibility_graph(p)
    assert g.edges() == []


def test_compatibility_graph_unstructured():
    nonprod = Domain(
        (
            Box((F(0), F(0)), (F(1), F(1))),
            Box((F(1), F(1)), (F(2), F(2))),
        )
    )
    p = SearchProblem(nonprod, diagonal_lattice([2, 2]), F(1), Mode.SPECTRA)
    with pytest.raises(UnstructuredZeroSet):
        compatibility_graph(p)


def test_search_spectra_cube_unit_period():
    p = problem(unit_cube(1), [1], F(1, 2), Mode.SPECTRA)
    sols = search_spectra(p)
    assert reps_of(sols) == [((F(0),),)]


def test_search_spectra_two_interval():
    p = problem(two_interval_domain(), [2], F(1, 2), Mode.SPECTRA)
    sols = search_spectra(p)
    assert reps_of(sols) == [
        ((F(0),), (F(1, 2),)),
        ((F(0),), (F(3, 2),)),
    ]


def test_search_spectra_cube_period_two():
    p = problem(unit_cube(1), [2], F(1, 2), Mode.SPECTRA)
    sols = search_spectra(p)
    assert reps_of(sols) == [((F(0),), (F(1),))]


def test_search_tilings_cube():
    p = problem(unit_cube(1), [1], F(1, 2), Mode.TILINGS)
    assert reps_of(search_tilings(p)) == [((F(0),),)]


def test_search_tilings_two_interval():
    p = problem(two_interval_domain(), [2], F(1, 2), Mode.TILINGS)
    assert reps_of(search_tilings(p)) == [
        ((F(0),), (F(1, 2),)),
        ((F(0),), (F(3, 2),)),
    ]


def test_search_tilings_cube_2d_columns():
    p = SearchProblem(unit_cube(2), diagonal_lattice([2, 1]), F(1, 2), Mode.TILINGS)
    sols = reps_of(search_tilings(p))
    assert ((F(0), F(0)), (F(1), F(1, 2))) in sols
    assert ((F(0), F(0)), (F(1), F(0))) in sols


def test_search_zero_solutions():
    # two-interval with integer grid: difference 1 is not orthogonal
    p = problem(two_interval_domain(), [2], F(1), Mode.SPECTRA)
    assert search_spectra(p) == []


def test_search_unnormalized_includes_translates():
    p = problem(unit_cube(1), [1], F(1, 2), Mode.SPECTRA, normalize=False)
    sols = reps_of(search_spectra(p))
    assert sols == [((F(0),),), ((F(1, 2),),)]


def test_solutions_reverify_and_translation_closure():
    dom = two_interval_domain()
    p = problem(dom, [2], F(1, 2), Mode.SPECTRA)
    sols = search_spectra(p)
    all_reps = {s.reps for s in sols}
    step, period = F(1, 2), F(2)
    for s in sols:
        v, _ = check_spectrum_periodic(dom, s)
        assert v.status == Status.HOLDS
        shifted = [(r[0] + step) % period for r in s.reps]
        for base in shifted:
            variant = tuple(sorted(((x - base) % period,) for x in shifted))
            assert variant in all_reps


def test_completeness_vs_exhaustive_enumeration():
    """Backtracking must equal brute-force subset enumeration exactly."""
    cases = [
        (unit_cube(1), [2], F(1, 2), Mode.SPECTRA),
        (unit_cube(1), [2], F(1, 2), Mode.TILINGS),
        (two_interval_domain(), [2], F(1, 2), Mode.SPECTRA),
        (two_interval_domain(), [2], F(1, 4), Mode.SPECTRA),
        (unit_cube(1), [3], F(1, 2), Mode.TILINGS),
    ]
    for dom, period, step, mode in cases:
        p = problem(dom, period, step, mode)
        got = reps_of(search_spectra(p) if mode == Mode.SPECTRA else search_tilings(p))
        k = int(p.target_count())
        cands = p.candidates()
        assert len(cands) <= 12
        lat = diagonal_lattice(period)
        expected = []
        for combo in itertools.combinations(cands, k):
            if combo[0] != tuple([F(0)] * dom.dim):
                continue  # normalized search: 0 ∈ A
            lam = periodic_set(lat, combo)
            if mode == Mode.SPECTRA:
                verdict, _ = check_spectrum_periodic(dom, lam)
            else:
                verdict = check_set_tiling(dom, lam)
            if verdict.status == Status.HOLDS:
                expected.append(lam.reps)
        assert got == sorted(expected)


def test_duality_scan_cube():
    p = problem(unit_cube(1), [1], F(1, 2), Mode.SPECTRA)
    v = duality_scan(unit_cube(1), unit_cube(1), p)
    assert v.status == Status.HOLDS
    assert v.margins["solutions"] == 1.0


def test_duality_scan_two_interval():
    om = two_interval_domain()
    p = problem(om, [2], F(1, 2), Mode.SPECTRA)
    v = duality_scan(om, om, p)
    assert v.status == Status.HOLDS
    assert v.margins["solutions"] == 2.0


def test_duality_scan_precondition():
    p = problem(unit_cube(1), [1], F(1, 2), Mode.SPECTRA)
    with pytest.raises(PreconditionFailed):
        duality_scan(unit_cube(1), validate_domain([interval(0, 2)]), p)


def test_problem_validation():
    with pytest.raises(ValueError):
        problem(unit_cube(1), [2], F(3, 4), Mode.SPECTRA)  # 2/(3/4) is not integer
    with pytest.raises(ValueError):
        problem(validate_domain([interval(0, F(3, 4))]), [1], F(1, 4), Mode.SPECTRA)


def test_duality_scan_cube_2d_columns():
    q2 = unit_cube(2)
    p = SearchProblem(q2, diagonal_lattice([2, 1]), F(1, 2), Mode.SPECTRA)
    v = duality_scan(q2, q2, p)
    assert v.status == Status.HOLDS
    spectra = reps_of(search_spectra(p))
    assert ((F(0), F(0)), (F(1), F(1, 2))) in spectra
    assert ((F(0), F(0)), (F(1), F(0))) in spectra
