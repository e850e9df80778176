"""Enumerate all spectra / all tilings over a rational grid in one period.

Candidates are the grid points of one fundamental cell; a compatibility
graph marks pairs that can coexist (difference coset inside the zero set
for spectra, non-overlapping translates mod the period for tilings), and
solutions are the k-cliques that survive full verification.  Searches are
deliberately restricted to one rational period and grid: that is the regime
where verdicts are certificates.  Genuinely non-periodic translate sets
(irrational column shifts and the like) are out of search scope and are
handled only by the windowed numeric checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .criteria import (
    Status,
    Verdict,
    check_set_tiling,
    check_spectrum_periodic,
    check_tight_pair,
)
from .errors import PreconditionFailed, UnstructuredZeroSet
from .exact import Vec, count_integers_strictly_between
from .fourier import coset_in_zero_set, zero_set
from .geometry import Domain
from .lattice import Lattice, PeriodicSet, diagonal_lattice, periodic_set


class Mode(Enum):
    SPECTRA = "spectra"
    TILINGS = "tilings"


@dataclass(frozen=True)
class SearchProblem:
    domain: Domain
    period: Lattice
    grid_step: Fraction
    mode: Mode
    normalize: bool = True

    def __post_init__(self):
        if not self.period.is_diagonal():
            raise ValueError("search periods must be diagonal lattices")
        for j in range(self.period.dim):
            c = self.period.basis[j][j]
            if c <= 0:
                raise ValueError("period entries must be positive")
            if (c / self.grid_step).denominator != 1:
                raise ValueError(f"grid step {self.grid_step} must divide period entry {c}")
        k = self.target_count()
        if k.denominator != 1 or k <= 0:
            raise ValueError(
                f"period determinant {self.period.det} over measure "
                f"{self.domain.measure()} is not a positive integer rep count"
            )

    def periods(self) -> Vec:
        return tuple(self.period.basis[j][j] for j in range(self.period.dim))

    def target_count(self) -> Fraction:
        # level-1 tilings and spectra both need density 1/|Ω|
        return abs(self.period.det) / self.domain.measure()

    def candidates(self) -> list[Vec]:
        s = self.grid_step
        axes = [
            [s * i for i in range(int(c / s))] for c in self.periods()
        ]
        return sorted(itertools.product(*axes))


@dataclass(frozen=True)
class CompatibilityGraph:
    vertices: tuple[Vec, ...]
    adjacency: tuple[frozenset[int], ...]

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(len(self.vertices))
            for j in self.adjacency[i]
            if i < j
        ]


def _translates_disjoint_mod_period(
    om: Domain, u: Vec, v: Vec, periods: Vec
) -> bool:
    """No open overlap between Ω+u and Ω+v modulo the diagonal period.

    Per box pair the overlapping shifts k factor per axis, so existence is a
    per-axis integer-in-open-interval count; for identical translates the
    k = 0 self-solution is discounted.
    """
    same = u == v
    for ia, a in enumerate(om.boxes):
        for ib, b in enumerate(om.boxes):
            if same and ib < ia:
                continue
            total = 1
            for j, c in enumerate(periods):
                lo = (a.lo[j] + u[j] - b.hi[j] - v[j]) / c
                hi = (a.hi[j] + u[j] - b.lo[j] - v[j]) / c
                total *= count_integers_strictly_between(lo, hi)
                if total == 0:
                    break
            if same and ia == ib:
                total -= 1  # k = 0 is the box against itself
            if total > 0:
                return False
    return True


def compatibility_graph(problem: SearchProblem) -> CompatibilityGraph:
    """Exact pairwise coexistence graph over the candidate grid."""
    verts = problem.candidates()
    periods = problem.periods()
    if problem.mode == Mode.SPECTRA:
        z = zero_set(problem.domain)
        if not z.structured:
            raise UnstructuredZeroSet(
                "spectra search needs a structured zero set (1D union or declared product)"
            )

        def edge(u: Vec, v: Vec) -> bool:
            delta = tuple(x - y for x, y in zip(u, v))
            return coset_in_zero_set(z, delta, periods)[0]

    else:

        def edge(u: Vec, v: Vec) -> bool:
            return _translates_disjoint_mod_period(problem.domain, u, v, periods)

    n = len(verts)
    adj: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if edge(verts[i], verts[j]):
                adj[i].add(j)
                adj[j].add(i)
    return CompatibilityGraph(tuple(verts), tuple(frozenset(s) for s in adj))


def _k_cliques(adjacency: Sequence[frozenset[int]], k: int, anchor: int | None):
    """All k-cliques in ascending-index order, optionally through one vertex."""
    n = len(adjacency)
    masks = [0] * n
    for i, nb in enumerate(adjacency):
        for j in nb:
            masks[i] |= 1 << j
    out: list[tuple[int, ...]] = []

    def extend(clique: list[int], cand: int):
        if len(clique) == k:
            out.append(tuple(clique))
            return
        if len(clique) + bin(cand).count("1") < k:
            return
        c = cand
        while c:
            v = (c & -c).bit_length() - 1
            c &= c - 1
            clique.append(v)
            above = ~((1 << (v + 1)) - 1)
            extend(clique, cand & masks[v] & above)
            clique.pop()

    if k == 0:
        return []
    if anchor is not None:
        extend([anchor], masks[anchor] & ~((1 << (anchor + 1)) - 1))
    else:
        extend([], (1 << n) - 1)
    return out


def _feasible(problem: SearchProblem) -> bool:
    periods = problem.periods()
    zero = tuple(Fraction(0) for _ in range(problem.domain.dim))
    if problem.mode == Mode.SPECTRA:
        z = zero_set(problem.domain)
        if not z.structured:
            raise UnstructuredZeroSet("spectra search needs a structured zero set")
        return coset_in_zero_set(z, zero, periods)[0]
    return _translates_disjoint_mod_period(problem.domain, zero, zero, periods)


def _run_search(problem: SearchProblem) -> list[PeriodicSet]:
    if not _feasible(problem):
        return []
    graph = compatibility_graph(problem)
    k = int(problem.target_count())
    anchor = 0 if problem.normalize else None  # candidate 0 is the origin
    lat = diagonal_lattice(problem.periods())
    solutions = []
    for clique in _k_cliques(graph.adjacency, k, anchor):
        reps = [graph.vertices[i] for i in clique]
        lam = periodic_set(lat, reps)
        if problem.mode == Mode.SPECTRA:
            verdict, _ = check_spectrum_periodic(problem.domain, lam)
        else:
            verdict = check_set_tiling(problem.domain, lam)
        if verdict.status == Status.HOLDS:
            solutions.append(lam)
    return sorted(solutions, key=lambda s: s.reps)


def search_spectra(problem: SearchProblem) -> list[PeriodicSet]:
    """All verified spectra A + period·Z^d with A on the candidate grid."""
    if problem.mode != Mode.SPECTRA:
        raise ValueError("problem mode must be SPECTRA")
    return _run_search(problem)


def search_tilings(problem: SearchProblem) -> list[PeriodicSet]:
    """All verified level-1 tilings with reps on the candidate grid."""
    if problem.mode != Mode.TILINGS:
        raise ValueError("problem mode must be TILINGS")
    return _run_search(problem)


def duality_scan(om: Domain, region: Domain, problem: SearchProblem) -> Verdict:
    """For a tight pair, the spectra of Ω and the tilings of D must coincide
    as rep-sets over the same period and grid."""
    tp = check_tight_pair(om, region)
    if tp.status != Status.HOLDS:
        raise PreconditionFailed("(Ω, D) is not a verified tight pair")
    spectra = search_spectra(replace(problem, domain=om, mode=Mode.SPECTRA))
    tilings = search_tilings(replace(problem, domain=region, mode=Mode.TILINGS))
    spec_sets = {s.reps for s in spectra}
    tile_sets = {t.reps for t in tilings}
    if spec_sets == tile_sets:
        return Verdict(
            Status.HOLDS,
            None,
            {"solutions": float(len(spec_sets))},
            (f"{len(spec_sets)} rep-sets on both sides",),
        )
    return Verdict(
        Status.FAILS,
        {
            "kind": "duality_scan_mismatch",
            "spectra_only": sorted(spec_sets - tile_sets),
            "tilings_only": sorted(tile_sets - spec_sets),
        },
    )
