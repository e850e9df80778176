"""Batch front end: verify / search / scan over JSON problem files.

Exit codes encode the mathematical outcome so shell pipelines can branch:
0 = Holds, 1 = Fails, 2 = Inconclusive, 3 = input or usage error.
Reports are JSON on stdout (or --out); scans emit CSV.  Timings are
opt-in (--timings) so default reports are byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .criteria import (
    DEFAULT_WINDOW_RADIUS,
    GridSpec,
    Status,
    TileSpec,
    check_keller,
    check_opr,
    check_orthogonality,
    check_set_tiling,
    check_set_tiling_windowed,
    check_spectrum_periodic,
    check_tight_pair,
    check_tiling_defect,
    duality_roundtrip,
    transfer_harness,
)
from .errors import SchemaError, SpectileError
from .fourier import power_spectrum
from .geometry import box
from .jsonio import (
    _require_keys,
    decode_rational,
    domain_from_json,
    pointset_from_json,
    pointset_to_json,
    to_jsonable,
    verdict_to_json,
)
from .lattice import PeriodicSet, window
from .search import Mode, SearchProblem, duality_scan, search_spectra, search_tilings
from .lattice import diagonal_lattice

_EXIT_BY_STATUS = {Status.HOLDS: 0, Status.FAILS: 1, Status.INCONCLUSIVE: 2}

# (required, optional): a file may carry fields other checks need, but any
# field outside this vocabulary is rejected.
_TOPLEVEL_FIELDS = {
    "spectrum": ({"domain", "pointset"}, {"parameters", "packing_region"}),
    "tiling": ({"domain", "pointset"}, {"parameters", "packing_region"}),
    "orthogonality": ({"domain", "pointset"}, {"parameters", "packing_region"}),
    "opr": ({"domain", "packing_region"}, {"parameters", "pointset"}),
    "tight-pair": ({"domain", "packing_region"}, {"parameters", "pointset"}),
    "keller": ({"domain", "pointset", "packing_region"}, {"parameters"}),
    "transfer": ({"f", "g", "pointset"}, {"parameters"}),
    "duality": ({"domain", "packing_region", "pointset"}, {"parameters"}),
    "spectra": ({"domain"}, {"parameters", "pointset", "packing_region"}),
    "tilings": ({"domain"}, {"parameters", "pointset", "packing_region"}),
    "duality-scan": ({"domain", "packing_region"}, {"parameters", "pointset"}),
    "scan": ({"domain"}, {"pointset", "parameters"}),
}

_PARAM_FIELDS = {"tol", "radius", "grid", "period", "grid_step"}


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; 2 means Inconclusive here,
    # so usage problems are remapped to the input-error exit code 3.
    def error(self, message):
        raise SchemaError(message)


def _load_problem(path: str, command: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except FileNotFoundError:
        raise SchemaError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from None
    required, optional = _TOPLEVEL_FIELDS[command]
    _require_keys(obj, path, required | {"version"}, optional)
    if obj["version"] != 1:
        raise SchemaError(f"{path}: unsupported version {obj['version']!r}")
    params = obj.get("parameters", {})
    _require_keys(params, f"{path}.parameters", set(), _PARAM_FIELDS)
    return obj


def _tile_spec_from_json(obj, where: str) -> TileSpec:
    _require_keys(obj, where, {"kind", "domain"})
    if obj["kind"] not in ("indicator", "power_spectrum"):
        raise SchemaError(f"{where}: unknown tile kind {obj['kind']!r}")
    return TileSpec(obj["kind"], domain_from_json(obj["domain"], f"{where}.domain"))


def _windowed(pointset, dim: int, radius: float | None):
    """Periodic sets are windowed at the requested (or default) box radius."""
    if isinstance(pointset, PeriodicSet):
        r = Fraction(radius if radius is not None else DEFAULT_WINDOW_RADIUS.get(dim, 30.0))
        return window(pointset, box([-r] * dim, [r] * dim))
    return pointset


def _grid_spec(dim: int, grid: int | None) -> GridSpec:
    return GridSpec(box([0] * dim, [1] * dim), grid or 64)


def _run_verify(args) -> tuple[list, dict, int]:
    problem = _load_problem(args.file, args.check)
    params = problem.get("parameters", {})
    tol = args.tol if args.tol is not None else params.get("tol")
    grid = args.grid if args.grid is not None else params.get("grid")
    radius = args.radius if args.radius is not None else params.get("radius")
    extras: dict = {}

    if args.check in ("spectrum", "tiling", "orthogonality"):
        dom = domain_from_json(problem["domain"])
        ps = pointset_from_json(problem["pointset"])
        if args.check == "orthogonality":
            verdict = check_orthogonality(dom, ps, tol)
        elif args.check == "spectrum":
            if isinstance(ps, PeriodicSet):
                verdict, cert = check_spectrum_periodic(dom, ps, tol or 1e-9)
                extras["certificate"] = to_jsonable(cert)
            else:
                verdict = check_tiling_defect(
                    dom,
                    _windowed(ps, dom.dim, radius),
                    _grid_spec(dom.dim, grid),
                    tol=tol or 1e-9,
                    threads=args.threads,
                )
        else:
            if isinstance(ps, PeriodicSet):
                verdict = check_set_tiling(dom, ps)
            else:
                verdict = check_set_tiling_windowed(dom, ps, _grid_spec(dom.dim, grid))
        return [verdict], extras, _EXIT_BY_STATUS[verdict.status]

    if args.check in ("opr", "tight-pair"):
        dom = domain_from_json(problem["domain"])
        region = domain_from_json(problem["packing_region"], "packing_region")
        fn = check_opr if args.check == "opr" else check_tight_pair
        verdict = fn(dom, region, tol)
        return [verdict], extras, _EXIT_BY_STATUS[verdict.status]

    if args.check == "keller":
        dom = domain_from_json(problem["domain"])
        ps = pointset_from_json(problem["pointset"])
        region = domain_from_json(problem["packing_region"], "packing_region")
        verdict = check_keller(dom, ps, region)
        return [verdict], extras, _EXIT_BY_STATUS[verdict.status]

    if args.check == "transfer":
        f = _tile_spec_from_json(problem["f"], "f")
        g = _tile_spec_from_json(problem["g"], "g")
        ps = pointset_from_json(problem["pointset"])
        verdict = transfer_harness(f, g, ps, tol or 1e-9)
        return [verdict], extras, _EXIT_BY_STATUS[verdict.status]

    # duality round-trip
    dom = domain_from_json(problem["domain"])
    region = domain_from_json(problem["packing_region"], "packing_region")
    ps = pointset_from_json(problem["pointset"])
    verdict = duality_roundtrip(dom, region, ps, tol or 1e-9)
    return [verdict], extras, _EXIT_BY_STATUS[verdict.status]


def _search_problem(problem: dict, args, dom, mode: Mode) -> SearchProblem:
    params = problem.get("parameters", {})
    period = args.period if args.period is not None else params.get("period")
    step = args.grid_step if args.grid_step is not None else params.get("grid_step")
    if period is None or step is None:
        raise SchemaError("search needs a period and a grid step (file or flags)")
    if isinstance(period, str):
        period = [p for p in period.split(",") if p]
    entries = [decode_rational(p, "period") for p in period]
    if len(entries) == 1 and dom.dim > 1:
        entries = entries * dom.dim
    try:
        return SearchProblem(
            dom,
            diagonal_lattice(entries),
            decode_rational(step, "grid_step"),
            mode,
            normalize=not args.no_normalize,
        )
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def _run_search(args) -> tuple[list, dict, int]:
    problem = _load_problem(args.file, args.mode)
    dom = domain_from_json(problem["domain"])
    if args.mode == "duality-scan":
        region = domain_from_json(problem["packing_region"], "packing_region")
        sp = _search_problem(problem, args, dom, Mode.SPECTRA)
        verdict = duality_scan(dom, region, sp)
        return [verdict], {}, _EXIT_BY_STATUS[verdict.status]
    mode = Mode.SPECTRA if args.mode == "spectra" else Mode.TILINGS
    sp = _search_problem(problem, args, dom, mode)
    solutions = search_spectra(sp) if mode == Mode.SPECTRA else search_tilings(sp)
    certificates = []
    for lam in solutions:
        if mode == Mode.SPECTRA:
            verdict, cert = check_spectrum_periodic(dom, lam)
            certificates.append(
                {"verdict": verdict_to_json(verdict), "certificate": to_jsonable(cert)}
            )
        else:
            certificates.append({"verdict": verdict_to_json(check_set_tiling(dom, lam))})
    extras = {
        "count": len(solutions),
        "solutions": [pointset_to_json(s) for s in solutions],
        "certificates": certificates,
    }
    return [], extras, 0


def _parse_range(spec: str) -> list[float]:
    try:
        a, b, n = spec.split(":")
        a, b, n = float(a), float(b), int(n)
    except ValueError:
        raise SchemaError(f"--range must look like start:stop:count, got {spec!r}") from None
    if n < 2:
        raise SchemaError("--range needs at least 2 samples")
    return [a + (b - a) * i / (n - 1) for i in range(n)]


def _run_scan(args) -> tuple[str, int]:
    problem = _load_problem(args.file, "scan")
    dom = domain_from_json(problem["domain"])
    params = problem.get("parameters", {})
    rows: list[str] = []
    if args.profile == "power":
        if args.range_spec is None:
            raise SchemaError("power profile needs --range start:stop:count")
        if not (0 <= args.axis < dom.dim):
            raise SchemaError(f"--axis must be in [0, {dom.dim})")
        for t in _parse_range(args.range_spec):
            xi = [0.0] * dom.dim
            xi[args.axis] = t
            val = power_spectrum(dom, xi)
            rows.append(",".join(f"{c:.17g}" for c in xi) + f",{val:.17g}")
    else:
        if "pointset" not in problem:
            raise SchemaError("defect profile needs a pointset")
        ps = pointset_from_json(problem["pointset"])
        radius = args.radius if args.radius is not None else params.get("radius")
        grid = args.grid if args.grid is not None else params.get("grid")
        ws = _windowed(ps, dom.dim, radius)
        spec = _grid_spec(dom.dim, grid)
        from .criteria import _field  # internal reuse: scan is plot data, not a verdict

        xs, vals = _field(dom, ws, spec, args.threads)
        for x, v in zip(xs, vals):
            rows.append(
                ",".join(f"{c:.17g}" for c in x) + f",{v - 1.0:.17g}"
            )
    return "\n".join(rows) + "\n", 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="spectile",
        description="Verify and search spectra, tilings, and orthogonal packing "
        "regions of box-union domains.",
    )
    parser.add_argument("--version", action="version", version=f"spectile {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--tol", type=float, default=None, help="numeric zero tolerance")
        p.add_argument("--radius", type=float, default=None, help="window radius for numeric checks")
        p.add_argument("--grid", type=int, default=None, help="grid points per axis")
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
        p.add_argument("--out", default=None, help="write the report here instead of stdout")
        p.add_argument("--json", action="store_true", help="force JSON output (the default)")
        p.add_argument("--timings", action="store_true", help="include wall-clock timings in the report")

    v = sub.add_parser("verify", help="run one criterion on a problem file")
    v.add_argument(
        "check",
        choices=[
            "spectrum",
            "tiling",
            "orthogonality",
            "opr",
            "tight-pair",
            "keller",
            "transfer",
            "duality",
        ],
    )
    v.add_argument("file")
    common(v)

    s = sub.add_parser("search", help="enumerate all spectra/tilings on a rational grid")
    s.add_argument("mode", choices=["spectra", "tilings", "duality-scan"])
    s.add_argument("file")
    s.add_argument("--period", default=None, help="comma-separated rational period entries")
    s.add_argument("--grid-step", dest="grid_step", default=None, help="rational grid step")
    s.add_argument("--no-normalize", action="store_true", help="do not anchor 0 in rep sets")
    common(s)

    c = sub.add_parser("scan", help="emit CSV profiles (power spectrum or tiling defect)")
    c.add_argument("file")
    c.add_argument("--profile", choices=["power", "defect"], required=True)
    c.add_argument("--axis", type=int, default=0)
    c.add_argument("--range", dest="range_spec", default=None, help="start:stop:count")
    common(c)
    return parser


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _merge_value_flags(argv: list[str]) -> list[str]:
    # argparse would read "--range -3:3:601" as a missing argument; fold the
    # value into the flag so negative range starts parse fine.
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--range" and i + 1 < len(argv):
            out.append(f"--range={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_value_flags(list(argv)))
    except SchemaError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 3

    t0 = time.perf_counter()
    try:
        if args.command == "scan":
            csv_text, code = _run_scan(args)
            _emit(csv_text, args.out)
            return code
        if args.command == "verify":
            verdicts, extras, code = _run_verify(args)
            label = f"verify {args.check}"
        else:
            verdicts, extras, code = _run_search(args)
            label = f"search {args.mode}"
    except SpectileError as exc:
        diagnostic = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(diagnostic, indent=2, sort_keys=True), file=sys.stderr)
        return 3

    report = {
        "command": label,
        "tool_version": __version__,
        "verdicts": [verdict_to_json(v) for v in verdicts],
        **extras,
    }
    if args.timings:
        report["timings_ms"] = {"total": (time.perf_counter() - t0) * 1000.0}
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
