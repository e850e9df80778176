"""JSON encoding/decoding: rationals as "p/q" strings, schema-checked problems.

Every rational travels as a string so round-trips are exact; floats are
reserved for genuinely non-rational data (window point coordinates,
irrational column shifts).  Unknown fields anywhere in a problem file are
rejected rather than ignored.
"""

from __future__ import annotations

from dataclasses import asdict, is_dataclass
from enum import Enum
from fractions import Fraction

from .errors import SchemaError
from .exact import format_rational
from .geometry import Box, Domain, box, product_domain, validate_domain
from .lattice import (
    Lattice,
    PeriodicSet,
    WindowSet,
    periodic_set,
    shifted_column_cubes,
)


def _require_keys(obj: dict, where: str, required: set[str], optional: set[str] = frozenset()):
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    missing = required - obj.keys()
    if missing:
        raise SchemaError(f"{where}: missing fields {sorted(missing)}")
    unknown = obj.keys() - required - optional
    if unknown:
        raise SchemaError(f"{where}: unknown fields {sorted(unknown)}")


def decode_rational(v, where: str) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise SchemaError(f"{where}: rationals must be strings or integers, got {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"{where}: cannot parse rational {v!r}") from None
    raise SchemaError(f"{where}: cannot parse rational {v!r}")


def decode_coordinate(v, where: str):
    """Rational when exact (string/int), float when a JSON float."""
    if isinstance(v, float):
        return v
    return decode_rational(v, where)


def box_from_json(obj, where: str = "box") -> Box:
    _require_keys(obj, where, {"lo", "hi"})
    lo = [decode_rational(v, f"{where}.lo") for v in obj["lo"]]
    hi = [decode_rational(v, f"{where}.hi") for v in obj["hi"]]
    try:
        return box(lo, hi)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def box_to_json(b: Box) -> dict:
    return {
        "lo": [format_rational(v) for v in b.lo],
        "hi": [format_rational(v) for v in b.hi],
    }


def domain_from_json(obj, where: str = "domain") -> Domain:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    if "product" in obj:
        _require_keys(obj, where, {"product"})
        factors = [
            domain_from_json(f, f"{where}.product[{i}]")
            for i, f in enumerate(obj["product"])
        ]
        return product_domain(factors)
    _require_keys(obj, where, {"boxes"})
    return validate_domain(
        [box_from_json(b, f"{where}.boxes[{i}]") for i, b in enumerate(obj["boxes"])]
    )


def domain_to_json(dom: Domain) -> dict:
    if dom.product_factors is not None:
        return {"product": [domain_to_json(f) for f in dom.product_factors]}
    return {"boxes": [box_to_json(b) for b in dom.boxes]}


def pointset_from_json(obj, where: str = "pointset"):
    if not isinstance(obj, dict) or "type" not in obj:
        raise SchemaError(f"{where}: expected an object with a 'type' field")
    kind = obj["type"]
    if kind == "periodic":
        _require_keys(obj, where, {"type", "basis", "reps"})
        basis = tuple(
            tuple(decode_rational(v, f"{where}.basis") for v in row)
            for row in obj["basis"]
        )
        reps = [
            [decode_rational(v, f"{where}.reps") for v in rep] for rep in obj["reps"]
        ]
        return periodic_set(Lattice(basis), reps)
    if kind == "window":
        _require_keys(obj, where, {"type", "points", "window"})
        w = box_from_json(obj["window"], f"{where}.window")
        pts = tuple(
            tuple(decode_coordinate(v, f"{where}.points") for v in p)
            for p in obj["points"]
        )
        return WindowSet(pts, w)
    if kind == "shifted_columns":
        _require_keys(obj, where, {"type", "shifts", "window"})
        w = box_from_json(obj["window"], f"{where}.window")
        shifts = [decode_coordinate(v, f"{where}.shifts") for v in obj["shifts"]]
        return shifted_column_cubes(shifts, w)
    raise SchemaError(f"{where}: unknown pointset type {kind!r}")


def pointset_to_json(ps) -> dict:
    if isinstance(ps, PeriodicSet):
        return {
            "type": "periodic",
            "basis": [
                [format_rational(v) for v in row] for row in ps.lattice.basis
            ],
            "reps": [[format_rational(v) for v in rep] for rep in ps.reps],
        }
    return {
        "type": "window",
        "points": [[jsonable_scalar(v) for v in p] for p in ps.points],
        "window": box_to_json(ps.window),
    }


def zeroset_to_json(z) -> dict:
    out: dict = {"kind": z.kind, "tol": z.tol}
    if z.axes is not None:
        out["axes"] = [
            {
                "period": format_rational(ar.period),
                "rational_phases": [format_rational(p) for p in ar.rational_phases],
                "irrational_phases": [
                    {"approx": a, "err": e} for a, e in ar.irrational_phases
                ],
            }
            for ar in z.axes
        ]
    return out


def jsonable_scalar(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, float):
        return v
    if isinstance(v, int):
        return v
    return v


def to_jsonable(v):
    """Recursive conversion for reports: exact values stay strings."""
    if v is None or isinstance(v, (bool, int, float, str)):
        return v
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    if isinstance(v, Enum):
        return v.value
    if isinstance(v, dict):
        return {str(k): to_jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, set, frozenset)):
        items = list(v) if not isinstance(v, (set, frozenset)) else sorted(v, key=repr)
        return [to_jsonable(x) for x in items]
    if is_dataclass(v) and not isinstance(v, type):
        return to_jsonable(asdict(v))
    return repr(v)


def verdict_to_json(verdict) -> dict:
    out = {
        "status": verdict.status.value,
        "witness": to_jsonable(verdict.witness),
        "margins": to_jsonable(verdict.margins),
        "notes": list(verdict.notes),
    }
    return out
