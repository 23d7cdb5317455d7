"""JSON cone specifications and report serialization.

Cone files look like::

    {"kind": "full"}
    {"kind": "halfplane", "inner_normal": [nx, ny], "boundary_included": [b, b]}
    {"kind": "halfplane", "inner_normal": {"slope": NUM, "x_sign": 1}, "boundary_included": [b, b]}
    {"kind": "sector", "rays": [RAY, RAY]}

with ``RAY = {"dir": {"vector": [x, y]}, "included": b}`` or
``{"dir": {"x_sign": 1, "slope": NUM}, "included": b}``, where the slope may
also be ``"vertical_up"`` / ``"vertical_down"``.  For a half-plane the
boundary direction is ``d = (ny, -nx)`` (the normal turned clockwise), or
``x_sign * (1, slope)`` in slope form, and the region lies to its left; the
two flags refer to ``d`` and ``-d``.  Sector rays are listed
counterclockwise.
"""

from __future__ import annotations

import json
from typing import Any

from .cones import ConeSpec, FullPlane, HalfPlane, Ray, Sector, cross_sign
from .errors import SpecError
from .exact import format_number, parse_number
from .lattice import Point
from .normalize import C2Canonical, Classification, PropertyFlags
from .special import AtomReport, Family, SpecialMonoidSpec


def _fail(path: str, msg: str):
    raise SpecError(f"{path}: {msg}")


def _expect(obj, typ, path: str):
    if typ is int:
        ok = isinstance(obj, int) and not isinstance(obj, bool)
    else:
        ok = isinstance(obj, typ)
    if not ok:
        name = typ.__name__ if isinstance(typ, type) else "/".join(t.__name__ for t in typ)
        _fail(path, f"expected {name}, got {json.dumps(obj)}")
    return obj


def _number(obj, path: str):
    if isinstance(obj, int) and not isinstance(obj, bool):
        return parse_number(str(obj))
    if not isinstance(obj, str):
        _fail(path, f"expected a number literal, got {json.dumps(obj)}")
    try:
        return parse_number(obj)
    except SpecError as e:
        _fail(path, str(e))


def _x_sign(obj, path: str) -> int:
    if obj not in (1, -1) or isinstance(obj, bool):
        _fail(path, f"x_sign must be 1 or -1, got {json.dumps(obj)}")
    return obj


def _keys(obj: dict, allowed: set, path: str):
    extra = sorted(set(obj) - allowed)
    if extra:
        _fail(path, f"unknown field(s) {', '.join(extra)}")


def _vector(obj, path: str) -> tuple[int, int]:
    _expect(obj, list, path)
    if len(obj) != 2:
        _fail(path, "expected two integers")
    x = _expect(obj[0], int, f"{path}[0]")
    y = _expect(obj[1], int, f"{path}[1]")
    if x == 0 and y == 0:
        _fail(path, "the zero vector has no direction")
    return x, y


def _ray(obj, path: str) -> Ray:
    _expect(obj, dict, path)
    _keys(obj, {"dir", "included"}, path)
    if "dir" not in obj:
        _fail(path, "missing field 'dir'")
    inc = _expect(obj.get("included", False), bool, f"{path}.included")
    d = _expect(obj["dir"], dict, f"{path}.dir")
    dp = f"{path}.dir"
    if "vector" in d:
        _keys(d, {"vector"}, dp)
        return Ray.from_vector(*_vector(d["vector"], f"{dp}.vector"), inc)
    _keys(d, {"x_sign", "slope"}, dp)
    if "slope" not in d:
        _fail(dp, "needs 'vector' or 'slope'")
    slope = d["slope"]
    if slope in ("vertical_up", "vertical_down"):
        return Ray.vertical(slope == "vertical_up", inc)
    if "x_sign" not in d:
        _fail(dp, "missing field 'x_sign'")
    return Ray.from_slope(_x_sign(d["x_sign"], f"{dp}.x_sign"), _number(slope, f"{dp}.slope"), inc)


def cone_from_json(doc: Any) -> ConeSpec:
    _expect(doc, dict, "$")
    kind = doc.get("kind")
    if kind == "full":
        _keys(doc, {"kind"}, "$")
        return FullPlane()
    if kind == "halfplane":
        _keys(doc, {"kind", "inner_normal", "boundary_included"}, "$")
        if "inner_normal" not in doc:
            _fail("$", "missing field 'inner_normal'")
        flags = doc.get("boundary_included", [False, False])
        _expect(flags, list, "$.boundary_included")
        if len(flags) != 2:
            _fail("$.boundary_included", "expected two booleans")
        for i, f in enumerate(flags):
            _expect(f, bool, f"$.boundary_included[{i}]")
        n = doc["inner_normal"]
        if isinstance(n, list):
            return HalfPlane.from_normal(*_vector(n, "$.inner_normal"), included=tuple(flags))
        _expect(n, dict, "$.inner_normal")
        _keys(n, {"slope", "x_sign"}, "$.inner_normal")
        for f in ("slope", "x_sign"):
            if f not in n:
                _fail("$.inner_normal", f"missing field '{f}'")
        d = Ray.from_slope(
            _x_sign(n["x_sign"], "$.inner_normal.x_sign"),
            _number(n["slope"], "$.inner_normal.slope"),
            flags[0],
        )
        return HalfPlane(d, flags[1])
    if kind == "sector":
        _keys(doc, {"kind", "rays"}, "$")
        rays = _expect(doc.get("rays"), list, "$.rays")
        if len(rays) != 2:
            _fail("$.rays", f"a sector needs exactly two rays, got {len(rays)}")
        low, high = (_ray(r, f"$.rays[{i}]") for i, r in enumerate(rays))
        if cross_sign(low, high) < 0:
            _fail("$.rays", "rays must be listed counterclockwise with an angle below pi")
        # collinear rays raise DegenerateCone here
        return Sector(low, high)
    _fail("$.kind", f"expected 'full', 'halfplane' or 'sector', got {json.dumps(kind)}")


def parse_cone_spec(text: str) -> ConeSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(f"line {e.lineno} column {e.colno}: {e.msg}") from None
    return cone_from_json(doc)


def load_cone_spec(path) -> ConeSpec:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_cone_spec(text)


# -- serialization ----------------------------------------------------------


def ray_to_json(r: Ray) -> dict:
    if r.vector is not None:
        return {"dir": {"vector": list(r.vector)}, "included": r.included}
    return {"dir": {"x_sign": r.x_sign, "slope": format_number(r.slope)}, "included": False}


def cone_to_json(c: ConeSpec) -> dict:
    if isinstance(c, FullPlane):
        return {"kind": "full"}
    if isinstance(c, Sector):
        return {"kind": "sector", "rays": [ray_to_json(c.low), ray_to_json(c.high)]}
    d = c.boundary
    flags = [d.included, c.opposite_included]
    if d.vector is not None:
        dx, dy = d.vector
        return {"kind": "halfplane", "inner_normal": [-dy, dx], "boundary_included": flags}
    return {
        "kind": "halfplane",
        "inner_normal": {"slope": format_number(d.slope), "x_sign": d.x_sign},
        "boundary_included": flags,
    }


def special_to_json(spec: SpecialMonoidSpec) -> dict:
    return {"family": spec.family.value, "alpha": format_number(spec.alpha)}


def classification_to_json(cl: Classification) -> dict:
    canon = cl.canonical
    if isinstance(canon, SpecialMonoidSpec):
        payload = special_to_json(canon)
    elif isinstance(canon, C2Canonical):
        payload = {"upper": special_to_json(canon.upper), "lower": special_to_json(canon.lower)}
    elif canon is not None:
        payload = {"alpha": format_number(canon)}
    else:
        payload = None
    out = {"case": cl.case, "phi": [list(r) for r in cl.phi.rows()], "canonical": payload}
    if cl.warnings:
        out["warnings"] = list(cl.warnings)
    return out


def properties_to_json(p: PropertyFlags) -> dict:
    return {
        "root_closed": p.root_closed,
        "completely_integrally_closed": p.completely_integrally_closed,
        "krull": p.krull,
        "primary_reduced": p.primary_reduced,
    }


def points_to_json(points) -> list:
    return [[p[0], p[1]] for p in points]


def report_to_json(rep: AtomReport) -> dict:
    out: dict = {}
    if isinstance(rep.spec, SpecialMonoidSpec):
        out.update(special_to_json(rep.spec))
    out["atoms"] = points_to_json(rep.atoms)
    out["bound"] = rep.bound
    out["complete"] = rep.complete_up_to_bound
    if rep.count_formula is not None:
        out["count_formula"] = rep.count_formula
    if not rep.atomic:
        out["atomic"] = False
    if rep.notes:
        out["notes"] = list(rep.notes)
    return out


def report_from_json(doc: dict, spec=None) -> AtomReport:
    """Inverse of :func:`report_to_json`; ``spec`` is needed for cone reports."""
    if spec is None:
        if "family" not in doc:
            raise SpecError("$: a report without 'family' needs an explicit spec")
        spec = SpecialMonoidSpec(Family(doc["family"]), parse_number(doc["alpha"]))
    return AtomReport(
        spec,
        doc["bound"],
        tuple(Point(*p) for p in doc["atoms"]),
        complete_up_to_bound=doc["complete"],
        count_formula=doc.get("count_formula"),
        atomic=doc.get("atomic", True),
        notes=tuple(doc.get("notes", ())),
    )


def dump_json(obj) -> str:
    """Deterministic one-document rendering used by every command."""
    return json.dumps(obj, ensure_ascii=True, separators=(", ", ": ")) + "\n"


def report_to_csv(rep: AtomReport) -> str:
    lines = ["x,y"] + [f"{p.x},{p.y}" for p in rep.atoms]
    return "\n".join(lines) + "\n"

