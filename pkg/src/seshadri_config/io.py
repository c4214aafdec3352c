"""Arrangement files (JSON, UTF-8).

::

    {"name": ..., "field": {"type": "rational"} | {"type": "number_field", "minpoly": [...]},
     "d": 2, "k": 12, "combinatorics": {"t": {"2": 12, "8": 9}},
     "curves": [<polynomial>, ...], "points": [{"coords": [...], "curves": [0, 3]}, ...]}

``curves`` and ``points`` are optional; without them the arrangement is
combinatorial only.  Every rational is a string.
"""

from __future__ import annotations

import json
from pathlib import Path

from .arrangement import CombinatorialArrangement, GeometricArrangement, IncidencePoint
from .field import FieldError, QQ, field_from_json, field_to_json
from .geometry import GeometryError, point_from_json, point_to_json, polynomial_from_json, polynomial_to_json


class ArrangementFileError(ValueError):
    """Malformed arrangement file; ``path`` names the offending JSON location."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def arrangement_to_json(A) -> dict:
    data = {"name": A.name, "field": field_to_json(getattr(A, "ctx", QQ)), "d": A.d, "k": A.k,
            "combinatorics": {"t": {str(r): n for r, n in A.t.items()}}}
    if isinstance(A, GeometricArrangement):
        data["curves"] = [polynomial_to_json(c) for c in A.curves]
        data["points"] = [dict(point_to_json(ip.point), curves=list(ip.incident)) for ip in A.points]
    return data


def arrangement_from_json(data) -> CombinatorialArrangement:
    if not isinstance(data, dict):
        raise ArrangementFileError("$", "top level must be an object")
    for key in ("d", "k", "combinatorics"):
        if key not in data:
            raise ArrangementFileError(f"$.{key}", "missing")
    try:
        ctx = field_from_json(data.get("field", {"type": "rational"}))
    except (ValueError, KeyError, TypeError) as exc:
        raise ArrangementFileError("$.field", str(exc)) from None
    d, k = data["d"], data["k"]
    if not isinstance(d, int) or d < 1:
        raise ArrangementFileError("$.d", "must be a positive integer")
    if not isinstance(k, int) or k < 2:
        raise ArrangementFileError("$.k", "must be an integer >= 2")
    comb = data["combinatorics"]
    if not isinstance(comb, dict) or not isinstance(comb.get("t"), dict):
        raise ArrangementFileError("$.combinatorics.t", "must be an object mapping r to t_r")
    t = {}
    for r, n in comb["t"].items():
        try:
            t[int(r)] = int(n)
        except (TypeError, ValueError):
            raise ArrangementFileError(f"$.combinatorics.t.{r}", "must be an integer count") from None
        if int(r) < 2 or int(n) < 0:
            raise ArrangementFileError(f"$.combinatorics.t.{r}", "needs r >= 2 and t_r >= 0")
    name = data.get("name", "")
    if "curves" not in data and "points" not in data:
        return CombinatorialArrangement(k=k, d=d, t=t, name=name)
    curves = []
    for i, c in enumerate(data.get("curves", [])):
        try:
            curves.append(polynomial_from_json(c, ctx))
        except (GeometryError, FieldError, TypeError, KeyError) as exc:
            raise ArrangementFileError(f"$.curves[{i}]", str(exc)) from None
    if len(curves) != k:
        raise ArrangementFileError("$.curves", f"expected {k} curves, found {len(curves)}")
    points = []
    for i, p in enumerate(data.get("points", [])):
        try:
            pt = point_from_json(p, ctx)
            inc = p["curves"]
        except (GeometryError, FieldError, TypeError, KeyError) as exc:
            raise ArrangementFileError(f"$.points[{i}]", str(exc)) from None
        if not isinstance(inc, list) or not all(isinstance(j, int) and 0 <= j < k for j in inc):
            raise ArrangementFileError(f"$.points[{i}].curves", "must list curve indices")
        points.append(IncidencePoint(pt, tuple(sorted(inc))))
    return GeometricArrangement(k=k, d=d, t=t, name=name, curves=curves, points=points, ctx=ctx)


def load_arrangement(path) -> CombinatorialArrangement:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ArrangementFileError("$", f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArrangementFileError("$", f"invalid JSON: {exc}") from None
    return arrangement_from_json(data)


def save_arrangement(A, path) -> None:
    Path(path).write_text(json.dumps(arrangement_to_json(A), indent=1) + "\n", encoding="utf-8")
