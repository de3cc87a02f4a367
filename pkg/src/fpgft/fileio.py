"""JSON and CSV serialization with deterministic bytes.

Function files:   {"w": [re, im], "k": int, "trunc": int,
                   "coeffs": {"n": a_n, ...}}
Weights files:    {"c0": x, "cn": {"n": x, ...}}
Reports:          {"phi": x, "bound": x, "margin": x, "member": bool,
                   "grid": {"failures": n, "worst_ratio": x,
                            "worst_z": [re, im]}}   (grid optional)

Key order is fixed, coefficient keys are sorted numerically, floats use
the shortest round-trip decimal form (Python repr), and every document
ends with a single newline. Identical inputs therefore serialize to
identical bytes.
"""

from __future__ import annotations

import json
import math
from typing import Any, Mapping

from .errors import FunctionClassError
from .hull import HullWeights, make_weights
from .membership import GridSummary, MembershipReport
from .series import FpSeries, make_series

__all__ = [
    "series_to_obj",
    "series_from_obj",
    "dumps_series",
    "loads_series",
    "weights_to_obj",
    "weights_from_obj",
    "dumps_weights",
    "loads_weights",
    "report_to_obj",
    "dumps_json",
    "load_json_file",
]


class FileFormatError(FunctionClassError, ValueError):
    """Input document does not match the expected schema."""


def _require(obj: Mapping[str, Any], key: str, kind: str):
    if key not in obj:
        raise FileFormatError(f"missing key {key!r} in {kind}")
    return obj[key]


def _as_pair(value, what: str) -> complex:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool)
                       for x in value)):
        raise FileFormatError(f"{what} must be a [re, im] pair, got {value!r}")
    return complex(float(value[0]), float(value[1]))


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FileFormatError(f"{what} must be an integer, got {value!r}")
    return value


def _index_map(value, kind: str) -> dict[int, float]:
    if not isinstance(value, dict):
        raise FileFormatError(f"{kind} must be an object, got {value!r}")
    out: dict[int, float] = {}
    for key, v in value.items():
        try:
            n = int(key)
        except (TypeError, ValueError):
            raise FileFormatError(
                f"{kind} key {key!r} is not a decimal integer string"
            ) from None
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise FileFormatError(f"{kind}[{key}] must be a number, got {v!r}")
        out[n] = float(v)
    return out


def series_to_obj(f: FpSeries) -> dict:
    return {
        "w": [f.w.real, f.w.imag],
        "k": f.k,
        "trunc": f.trunc,
        "coeffs": {str(n): a for n, a in f.sorted_items()},
    }


def series_from_obj(obj) -> FpSeries:
    if not isinstance(obj, dict):
        raise FileFormatError(f"function document must be an object, got {obj!r}")
    w = _as_pair(_require(obj, "w", "function file"), "w")
    k = _as_int(_require(obj, "k", "function file"), "k")
    trunc = _as_int(_require(obj, "trunc", "function file"), "trunc")
    coeffs = _index_map(_require(obj, "coeffs", "function file"), "coeffs")
    return make_series(w, k, coeffs, trunc=trunc)


def weights_to_obj(ws: HullWeights) -> dict:
    return {
        "c0": float(ws.c0),
        "cn": {str(n): c for n, c in ws.sorted_items()},
    }


def weights_from_obj(obj) -> HullWeights:
    if not isinstance(obj, dict):
        raise FileFormatError(f"weights document must be an object, got {obj!r}")
    c0 = _require(obj, "c0", "weights file")
    if isinstance(c0, bool) or not isinstance(c0, (int, float)):
        raise FileFormatError(f"c0 must be a number, got {c0!r}")
    cn = _index_map(obj.get("cn", {}), "cn")
    return make_weights(float(c0), cn)


def report_to_obj(rep: MembershipReport,
                  grid: GridSummary | None = None) -> dict:
    obj = {
        "phi": rep.phi,
        "bound": rep.bound,
        "margin": rep.margin,
        "member": rep.member,
    }
    if grid is not None:
        worst = grid.worst_ratio
        obj["grid"] = {
            "failures": grid.failures,
            "worst_ratio": None if math.isnan(worst) else worst,
            "worst_z": [grid.worst_z.real, grid.worst_z.imag],
        }
    return obj


def dumps_json(obj) -> str:
    """Deterministic JSON text: insertion key order, repr floats, one
    trailing newline."""
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def dumps_series(f: FpSeries) -> str:
    return dumps_json(series_to_obj(f))


def loads_series(text: str) -> FpSeries:
    return series_from_obj(_parse(text, "function file"))


def dumps_weights(ws: HullWeights) -> str:
    return dumps_json(weights_to_obj(ws))


def loads_weights(text: str) -> HullWeights:
    return weights_from_obj(_parse(text, "weights file"))


def _parse(text: str, kind: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"malformed JSON in {kind}: {exc}") from None


def load_json_file(path: str, kind: str = "input file"):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FileFormatError(f"cannot read {kind} {path!r}: {exc}") from None
    return _parse(text, kind)
