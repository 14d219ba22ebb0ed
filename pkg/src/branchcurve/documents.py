"""Structured input/output documents and deterministic serialization.

Input documents are JSON objects carrying either a named model geometry with
a time, or an explicit list of curvature components that is auto-completed by
the four curvature symmetries.  Output documents are plain JSON with every
float rendered at 17 significant digits and negative zero normalized away, so
identical inputs produce byte-identical bytes.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .curve import classify, curve_coeffs, oracle_check
from .flow import model_geometry, riemann_at
from .tensor_core import (
    FramedRiemann,
    curvature_operator_blocks,
    validate_symmetries,
)

__all__ = [
    "SchemaError",
    "SymmetryError",
    "parse_input_document",
    "load_input_path",
    "riemann_from_entries",
    "riemann_to_entries",
    "build_output_document",
    "json_text",
    "format_float",
]


class SchemaError(ValueError):
    """The input document does not match the expected schema."""


class SymmetryError(ValueError):
    """A completed curvature tensor violates the curvature identities."""


def format_float(x: float) -> str:
    """Render a float at 17 significant digits; -0.0 becomes 0."""
    x = float(x)
    if x == 0.0:
        x = 0.0
    if math.isnan(x) or math.isinf(x):
        raise ValueError("non-finite float in output document")
    return format(x, ".17g")


def json_text(obj) -> str:
    """Deterministic JSON: sorted keys, fixed float rendering, no whitespace drift."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(json_text(v) for v in obj) + "]"
    if isinstance(obj, dict):
        items = []
        for k in sorted(obj):
            if not isinstance(k, str):
                raise TypeError("document keys must be strings")
            items.append(f"{json.dumps(k)}:{json_text(obj[k])}")
        return "{" + ",".join(items) + "}"
    if isinstance(obj, np.floating):
        return format_float(float(obj))
    if isinstance(obj, np.integer):
        return str(int(obj))
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _require_number(doc: dict, key: str) -> float:
    if key not in doc:
        raise SchemaError(f"missing required key {key!r}")
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise SchemaError(f"key {key!r} must be a number")
    return float(v)


def riemann_from_entries(entries) -> FramedRiemann:
    """Complete a sparse component list by the curvature symmetries.

    Each entry assigns R_{ijkl}; the assignment propagates through both
    antisymmetries and the pair symmetry.  Any slot receiving two different
    values is a hard schema error (inconsistent duplicates are never merged).
    """
    if not isinstance(entries, list) or not entries:
        raise SchemaError("'riemann' must be a non-empty list of component entries")
    comp = np.zeros((4, 4, 4, 4))
    seen: dict = {}
    for pos, e in enumerate(entries):
        if not isinstance(e, dict):
            raise SchemaError(f"riemann entry {pos} is not an object")
        try:
            i, j, k, l = (int(e[key]) for key in ("i", "j", "k", "l"))
            value = e["value"]
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"riemann entry {pos} needs integer i,j,k,l and a value") from exc
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SchemaError(f"riemann entry {pos} has a non-numeric value")
        if not all(1 <= v <= 4 for v in (i, j, k, l)):
            raise SchemaError(f"riemann entry {pos} has indices outside 1..4")
        v = float(value)
        i, j, k, l = i - 1, j - 1, k - 1, l - 1
        orbit = [
            ((i, j, k, l), v),
            ((j, i, k, l), -v),
            ((i, j, l, k), -v),
            ((j, i, l, k), v),
            ((k, l, i, j), v),
            ((l, k, i, j), -v),
            ((k, l, j, i), -v),
            ((l, k, j, i), v),
        ]
        for slot, val in orbit:
            if slot in seen and seen[slot] != val:
                one = tuple(s + 1 for s in slot)
                raise SchemaError(
                    f"inconsistent duplicate for component {one}: {seen[slot]!r} vs {val!r}"
                )
            seen[slot] = val
            comp[slot] = val
    return FramedRiemann(comp)


def riemann_to_entries(R: FramedRiemann, threshold: float = 0.0) -> list:
    """Sparse 1-based component list (one representative per symmetry orbit)."""
    comp = R.components
    out = []
    emitted = set()
    for i in range(4):
        for j in range(4):
            for k in range(4):
                for l in range(4):
                    slot = (i, j, k, l)
                    if slot in emitted:
                        continue
                    v = float(comp[slot])
                    orbit = {
                        (i, j, k, l),
                        (j, i, k, l),
                        (i, j, l, k),
                        (j, i, l, k),
                        (k, l, i, j),
                        (l, k, i, j),
                        (k, l, j, i),
                        (l, k, j, i),
                    }
                    emitted |= orbit
                    if abs(v) > threshold:
                        out.append(
                            {"i": i + 1, "j": j + 1, "k": k + 1, "l": l + 1, "value": v}
                        )
    return out


def parse_input_document(text: str, tol: float = 1e-10):
    """Parse an input document into a FramedRiemann plus optional geometry info.

    Returns (riemann, geometry_or_None, time_or_None).  Raises SchemaError for
    malformed documents and SymmetryError when a completed tensor fails the
    curvature identities.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("input document must be a JSON object")
    has_geom = "geometry" in doc
    has_riem = "riemann" in doc
    if has_geom == has_riem:
        raise SchemaError("exactly one of 'geometry' or 'riemann' must be present")
    if has_geom:
        name = doc["geometry"]
        if not isinstance(name, str):
            raise SchemaError("'geometry' must be a string")
        t = _require_number(doc, "time")
        kappa = 1.0
        if "kappa" in doc:
            kappa = _require_number(doc, "kappa")
        try:
            geom = model_geometry(name, kappa=kappa)
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc
        try:
            R = riemann_at(geom, t)
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc
        return R, geom, t
    R = riemann_from_entries(doc["riemann"])
    report = validate_symmetries(R, tol)
    if not report.ok:
        raise SymmetryError(
            f"curvature identities violated: {report.identity} at indices "
            f"{report.indices} (deviation {report.deviation:.3e})"
        )
    return R, None, None


def load_input_path(path: str, tol: float = 1e-10):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SchemaError(f"cannot read input file {path!r}: {exc}") from exc
    return parse_input_document(text, tol)


def _matrix(arr: np.ndarray) -> list:
    return [[float(v) for v in row] for row in np.asarray(arr, dtype=float)]


def _complex_matrix(arr: np.ndarray) -> list:
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(arr, dtype=complex)]


def build_output_document(R: FramedRiemann, tol: float = 1e-10, emit: str = "all") -> dict:
    """Assemble the output document for a curvature tensor.

    ``emit`` selects one of coeffs | class | blocks | all.
    """
    report = validate_symmetries(R, max(tol, 1e-12))
    blocks = curvature_operator_blocks(R)
    coeffs = curve_coeffs(blocks)
    cls = classify(coeffs, tol=max(tol, 1e-12))
    doc: dict = {}
    if emit in ("blocks", "all"):
        doc["blocks"] = {
            "a": _matrix(blocks.A),
            "b": _matrix(blocks.B),
            "c": _matrix(blocks.C),
            "wplus": _matrix(blocks.Wplus),
            "wminus": _matrix(blocks.Wminus),
            "scal": float(blocks.scal),
        }
    if emit in ("coeffs", "all"):
        doc["coeffs"] = {
            "unnormalized": _complex_matrix(coeffs.c),
            "normalized": _complex_matrix(coeffs.normalized()),
        }
    if emit in ("class", "all"):
        doc["class"] = {"tag": cls.tag.value, "detail": cls.detail}
    if emit == "all":
        oracle = oracle_check(blocks, coeffs, samples=64, tol=tol, seed=0)
        doc["diagnostics"] = {
            "oracle_samples": oracle.samples,
            "oracle_max_relative_deviation": float(oracle.worst_relative),
            "symmetry_residuals": {k: float(v) for k, v in report.max_residuals.items()},
            "tolerance": float(tol),
        }
    return doc


