"""Command-line front end.

Subcommands:

    branchcurve compute INPUT [--emit coeffs|class|blocks|all] [--tol T]
    branchcurve flow GEOMETRY --t0 A --t1 B --steps N [--emit csv] [--kappa K]
    branchcurve blowup GEOMETRY [--lambda-base 0.5] [--count N] [--t -1]
    branchcurve plot INPUT --chart pp|pm|mp|mm --grid N --out FILE.csv

Exit codes: 0 success, 2 schema error, 3 symmetry-validation failure,
4 flow-domain error, 5 identically-zero coefficients (plot only).  The
environment variable BRANCHCURVE_TOL overrides the default tolerance 1e-10.
All output is deterministic: identical input and flags give identical bytes.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from typing import List, Optional

import numpy as np

from .curve import CurveTag, SpinorPoint, classify, curve_coeffs, evaluate
from .documents import (
    SchemaError,
    SymmetryError,
    build_output_document,
    format_float,
    json_text,
    load_input_path,
)
from .flow import (
    FlowDomainError,
    curve_sequence,
    dyadic_blowup,
    model_geometry,
    riemann_at,
    singular_time,
)
from .tensor_core import curvature_operator_blocks

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_SCHEMA = 2
EXIT_SYMMETRY = 3
EXIT_DOMAIN = 4
EXIT_ZERO_CURVE = 5

_DEFAULT_TOL = 1e-10


def _fail(code: int, message: str) -> int:
    print(f"branchcurve: {message}", file=sys.stderr)
    return code


def _default_tol() -> float:
    raw = os.environ.get("BRANCHCURVE_TOL")
    if raw is None:
        return _DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        return _DEFAULT_TOL


def _geometry(args) -> object:
    try:
        return model_geometry(args.geometry, kappa=args.kappa)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def cmd_compute(args) -> int:
    R, _geom, _t = load_input_path(args.input, tol=args.tol)
    doc = build_output_document(R, tol=args.tol, emit=args.emit)
    sys.stdout.write(json_text(doc) + "\n")
    return EXIT_OK


def _coeff_header() -> List[str]:
    cols = []
    for m in range(5):
        for n in range(5):
            cols.append(f"c{m}{n}_re")
            cols.append(f"c{m}{n}_im")
    return cols


def cmd_flow(args) -> int:
    geom = _geometry(args)
    T = singular_time(geom)
    if args.steps < 1:
        raise SchemaError("--steps must be at least 1")
    if not (0.0 <= args.t0 <= args.t1 < T):
        raise FlowDomainError(
            f"time range [{args.t0}, {args.t1}] must lie inside [0, {T})"
        )
    if args.emit != "csv":
        raise SchemaError("--emit supports only 'csv' for flow")
    times = (
        [args.t0]
        if args.steps == 1
        else [args.t0 + k * (args.t1 - args.t0) / (args.steps - 1) for k in range(args.steps)]
    )
    lines = ["t,class," + ",".join(_coeff_header())]
    for t in times:
        blocks = curvature_operator_blocks(riemann_at(geom, t))
        coeffs = curve_coeffs(blocks)
        cls = classify(coeffs)
        norm = coeffs.normalized()
        cells = [format_float(t), cls.tag.value]
        for m in range(5):
            for n in range(5):
                cells.append(format_float(norm[m, n].real))
                cells.append(format_float(norm[m, n].imag))
        lines.append(",".join(cells))
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_blowup(args) -> int:
    geom = _geometry(args)
    if not math.isfinite(singular_time(geom)):
        raise FlowDomainError("geometry has infinite singular time; nothing to blow up")
    if args.t >= 0:
        raise SchemaError("--t must be negative (rescaled time)")
    seq = dyadic_blowup(geom, count=args.count, t=args.t, base=args.lambda_base)
    report = curve_sequence(seq)
    doc = {
        "geometry": geom.name,
        "t": float(args.t),
        "lambda_base": float(args.lambda_base),
        "degenerate": report.degenerate,
        "entries": [
            {"lambda": e.lam, "distance": e.distance, "class": e.tag.value}
            for e in report.entries
        ],
        "limit_class": {
            "tag": report.limit_class.tag.value,
            "detail": report.limit_class.detail,
        },
        "limit_coeffs_normalized": [
            [[float(v.real), float(v.imag)] for v in row]
            for row in report.limit_coeffs.normalized()
        ],
        "nonincreasing": report.nonincreasing,
        "max_distance": float(report.max_distance),
    }
    sys.stdout.write(json_text(doc) + "\n")
    if not report.degenerate and report.entries[-1].distance > report.entries[0].distance:
        return _fail(EXIT_FAILURE, "blow-up distances failed to decrease")
    return EXIT_OK


_CHART_SPINORS = {
    "pp": lambda x, y: (SpinorPoint(1.0, x), SpinorPoint(1.0, y)),
    "pm": lambda x, y: (SpinorPoint(1.0, x), SpinorPoint(y, 1.0)),
    "mp": lambda x, y: (SpinorPoint(x, 1.0), SpinorPoint(1.0, y)),
    "mm": lambda x, y: (SpinorPoint(x, 1.0), SpinorPoint(y, 1.0)),
}


def cmd_plot(args) -> int:
    if args.grid < 2:
        raise SchemaError("--grid must be at least 2")
    R, _geom, _t = load_input_path(args.input, tol=args.tol)
    coeffs = curve_coeffs(curvature_operator_blocks(R))
    if classify(coeffs, tol=max(args.tol, 1e-12)).tag is CurveTag.IDENTICALLY_ZERO:
        return _fail(EXIT_ZERO_CURVE, "coefficients vanish identically; nothing to plot")
    spin = _CHART_SPINORS[args.chart]
    values = np.linspace(-3.0, 3.0, args.grid)
    lines = ["x,y,log10_abs_delta"]
    for x in values:
        for y in values:
            a, b = spin(float(x), float(y))
            delta = evaluate(coeffs, a, b)
            mag = max(abs(delta), 1e-300)
            lines.append(
                ",".join([format_float(float(x)), format_float(float(y)), format_float(math.log10(mag))])
            )
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    return EXIT_OK


def build_parser(default_tol: float) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="branchcurve",
        description="Branching curves of 4-dimensional curvature tensors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="curve data for a single input document")
    p.add_argument("input", help="path to a JSON input document")
    p.add_argument("--emit", choices=("coeffs", "class", "blocks", "all"), default="all")
    p.add_argument("--tol", type=float, default=default_tol)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("flow", help="time series of normalized coefficients")
    p.add_argument("geometry")
    p.add_argument("--t0", type=float, required=True)
    p.add_argument("--t1", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--emit", default="csv")
    p.add_argument("--kappa", type=float, default=1.0)
    p.add_argument("--tol", type=float, default=default_tol)
    p.set_defaults(func=cmd_flow)

    p = sub.add_parser("blowup", help="parabolic blow-up convergence report")
    p.add_argument("geometry")
    p.add_argument("--lambda-base", type=float, default=0.5, dest="lambda_base")
    p.add_argument("--count", type=int, default=8)
    p.add_argument("--t", type=float, default=-1.0)
    p.add_argument("--kappa", type=float, default=1.0)
    p.add_argument("--tol", type=float, default=default_tol)
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("plot", help="real-slice CSV grid of log10|curve value|")
    p.add_argument("input")
    p.add_argument("--chart", choices=("pp", "pm", "mp", "mm"), default="pp")
    p.add_argument("--grid", type=int, default=61)
    p.add_argument("--out", required=True)
    p.add_argument("--tol", type=float, default=default_tol)
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser(_default_tol())
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SymmetryError as exc:
        return _fail(EXIT_SYMMETRY, str(exc))
    except SchemaError as exc:
        return _fail(EXIT_SCHEMA, str(exc))
    except FlowDomainError as exc:
        return _fail(EXIT_DOMAIN, str(exc))
    except OSError as exc:
        return _fail(EXIT_SCHEMA, str(exc))


def entry() -> None:  # console-script hook
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
