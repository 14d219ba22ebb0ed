"""The branching curve of a curvature tensor as a bidegree-(4,4) polynomial.

For spinor parameters a = [a1, a2] and b = [b1, b2] of the two rulings, the
pencil of tangent lines through the corresponding quadric point meets the
projectivized curvature quadric where

    P(a) s^2 + 2 M(a,b) s + Q(b) = 0,

with P = T+^t Wplus T+, Q = T-^t Wminus T-, M = T+^t B T-, and T+/T- the
coordinate triples of the ruling conics.  The vanishing of the discriminant,

    Gamma(a, b):  M(a,b)^2 - P(a) Q(b) = 0,

cuts out a curve of bidegree (4,4) in the product of the two spinor lines.
This module expands Gamma exactly into its 5x5 coefficient matrix, evaluates
and classifies it, and provides the independent two-path oracle plus a few
numeric diagnostics (singular-point scan, intersection-of-three-quadrics
membership).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .bivector import (
    BivectorCoords,
    SpinorPoint,
    qform_R,
    qform_lambda2g,
    qform_v,
    t_minus_triple,
    t_plus_triple,
)
from .tensor_core import CurvatureBlocks, FramedRiemann

__all__ = [
    "CurveCoeffs",
    "CurveClass",
    "CurveTag",
    "PencilQuadratic",
    "IntersectionCase",
    "BlockSummary",
    "OracleReport",
    "SingularScan",
    "SingularCandidate",
    "pencil_quadratic",
    "intersection_case",
    "curve_coeffs",
    "evaluate",
    "oracle_check",
    "classify",
    "singular_sample",
    "k3_membership",
    "normalized_coeffs",
    "projective_distance",
    "QUADRUPLE_DIAGONAL_PATTERN",
]

# Ruling-conic components as degree-2 binary forms; row r holds the
# coefficients [z2^2, z1 z2, z1^2] of the r-th coordinate.
_TP = np.array([[0, 2j, 0], [1j, 0, -1j], [-1, 0, -1]], dtype=complex)
_TM = np.array([[0, 2j, 0], [1j, 0, -1j], [1, 0, 1]], dtype=complex)

#: Coefficient matrix of (a1 b2 - a2 b1)^4; c[m][n] multiplies
#: (a1)^m (a2)^(4-m) (b1)^n (b2)^(4-n).
QUADRUPLE_DIAGONAL_PATTERN = np.zeros((5, 5), dtype=complex)
for _m, _v in zip(range(5), (1.0, -4.0, 6.0, -4.0, 1.0)):
    QUADRUPLE_DIAGONAL_PATTERN[_m, 4 - _m] = _v
QUADRUPLE_DIAGONAL_PATTERN.setflags(write=False)

_TINY = 1e-300


def _csum(terms: Sequence[complex]) -> complex:
    """Exactly-rounded complex sum (compensated, order independent)."""
    return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


class CurveTag(Enum):
    IDENTICALLY_ZERO = "IDENTICALLY_ZERO"
    QUADRUPLE_DIAGONAL = "QUADRUPLE_DIAGONAL"
    DOUBLE_RECTANGLE = "DOUBLE_RECTANGLE"
    OTHER = "OTHER"


class IntersectionCase(Enum):
    TWO_POINTS = "TWO_POINTS"
    TANGENT = "TANGENT"
    LINE_CONTAINED = "LINE_CONTAINED"


@dataclass(frozen=True)
class BlockSummary:
    """Degeneracy data of the generating blocks, kept for classification detail."""

    scale: float
    wplus_max: float
    wminus_max: float
    b_max: float
    wplus_off_identity: float
    wminus_off_identity: float


@dataclass(frozen=True)
class PencilQuadratic:
    """Coefficients (c2, c1, c0) of the pencil equation c2 s^2 + c1 s + c0."""

    c2: complex
    c1: complex
    c0: complex

    @property
    def discriminant(self) -> complex:
        return self.c1 * self.c1 - 4.0 * self.c2 * self.c0


@dataclass(frozen=True)
class CurveClass:
    tag: CurveTag
    detail: str


@dataclass(frozen=True)
class CurveCoeffs:
    """5x5 complex coefficient matrix of the branching-curve polynomial.

    ``c[m][n]`` multiplies (a1)^m (a2)^(4-m) (b1)^n (b2)^(4-n).  The matrix is
    a projective object: only its ray matters.  ``summary`` records the block
    scale the coefficients were built from (they are quadratic in it), so that
    zero tests can be made scale relative.
    """

    c: np.ndarray
    summary: Optional[BlockSummary] = None
    norm: Optional[np.ndarray] = None

    def __post_init__(self):
        arr = np.array(self.c, dtype=complex)
        if arr.shape != (5, 5):
            raise ValueError("CurveCoeffs needs a 5x5 coefficient matrix")
        arr.setflags(write=False)
        object.__setattr__(self, "c", arr)
        if self.norm is not None:
            narr = np.array(self.norm, dtype=complex)
            narr.setflags(write=False)
            object.__setattr__(self, "norm", narr)

    @property
    def max_abs(self) -> float:
        return float(np.max(np.abs(self.c)))

    def normalized(self) -> np.ndarray:
        if self.norm is not None:
            return self.norm
        return normalized_coeffs(self.c)


def normalized_coeffs(c: np.ndarray) -> np.ndarray:
    """Divide by the entry of largest modulus (ties broken row-major).

    An all-zero matrix normalizes to itself.  The pivot entry maps to exactly
    1, and a real pivot divides componentwise (exact IEEE rounding per part);
    numpy's complex division is not exactly rounded, so this matters for
    bit-level determinism.
    """
    c = np.asarray(c, dtype=complex)
    idx = np.unravel_index(int(np.argmax(np.abs(c))), c.shape)
    pivot = c[idx]
    if pivot == 0:
        return c.copy()
    out = c / pivot.real if pivot.imag == 0.0 else c / pivot
    out[idx] = 1.0
    return out


def projective_distance(c1: np.ndarray, c2: np.ndarray) -> float:
    """Max-entry distance between normalized coefficient matrices."""
    return float(np.max(np.abs(normalized_coeffs(c1) - normalized_coeffs(c2))))


def _block_summary(blocks: CurvatureBlocks) -> BlockSummary:
    wp, wm, b = blocks.Wplus, blocks.Wminus, blocks.B
    eye = np.eye(3)

    def off_id(w: np.ndarray) -> float:
        return float(np.max(np.abs(w - (np.trace(w) / 3.0) * eye)))

    return BlockSummary(
        scale=blocks.max_entry,
        wplus_max=float(np.max(np.abs(wp))),
        wminus_max=float(np.max(np.abs(wm))),
        b_max=float(np.max(np.abs(b))),
        wplus_off_identity=off_id(wp),
        wminus_off_identity=off_id(wm),
    )


def pencil_quadratic(blocks: CurvatureBlocks, a: SpinorPoint, b: SpinorPoint) -> PencilQuadratic:
    """Numeric pencil coefficients at a single spinor pair."""
    tp = t_plus_triple(a)
    tm = t_minus_triple(b)
    c2 = complex(tp @ blocks.Wplus @ tp)
    c1 = complex(2.0 * (tp @ blocks.B @ tm))
    c0 = complex(tm @ blocks.Wminus @ tm)
    return PencilQuadratic(c2, c1, c0)


def intersection_case(q: PencilQuadratic, tol: float = 1e-10) -> IntersectionCase:
    """Classify how the tangent-line pencil meets the curvature quadric.

    LINE_CONTAINED when all three coefficients vanish, TANGENT when only the
    discriminant does (one double point), TWO_POINTS otherwise.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    if max(abs(q.c2), abs(q.c1), abs(q.c0)) <= tol:
        return IntersectionCase.LINE_CONTAINED
    scale = max(abs(q.c1) ** 2, 4.0 * abs(q.c2) * abs(q.c0), _TINY)
    if abs(q.discriminant) <= tol * scale:
        return IntersectionCase.TANGENT
    return IntersectionCase.TWO_POINTS


def _quartic_form(W: np.ndarray, T: np.ndarray) -> np.ndarray:
    """Coefficients of the binary quartic T^t W T; index = power of z1."""
    terms: List[List[complex]] = [[] for _ in range(5)]
    for i in range(3):
        for j in range(3):
            w = W[i, j]
            if w == 0:
                continue
            for r in range(3):
                if T[i, r] == 0:
                    continue
                for s in range(3):
                    if T[j, s] == 0:
                        continue
                    terms[r + s].append(w * T[i, r] * T[j, s])
    return np.array([_csum(t) for t in terms], dtype=complex)


def _bilinear_form(B: np.ndarray, Tp: np.ndarray, Tm: np.ndarray) -> np.ndarray:
    """Coefficients m[j][k] of the (2,2)-form T+^t B T-."""
    terms: List[List[List[complex]]] = [[[] for _ in range(3)] for _ in range(3)]
    for i in range(3):
        for j in range(3):
            w = B[i, j]
            if w == 0:
                continue
            for r in range(3):
                if Tp[i, r] == 0:
                    continue
                for s in range(3):
                    if Tm[j, s] == 0:
                        continue
                    terms[r][s].append(w * Tp[i, r] * Tm[j, s])
    return np.array([[_csum(cell) for cell in row] for row in terms], dtype=complex)


def _expand(Wp: np.ndarray, Wm: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Coefficient matrix of M^2 - P Q for the given blocks."""
    p = _quartic_form(np.asarray(Wp, dtype=complex), _TP)
    q = _quartic_form(np.asarray(Wm, dtype=complex), _TM)
    m = _bilinear_form(np.asarray(B, dtype=complex), _TP, _TM)
    c = np.zeros((5, 5), dtype=complex)
    for r in range(5):
        for s in range(5):
            terms: List[complex] = []
            for j in range(max(0, r - 2), min(2, r) + 1):
                for k in range(max(0, s - 2), min(2, s) + 1):
                    v = m[j, k] * m[r - j, s - k]
                    if v != 0:
                        terms.append(v)
            pq = p[r] * q[s]
            if pq != 0:
                terms.append(-pq)
            c[r, s] = _csum(terms)
    return c


def curve_coeffs(blocks: CurvatureBlocks) -> CurveCoeffs:
    """Exact expansion of M^2 - P Q into the 5x5 coefficient matrix.

    The expansion is plain polynomial arithmetic over complex doubles with
    compensated summation per coefficient; no sampling is involved.  The
    blocks are expanded after division by their largest entry and the result
    is rescaled, so the attached normalized matrix depends only on the ray of
    the blocks: rescaled curvature reproduces it bit for bit.
    """
    summary = _block_summary(blocks)
    s = blocks.traceless_max_entry
    if s == 0.0:
        zero = np.zeros((5, 5), dtype=complex)
        return CurveCoeffs(zero, summary=summary, norm=zero)
    scaled = _expand(blocks.Wplus / s, blocks.Wminus / s, blocks.B / s)
    return CurveCoeffs((s * s) * scaled, summary=summary, norm=normalized_coeffs(scaled))


def evaluate(coeffs: CurveCoeffs, a: SpinorPoint, b: SpinorPoint) -> complex:
    """Value of the bihomogeneous polynomial at a spinor pair.

    Scaling a by alpha and b by beta scales the value by alpha^4 beta^4.
    """
    a1, a2 = a.c1, a.c2
    b1, b2 = b.c1, b.c2
    av = np.array([a1**m * a2 ** (4 - m) for m in range(5)], dtype=complex)
    bv = np.array([b1**n * b2 ** (4 - n) for n in range(5)], dtype=complex)
    return complex(av @ coeffs.c @ bv)


def _direct_value(blocks: CurvatureBlocks, a: SpinorPoint, b: SpinorPoint) -> Tuple[complex, complex, complex]:
    """(M^2 - PQ, M^2, PQ) computed with no polynomial expansion."""
    tp = t_plus_triple(a)
    tm = t_minus_triple(b)
    P = complex(tp @ blocks.Wplus @ tp)
    Q = complex(tm @ blocks.Wminus @ tm)
    M = complex(tp @ blocks.B @ tm)
    return M * M - P * Q, M * M, P * Q


@dataclass(frozen=True)
class OracleReport:
    ok: bool
    samples: int
    worst_relative: float
    worst_sample: Optional[Tuple[complex, complex, complex, complex]]


def oracle_check(
    blocks: CurvatureBlocks,
    coeffs: CurveCoeffs,
    samples: int = 1000,
    tol: float = 1e-10,
    seed: int = 0,
) -> OracleReport:
    """Two-path consistency: expanded coefficients vs direct M^2 - PQ values.

    Deviations are measured relative to the sample's natural term magnitude
    (block scale * |a|^2 * |b|^2)^2, which bounds the roundoff of both paths;
    a plain value-relative measure would blow up on the curve's own zero set.
    The sampling is seeded, hence deterministic by default.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    s_blocks = blocks.traceless_max_entry
    worst = 0.0
    worst_sample = None
    for _ in range(samples):
        ar = rng.standard_normal(4)
        br = rng.standard_normal(4)
        a = SpinorPoint(complex(ar[0], ar[1]), complex(ar[2], ar[3]))
        b = SpinorPoint(complex(br[0], br[1]), complex(br[2], br[3]))
        direct, m2, pq = _direct_value(blocks, a, b)
        expanded = evaluate(coeffs, a, b)
        sa = abs(a.c1) ** 2 + abs(a.c2) ** 2
        sb = abs(b.c1) ** 2 + abs(b.c2) ** 2
        scale = max(abs(m2), abs(pq), (s_blocks * sa * sb) ** 2, _TINY)
        rel = abs(expanded - direct) / scale
        if rel > worst:
            worst = rel
            worst_sample = (a.c1, a.c2, b.c1, b.c2)
    return OracleReport(worst <= tol, samples, worst, worst_sample)


def classify(coeffs: CurveCoeffs, tol: float = 1e-9) -> CurveClass:
    """Frame-fixed pattern classification of the coefficient matrix.

    Recognizes the quadruple diagonal (fourth power of the difference form)
    and the double rectangle (single central monomial squared) up to global
    scale; every other nonzero matrix is OTHER.  The zero test is relative to
    the square of the generating block scale when that is known.
    """
    cmax = coeffs.max_abs
    s = coeffs.summary
    zero_thresh = tol * s.scale**2 if s is not None else tol
    if cmax <= zero_thresh:
        return CurveClass(CurveTag.IDENTICALLY_ZERO, _zero_detail(s, tol))
    norm = coeffs.normalized()
    qd_target = QUADRUPLE_DIAGONAL_PATTERN / QUADRUPLE_DIAGONAL_PATTERN[2, 2]
    qd_residual = float(np.max(np.abs(norm - qd_target)))
    if qd_residual <= tol:
        return CurveClass(
            CurveTag.QUADRUPLE_DIAGONAL,
            f"anti-diagonal (1,-4,6,-4,1) pattern, residual {qd_residual:.3e}",
        )
    off = norm.copy()
    central = off[2, 2]
    off[2, 2] = 0.0
    dr_residual = float(np.max(np.abs(off)))
    if abs(central - 1.0) <= tol and dr_residual <= tol:
        return CurveClass(
            CurveTag.DOUBLE_RECTANGLE,
            f"single central entry c[2][2], off-pattern residual {dr_residual:.3e}",
        )
    return CurveClass(
        CurveTag.OTHER,
        f"no pattern matched (quadruple-diagonal residual {qd_residual:.3e}, "
        f"double-rectangle residual {dr_residual:.3e})",
    )


def _zero_detail(s: Optional[BlockSummary], tol: float) -> str:
    if s is None:
        return "all coefficients vanish (no block data attached)"
    thresh = tol * max(s.scale, _TINY)
    flags = []
    wplus_zero = s.wplus_max <= thresh
    wminus_zero = s.wminus_max <= thresh
    b_zero = s.b_max <= thresh
    wplus_kills = s.wplus_off_identity <= thresh
    wminus_kills = s.wminus_off_identity <= thresh
    if wplus_zero:
        flags.append("Wplus=0")
    elif wplus_kills:
        flags.append("Wplus prop. to identity")
    if wminus_zero:
        flags.append("Wminus=0")
    elif wminus_kills:
        flags.append("Wminus prop. to identity")
    if b_zero:
        flags.append("B=0")
    if wplus_zero and wminus_zero and b_zero:
        head = "branching does not exist: the pencil equation vanishes identically"
    elif b_zero and (wplus_kills != wminus_kills or (wplus_kills and wminus_kills)):
        head = "branch locus is the whole quadric: discriminant vanishes identically"
    else:
        head = "degenerate: M^2 equals P*Q identically (cancellation)"
    joined = ", ".join(flags) if flags else "no block degeneracy flags"
    return f"{head} [{joined}]"


@dataclass(frozen=True)
class SingularCandidate:
    chart: str
    x: complex
    y: complex
    value: float
    gradient: float


@dataclass(frozen=True)
class SingularScan:
    status: str  # "ok" or "degenerate input"
    points: Tuple[SingularCandidate, ...]
    note: str = ""


_CHARTS = ("pp", "pm", "mp", "mm")


def _chart_poly(c: np.ndarray, chart: str) -> np.ndarray:
    """Bivariate coefficients D[r][s] of x^r y^s in the given affine chart."""
    if chart == "pp":  # a=[1,x], b=[1,y]
        return c[::-1, ::-1].copy()
    if chart == "pm":  # a=[1,x], b=[y,1]
        return c[::-1, :].copy()
    if chart == "mp":  # a=[x,1], b=[1,y]
        return c[:, ::-1].copy()
    if chart == "mm":  # a=[x,1], b=[y,1]
        return c.copy()
    raise ValueError(f"unknown chart {chart!r}")


def _poly_eval(D: np.ndarray, x: complex, y: complex) -> complex:
    xs = np.array([x**r for r in range(D.shape[0])], dtype=complex)
    ys = np.array([y**s for s in range(D.shape[1])], dtype=complex)
    return complex(xs @ D @ ys)


def _poly_dx(D: np.ndarray) -> np.ndarray:
    out = np.zeros((max(D.shape[0] - 1, 1), D.shape[1]), dtype=complex)
    for r in range(1, D.shape[0]):
        out[r - 1, :] = r * D[r, :]
    return out


def _poly_dy(D: np.ndarray) -> np.ndarray:
    return _poly_dx(D.T).T


def singular_sample(coeffs: CurveCoeffs, grid_n: int, tol: float = 1e-8) -> SingularScan:
    """Heuristic scan for singular points of the curve, chart by chart.

    Seeds real and purely imaginary grids over [-1.5, 1.5]^2 in each affine
    chart, keeps seeds where the value and both partials are already small,
    and polishes them with a damped Newton iteration on the gradient system.
    Output is deduplicated and sorted, hence deterministic.  Not a certified
    algorithm; an empty result does not prove smoothness.
    """
    if grid_n < 2:
        raise ValueError("grid_n must be at least 2")
    cls = classify(coeffs)
    if cls.tag is CurveTag.IDENTICALLY_ZERO:
        return SingularScan("degenerate input", (), "coefficients vanish identically")
    scale = coeffs.max_abs
    sweep = np.linspace(-1.5, 1.5, grid_n)
    real_seeds = [complex(v, 0.0) for v in sweep]
    imag_seeds = [complex(0.0, v) for v in sweep]
    screen = max(tol, 1e-4) * scale * 10.0
    accept_val = tol * scale
    found = {}
    for chart in _CHARTS:
        D = _chart_poly(coeffs.c, chart)
        Dx, Dy = _poly_dx(D), _poly_dy(D)
        Dxx, Dxy, Dyy = _poly_dx(Dx), _poly_dy(Dx), _poly_dy(Dy)
        for seeds in (real_seeds, imag_seeds):
            for x0 in seeds:
                for y0 in seeds:
                    f = _poly_eval(D, x0, y0)
                    gx = _poly_eval(Dx, x0, y0)
                    gy = _poly_eval(Dy, x0, y0)
                    if max(abs(f), abs(gx), abs(gy)) > screen:
                        continue
                    pt = _newton_polish(D, Dx, Dy, Dxx, Dxy, Dyy, x0, y0)
                    if pt is None:
                        continue
                    x, y = pt
                    fv = abs(_poly_eval(D, x, y))
                    g = max(abs(_poly_eval(Dx, x, y)), abs(_poly_eval(Dy, x, y)))
                    if fv <= accept_val and g <= accept_val:
                        key = (
                            chart,
                            round(x.real, 6),
                            round(x.imag, 6),
                            round(y.real, 6),
                            round(y.imag, 6),
                        )
                        if key not in found:
                            found[key] = SingularCandidate(chart, x, y, fv, g)
    points = tuple(found[k] for k in sorted(found))
    note = ""
    if len(points) >= grid_n:
        note = "dense candidate set: multiplicity > 1 (positive-dimensional singular locus suspected)"
    return SingularScan("ok", points, note)


def _newton_polish(D, Dx, Dy, Dxx, Dxy, Dyy, x, y, iters: int = 30):
    """Damped Newton on the 2x2 gradient system; returns None on blowup."""
    for _ in range(iters):
        gx = _poly_eval(Dx, x, y)
        gy = _poly_eval(Dy, x, y)
        gnorm = math.hypot(abs(gx), abs(gy))
        if gnorm == 0.0:
            return x, y
        J = np.array(
            [
                [_poly_eval(Dxx, x, y), _poly_eval(Dxy, x, y)],
                [_poly_eval(Dxy, x, y), _poly_eval(Dyy, x, y)],
            ],
            dtype=complex,
        )
        rhs = -np.array([gx, gy], dtype=complex)
        step, *_ = np.linalg.lstsq(J, rhs, rcond=None)
        lam = 1.0
        improved = False
        for _half in range(20):
            xn, yn = x + lam * step[0], y + lam * step[1]
            gn = math.hypot(abs(_poly_eval(Dx, xn, yn)), abs(_poly_eval(Dy, xn, yn)))
            if gn < gnorm:
                x, y = xn, yn
                improved = True
                break
            lam *= 0.5
        if not improved:
            return x, y
        if abs(x) > 1e6 or abs(y) > 1e6:
            return None
    return x, y


def k3_membership(R: FramedRiemann, u: BivectorCoords, tol: float = 1e-10) -> bool:
    """Whether a bivector lies on all three quadrics cut out at the point.

    Normalizes u by its largest-modulus coordinate, then requires the volume
    form, the induced metric form and the curvature form to vanish within tol.
    """
    arr = u.u
    idx = int(np.argmax(np.abs(arr)))
    if arr[idx] == 0:
        raise ValueError("bivector must be nonzero")
    un = BivectorCoords(arr / arr[idx], u.basis)
    if abs(qform_v(un)) > tol:
        return False
    if abs(qform_lambda2g(un, un)) > tol:
        return False
    return abs(qform_R(R, un, un)) <= tol
