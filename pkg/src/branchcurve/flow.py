"""Closed-form shrinking-flow models and parabolic blow-up rescaling.

Each model geometry is a product of round spheres and flat factors (or the
complex projective plane), evolving by uniform shrinking of every curved
factor: an n-sphere factor carries the scale sigma(t) = 1 - 2(n-1)t, flat
factors stay fixed, and the projective plane with Einstein constant kappa
carries sigma(t) = 1 - 2*kappa*t.  In the co-moving orthonormal frame the
curvature components are simply the t = 0 components divided by sigma(t),
so every flow here is exactly of bounded type: max|Rm| * (T - t) is constant.

Parabolic rescaling about the singular time T replaces the metric by
g_i(t) = g(T + lam_i t) / lam_i, i.e. multiplies frame components of the
curvature by lam_i; as lam_i -> 0 the components converge to a closed-form
limit supported on the factors that reach the singular time first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .curve import CurveClass, CurveCoeffs, CurveTag, classify, curve_coeffs
from .tensor_core import (
    CurvatureBlocks,
    FramedRiemann,
    curvature_operator_blocks,
    riemann_from_blocks,
)

__all__ = [
    "Factor",
    "ModelGeometry",
    "FlowSample",
    "BlowupSequence",
    "ConvergenceEntry",
    "ConvergenceReport",
    "FlowDomainError",
    "MODEL_NAMES",
    "model_geometry",
    "singular_time",
    "flow_sample",
    "riemann_at",
    "scale_metric",
    "blowup_riemann",
    "blowup_limit_riemann",
    "dyadic_blowup",
    "curve_sequence",
]


class FlowDomainError(ValueError):
    """Raised when a time lies outside the lifespan of a model flow."""


@dataclass(frozen=True)
class Factor:
    kind: str  # "sphere" | "euclidean" | "cp2"
    dim: int

    def __post_init__(self):
        if self.kind == "sphere" and self.dim not in (2, 3, 4):
            raise ValueError("sphere factors must have dimension 2, 3 or 4")
        if self.kind == "euclidean" and not 1 <= self.dim <= 4:
            raise ValueError("euclidean factors must have dimension 1..4")
        if self.kind == "cp2" and self.dim != 4:
            raise ValueError("the projective-plane atom is 4-dimensional")
        if self.kind not in ("sphere", "euclidean", "cp2"):
            raise ValueError(f"unknown factor kind {self.kind!r}")


@dataclass(frozen=True)
class ModelGeometry:
    """A named product geometry of total dimension 4."""

    name: str
    factors: Tuple[Factor, ...]
    kappa: Optional[float] = None  # Einstein constant, projective plane only

    def __post_init__(self):
        if sum(f.dim for f in self.factors) != 4:
            raise ValueError("factors must have total dimension 4")
        has_cp2 = any(f.kind == "cp2" for f in self.factors)
        if has_cp2 and len(self.factors) != 1:
            raise ValueError("the projective-plane atom cannot be combined with other factors")
        if has_cp2:
            if self.kappa is None or self.kappa <= 0:
                raise ValueError("the projective plane needs a positive kappa")
        elif self.kappa is not None:
            raise ValueError("kappa is only meaningful for the projective plane")


MODEL_NAMES = ("s3xr", "s2xs2", "s2xr2", "cp2", "s4", "r4")


def model_geometry(name: str, kappa: float = 1.0) -> ModelGeometry:
    """Build one of the canonical model geometries by name."""
    table = {
        "s3xr": (Factor("sphere", 3), Factor("euclidean", 1)),
        "s2xs2": (Factor("sphere", 2), Factor("sphere", 2)),
        "s2xr2": (Factor("sphere", 2), Factor("euclidean", 2)),
        "s4": (Factor("sphere", 4),),
        "r4": (Factor("euclidean", 4),),
        "cp2": (Factor("cp2", 4),),
    }
    if name not in table:
        raise ValueError(f"unknown geometry {name!r}; expected one of {MODEL_NAMES}")
    if name == "cp2":
        return ModelGeometry(name, table[name], kappa=float(kappa))
    return ModelGeometry(name, table[name])


def _factor_rate(f: Factor, kappa: Optional[float]) -> float:
    """Shrinking rate r with sigma(t) = 1 - r t; zero for flat factors."""
    if f.kind == "sphere":
        return 2.0 * (f.dim - 1)
    if f.kind == "cp2":
        return 2.0 * float(kappa)
    return 0.0


def singular_time(geom: ModelGeometry) -> float:
    """First time a factor scale hits zero; +inf for flat geometries."""
    rates = [_factor_rate(f, geom.kappa) for f in geom.factors]
    positive = [r for r in rates if r > 0]
    if not positive:
        return math.inf
    return min(1.0 / r for r in positive)


def _sigmas(geom: ModelGeometry, t: float) -> List[float]:
    return [1.0 - _factor_rate(f, geom.kappa) * t for f in geom.factors]


@dataclass(frozen=True)
class FlowSample:
    """A model geometry at a fixed time, with its per-factor scales."""

    geometry: ModelGeometry
    t: float
    T: float
    sigma: Tuple[float, ...]


def flow_sample(geom: ModelGeometry, t: float) -> FlowSample:
    T = singular_time(geom)
    if t >= T:
        raise FlowDomainError(f"time {t} is not below the singular time {T}")
    return FlowSample(geom, t, T, tuple(_sigmas(geom, t)))


def _cp2_riemann(inv_sigma: float) -> FramedRiemann:
    # Block data of the projective plane in the co-moving frame: the SD part of
    # the operator is isotropic, the ASD part concentrates on one direction.
    A = (inv_sigma / 2.0) * np.eye(3)
    C = np.diag([3.0 * inv_sigma / 2.0, 0.0, 0.0])
    return riemann_from_blocks(A, np.zeros((3, 3)), C)


def riemann_at(geom: ModelGeometry, t: float) -> FramedRiemann:
    """Frame components of the curvature of the model at time t.

    Inside an n-sphere factor of scale sigma every sectional component
    R_{abba} equals 1/sigma; all cross-factor and flat components vanish.
    """
    T = singular_time(geom)
    if t >= T:
        raise FlowDomainError(f"time {t} is not below the singular time {T}")
    if geom.factors[0].kind == "cp2":
        sigma = 1.0 - _factor_rate(geom.factors[0], geom.kappa) * t
        return _cp2_riemann(1.0 / sigma)
    comp = np.zeros((4, 4, 4, 4))
    offset = 0
    for f, sigma in zip(geom.factors, _sigmas(geom, t)):
        if f.kind == "sphere":
            s = 1.0 / sigma
            idx = range(offset, offset + f.dim)
            for a in idx:
                for b in idx:
                    if a == b:
                        continue
                    comp[a, b, b, a] = s
                    comp[a, b, a, b] = -s
        offset += f.dim
    return FramedRiemann(comp)


def scale_metric(R: FramedRiemann, kappa: float) -> FramedRiemann:
    """Curvature of the metric scaled by kappa, in its rescaled frame.

    Every frame component is divided by kappa; composition multiplies the
    factors.
    """
    if kappa <= 0:
        raise ValueError("kappa must be positive")
    return FramedRiemann(R.components / kappa)


@dataclass(frozen=True)
class BlowupSequence:
    """Rescaling factors for a parabolic blow-up at the singular time."""

    geometry: ModelGeometry
    lambdas: Tuple[float, ...]
    t: float = -1.0

    def __post_init__(self):
        if self.t >= 0:
            raise ValueError("the rescaled base time must be negative")
        T = singular_time(self.geometry)
        if not math.isfinite(T):
            raise FlowDomainError("blow-up needs a finite singular time")
        lams = tuple(float(l) for l in self.lambdas)
        if not lams:
            raise ValueError("need at least one rescaling factor")
        if any(l <= 0 for l in lams):
            raise ValueError("rescaling factors must be positive")
        if any(l2 >= l1 for l1, l2 in zip(lams, lams[1:])):
            raise ValueError("rescaling factors must decrease")
        for l in lams:
            if not 0.0 <= T + l * self.t < T:
                raise FlowDomainError(
                    f"rescaled time T + {l}*{self.t} falls outside [0, T) for T={T}"
                )
        object.__setattr__(self, "lambdas", lams)

    @property
    def T(self) -> float:
        return singular_time(self.geometry)


def dyadic_blowup(
    geom: ModelGeometry, count: int, t: float = -1.0, base: float = 0.5
) -> BlowupSequence:
    """Sequence lam_i = base^i for i = 1..count, keeping the in-domain entries.

    Powers too large for T + lam*t to reach forward time 0 are dropped, so the
    sequence always satisfies the domain invariant.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    if not 0 < base < 1:
        raise ValueError("base must lie in (0, 1)")
    T = singular_time(geom)
    if not math.isfinite(T):
        raise FlowDomainError("blow-up needs a finite singular time")
    lams = [base**i for i in range(1, count + 1) if 0.0 <= T + (base**i) * t < T]
    if not lams:
        raise FlowDomainError("no admissible rescaling factors in range")
    return BlowupSequence(geom, tuple(lams), t)


def blowup_riemann(seq: BlowupSequence, i: int) -> FramedRiemann:
    """Curvature of the i-th rescaled flow at the base time (components x lam_i)."""
    lam = seq.lambdas[i]
    return scale_metric(riemann_at(seq.geometry, seq.T + lam * seq.t), 1.0 / lam)


def blowup_limit_riemann(seq: BlowupSequence) -> FramedRiemann:
    """Closed-form limit of the rescaled curvatures as lam -> 0.

    A factor whose scale vanishes exactly at T contributes its t=0 components
    divided by -rate*t; every other factor flattens out in the limit.
    """
    geom = seq.geometry
    T = seq.T
    if geom.factors[0].kind == "cp2":
        rate = _factor_rate(geom.factors[0], geom.kappa)
        return _cp2_riemann(1.0 / (-rate * seq.t))
    comp = np.zeros((4, 4, 4, 4))
    offset = 0
    for f in geom.factors:
        rate = _factor_rate(f, geom.kappa)
        if rate > 0 and 1.0 / rate == T:
            s = 1.0 / (-rate * seq.t)
            idx = range(offset, offset + f.dim)
            for a in idx:
                for b in idx:
                    if a == b:
                        continue
                    comp[a, b, b, a] = s
                    comp[a, b, a, b] = -s
        offset += f.dim
    return FramedRiemann(comp)


@dataclass(frozen=True)
class ConvergenceEntry:
    lam: float
    distance: float
    tag: CurveTag


@dataclass(frozen=True)
class ConvergenceReport:
    geometry: str
    t: float
    degenerate: bool
    entries: Tuple[ConvergenceEntry, ...]
    limit_class: CurveClass
    limit_coeffs: CurveCoeffs
    max_distance: float
    nonincreasing: bool


def _blocks(R: FramedRiemann) -> CurvatureBlocks:
    return curvature_operator_blocks(R)


def curve_sequence(seq: BlowupSequence, tol: float = 1e-12) -> ConvergenceReport:
    """Normalized curve coefficients along a blow-up, with their limit.

    Reports the max-entry distance d_i of each normalized coefficient matrix
    to the limit matrix and whether the d_i are nonincreasing to zero within
    ``tol``.  Geometries whose curve vanishes identically are tagged
    degenerate instead.
    """
    limit_coeffs = curve_coeffs(_blocks(blowup_limit_riemann(seq)))
    limit_class = classify(limit_coeffs)
    degenerate = limit_class.tag is CurveTag.IDENTICALLY_ZERO
    limit_norm = limit_coeffs.normalized()
    entries: List[ConvergenceEntry] = []
    for i, lam in enumerate(seq.lambdas):
        ci = curve_coeffs(_blocks(blowup_riemann(seq, i)))
        tag_i = classify(ci).tag
        if degenerate:
            # residual of the (identically zero) curve relative to the block scale
            ref = ci.summary.scale**2 if ci.summary is not None else 1.0
            d = ci.max_abs / max(ref, 1e-300)
        else:
            d = float(np.max(np.abs(ci.normalized() - limit_norm)))
        entries.append(ConvergenceEntry(lam, d, tag_i))
    dists = [e.distance for e in entries]
    nonincreasing = all(d2 <= d1 + tol for d1, d2 in zip(dists, dists[1:])) and dists[-1] <= tol
    return ConvergenceReport(
        geometry=seq.geometry.name,
        t=seq.t,
        degenerate=degenerate,
        entries=tuple(entries),
        limit_class=limit_class,
        limit_coeffs=limit_coeffs,
        max_distance=max(dists),
        nonincreasing=nonincreasing,
    )
