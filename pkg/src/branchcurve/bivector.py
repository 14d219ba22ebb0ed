"""Coordinates on the complexified 2-forms of an oriented Euclidean 4-space.

Everything here lives at a single point: the frame ``{e_1, ..., e_4}`` is
orthonormal, and a bivector is held as six complex coordinates either in the
wedge basis ``{e_i ^ e_j : i < j}`` (ordered 12, 13, 14, 23, 24, 34) or in the
self-dual/anti-self-dual basis

    f_k(+) = (e_1^e_2 + e_3^e_4)/sqrt2, (e_1^e_3 - e_2^e_4)/sqrt2,
             (e_1^e_4 + e_2^e_3)/sqrt2
    f_k(-) = same with the opposite interior sign.

The SD coordinates used throughout are the unnormalized combinations

    [u^12+u^34, u^13-u^24, u^14+u^23, u^12-u^34, u^13+u^24, u^14-u^23],

i.e. sqrt2 times the coefficients against the normalized f's; they make the
ruling parametrizations below come out with integer entries.

The two rulings of the projectivized null quadric of the metric are
parametrized by spinor points [a1, a2] and [b1, b2]; their Pluecker images
are the conics t_plus / t_minus supported on the SD and ASD 3-planes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:  # pragma: no cover
    from .tensor_core import FramedRiemann

__all__ = [
    "Basis",
    "SpinorPoint",
    "BivectorCoords",
    "Vector4C",
    "DegenerateLineError",
    "WEDGE_PAIRS",
    "SD_FROM_WEDGE",
    "segre",
    "pluecker",
    "to_sd_basis",
    "from_sd_basis",
    "t_plus",
    "t_minus",
    "t_plus_triple",
    "t_minus_triple",
    "qform_v",
    "qform_lambda2g",
    "qform_R",
]

#: Index pairs (i, j), i < j, fixing the ordering of wedge coordinates.
WEDGE_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

#: Linear map from wedge coordinates to the unnormalized SD coordinates.
#: Satisfies SD_FROM_WEDGE @ SD_FROM_WEDGE.T == 2*I, so the normalized
#: change of basis is SD_FROM_WEDGE / sqrt2 (orthogonal).
SD_FROM_WEDGE = np.array(
    [
        [1, 0, 0, 0, 0, 1],
        [0, 1, 0, 0, -1, 0],
        [0, 0, 1, 1, 0, 0],
        [1, 0, 0, 0, 0, -1],
        [0, 1, 0, 0, 1, 0],
        [0, 0, 1, -1, 0, 0],
    ],
    dtype=float,
)


class Basis(Enum):
    """Which coordinate system a 6-vector of bivector coordinates uses."""

    WEDGE = "wedge"
    SD = "sd"


class DegenerateLineError(ValueError):
    """Raised when two vectors fail to span a line (all wedge minors vanish)."""


@dataclass(frozen=True)
class SpinorPoint:
    """Homogeneous coordinates [c1, c2] of a point on a projective line."""

    c1: complex
    c2: complex

    def __post_init__(self):
        if self.c1 == 0 and self.c2 == 0:
            raise ValueError("spinor point must have a nonzero coordinate")

    @property
    def vec(self) -> np.ndarray:
        return np.array([self.c1, self.c2], dtype=complex)


@dataclass(frozen=True)
class Vector4C:
    """A point of the complexified tangent space in frame coordinates."""

    w: np.ndarray

    def __post_init__(self):
        arr = np.array(self.w, dtype=complex)
        if arr.shape != (4,):
            raise ValueError("Vector4C needs exactly 4 coordinates")
        arr.setflags(write=False)
        object.__setattr__(self, "w", arr)


@dataclass(frozen=True)
class BivectorCoords:
    """Six complex coordinates plus the tag saying which basis they are in."""

    u: np.ndarray
    basis: Basis

    def __post_init__(self):
        arr = np.array(self.u, dtype=complex)
        if arr.shape != (6,):
            raise ValueError("BivectorCoords needs exactly 6 coordinates")
        arr.setflags(write=False)
        object.__setattr__(self, "u", arr)


def _vec4(w) -> np.ndarray:
    if isinstance(w, Vector4C):
        return w.w
    arr = np.asarray(w, dtype=complex)
    if arr.shape != (4,):
        raise ValueError("expected 4 complex coordinates")
    return arr


def as_wedge(u: BivectorCoords) -> np.ndarray:
    """Coordinates of ``u`` in the wedge basis, converting if necessary."""
    if u.basis is Basis.WEDGE:
        return u.u
    return SD_FROM_WEDGE.T @ u.u / 2.0


def segre(a: SpinorPoint, b: SpinorPoint) -> Vector4C:
    """Image of a spinor pair on the null quadric of the metric.

    The image satisfies (w1)^2 + (w2)^2 + (w3)^2 + (w4)^2 = 0, and as
    (a, b) range over both projective lines it sweeps out the whole quadric.
    """
    a1, a2 = a.c1, a.c2
    b1, b2 = b.c1, b.c2
    return Vector4C(
        [
            a1 * b1 + a2 * b2,
            1j * (a2 * b2 - a1 * b1),
            -1j * (a1 * b2 + a2 * b1),
            a2 * b1 - a1 * b2,
        ]
    )


def pluecker(w, w_tilde, tol: float = 1e-13) -> BivectorCoords:
    """Wedge coordinates of the line spanned by two independent vectors.

    The six 2x2 minors u^ij = w^i wt^j - w^j wt^i satisfy the quadric
    relation u12*u34 - u13*u24 + u14*u23 = 0.  Raises DegenerateLineError
    when all minors are below ``tol`` times the input scale (proportional
    inputs do not span a line).
    """
    wv = _vec4(w)
    tv = _vec4(w_tilde)
    minors = np.array([wv[i] * tv[j] - wv[j] * tv[i] for i, j in WEDGE_PAIRS])
    scale = max(float(np.max(np.abs(wv)) * np.max(np.abs(tv))), 1.0)
    if np.max(np.abs(minors)) <= tol * scale:
        raise DegenerateLineError("input vectors are proportional; no line spanned")
    return BivectorCoords(minors, Basis.WEDGE)


def to_sd_basis(u: BivectorCoords) -> BivectorCoords:
    """Convert wedge coordinates to the (unnormalized) SD coordinates."""
    if u.basis is not Basis.WEDGE:
        raise ValueError("to_sd_basis expects WEDGE coordinates")
    return BivectorCoords(SD_FROM_WEDGE @ u.u, Basis.SD)


def from_sd_basis(u: BivectorCoords) -> BivectorCoords:
    """Inverse of :func:`to_sd_basis`; the round trip is exact."""
    if u.basis is not Basis.SD:
        raise ValueError("from_sd_basis expects SD coordinates")
    return BivectorCoords(SD_FROM_WEDGE.T @ u.u / 2.0, Basis.WEDGE)


def t_plus_triple(a: SpinorPoint) -> np.ndarray:
    """The three nonzero SD coordinates of the self-dual ruling conic."""
    a1, a2 = a.c1, a.c2
    return np.array(
        [2j * a1 * a2, 1j * (a2 * a2 - a1 * a1), -a1 * a1 - a2 * a2],
        dtype=complex,
    )


def t_minus_triple(b: SpinorPoint) -> np.ndarray:
    """The three nonzero SD coordinates of the anti-self-dual ruling conic."""
    b1, b2 = b.c1, b.c2
    return np.array(
        [2j * b1 * b2, 1j * (b2 * b2 - b1 * b1), b1 * b1 + b2 * b2],
        dtype=complex,
    )


def t_plus(a: SpinorPoint) -> BivectorCoords:
    """Pluecker image of the ruling line through ``a``, in SD coordinates.

    The last three coordinates vanish and the first three lie on the conic
    (u1)^2 + (u2)^2 + (u3)^2 = 0.
    """
    out = np.zeros(6, dtype=complex)
    out[:3] = t_plus_triple(a)
    return BivectorCoords(out, Basis.SD)


def t_minus(b: SpinorPoint) -> BivectorCoords:
    """Pluecker image of the opposite ruling line through ``b``.

    The first three coordinates vanish and the last three lie on the conic
    (u4)^2 + (u5)^2 + (u6)^2 = 0.
    """
    out = np.zeros(6, dtype=complex)
    out[3:] = t_minus_triple(b)
    return BivectorCoords(out, Basis.SD)


def qform_v(u: BivectorCoords, sqrt_det_g: float = 1.0) -> complex:
    """Volume-form quadratic form 2*sqrt|det g|*(u12 u34 - u13 u24 + u14 u23).

    Vanishes exactly on totally decomposable bivectors; ``sqrt_det_g``
    defaults to 1 in the orthonormal frame.
    """
    w = as_wedge(u)
    return 2.0 * sqrt_det_g * (w[0] * w[5] - w[1] * w[4] + w[2] * w[3])


def qform_lambda2g(u: BivectorCoords, h: BivectorCoords) -> complex:
    """Induced metric on bivectors: the complex-bilinear coordinate dot product.

    Both arguments must be tagged with the same basis.  No conjugation is
    applied anywhere in this module; all forms are complex bilinear.  Note
    the unnormalized SD coordinates of a fixed bivector carry a factor 2
    relative to its wedge coordinates under this pairing.
    """
    if u.basis is not h.basis:
        raise ValueError("qform_lambda2g needs both arguments in the same basis")
    return complex(np.dot(u.u, h.u))


def qform_R(R: "FramedRiemann", u: BivectorCoords, h: BivectorCoords) -> complex:
    """Curvature quadratic form sum_{i<j,k<l} R_{ijlk} u^{ij} h^{kl}.

    SD inputs are converted to wedge coordinates internally.
    """
    comp = R.components
    uw = as_wedge(u)
    hw = as_wedge(h)
    total = 0.0 + 0.0j
    for p, (i, j) in enumerate(WEDGE_PAIRS):
        if uw[p] == 0:
            continue
        for q, (k, l) in enumerate(WEDGE_PAIRS):
            total += comp[i, j, l, k] * uw[p] * hw[q]
    return complex(total)
