"""Pointwise curvature tensors in an orthonormal frame and their block form.

A curvature tensor is stored as the full 4x4x4x4 array of frame components
R_{ijkl}, with the sign convention that the unit round sphere has sectional
components R_{abba} = +1.  In this convention the quadratic form induced on
bivectors is R(e_i^e_j, e_k^e_l) = R_{ijlk} (note the flip in the last pair),
and the associated operator on bivectors is the identity for the unit 4-sphere.

Splitting bivectors into self-dual and anti-self-dual parts turns that
quadratic form into the 3x3 block matrix

    [ A   B ]
    [ B^t C ]

where A and C carry the Weyl curvature plus the scalar part, and B carries
the traceless Ricci curvature.  The Weyl blocks are Wplus = A - (scal/12) Id
and Wminus = C - (scal/12) Id; both are traceless, and the first Bianchi
identity is equivalent to trace(A) == trace(C).

Because the adopted component convention is the global negative of the one in
which the classical four-part decomposition is usually written, the
Kulkarni-Nomizu terms of that decomposition enter here with a minus sign:

    Rm = W(+) + W(-) - (1/2) Ric0 kn g - (scal/24) g kn g,

which reduces the unit sphere to Rm = -(1/2) g kn g with Ric = 3 g, as it must.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .bivector import SD_FROM_WEDGE, WEDGE_PAIRS

__all__ = [
    "FramedRiemann",
    "SymmetricBilinear4",
    "CurvatureBlocks",
    "SymmetryReport",
    "DecompositionReport",
    "validate_symmetries",
    "ricci_and_scalar",
    "kulkarni_nomizu",
    "curvature_operator_blocks",
    "four_part_decomposition_check",
    "wedge_gram",
    "sd_gram",
    "riemann_from_wedge_gram",
    "riemann_from_sd_gram",
    "riemann_from_blocks",
]


@dataclass(frozen=True)
class FramedRiemann:
    """All components R_{ijkl} of a (4,0) curvature tensor in a frame."""

    components: np.ndarray

    def __post_init__(self):
        arr = np.array(self.components, dtype=float)
        if arr.shape != (4, 4, 4, 4):
            raise ValueError("FramedRiemann needs a 4x4x4x4 component array")
        arr.setflags(write=False)
        object.__setattr__(self, "components", arr)

    @staticmethod
    def zero() -> "FramedRiemann":
        return FramedRiemann(np.zeros((4, 4, 4, 4)))


@dataclass(frozen=True)
class SymmetricBilinear4:
    """A symmetric bilinear form on the 4-dimensional frame (e.g. Ricci)."""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=float)
        if arr.shape != (4, 4):
            raise ValueError("SymmetricBilinear4 needs a 4x4 array")
        arr = (arr + arr.T) / 2.0
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @staticmethod
    def identity() -> "SymmetricBilinear4":
        return SymmetricBilinear4(np.eye(4))


@dataclass(frozen=True)
class CurvatureBlocks:
    """The blocks A, B, C of the curvature operator and derived Weyl parts."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    scal: float
    Wplus: np.ndarray
    Wminus: np.ndarray

    def __post_init__(self):
        for name in ("A", "B", "C", "Wplus", "Wminus"):
            arr = np.array(getattr(self, name), dtype=float)
            if arr.shape != (3, 3):
                raise ValueError(f"block {name} must be 3x3")
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def max_entry(self) -> float:
        """Largest entry magnitude over A, B, C; the natural curvature scale.

        Uses the raw blocks rather than the derived Weyl parts so that the
        scale stays honest for tensors whose traceless parts vanish.
        """
        return float(
            max(np.max(np.abs(self.A)), np.max(np.abs(self.B)), np.max(np.abs(self.C)))
        )

    @property
    def traceless_max_entry(self) -> float:
        """Largest entry magnitude over Wplus, Wminus, B (the curve inputs)."""
        return float(
            max(np.max(np.abs(self.Wplus)), np.max(np.abs(self.Wminus)), np.max(np.abs(self.B)))
        )


@dataclass(frozen=True)
class SymmetryReport:
    ok: bool
    identity: Optional[str]
    indices: Optional[Tuple[int, int, int, int]]
    deviation: float
    max_residuals: dict

    def __bool__(self) -> bool:  # pragma: no cover - convenience
        return self.ok


@dataclass(frozen=True)
class DecompositionReport:
    ok: bool
    max_deviation: float
    indices: Optional[Tuple[int, int, int, int]]


def _residual_fields(comp: np.ndarray) -> dict:
    return {
        "antisymmetry_first_pair": comp + np.einsum("jikl->ijkl", comp),
        "antisymmetry_last_pair": comp + np.einsum("ijlk->ijkl", comp),
        "pair_symmetry": comp - np.einsum("klij->ijkl", comp),
        "first_bianchi": comp
        + np.einsum("jkil->ijkl", comp)
        + np.einsum("kijl->ijkl", comp),
    }


def validate_symmetries(R: FramedRiemann, tol: float = 1e-12) -> SymmetryReport:
    """Check the two antisymmetries, pair symmetry and the first Bianchi identity.

    Returns an ok report, or one naming the first violated identity (in the
    order listed above) and the first violating index tuple, 1-based.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    fields = _residual_fields(R.components)
    max_residuals = {name: float(np.max(np.abs(f))) for name, f in fields.items()}
    for name, field in fields.items():
        if max_residuals[name] > tol:
            bad = np.argwhere(np.abs(field) > tol)[0]
            idx = tuple(int(v) + 1 for v in bad)
            return SymmetryReport(False, name, idx, float(np.abs(field[tuple(bad)])), max_residuals)
    return SymmetryReport(True, None, None, 0.0, max_residuals)


def ricci_and_scalar(R: FramedRiemann) -> Tuple[SymmetricBilinear4, float]:
    """Ricci contraction Ric(j,l) = sum_i R_{jiil} and its trace.

    With the sphere convention R_{abba} = +1 this makes the unit 3-sphere
    factor contribute +2 on the diagonal.
    """
    ric = np.einsum("jiil->jl", R.components)
    return SymmetricBilinear4(ric), float(np.trace(ric))


def _sym4(k) -> np.ndarray:
    arr = k.entries if isinstance(k, SymmetricBilinear4) else np.asarray(k, dtype=float)
    if arr.shape != (4, 4):
        raise ValueError("expected a 4x4 symmetric array")
    scale = max(1.0, float(np.max(np.abs(arr))))
    if np.max(np.abs(arr - arr.T)) > 1e-12 * scale:
        raise ValueError("input bilinear form is not symmetric")
    return arr


def kulkarni_nomizu(k, l) -> FramedRiemann:
    """Kulkarni-Nomizu product of two symmetric bilinear forms.

    (k kn l)_{ijkl} = k_{ik} l_{jl} + k_{jl} l_{ik} - k_{il} l_{jk} - k_{jk} l_{il}.
    The output satisfies all four curvature symmetries whenever k and l are
    symmetric.
    """
    K = _sym4(k)
    L = _sym4(l)
    out = (
        np.einsum("ik,jl->ijkl", K, L)
        + np.einsum("jl,ik->ijkl", K, L)
        - np.einsum("il,jk->ijkl", K, L)
        - np.einsum("jk,il->ijkl", K, L)
    )
    return FramedRiemann(out)


def wedge_gram(R: FramedRiemann) -> np.ndarray:
    """6x6 matrix of the curvature quadratic form in the wedge basis."""
    comp = R.components
    G = np.zeros((6, 6))
    for p, (i, j) in enumerate(WEDGE_PAIRS):
        for q, (k, l) in enumerate(WEDGE_PAIRS):
            G[p, q] = comp[i, j, l, k]
    return G


def sd_gram(R: FramedRiemann) -> np.ndarray:
    """The same quadratic form in the normalized SD/ASD basis."""
    return SD_FROM_WEDGE @ wedge_gram(R) @ SD_FROM_WEDGE.T / 2.0


def riemann_from_wedge_gram(G: np.ndarray) -> FramedRiemann:
    """Rebuild tensor components from a symmetric wedge-basis Gram matrix."""
    G = np.asarray(G, dtype=float)
    comp = np.zeros((4, 4, 4, 4))
    for p, (i, j) in enumerate(WEDGE_PAIRS):
        for q, (k, l) in enumerate(WEDGE_PAIRS):
            v = G[p, q]
            comp[i, j, l, k] = v
            comp[j, i, l, k] = -v
            comp[i, j, k, l] = -v
            comp[j, i, k, l] = v
    return FramedRiemann(comp)


def riemann_from_sd_gram(G: np.ndarray) -> FramedRiemann:
    return riemann_from_wedge_gram(SD_FROM_WEDGE.T @ np.asarray(G, dtype=float) @ SD_FROM_WEDGE / 2.0)


def riemann_from_blocks(A: np.ndarray, B: np.ndarray, C: np.ndarray) -> FramedRiemann:
    """Tensor whose SD-basis Gram matrix is [[A, B], [B^t, C]].

    The result passes all symmetry checks iff A and C are symmetric with
    equal traces (the Bianchi identity in block form).
    """
    G = np.zeros((6, 6))
    G[:3, :3] = A
    G[:3, 3:] = B
    G[3:, :3] = np.transpose(B)
    G[3:, 3:] = C
    return riemann_from_sd_gram(G)


def curvature_operator_blocks(R: FramedRiemann) -> CurvatureBlocks:
    """Block decomposition of the curvature operator in the SD/ASD basis.

    A(i,j) pairs self-dual basis vectors, C(i,j) anti-self-dual ones, and
    B(i,j) pairs the i-th self-dual against the j-th anti-self-dual vector.
    """
    G = sd_gram(R)
    _, scal = ricci_and_scalar(R)
    A = G[:3, :3]
    B = G[:3, 3:]
    C = G[3:, 3:]
    third = scal / 12.0
    Wplus = A - third * np.eye(3)
    Wminus = C - third * np.eye(3)
    return CurvatureBlocks(A=A, B=B, C=C, scal=scal, Wplus=Wplus, Wminus=Wminus)


def four_part_decomposition_check(R: FramedRiemann, tol: float = 1e-12) -> DecompositionReport:
    """Rebuild R from Weyl blocks, traceless Ricci and scalar part, and compare.

    The reconstruction is

        W(+) + W(-) - (1/2) Ric0 kn g - (scal/24) g kn g

    with the Weyl blocks embedded back to 4-index form; the signs on the
    Kulkarni-Nomizu terms belong to the sphere-positive component convention.
    """
    blocks = curvature_operator_blocks(R)
    ric, scal = ricci_and_scalar(R)
    g = np.eye(4)
    ric0 = ric.entries - (scal / 4.0) * g
    weyl4 = riemann_from_blocks(blocks.Wplus, np.zeros((3, 3)), blocks.Wminus)
    recon = (
        weyl4.components
        - 0.5 * kulkarni_nomizu(ric0, g).components
        - (scal / 24.0) * kulkarni_nomizu(g, g).components
    )
    dev = np.abs(recon - R.components)
    max_dev = float(np.max(dev))
    if max_dev <= tol:
        return DecompositionReport(True, max_dev, None)
    bad = np.unravel_index(int(np.argmax(dev)), dev.shape)
    return DecompositionReport(False, max_dev, tuple(int(v) + 1 for v in bad))
