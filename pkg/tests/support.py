"""Shared helpers for the test suite."""

import numpy as np

from branchcurve.tensor_core import FramedRiemann, riemann_from_blocks


def random_symmetric3(rng) -> np.ndarray:
    m = rng.standard_normal((3, 3))
    return (m + m.T) / 2.0


def random_valid_riemann(rng) -> FramedRiemann:
    """Random curvature tensor satisfying all four identities.

    Any symmetric 6x6 block Gram matrix with trace(A) == trace(C) embeds to a
    valid tensor; the trace condition is the block form of the first Bianchi
    identity.
    """
    A = random_symmetric3(rng)
    C = random_symmetric3(rng)
    C = C - ((np.trace(C) - np.trace(A)) / 3.0) * np.eye(3)
    B = rng.standard_normal((3, 3))
    return riemann_from_blocks(A, B, C)


def random_spinor_pair(rng):
    from branchcurve.bivector import SpinorPoint

    ar = rng.standard_normal(4)
    br = rng.standard_normal(4)
    return (
        SpinorPoint(complex(ar[0], ar[1]), complex(ar[2], ar[3])),
        SpinorPoint(complex(br[0], br[1]), complex(br[2], br[3])),
    )


def rotate_frame(R: FramedRiemann, O: np.ndarray) -> FramedRiemann:
    """Components of the same tensor in the rotated frame O @ e."""
    comp = np.einsum("ai,bj,ck,dl,abcd->ijkl", O, O, O, O, R.components)
    return FramedRiemann(comp)


def random_so4(rng) -> np.ndarray:
    """Haar-ish random special orthogonal 4x4 matrix."""
    q, r = np.linalg.qr(rng.standard_normal((4, 4)))
    q = q @ np.diag(np.sign(np.diag(r)))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q
