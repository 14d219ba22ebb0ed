import numpy as np
import pytest

from branchcurve.bivector import (
    Basis,
    BivectorCoords,
    DegenerateLineError,
    SD_FROM_WEDGE,
    SpinorPoint,
    from_sd_basis,
    pluecker,
    qform_R,
    qform_lambda2g,
    qform_v,
    segre,
    t_minus,
    t_plus,
    to_sd_basis,
)
from branchcurve.flow import model_geometry, riemann_at
from branchcurve.tensor_core import FramedRiemann, sd_gram
from support import random_valid_riemann

SQ2 = 2.0**-0.5


def _spinor(rng) -> SpinorPoint:
    v = rng.standard_normal(4)
    return SpinorPoint(complex(v[0], v[1]), complex(v[2], v[3]))


def test_segre_basis_points():
    assert np.allclose(segre(SpinorPoint(1, 0), SpinorPoint(1, 0)).w, [1, -1j, 0, 0], atol=0)
    assert np.allclose(segre(SpinorPoint(1, 0), SpinorPoint(0, 1)).w, [0, 0, -1j, -1], atol=0)


def test_segre_lands_on_metric_quadric():
    rng = np.random.default_rng(0)
    for _ in range(50):
        w = segre(_spinor(rng), _spinor(rng)).w
        assert abs(np.sum(w * w)) <= 1e-12 * max(1.0, float(np.max(np.abs(w))) ** 2)


def test_spinor_point_rejects_zero():
    with pytest.raises(ValueError):
        SpinorPoint(0, 0)


def test_pluecker_basis_lines():
    assert np.allclose(pluecker([1, 0, 0, 0], [0, 1, 0, 0]).u, [1, 0, 0, 0, 0, 0], atol=0)
    assert np.allclose(pluecker([1, 1, 0, 0], [1, -1, 0, 0]).u, [-2, 0, 0, 0, 0, 0], atol=0)


def test_pluecker_relation_random():
    rng = np.random.default_rng(1)
    for _ in range(200):
        w = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        wt = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        u = pluecker(w, wt).u
        rel = u[0] * u[5] - u[1] * u[4] + u[2] * u[3]
        assert abs(rel) <= 1e-12 * max(1.0, float(np.max(np.abs(u))) ** 2)


def test_pluecker_rejects_proportional_inputs():
    w = np.array([1.0, 2.0, -1.0, 0.5])
    with pytest.raises(DegenerateLineError):
        pluecker(w, 3.0 * w)


def test_sd_change_of_basis_values():
    u = BivectorCoords([1, 0, 0, 0, 0, 1], Basis.WEDGE)
    assert np.allclose(to_sd_basis(u).u, [2, 0, 0, 0, 0, 0], atol=0)
    u = BivectorCoords([0, 1, 0, 0, 1, 0], Basis.WEDGE)
    assert np.allclose(to_sd_basis(u).u, [0, 0, 0, 0, 2, 0], atol=0)


def test_sd_round_trip():
    rng = np.random.default_rng(2)
    assert np.allclose(SD_FROM_WEDGE @ SD_FROM_WEDGE.T, 2.0 * np.eye(6), atol=0)
    # exact on dyadic coordinates, machine precision in general
    u0 = BivectorCoords([1.0, -2.0, 0.5, 4.0, -0.25, 8.0], Basis.WEDGE)
    assert np.max(np.abs(from_sd_basis(to_sd_basis(u0)).u - u0.u)) == 0.0
    for _ in range(100):
        u = BivectorCoords(rng.standard_normal(6) + 1j * rng.standard_normal(6), Basis.WEDGE)
        back = from_sd_basis(to_sd_basis(u))
        scale = float(np.max(np.abs(u.u)))
        assert np.max(np.abs(back.u - u.u)) <= 4e-16 * scale


def test_ruling_parametrizations():
    assert np.allclose(t_plus(SpinorPoint(1, 0)).u, [0, -1j, -1, 0, 0, 0], atol=0)
    assert np.allclose(t_minus(SpinorPoint(1, 1)).u, [0, 0, 0, 2j, 0, 2], atol=0)
    rng = np.random.default_rng(3)
    for _ in range(200):
        up = t_plus(_spinor(rng)).u
        um = t_minus(_spinor(rng)).u
        scale = max(1.0, float(np.max(np.abs(up))) ** 2)
        assert np.all(up[3:] == 0) and np.all(um[:3] == 0)
        assert abs(np.sum(up[:3] ** 2)) <= 1e-12 * scale
        assert abs(np.sum(um[3:] ** 2)) <= 1e-12 * max(1.0, float(np.max(np.abs(um))) ** 2)


def test_ruling_matches_pluecker_of_segre_span():
    # the self-dual ruling through a is spanned by its images at b = [1,0], [0,1]
    rng = np.random.default_rng(4)
    for _ in range(100):
        a = _spinor(rng)
        w = segre(a, SpinorPoint(1, 0))
        wt = segre(a, SpinorPoint(0, 1))
        via_lines = pluecker(w, wt).u
        via_conic = from_sd_basis(t_plus(a)).u
        i = int(np.argmax(np.abs(via_lines)))
        u1 = via_lines / via_lines[i]
        u2 = via_conic / via_conic[i]
        assert np.max(np.abs(u1 - u2)) <= 1e-10


def test_qform_v_examples():
    rng = np.random.default_rng(5)
    w = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    wt = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    assert abs(qform_v(pluecker(w, wt))) <= 1e-12 * float(np.max(np.abs(pluecker(w, wt).u))) ** 2
    u = BivectorCoords([1, 0, 0, 0, 0, 1], Basis.WEDGE)
    assert qform_v(u) == 2.0
    h = BivectorCoords(rng.standard_normal(6) + 1j * rng.standard_normal(6), Basis.WEDGE)
    assert qform_v(h, sqrt_det_g=3.0) == 3.0 * qform_v(h)
    for _ in range(50):
        a, b = _spinor(rng), _spinor(rng)
        sa = max(1.0, float(np.max(np.abs(t_plus(a).u))) ** 2)
        sb = max(1.0, float(np.max(np.abs(t_minus(b).u))) ** 2)
        assert abs(qform_v(t_plus(a))) <= 1e-12 * sa
        assert abs(qform_v(t_minus(b))) <= 1e-12 * sb


def test_qform_lambda2g_examples():
    e12 = BivectorCoords([1, 0, 0, 0, 0, 0], Basis.WEDGE)
    assert qform_lambda2g(e12, e12) == 1.0
    rng = np.random.default_rng(6)
    for _ in range(100):
        a, b = _spinor(rng), _spinor(rng)
        up, um = t_plus(a), t_minus(b)
        assert qform_lambda2g(up, um) == 0.0
        scale = max(1.0, float(np.max(np.abs(up.u))) ** 2)
        assert abs(qform_lambda2g(up, up)) <= 1e-12 * scale
    with pytest.raises(ValueError):
        qform_lambda2g(e12, t_plus(SpinorPoint(1, 0)))


def test_qform_R_golden_values():
    R = riemann_at(model_geometry("s3xr"), 0.0)
    f1p = BivectorCoords([SQ2, 0, 0, 0, 0, SQ2], Basis.WEDGE)
    f3p = BivectorCoords([0, 0, SQ2, SQ2, 0, 0], Basis.WEDGE)
    f3m = BivectorCoords([0, 0, SQ2, -SQ2, 0, 0], Basis.WEDGE)
    assert abs(qform_R(R, f1p, f1p) - 0.5) <= 1e-15
    assert abs(qform_R(R, f3m, f3p) + 0.5) <= 1e-15
    z = FramedRiemann.zero()
    assert qform_R(z, f1p, f3m) == 0.0


def test_qform_R_matches_block_gram():
    # SD coordinates carry a factor sqrt2 against the normalized basis, so
    # the quadratic form evaluates to half the raw Gram pairing.
    rng = np.random.default_rng(7)
    for _ in range(50):
        R = random_valid_riemann(rng)
        G = sd_gram(R)
        u = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        h = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        lhs = qform_R(R, BivectorCoords(u, Basis.SD), BivectorCoords(h, Basis.SD))
        rhs = 0.5 * (u @ G @ h)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))
