"""Acceptance suite: one test per criterion, each printing a PASS line.

Criteria, tolerances and runtime budgets are pinned here; the rest of the
test suite covers the same ground in finer grain.
"""

import json
import subprocess
import sys
import time

import numpy as np

from branchcurve.bivector import SpinorPoint, pluecker, qform_v, segre
from branchcurve.curve import (
    CurveTag,
    QUADRUPLE_DIAGONAL_PATTERN,
    classify,
    curve_coeffs,
    normalized_coeffs,
    oracle_check,
)
from branchcurve.flow import (
    curve_sequence,
    dyadic_blowup,
    model_geometry,
    riemann_at,
    scale_metric,
    singular_time,
)
from branchcurve.tensor_core import (
    CurvatureBlocks,
    curvature_operator_blocks,
    four_part_decomposition_check,
    kulkarni_nomizu,
    validate_symmetries,
)
from support import random_spinor_pair, random_valid_riemann

GEOMETRIES = ("s3xr", "s2xs2", "s2xr2", "cp2", "s4")
LATER_T = {"s3xr": 0.15, "s2xs2": 0.3, "s2xr2": 0.3, "cp2": 0.3, "s4": 0.1}


def _report(n, label, elapsed, budget):
    print(f"ACCEPTANCE {n} PASS: {label} ({elapsed:.3f}s < {budget}s)")


def test_criterion_1_golden_curves():
    start = time.perf_counter()
    qd_norm = normalized_coeffs(QUADRUPLE_DIAGONAL_PATTERN)
    dr_norm = np.zeros((5, 5), dtype=complex)
    dr_norm[2, 2] = 1.0
    for name in GEOMETRIES:
        geom = model_geometry(name, kappa=1.0) if name == "cp2" else model_geometry(name)
        for t in (0.0, LATER_T[name]):
            cf = curve_coeffs(curvature_operator_blocks(riemann_at(geom, t)))
            if name == "s3xr":
                assert np.max(np.abs(cf.normalized() - qd_norm)) <= 1e-12, (name, t)
            elif name == "s2xs2":
                assert np.max(np.abs(cf.normalized() - dr_norm)) <= 1e-12, (name, t)
            else:
                scale = cf.summary.scale**2
                assert cf.max_abs <= 1e-12 * scale, (name, t)
                assert classify(cf, tol=1e-12).tag is CurveTag.IDENTICALLY_ZERO
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _report(1, "golden curves for all five model geometries at two times", elapsed, 1)


def test_criterion_2_scale_invariance():
    start = time.perf_counter()
    rng = np.random.default_rng(2024)
    for _ in range(100):
        R = random_valid_riemann(rng)
        cf = curve_coeffs(curvature_operator_blocks(R))
        base_norm = cf.normalized()
        for _ in range(10):
            kappa = 10.0 ** rng.uniform(-3, 3)
            cfs = curve_coeffs(curvature_operator_blocks(scale_metric(R, kappa)))
            assert np.max(np.abs(cfs.normalized() - base_norm)) <= 1e-10
            mask = np.abs(cf.c) > 1e-6 * cf.max_abs
            ratio = cfs.c[mask] / cf.c[mask]
            assert np.max(np.abs(ratio * kappa**2 - 1.0)) <= 1e-10
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    _report(2, "normalized curve invariant under 1000 metric rescalings", elapsed, 5)


def test_criterion_3_oracle_equivalence():
    start = time.perf_counter()
    rng = np.random.default_rng(333)
    worst = 0.0
    for k in range(1000):
        blocks = curvature_operator_blocks(random_valid_riemann(rng))
        rep = oracle_check(blocks, curve_coeffs(blocks), samples=20, tol=1e-10, seed=k)
        worst = max(worst, rep.worst_relative)
        assert rep.ok
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    _report(3, f"expanded vs direct evaluation, worst rel {worst:.2e}", elapsed, 10)


def test_criterion_4_blowup_convergence():
    start = time.perf_counter()
    rep = curve_sequence(dyadic_blowup(model_geometry("s3xr"), count=20, t=-1.0))
    assert not rep.degenerate
    assert rep.limit_class.tag is CurveTag.QUADRUPLE_DIAGONAL
    assert all(e.distance <= 1e-12 for e in rep.entries)
    rep2 = curve_sequence(dyadic_blowup(model_geometry("s2xs2"), count=20, t=-1.0))
    assert rep2.limit_class.tag is CurveTag.DOUBLE_RECTANGLE
    assert all(e.distance <= 1e-12 for e in rep2.entries)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _report(4, "blow-up coefficients pinned to cylinder/product limits", elapsed, 1)


def test_criterion_5_structural_invariants():
    start = time.perf_counter()
    rng = np.random.default_rng(555)

    for _ in range(1000):
        assert validate_symmetries(random_valid_riemann(rng), tol=1e-12).ok

    for _ in range(1000):
        k = rng.standard_normal((4, 4))
        l = rng.standard_normal((4, 4))
        kn = kulkarni_nomizu((k + k.T) / 2, (l + l.T) / 2)
        assert validate_symmetries(kn, tol=1e-12).ok

    for _ in range(1000):
        assert four_part_decomposition_check(random_valid_riemann(rng), tol=1e-12).ok

    eye = np.eye(3)
    zero3 = np.zeros((3, 3))
    for _ in range(1000):
        kap = float(rng.standard_normal())
        blocks = CurvatureBlocks(
            A=kap * eye, B=zero3, C=kap * eye, scal=0.0, Wplus=kap * eye, Wminus=kap * eye
        )
        assert curve_coeffs(blocks).max_abs <= 1e-12 * max(abs(kap), 1e-300)

    for _ in range(1000):
        a, b = random_spinor_pair(rng)
        w = segre(a, b).w
        assert abs(np.sum(w * w)) <= 1e-12 * max(1.0, float(np.max(np.abs(w))) ** 2)
        v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        vt = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        line = pluecker(v, vt)
        assert abs(qform_v(line)) <= 1e-12 * max(1.0, float(np.max(np.abs(line.u))) ** 2)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    _report(5, "structural identities, 1000 random trials each", elapsed, 10)


def test_criterion_6_type_one_witness():
    start = time.perf_counter()
    for name in GEOMETRIES:
        geom = model_geometry(name)
        T = singular_time(geom)
        vals = []
        for k in range(100):
            t = T * k / 100.0
            vals.append(float(np.max(np.abs(riemann_at(geom, t).components))) * (T - t))
        assert max(vals) - min(vals) <= 1e-10 * max(vals), name
    elapsed = time.perf_counter() - start
    _report(6, "max|Rm|*(T-t) constant on 100 samples per geometry", elapsed, 10)


def _run(*args, env=None):
    return subprocess.run(
        [sys.executable, "-m", "branchcurve", *args], capture_output=True, env=env
    )


def test_criterion_7_cli_determinism(tmp_path):
    start = time.perf_counter()
    fixtures = {}
    for name in GEOMETRIES:
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps({"geometry": name, "time": 0.0}), encoding="utf-8")
        fixtures[name] = str(p)

    commands = [
        ("compute", fixtures["s3xr"], "--emit", "all"),
        ("compute", fixtures["s2xs2"], "--emit", "coeffs"),
        ("compute", fixtures["cp2"], "--emit", "class"),
        ("flow", "s2xs2", "--t0", "0", "--t1", "0.4", "--steps", "5"),
        ("blowup", "s3xr", "--count", "8"),
    ]
    for args in commands:
        first = _run(*args)
        second = _run(*args)
        assert first.returncode == 0, (args, first.stderr)
        assert first.stdout == second.stdout and first.stdout

    out = tmp_path / "plot.csv"
    for _ in range(2):
        res = _run("plot", fixtures["s3xr"], "--grid", "9", "--out", str(out))
        assert res.returncode == 0
    plot1 = out.read_bytes()
    res = _run("plot", fixtures["s3xr"], "--grid", "9", "--out", str(out))
    assert out.read_bytes() == plot1

    malformed = [
        ("{}", 2),
        ('{"geometry": "s3xr", "time": 0.0, "riemann": []}', 2),
        ('{"geometry": "klein-bottle", "time": 0.0}', 2),
        (
            '{"riemann": [{"i":1,"j":2,"k":2,"l":1,"value":1.0},'
            '{"i":2,"j":1,"k":2,"l":1,"value":1.0}]}',
            2,
        ),
        ('{"riemann": [{"i":1,"j":2,"k":3,"l":4,"value":1.0}]}', 3),
    ]
    for i, (text, code) in enumerate(malformed):
        p = tmp_path / f"bad{i}.json"
        p.write_text(text, encoding="utf-8")
        res = _run("compute", str(p))
        assert res.returncode == code, (text, res.returncode, res.stderr)
    elapsed = time.perf_counter() - start
    _report(7, "byte-identical CLI output and exit-code contract", elapsed, 30)
