import math

import pytest

import hypexpand as hx


def test_points_and_distance():
    p = hx.DiskPoint.from_polar(1.0, math.pi / 3)
    assert p.x == pytest.approx(math.tanh(0.5) * 0.5)
    q = hx.DiskPoint.from_cartesian(0.5, 0.0)
    assert hx.hyperbolic_distance(hx.DiskPoint(), q) == pytest.approx(2 * math.atanh(0.5))
    with pytest.raises(ValueError):
        hx.DiskPoint.from_cartesian(1.0, 0.0)


def test_dilation_example():
    q = hx.dilate_origin(2.0, 1.0, hx.DiskPoint.from_polar(1.0, math.pi / 4))
    assert q.r == pytest.approx(math.sqrt(2.5))
    assert q.theta == pytest.approx(math.atan(0.5))
    c = hx.DiskPoint.from_polar(0.7, 1.0)
    assert hx.hyperbolic_distance(hx.dilate(c, 3.0, 2.0, c), c) < 1e-12


def test_geodesic_curvature_is_small():
    u = hx.DiskPoint.from_polar(1.0, 0.2)
    v = hx.DiskPoint.from_polar(2.0, 1.4)
    assert max(abs(k) for k in hx.geodesic_curvature_samples(u, v)) < 1e-6


def test_reports():
    rep = hx.verify_theorem(seed=3, trials=4)
    assert len(rep["trials"]) == 4
    search = hx.search_counterexample(seed=1, budget=64)
    witness = search["witness"]
    assert witness["defect"] > 1e-3
    assert abs(hx.replay_witness(witness) - witness["defect"]) < 1e-9
    with pytest.raises(ValueError):
        hx.search_counterexample(k1=1.0)
    assert hx.verify_lemmas(20)["pass"]
    sphere = hx.sphere_conjecture(seed=1, trials=8)
    assert sphere["summary"]["trials"] == 8


def test_render_and_trace():
    assert hx.render_svg(1).startswith("<svg")
    assert hx.trace_csv(1, "gamma", 5).splitlines()[0] == "t,r,theta,x,y,kg"
