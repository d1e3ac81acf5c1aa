import math

import pytest

import barbilian as bb


def test_circle_distance_is_ln3():
    k = bb.SourceSet.circle([0.0, 0.0], 1.0)
    field = bb.InfluenceField.euclidean()
    rep = bb.barbilian_distance(k, field, [0.0, 0.0], [0.5, 0.0])
    assert rep.value == pytest.approx(math.log(3.0), abs=1e-9)
    assert not rep.degenerate
    assert rep.extrema.max_ratio == pytest.approx(2.0, abs=1e-8)
    assert rep.extrema.min_ratio == pytest.approx(2.0 / 3.0, abs=1e-8)


def test_historical_form_agrees():
    k = bb.SourceSet.finite([[0.0, 3.0], [1.0, -2.0], [-2.0, 1.0]])
    field = bb.InfluenceField.euclidean()
    a, b = [5.0, 0.0], [6.0, 1.0]
    d34 = bb.distance_1934(k, field, a, b).value
    dlog = bb.barbilian_distance(k, field, a, b).value
    assert abs(d34 - dlog) <= 1e-12


def test_apollonius_degeneracy():
    circle = bb.apollonius_circle([0.0, 0.0], [1.0, 0.0], 2.0)
    assert circle.center == pytest.approx([4.0 / 3.0, 0.0])
    assert circle.radius == pytest.approx(2.0 / 3.0)
    k = bb.SourceSet.circle(circle.center, circle.radius)
    rep = bb.barbilian_distance(k, bb.InfluenceField.euclidean(), [0.0, 0.0], [1.0, 0.0])
    assert rep.value <= 1e-9
    assert rep.degenerate
    assert bb.is_degenerate(k, bb.InfluenceField.euclidean(), [0.0, 0.0], [1.0, 0.0])


def test_alpha_one_raises():
    with pytest.raises(ValueError):
        bb.apollonius_circle([0.0, 0.0], [1.0, 0.0], 1.0)


def test_query_on_source_raises():
    k = bb.SourceSet.circle([0.0, 0.0], 1.0)
    with pytest.raises(RuntimeError):
        bb.barbilian_distance(k, bb.InfluenceField.euclidean(), [1.0, 0.0], [0.5, 0.0])


def test_poincare_matches_barbilian():
    assert bb.poincare_disk_distance([0.0, 0.0], [0.5, 0.0]) == pytest.approx(
        math.log(3.0), abs=1e-14
    )
    rows = bb.compare_disk([([0.3, -0.2], [-0.4, 0.5])])
    (_, _, d_barb, d_hyp, diff) = rows[0]
    assert diff <= 1e-6
    assert d_barb == pytest.approx(d_hyp, abs=1e-6)


def test_custom_influence_gauge_invariance():
    k = bb.SourceSet.finite([[1.0, 1.0], [-1.0, 2.0], [0.5, -1.5]])
    euclid = bb.InfluenceField.euclidean()

    def gauged(p, a):
        lam = math.exp(0.5 * math.sin(2.0 * p[0] - p[1]))
        return lam * math.dist(p, a)

    field = bb.InfluenceField.custom(gauged)
    a, b = [4.0, 4.0], [5.0, -3.0]
    base = bb.barbilian_distance(k, euclid, a, b).value
    same = bb.barbilian_distance(k, field, a, b).value
    assert abs(base - same) <= 1e-12


def test_sampling_and_axioms():
    k = bb.SourceSet.circle([0.0, 0.0], 1.0)
    s = bb.sample(k, 4)
    assert len(s.points) == 4
    assert s.provenance == "uniform-parameter"
    dy = bb.sample_dyadic(k, 8, 2)
    assert len(dy.points) == 32

    pts = [[0.1, 0.1], [-0.3, 0.2], [0.4, -0.4]]
    report = bb.verify_weak_distance(k, bb.InfluenceField.euclidean(), pts, 1e-9)
    assert report["pass"]
    assert report["symmetry_violations"] == 0


def test_geodesic_trivial_path():
    k = bb.SourceSet.circle([0.0, 0.0], 1.0)
    opts = bb.ExtremaOptions(initial_samples=64)
    path = bb.approximate_geodesic(
        k, bb.InfluenceField.euclidean(), [0.2, 0.2], [0.2, 0.2], 32, opts
    )
    assert path.length == 0.0
    assert len(path.nodes) == 1
