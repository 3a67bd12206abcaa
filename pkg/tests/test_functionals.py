import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from flowerkit import functionals as fn
from flowerkit.arithmetic import minkowski, scale
from flowerkit.bodies import Ball, Ellipse2, Polytope, Segment, StarBody, sample_radial
from flowerkit.dualities import flower, reciprocal
from flowerkit.fleet import cross_polytope, off_center_ball, random_polygon, random_polytope, square
from flowerkit.numkit import (
    GeometryError,
    UnboundedBody,
    UnsupportedRepresentation,
    make_grid,
    polygon_perimeter,
)

# Frozen SciPy quadrature values for random_polytope(seed=0): W♣_2 and W♣_1 in R^3.
POLYTOPE_W2 = 5.452723670306035
POLYTOPE_W1 = 8.264350118942675


@pytest.mark.parametrize("K,expected", [
    (Ball([0, 0], 1.0), math.pi),
    (Segment([1, 0]), math.pi / 4),
    (off_center_ball([1, 0]), 3 * math.pi / 8),
    (square(), math.pi + 2),
    (Ellipse2.focal([1, 0], 0.5), 4 * math.pi),
])
def test_flower_volume_examples(K, expected, grid):
    assert fn.flower_volume(K, grid) == pytest.approx(expected, rel=1e-6)


def test_star_volume_rejects_unbounded(grid):
    A = StarBody(grid, np.full(grid.size, np.inf))
    with pytest.raises(UnboundedBody):
        fn.star_volume(A)


def test_flower_volume_of_segment_is_unbounded_free(grid):
    # the flower of [0, x] is the ball B_x, area π|x|²/4
    assert fn.flower_volume(Segment([2.0, 0.0]), grid) == pytest.approx(math.pi, rel=1e-6)


def test_mixed_volume_of_crossed_segments(grid):
    req = fn.MixedVolumeRequest([Segment([2, 0]), Segment([0, 2])], grid)
    assert fn.flower_mixed_volume(req) == pytest.approx(1.0, abs=1e-5)
    assert fn.classical_mixed_area_2d(Segment([2, 0]), Segment([0, 2])) == pytest.approx(2.0)


def test_mixed_volume_of_unit_balls(grid):
    B = Ball([0, 0], 1.0)
    assert fn.flower_mixed_volume(fn.MixedVolumeRequest([B, B], grid)) == pytest.approx(math.pi)


def test_mixed_volume_request_validation(grid):
    with pytest.raises(GeometryError):
        fn.MixedVolumeRequest([square()], grid)
    with pytest.raises(GeometryError):
        fn.MixedVolumeRequest([square(), random_polytope()], grid)


@pytest.mark.parametrize("lam", [(0.3, 1.7), (1.0, 0.5)])
def test_flower_volume_is_polynomial(lam, grid):
    K, T = random_polygon(0), Ellipse2.focal([0.2, 0.4], 0.5)
    a, b = lam
    V = lambda X, Y: fn.flower_mixed_volume(fn.MixedVolumeRequest([X, Y], grid))
    lhs = fn.flower_volume(minkowski(scale(K, a), scale(T, b)), grid)
    rhs = a * a * V(K, K) + 2 * a * b * V(K, T) + b * b * V(T, T)
    assert lhs == pytest.approx(rhs, rel=1e-12)


def test_mixed_volume_is_symmetric(grid):
    K, T = random_polygon(3), random_polygon(4)
    V = lambda X, Y: fn.flower_mixed_volume(fn.MixedVolumeRequest([X, Y], grid))
    assert V(K, T) == pytest.approx(V(T, K), rel=1e-14)


def test_classical_mixed_area_properties():
    K = random_polygon(7)
    assert fn.classical_mixed_area_2d(K, K) == pytest.approx(fn.area_2d(K), rel=1e-12)
    ang = np.linspace(0, 2 * math.pi, 64, endpoint=False)
    disc = Polytope(np.c_[np.cos(ang), np.sin(ang)])
    assert fn.classical_mixed_area_2d(K, disc) == pytest.approx(
        polygon_perimeter(K.vertices) / 2, rel=3e-3)
    with pytest.raises(UnsupportedRepresentation):
        fn.classical_mixed_area_2d(Ball([0, 0], 1.0), K)


def test_quermass_examples(grid):
    B = Ball([0, 0], 1.0)
    for i in range(3):
        assert fn.quermass_flower(B, i, grid) == pytest.approx(math.pi)
        assert fn.quermass_classical_2d(B, i, grid) == pytest.approx(math.pi)
    assert fn.quermass_flower(square(), 0, grid) == pytest.approx(math.pi + 2, rel=1e-6)
    assert fn.quermass_flower(square(), 1, grid) == pytest.approx(4.0, rel=1e-6)
    with pytest.raises(GeometryError):
        fn.quermass_flower(B, 3, grid)


def test_mean_width_coincides(grid):
    for K in (square(), random_polygon(5), Ellipse2.focal([0.6, 0.8], 0.75)):
        assert fn.quermass_classical_2d(K, 1, grid) == fn.quermass_flower(K, 1, grid)


def test_polytope_quermass_matches_oracle():
    g = make_grid(3, 20000)
    K = random_polytope()
    assert fn.quermass_flower(K, 1, g) == pytest.approx(POLYTOPE_W1, rel=1e-3)
    assert fn.quermass_flower(K, 2, g) == pytest.approx(POLYTOPE_W2, rel=1e-3)


@pytest.mark.parametrize("i,direct", [(1, POLYTOPE_W2), (2, POLYTOPE_W1)])
def test_kubota_estimate_for_polytope(i, direct):
    est, se = fn.quermass_kubota_mc(random_polytope(), i, samples=4000, seed=1)
    assert abs(est - direct) <= 3 * se


@pytest.mark.parametrize("i", [1, 2])
def test_kubota_estimate_for_ball(i):
    est, se = fn.quermass_kubota_mc(Ball([0, 0, 0], 1.0), i, samples=200)
    assert abs(est - 4 * math.pi / 3) <= 3 * se


def test_kubota_rejects_bad_index():
    with pytest.raises(GeometryError):
        fn.quermass_kubota_mc(random_polytope(), 3)


def test_geometric_distance_examples(grid):
    A = sample_radial(square(), grid)
    assert fn.geometric_distance(A, sample_radial(scale(square(), 3.0), grid)) == pytest.approx(1.0)
    F = flower(reciprocal(square(), grid), grid)
    assert fn.geometric_distance(F, sample_radial(Ball([0, 0], 1.0), grid)) <= 2.0
    near = sample_radial(Ball([99.99, 0.0], 100.0), grid)
    assert fn.geometric_distance(near, sample_radial(Ball([0, 0], 1.0), grid)) > 10
    with pytest.raises(GeometryError):
        fn.geometric_distance(A, sample_radial(square(), make_grid(2, 64)))


def test_verdict_tolerance_is_relative():
    v = fn.verdict("x", 1e6 + 1e-4, 1e6)
    assert v.holds and v.slack < 0
    assert not fn.verdict("x", 2.0, 1.0).holds
    assert set(v.as_dict()) == {"name", "value", "lhs", "rhs", "pass", "tolerance"}


@pytest.mark.parametrize("name", ["square", "cross", "poly_03", "ellipse_e0.75_1", "ball_offset"])
def test_chain_and_dominance(name, fleet, grid):
    K = fleet[name]
    verdicts = fn.quermass_chain(K, grid) + fn.flower_dominates_classical(K, grid)
    assert len(verdicts) == 7
    assert all(v.holds for v in verdicts)
    assert fn.flower_volume(K, grid) >= fn.area_2d(K)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 5000), st.integers(0, 5000))
def test_pair_inequalities_hold(s1, s2):
    g = make_grid(2, 1024)
    K, T = random_polygon(s1), random_polygon(s2)
    for v in (fn.reverse_brunn_minkowski(K, T, g), fn.flower_af_pair([K, T], g),
              fn.flower_af_product([K, T], g)):
        assert v.holds and v.slack >= -1e-12 * max(1, abs(v.lhs))


def test_verify_inequality_dispatch(grid):
    out = fn.verify_inequality("reverse_bm", [square(), cross_polytope()], grid)
    assert len(out) == 1 and out[0].holds
    with pytest.raises(GeometryError):
        fn.verify_inequality("nope", [square()], grid)
