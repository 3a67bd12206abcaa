import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from flowerkit.bodies import (
    Ball,
    Ellipse2,
    HRep,
    PolarBody,
    Polytope,
    SampledSupport,
    Segment,
    StarBody,
    WulffChain,
    body_from_json,
    radial,
    sample_radial,
    sample_support,
    star_contains,
    support,
)
from flowerkit.fleet import random_polygon, square
from flowerkit.numkit import (
    GeometryError,
    LinearProgram,
    UnsupportedRepresentation,
    lp_max,
    make_grid,
)


def test_support_and_radial_of_centered_ball():
    B = Ball([0, 0], 2.0)
    assert support(B, [0.6, 0.8]) == pytest.approx(2.0)
    assert radial(B, [0.6, 0.8]) == pytest.approx(2.0)


def test_direction_must_be_unit():
    with pytest.raises(GeometryError):
        support(Ball([0, 0], 1.0), [1.0, 1.0])


def test_ball_must_contain_origin():
    with pytest.raises(GeometryError):
        Ball([2.0, 0.0], 1.0)


def test_off_center_ball_radial_closed_form():
    B = Ball([0.5, 0.0], 0.5)
    phi = np.linspace(0, 2 * np.pi, 50)
    U = np.c_[np.cos(phi), np.sin(phi)]
    assert np.allclose(B.r(U), np.maximum(np.cos(phi), 0.0), atol=1e-15)


def test_segment_support_and_radial():
    S = Segment([2.0, 0.0])
    assert support(S, [1.0, 0.0]) == 2.0
    assert support(S, [-1.0, 0.0]) == 0.0
    assert radial(S, [1.0, 0.0]) == 2.0
    assert radial(S, [0.0, 1.0]) == 0.0


def test_polytope_includes_origin():
    P = Polytope([[1, 1], [2, 1], [1, 2]])
    assert any(np.allclose(v, 0) for v in P.vertices)
    assert not P.interior_origin


def test_square_support_and_radial():
    K = square()
    assert support(K, [1, 0]) == 1.0
    assert support(K, [math.sqrt(0.5), math.sqrt(0.5)]) == pytest.approx(math.sqrt(2))
    assert radial(K, [math.sqrt(0.5), math.sqrt(0.5)]) == pytest.approx(math.sqrt(2))
    assert radial(K, [1, 0]) == pytest.approx(1.0)


def test_polytope_radial_in_3d_uses_lp():
    K = Polytope([[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]])
    u = np.array([1.0, 1.0, 1.0]) / math.sqrt(3)
    assert radial(K, u) == pytest.approx(1 / math.sqrt(3), abs=1e-9)
    assert support(K, u) == pytest.approx(1 / math.sqrt(3), abs=1e-12)


@pytest.mark.parametrize("seed", range(5))
def test_radial_boundary_points_are_tight(seed):
    K = random_polygon(seed)
    g = make_grid(2, 256)
    X = sample_radial(K, g).boundary()
    # every boundary point lies on a supporting line: max_u <x,u> - h(u) == 0
    slack = np.max(X @ g.dirs.T - K.h(g.dirs)[None, :], axis=1)
    assert np.all(slack <= 1e-12)
    nrm, off = K._edges
    assert np.all(np.min(np.abs(X @ nrm.T - off), axis=1) <= 1e-12)


def test_focal_ellipse_parameters():
    E = Ellipse2.focal([1.0, 0.0], 0.5)
    assert E.a == pytest.approx(2.0)
    assert E.b == pytest.approx(math.sqrt(3.0))
    assert E.eccentricity == pytest.approx(0.5)
    assert E.has_focus_at_origin


def test_ellipse_radial_and_support_are_consistent():
    E = Ellipse2([0.2, -0.1], 1.5, 0.7, 0.4)
    g = make_grid(2, 512)
    X = sample_radial(E, g).boundary()
    assert np.max(X @ g.dirs.T - E.h(g.dirs)[None, :]) <= 1e-12
    q = (X - E.center) @ E._R
    assert np.allclose((q[:, 0] / E.a) ** 2 + (q[:, 1] / E.b) ** 2, 1.0, atol=1e-12)


def test_ellipse_requires_origin_inside():
    with pytest.raises(GeometryError):
        Ellipse2([3.0, 0.0], 1.0, 0.5)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 14), st.integers(0, 100_000))
def test_wulff_chain_matches_lp(m, seed):
    rng = np.random.default_rng(seed)
    ang = rng.uniform(0, 2 * np.pi, m)
    A = np.c_[np.cos(ang), np.sin(ang)]
    g = rng.uniform(0.0, 2.0, m)
    g[rng.random(m) < 0.1] = 0.0
    g[rng.random(m) < 0.1] = np.inf
    chain = WulffChain(A, g)
    U = make_grid(2, 64).dirs
    fin = np.isfinite(g)
    lp = LinearProgram(A[fin], g[fin])
    ref = np.array([lp_max(lp, u) for u in U])
    h = chain.support(U)
    assert np.array_equal(np.isinf(h), np.isinf(ref))
    ok = np.isfinite(h)
    assert np.allclose(h[ok], ref[ok], atol=1e-9)


def test_hrep_square_and_unbounded_half_plane():
    H = HRep([[1, 0], [0, 1], [-1, 0], [0, -1]], [1, 1, 1, 1])
    g = make_grid(2, 64)
    assert np.allclose(H.h(g.dirs), square().h(g.dirs), atol=1e-14)
    half = HRep([[1.0, 0.0]], [1.0])
    assert support(half, [1.0, 0.0]) == pytest.approx(1.0)
    assert support(half, [0.0, 1.0]) == math.inf
    assert radial(half, [-1.0, 0.0]) == math.inf


def test_hrep_rejects_bad_input():
    with pytest.raises(GeometryError):
        HRep([[2.0, 0.0]], [1.0])
    with pytest.raises(GeometryError):
        HRep([[1.0, 0.0]], [-1.0])


def test_hrep_in_3d_uses_lp():
    H = HRep(np.vstack([np.eye(3), -np.eye(3)]), np.ones(6))
    u = np.array([1.0, 1.0, 1.0]) / math.sqrt(3)
    assert support(H, u) == pytest.approx(math.sqrt(3), abs=1e-9)


def test_polar_body_swaps_functions():
    K = Ellipse2.focal([0.5, 0.2], 0.3)
    P = PolarBody(K)
    g = make_grid(2, 128)
    assert np.allclose(P.h(g.dirs), 1.0 / K.r(g.dirs))
    assert np.allclose(P.r(g.dirs), 1.0 / K.h(g.dirs))


def test_sampled_support_interpolates():
    g = make_grid(2, 1024)
    K = Ball([0, 0], 1.5)
    S = SampledSupport(g, K.h(g.dirs))
    assert support(S, [0.6, 0.8]) == pytest.approx(1.5, abs=1e-12)
    with pytest.raises(UnsupportedRepresentation):
        radial(S, [1.0, 0.0])


def test_star_body_validation_and_containment():
    g = make_grid(2, 64)
    with pytest.raises(GeometryError):
        StarBody(g, -np.ones(64))
    with pytest.raises(GeometryError):
        StarBody(g, np.ones(10))
    A = StarBody(g, np.ones(64))
    B = StarBody(g, 2 * np.ones(64))
    assert star_contains(A, B)
    assert not star_contains(B, A)
    assert star_contains(B, A, scale=0.5)


def test_sample_support_is_the_flower_of_a_ball():
    g = make_grid(2, 64)
    A = sample_support(Ball([0, 0], 3.0), g)
    assert np.allclose(A.radial, 3.0)


def test_flower_balls_of_a_centered_ball_is_itself():
    c, r = Ball([0, 0], 2.0).flower_balls()
    assert len(r) == 1 and r[0] == 2.0


@pytest.mark.parametrize("obj,kind", [
    ({"type": "ball", "center": [0, 0], "radius": 1}, Ball),
    ({"type": "segment", "x": [1, 0]}, Segment),
    ({"type": "polytope", "vertices": [[1, 0], [0, 1], [-1, -1]]}, Polytope),
    ({"type": "ellipse", "center": [0, 0], "a": 2, "b": 1}, Ellipse2),
    ({"type": "ellipse_focal", "center": [1, 0], "ecc": 0.5}, Ellipse2),
    ({"type": "hrep", "rows": [{"normal": [1, 0], "bound": 1},
                                {"normal": [0, 1], "bound": None}]}, HRep),
])
def test_body_from_json(obj, kind):
    assert isinstance(body_from_json(obj), kind)


def test_body_from_json_errors():
    with pytest.raises(GeometryError):
        body_from_json({"type": "blob"})
    with pytest.raises(GeometryError):
        body_from_json({"type": "ball", "center": [0, 0]})
