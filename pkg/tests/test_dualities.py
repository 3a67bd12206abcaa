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
    Segment,
    StarBody,
    sample_radial,
)
from flowerkit.dualities import (
    alexandrov,
    alexandrov_via_hull,
    convexity_defect,
    core,
    fit_ball,
    flower,
    identity_defects,
    inner_hull,
    is_convex_star,
    is_euclidean_ball,
    is_flower,
    is_reciprocal,
    lp_conv_radial,
    phi,
    polar,
    polar_star,
    project,
    reciprocal,
    reciprocal_defect,
    section,
    star_conv,
    star_conv_polar_route,
)
from flowerkit.fleet import cross_polytope, off_center_ball, random_polygon, square
from flowerkit.numkit import GeometryError, Subspace, make_grid


def test_flower_of_segment_is_thales_disc(grid):
    A = flower(Segment([1.0, 0.0]), grid)
    assert np.max(np.abs(A.radial - np.maximum(grid.dirs[:, 0], 0.0))) <= 1e-15


def test_polar_closed_forms(grid):
    P = polar(Ball([0, 0], 2.0))
    assert isinstance(P, Ball) and P.radius == 0.5
    D = polar(square())
    assert isinstance(D, Polytope)
    assert np.allclose(D.h(grid.dirs), cross_polytope().h(grid.dirs), atol=1e-14)
    H = polar(Segment([2.0, 0.0]))
    assert isinstance(H, HRep) and H.bounds[0] == 0.5


def test_polar_of_polar_body_is_inner():
    E = Ellipse2.focal([0.3, 0.1], 0.4)
    assert polar(polar(E)) is E


def test_polar_of_off_center_ball_is_lazy_and_exact(grid):
    B = Ball([0.2, 0.0], 1.0)
    P = polar(B)
    assert isinstance(P, PolarBody)
    assert np.allclose(P.r(grid.dirs) * B.h(grid.dirs), 1.0)


@pytest.mark.parametrize("e", [0.25, 0.5, 0.75])
@pytest.mark.parametrize("p", [[1.0, 0.0], [0.6, 0.8], [-1.0, 0.5]])
def test_reciprocal_of_focal_ellipse(grid, p, e):
    E = Ellipse2.focal(p, e)
    p = np.asarray(p)
    Ep = Ellipse2.focal(-e * e / (1 - e * e) * p / (p @ p), e)
    R = reciprocal(E, grid)
    assert np.max(np.abs(R.h(grid.dirs) - Ep.h(grid.dirs))) <= 1e-12
    # between grid normals the Wulff polygon overshoots the ellipse by O(step^2)
    assert np.max(np.abs(R.r(grid.dirs) - Ep.r(grid.dirs))) <= 5e-6


@pytest.mark.parametrize("e", [0.25, 0.5, 0.75])
def test_flower_of_focal_ellipse_is_a_ball(grid, e):
    E = Ellipse2.focal([0.6, 0.8], e)
    B = Ball([0.6, 0.8], 1.0 / e)
    assert np.max(np.abs(flower(E, grid).radial - B.r(grid.dirs))) <= 1e-12


def test_reciprocal_of_segment_is_unbounded(grid):
    R = reciprocal(Segment([1.0, 0.0]), grid)
    h = R.h(grid.dirs)
    assert np.isinf(h[grid.index_of([0.0, 1.0])])
    assert h[grid.index_of([1.0, 0.0])] == pytest.approx(1.0)


def test_core_inverts_flower(grid):
    for K in (square(), random_polygon(3), Ellipse2.focal([1, 0], 0.5)):
        C = core(flower(K, grid))
        assert np.max(np.abs(C.h(grid.dirs) - K.h(grid.dirs))) <= 1e-12


def test_alexandrov_routes_agree(small_grid):
    K = random_polygon(7)
    g = flower(K, small_grid)
    A = alexandrov(StarBody(small_grid, 1.0 / g.radial))
    B = alexandrov_via_hull(StarBody(small_grid, 1.0 / g.radial))
    assert np.allclose(A.h(small_grid.dirs), B.h(small_grid.dirs), atol=1e-12)


def test_phi_is_an_involution(small_grid):
    A = sample_radial(Ball([0.3, 0.0], 1.0), small_grid)
    assert np.allclose(phi(phi(A)).radial, A.radial)


def test_conv_of_flower_is_flower_of_double_reciprocal(grid):
    K = square()
    lhs = star_conv(flower(K, grid)).radial
    rhs = reciprocal(reciprocal(K, grid), grid).h(grid.dirs)
    assert np.max(np.abs(lhs - rhs)) <= 1e-12


def test_conv_routes_agree(small_grid):
    A = flower(random_polygon(2), small_grid)
    assert np.allclose(star_conv(A).radial, star_conv_polar_route(A).radial, atol=1e-12)
    g = make_grid(2, 64)
    B = flower(random_polygon(2), g)
    assert np.allclose(star_conv(B).radial, lp_conv_radial(B), atol=1e-9)


def test_classification_examples(grid):
    assert is_reciprocal(Ball([0, 0], 2.0), grid).holds
    assert is_reciprocal(Segment([1.0, 0.0]), grid).holds
    assert is_reciprocal(Ellipse2.focal([1.0, 0.0], 0.5), grid).holds
    sq = is_reciprocal(square(), grid)
    assert not sq.holds and sq.defect >= 1e-2


def test_off_center_ball_through_origin_is_not_reciprocal(grid):
    # its flower is the cardioid r = (1 + cos)/2, not convex at the cusp
    chk = is_reciprocal(off_center_ball([1.0, 0.0]), grid)
    assert not chk.holds and chk.defect > 1e-2


def test_reciprocal_bodies_are_reciprocal(grid):
    Kp = reciprocal(square(), grid)
    assert reciprocal_defect(Kp, grid) <= 1e-9


def test_flowers_and_non_flowers(grid):
    assert is_flower(flower(square(), grid)).holds
    assert not is_flower(sample_radial(square(), grid)).holds
    assert is_flower(sample_radial(Ball([0.4, 0.0], 0.5), grid)).holds


def test_convexity_of_star_bodies(grid):
    assert is_convex_star(sample_radial(square(), grid)).holds
    assert convexity_defect(flower(square(), grid)) > 1e-2


def test_inner_hull_of_ball_through_origin(grid):
    B = Ball([0.5, 0.0], 0.5)
    A = inner_hull(B, grid)
    assert np.max(np.abs(A.radial - B.r(grid.dirs))) <= 1e-12


def test_inner_hull_of_square(grid):
    A = inner_hull(square(), grid)
    r = sample_radial(square(), grid).radial
    assert np.all(A.radial <= r + 1e-12)
    # along the diagonal the largest ball B(x,|x|) inside reaches 2/(1+1/sqrt 2)
    j = grid.index_of([math.sqrt(0.5), math.sqrt(0.5)], 1e-6)
    assert A.radial[j] == pytest.approx(2 / (1 + 1 / math.sqrt(2)), rel=1e-6)


def test_inner_hull_needs_interior(grid):
    with pytest.raises(GeometryError):
        inner_hull(Polytope([[0.0, 0.0]]), grid)


def test_euclidean_ball_equality_case(grid):
    assert is_euclidean_ball(Ball([0, 0], 1.3), grid).holds
    assert not is_euclidean_ball(square(), grid).holds
    B = fit_ball(Ball([0.1, 0.2], 1.0), grid)
    assert np.allclose(B.center, [0.1, 0.2], atol=1e-9)


def test_polar_star_of_flower_is_reciprocal(grid):
    K = random_polygon(4)
    a = polar_star(flower(K, grid)).h(grid.dirs)
    b = reciprocal(K, grid).h(grid.dirs)
    assert np.array_equal(a, b)


def test_projection_of_flower_is_section(grid):
    K = random_polygon(1)
    for axis in ([1.0, 0.0], [0.0, 1.0]):
        E = Subspace.spanned_by([axis])
        P = project(K, E)
        sec = section(flower(K, grid), E)
        assert np.allclose(P.h(np.array([[1.0], [-1.0]])), sec.radial, atol=1e-12)


def test_section_requires_grid_direction(grid):
    E = Subspace.spanned_by([[1.0, 1e-3]])
    with pytest.raises(GeometryError):
        section(flower(square(), grid), E)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000))
def test_identities_on_random_polygons(seed):
    g = make_grid(2, 1024)
    K = random_polygon(seed)
    for name, d in identity_defects(K, g).items():
        assert d <= 1e-6, name


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_double_reciprocal_contains_body(seed):
    g = make_grid(2, 512)
    K = random_polygon(seed)
    K2 = reciprocal(reciprocal(K, g), g)
    assert np.all(K2.h(g.dirs) >= K.h(g.dirs) - 1e-12)
    # and K' is contained in the polar
    assert np.all(reciprocal(K, g).h(g.dirs) <= polar(K).h(g.dirs) + 1e-12)
