"""A fixed family of planar test bodies used by the checks and the CLI."""
from __future__ import annotations

import math

import numpy as np

from .bodies import Ball, Body, Ellipse2, Polytope, Segment

ECCENTRICITIES = (0.25, 0.5, 0.75)
POLYGON_SEEDS = range(20)


def random_polygon(seed: int, kmin: int = 3, kmax: int = 12) -> Polytope:
    """Convex polygon with 3..12 vertices and the origin in its interior.

    Vertices sit at sorted uniform angles with radii in [0.5, 2]; draws whose
    hull misses the origin, or loses vertices, are rejected.
    """
    rng = np.random.default_rng(seed)
    while True:
        k = int(rng.integers(kmin, kmax + 1))
        ang = np.sort(rng.uniform(0.0, 2 * math.pi, k))
        rad = rng.uniform(0.5, 2.0, k)
        P = Polytope(np.c_[rad * np.cos(ang), rad * np.sin(ang)])
        if P.interior_origin and len(P.vertices) == k:
            return P


def square() -> Polytope:
    return Polytope([[-1, -1], [1, -1], [1, 1], [-1, 1]])


def cross_polytope() -> Polytope:
    return Polytope([[1, 0], [0, 1], [-1, 0], [0, -1]])


def off_center_ball(x) -> Ball:
    """B_x = B(x/2, |x|/2), the flower of [0, x]."""
    x = np.asarray(x, dtype=float)
    return Ball(x / 2, float(np.linalg.norm(x)) / 2)


def default_fleet() -> dict[str, Body]:
    fleet: dict[str, Body] = {
        "ball_r1": Ball([0, 0], 1.0),
        "ball_r2": Ball([0, 0], 2.0),
        "ball_r05": Ball([0, 0], 0.5),
        "bx_e1": off_center_ball([1, 0]),
        "bx_diag": off_center_ball([1.5, -2.0]),
        "ball_offset": Ball([0.3, 0.2], 1.0),
        "seg_e1": Segment([1, 0]),
        "seg_e2": Segment([0, 1]),
        "seg_diag": Segment([-2.0, 1.0]),
        "square": square(),
        "cross": cross_polytope(),
    }
    for s in POLYGON_SEEDS:
        fleet[f"poly_{s:02d}"] = random_polygon(s)
    centers = ([1.0, 0.0], [0.6, 0.8], [-1.0, 0.5])
    for e in ECCENTRICITIES:
        for j, c in enumerate(centers):
            fleet[f"ellipse_e{e}_{j}"] = Ellipse2.focal(c, e)
    return fleet


def is_polygonal(K: Body) -> bool:
    return isinstance(K, Polytope)


def random_polytope(seed: int = 0, k: int = 8, dim: int = 3) -> Polytope:
    """conv({0} U k Gaussian points) in R^dim."""
    rng = np.random.default_rng(seed)
    return Polytope(rng.standard_normal((k, dim)))
