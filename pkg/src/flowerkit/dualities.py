"""Polarity, Alexandrov bodies, reciprocals, flowers, cores and the inversion Phi.

Sampled operators act on the directions of a shared :class:`SphereGrid`; the
2-D Wulff shapes they produce are evaluated exactly by the planar chain, so
identities between operators hold on the grid up to rounding.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .bodies import (
    Ball,
    Body,
    HRep,
    PolarBody,
    Polytope,
    Projected,
    Segment,
    StarBody,
    sample_radial,
    sample_support,
)
from .numkit import (
    GeometryError,
    SphereGrid,
    Subspace,
    UnsupportedRepresentation,
    hull2,
    inv_ext,
    line_grid,
    lp_max,
    LinearProgram,
    make_grid,
)

RECIPROCAL_TOL = 1e-6
SAMPLED_TOL = 1e-3


class Check(NamedTuple):
    holds: bool
    defect: float


@dataclass
class OperatorReport:
    operator: str
    inputs: list
    output: dict
    grid: int | None = None
    defect: float = 0.0
    notes: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"operator": self.operator, "inputs": self.inputs, "output": self.output,
                "grid": self.grid, "defect": self.defect}


def _rel_defect(a, b, scale_of) -> float:
    """sup |a - b| / (1 + sup finite |scale_of|); inf == inf agrees."""
    a, b = np.asarray(a, float), np.asarray(b, float)
    both = np.isinf(a) & np.isinf(b)
    if np.any(np.isinf(a) ^ np.isinf(b)):
        return math.inf
    fin = np.asarray(scale_of, float)
    fin = fin[np.isfinite(fin)]
    scale = 1.0 + (float(np.max(np.abs(fin))) if fin.size else 0.0)
    diff = np.where(both, 0.0, np.abs(np.where(both, 0, a) - np.where(both, 0, b)))
    return float(diff.max() / scale) if diff.size else 0.0


# ---------------------------------------------------------------------------
# polarity and Wulff shapes
# ---------------------------------------------------------------------------

def polar(K: Body, grid: SphereGrid | None = None) -> Body:
    """K° = {y : <x, y> <= 1 for all x in K}.

    Closed forms for centered balls, segments and planar polygons with the
    origin inside; otherwise the exact lazy dual (h = 1/r_K, r = 1/h_K).  A
    body without a radial function is first replaced by its Wulff shape on
    ``grid``.
    """
    if isinstance(K, PolarBody):
        return K.inner
    if isinstance(K, Ball) and K.is_centered and K.radius > 0:
        return Ball(np.zeros(K.dim), 1.0 / K.radius)
    if isinstance(K, Segment):
        n = np.linalg.norm(K.x)
        if n == 0:
            return HRep(np.zeros((0, K.dim)), [])
        return HRep((K.x / n)[None, :], [1.0 / n])
    if isinstance(K, Polytope) and K.dim == 2 and K.interior_origin:
        nrm, off = K._edges
        return Polytope(nrm / off[:, None])
    try:
        K._r(np.eye(K.dim)[:1])
    except UnsupportedRepresentation:
        if grid is None:
            raise
        return PolarBody(alexandrov(sample_support(K, grid)))
    return PolarBody(K)


def polar_star(A: StarBody) -> HRep:
    """Polar of a star body: A° = A[1/r_A] on the grid of A."""
    return HRep(A.grid.dirs, inv_ext(A.radial))


def alexandrov(g: StarBody) -> HRep:
    """Wulff shape A[g] = {x : <x, theta> <= g(theta)} over the grid directions."""
    return HRep(g.grid.dirs, g.radial)


def alexandrov_via_hull(g: StarBody) -> Body:
    """Planar A[g] computed as the polar of hull({theta/g(theta)} U {0}); needs g > 0."""
    if g.dim != 2:
        raise GeometryError("hull route is planar only")
    if np.any(g.radial == 0):
        raise GeometryError("hull route needs g > 0 everywhere")
    fin = np.isfinite(g.radial)
    pts = g.grid.dirs[fin] / g.radial[fin, None]
    return PolarBody(Polytope(pts if len(pts) else np.zeros((1, 2))))


ZERO_SNAP = 1e-12


def reciprocal(K: Body, grid: SphereGrid) -> HRep:
    """K' = A[1/h_K].

    Support values below ZERO_SNAP relative to the largest finite one are
    rounding residue of an exact zero and are treated as 0 (so 1/h = inf).
    """
    h = K._h(grid.dirs)
    fin = np.isfinite(h)
    size = float(np.max(np.abs(h[fin]), initial=0.0)) or 1.0
    h = np.where(np.abs(h) <= ZERO_SNAP * size, 0.0, h)
    return alexandrov(StarBody(grid, inv_ext(h)))


def flower(K: Body, grid: SphereGrid) -> StarBody:
    """K♣: the star body whose radial function is h_K."""
    return sample_support(K, grid)


def core(A: StarBody) -> HRep:
    """A^{-♣} = {x : B_x ⊆ A}, which equals the Wulff shape A[r_A]."""
    return alexandrov(A)


def phi(A: StarBody) -> StarBody:
    """Spherical inversion: r_{Phi(A)} = 1/r_A."""
    return StarBody(A.grid, inv_ext(A.radial))


# ---------------------------------------------------------------------------
# convex hulls of star bodies
# ---------------------------------------------------------------------------

def _conv_radial_polar(A: StarBody) -> np.ndarray:
    return inv_ext(polar_star(A)._h(A.grid.dirs))


def star_conv(A: StarBody) -> StarBody:
    """Radial function of conv(A) on the grid of A."""
    if not np.any(A.radial):
        return A
    if A.dim == 2 and np.all(np.isfinite(A.radial)):
        hull = Polytope(hull2(np.vstack([A.boundary(), [[0.0, 0.0]]])))
        r = hull._r(A.grid.dirs)
        return StarBody(A.grid, np.maximum(r, A.radial))
    return StarBody(A.grid, np.maximum(_conv_radial_polar(A), A.radial))


def star_conv_polar_route(A: StarBody) -> StarBody:
    """conv(A) = A°° evaluated through the Wulff shape A[1/r_A]."""
    if not np.any(A.radial):
        return A
    return StarBody(A.grid, np.maximum(_conv_radial_polar(A), A.radial))


def inner_hull(K: Body, grid: SphereGrid) -> StarBody:
    """Inn_S K = Phi conv Phi K, the union of balls B(x, |x|) inside K."""
    A = sample_radial(K, grid)
    if not np.any(A.radial):
        raise GeometryError("inner hull of a body with empty interior")
    return phi(star_conv(phi(A)))


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def reciprocal_defect(K: Body, grid: SphereGrid) -> float:
    """sup |h_{K''} - h_K| / (1 + sup h_K) over the grid."""
    hK = K._h(grid.dirs)
    K2 = reciprocal(reciprocal(K, grid), grid)
    return _rel_defect(K2._h(grid.dirs), hK, hK)


def is_reciprocal(K: Body, grid: SphereGrid, tol: float = RECIPROCAL_TOL) -> Check:
    d = reciprocal_defect(K, grid)
    return Check(d <= tol, d)


def convexity_defect(A: StarBody) -> float:
    """How far the sampled star body is from its convex hull."""
    C = star_conv(A)
    return _rel_defect(C.radial, A.radial, A.radial)


def is_convex_star(A: StarBody, tol: float = RECIPROCAL_TOL) -> Check:
    d = convexity_defect(A)
    return Check(d <= tol, d)


def is_flower(A: StarBody, tol: float = SAMPLED_TOL) -> Check:
    """A is a flower iff Phi(A) is convex."""
    return is_convex_star(phi(A), tol)


def fit_ball(K: Body, grid: SphereGrid) -> Ball:
    """Least-squares ball through the sampled boundary: |x|^2 = 2<c, x> + rho^2 - |c|^2."""
    pts = sample_radial(K, grid).boundary()
    A = np.column_stack([2.0 * pts, np.ones(len(pts))])
    sol, *_ = np.linalg.lstsq(A, np.sum(pts ** 2, axis=1), rcond=None)
    c = sol[:-1]
    rad = float(np.sqrt(max(sol[-1] + c @ c, 0.0)))
    if np.linalg.norm(c) > rad:
        c = c * rad / np.linalg.norm(c)
    return Ball(c, rad)


def is_euclidean_ball(K: Body, grid: SphereGrid, tol: float = RECIPROCAL_TOL) -> Check:
    """Equality case r_K = h_K, confirmed by a fitted ball reproducing h_K within 10 tol."""
    hK = K._h(grid.dirs)
    d = _rel_defect(K._r(grid.dirs), hK, hK)
    if d >= tol:
        return Check(False, d)
    B = fit_ball(K, grid)
    fit = _rel_defect(B._h(grid.dirs), hK, hK)
    return Check(fit <= 10 * tol, max(d, fit))


# ---------------------------------------------------------------------------
# projections and sections
# ---------------------------------------------------------------------------

def project(X, E: Subspace, grid_size: int = 1024):
    """Orthogonal projection onto E, expressed in E-coordinates.

    Bodies keep a closed form where one exists.  Star bodies are projected
    through their sampled boundary: exact (a 1-D max) on lines, convex hull
    of the projected points in planes.
    """
    if E.dim < 1:
        raise GeometryError("cannot project onto the zero subspace")
    if isinstance(X, StarBody):
        return _project_star(X, E, grid_size)
    if E.ambient_dim != X.dim:
        raise GeometryError("subspace and body live in different dimensions")
    if isinstance(X, Ball):
        return Ball(E.coords(X.center), X.radius)
    if isinstance(X, Segment):
        return Segment(E.coords(X.x))
    if isinstance(X, Polytope):
        return Polytope(E.coords(X.vertices))
    return Projected(X, E)


def _project_star(A: StarBody, E: Subspace, grid_size: int) -> StarBody:
    pts = E.coords(A.boundary())
    if E.dim == 1:
        g = line_grid()
        x = pts[:, 0]
        return StarBody(g, np.array([max(0.0, x.max()), max(0.0, -x.min())]))
    if E.dim == 2:
        g = make_grid(2, grid_size)
        hull = Polytope(hull2(np.vstack([pts, [[0.0, 0.0]]])))
        return StarBody(g, hull._r(g.dirs))
    raise UnsupportedRepresentation("star projections beyond planes")


def section(A: StarBody, E: Subspace, tol: float = 1e-12) -> StarBody:
    """A ∩ E for subspaces spanned by grid directions, read off the shared samples."""
    if E.dim == 1:
        g = line_grid()
    elif E.dim == 2:
        g = make_grid(2, A.grid.size)
    else:
        raise UnsupportedRepresentation("sections beyond planes")
    out = []
    for u in E.lift(g.dirs):
        j = A.grid.index_of(u, tol)
        if j is None:
            raise GeometryError("section direction is not on the star body's grid")
        out.append(A.radial[j])
    return StarBody(g, np.array(out))


def lp_conv_radial(A: StarBody) -> np.ndarray:
    """Radial of conv(A) by one LP per direction; usable in any dimension."""
    lp = LinearProgram(A.grid.dirs, inv_ext(A.radial))
    return inv_ext(np.array([lp_max(lp, u) for u in A.grid.dirs]))


# ---------------------------------------------------------------------------
# operator identities
# ---------------------------------------------------------------------------

def _excess(a, b, scale_of) -> float:
    """How far a exceeds b: sup (a - b)_+ / (1 + sup finite |scale_of|)."""
    a, b = np.asarray(a, float), np.asarray(b, float)
    if np.any(np.isinf(a) & ~np.isinf(b)):
        return math.inf
    fin = np.asarray(scale_of, float)
    fin = fin[np.isfinite(fin)]
    scale = 1.0 + (float(np.max(np.abs(fin))) if fin.size else 0.0)
    with np.errstate(invalid="ignore"):
        d = np.where(np.isinf(a) | np.isinf(b), 0.0, a - b)
    return float(max(0.0, d.max()) / scale) if d.size else 0.0


def identity_defects(K: Body, grid: SphereGrid) -> dict[str, float]:
    """Sup-norm defects of the operator identities for a convex body K.

    Each identity is evaluated through two different code paths: Wulff-shape
    chains, closed-form polars, planar hulls of sampled boundaries.
    """
    U = grid.dirs
    hK = K._h(U)
    rK = K._r(U)
    Kp = reciprocal(K, grid)
    hKp = Kp._h(U)
    Ko = polar(K, grid)
    out = {}
    K3 = reciprocal(reciprocal(Kp, grid), grid)
    out["K'''=K'"] = _rel_defect(K3._h(U), hKp, hKp)
    out["K''>=K"] = _excess(hK, reciprocal(Kp, grid)._h(U), hK)
    out["K'<=Ko"] = _excess(hKp, Ko._h(U), hKp)
    hull = star_conv(flower(K, grid))
    out["o#=' "] = _rel_defect(inv_ext(hull.radial), hKp, hKp)
    out["Phi#=o"] = _rel_defect(inv_ext(hK), Ko._r(U), Ko._r(U))
    out["Phio=#"] = _rel_defect(inv_ext(Ko._r(U)), hK, hK)
    out["#o=Phi"] = _rel_defect(Ko._h(U), inv_ext(rK), Ko._h(U))
    lhs = reciprocal(Ko, grid)._h(U)
    rhs = polar_star(phi(sample_radial(K, grid)))._h(U)
    out["(oK)'=oPhiK"] = _rel_defect(lhs, rhs, lhs)
    Koo = polar(polar(K, grid), grid)
    grid_oo = inv_ext(polar_star(sample_radial(K, grid))._h(U))
    out["oo=id"] = max(_rel_defect(Koo._h(U), hK, hK), _rel_defect(grid_oo, rK, rK))
    return {k.strip(): v for k, v in out.items()}
