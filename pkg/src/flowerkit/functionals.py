"""Volumes, ♣-mixed volumes, quermassintegrals, Kubota estimates and distances."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arithmetic import ScaledSum, polygon_minkowski
from .bodies import Ball, Body, Ellipse2, HRep, Polytope, Segment, StarBody, sample_support
from .numkit import (
    GeometryError,
    SphereGrid,
    UnboundedBody,
    UnsupportedRepresentation,
    grassmannian_frames,
    make_grid,
    polygon_area,
    unit_ball_volume,
)

INEQ_TOL = 1e-9


def star_volume(A: StarBody) -> float:
    """|A| = |B^n| times the sigma-average of r_A^n."""
    if np.any(np.isinf(A.radial)):
        raise UnboundedBody("star body has infinite radial values")
    return unit_ball_volume(A.dim) * A.grid.integrate(A.radial ** A.dim)


def _finite_support(K: Body, grid: SphereGrid) -> np.ndarray:
    h = K._h(grid.dirs)
    if np.any(np.isinf(h)):
        raise UnboundedBody("support function is infinite somewhere on the grid")
    return h


def flower_volume(K: Body, grid: SphereGrid) -> float:
    """|K♣| = |B^n| ∫ h_K^n dσ."""
    return star_volume(sample_support(K, grid))


@dataclass
class MixedVolumeRequest:
    bodies: list
    grid: SphereGrid

    def __post_init__(self):
        self.bodies = list(self.bodies)
        if len(self.bodies) != self.grid.dim:
            raise GeometryError(f"need {self.grid.dim} bodies, got {len(self.bodies)}")
        if any(K.dim != self.grid.dim for K in self.bodies):
            raise GeometryError("bodies and grid live in different dimensions")


def flower_mixed_volume(req: MixedVolumeRequest) -> float:
    """V♣(K_1, ..., K_n) = |B^n| ∫ h_{K_1} ... h_{K_n} dσ."""
    g = req.grid
    prod = np.ones(g.size)
    for K in req.bodies:
        prod = prod * _finite_support(K, g)
    return unit_ball_volume(g.dim) * g.integrate(prod)


# ---------------------------------------------------------------------------
# classical planar functionals
# ---------------------------------------------------------------------------

def _polygon_of(K: Body) -> np.ndarray:
    if isinstance(K, Polytope) and K.dim == 2:
        return K.vertices
    if isinstance(K, Segment) and K.dim == 2:
        return np.vstack([[0.0, 0.0], K.x])
    raise UnsupportedRepresentation("classical mixed areas need planar polygons")


def classical_mixed_area_2d(K: Body, T: Body) -> float:
    """V(K, T) = (|K+T| - |K| - |T|) / 2 from exact polygon sums."""
    P, Q = _polygon_of(K), _polygon_of(T)
    S = polygon_minkowski(P, Q)
    return 0.5 * (polygon_area(S) - polygon_area(P) - polygon_area(Q))


def area_2d(K: Body, m: int = 4096) -> float:
    """Area of a planar convex body, exact for the closed-form shapes."""
    if K.dim != 2:
        raise UnsupportedRepresentation("planar area only")
    if isinstance(K, Ball):
        return math.pi * K.radius ** 2
    if isinstance(K, Ellipse2):
        return math.pi * K.a * K.b
    if isinstance(K, Segment):
        return 0.0
    if isinstance(K, Polytope):
        return polygon_area(K.vertices)
    if isinstance(K, HRep):
        if not K.chain.bounded:
            raise UnboundedBody("Wulff shape is unbounded")
        V = K.chain.vertices
        return polygon_area(V) if len(V) >= 3 else 0.0
    if isinstance(K, ScaledSum):
        return polygon_area(np.vstack([[0.0, 0.0], K.extreme_points(m)]))
    raise UnsupportedRepresentation(f"no planar area for {type(K).__name__}")


def quermass_classical_2d(K: Body, i: int, grid: SphereGrid) -> float:
    """Planar W_0 = area, W_1 = (π times mean support, Cauchy), W_2 = π."""
    if grid.dim != 2:
        raise UnsupportedRepresentation("classical quermassintegrals are planar only")
    if i == 0:
        return area_2d(K)
    if i == 1:
        return math.pi * grid.integrate(_finite_support(K, grid))
    if i == 2:
        return math.pi
    raise GeometryError("quermassintegral index out of range")


def quermass_flower(K: Body, i: int, grid: SphereGrid) -> float:
    """W♣_i = |B^n| ∫ h_K^{n-i} dσ."""
    n = grid.dim
    if not 0 <= i <= n:
        raise GeometryError("quermassintegral index out of range")
    if i == n:
        return unit_ball_volume(n)
    return unit_ball_volume(n) * grid.integrate(_finite_support(K, grid) ** (n - i))


def quermass_kubota_mc(K: Body, i: int, samples: int = 10_000, seed: int = 0,
                       circle: int = 512) -> tuple[float, float]:
    """Monte-Carlo estimate of W♣_{n-i} averaging flower volumes of projections.

    Each random i-dimensional projection contributes |B^n|/|B^i| times the
    flower volume of Proj_E K, computed inside E by quadrature (exact on lines,
    ``circle`` equispaced directions on planes).  Returns (estimate, standard
    error); the error is floored at 1e-12 relative so that exactly constant
    integrands still give a usable band.
    """
    n = K.dim
    if not 1 <= i <= n - 1:
        raise GeometryError("Kubota estimate needs 1 <= i <= n - 1")
    if i > 2:
        raise UnsupportedRepresentation("projections beyond planes")
    frames = grassmannian_frames(n, i, samples, seed)
    if i == 1:
        u = frames[:, 0, :]
        h = K._h(np.vstack([u, -u])).reshape(2, samples)
        vols = h[0] + h[1]
    else:
        ring = make_grid(2, circle)
        U = np.einsum("mi,cin->cmn", ring.dirs, frames).reshape(-1, n)
        h = K._h(U).reshape(samples, circle)
        vols = math.pi * (h ** 2) @ ring.weights
    if np.any(np.isinf(vols)):
        raise UnboundedBody("projection has infinite support")
    vals = unit_ball_volume(n) / unit_ball_volume(i) * vols
    est = float(vals.mean())
    se = float(vals.std(ddof=1) / math.sqrt(samples)) if samples > 1 else math.inf
    return est, max(se, 1e-12 * abs(est))


def geometric_distance(A: StarBody, B: StarBody) -> float:
    """d(A, B) = min b/a with aA ⊆ B ⊆ bA, by radial domination on the grid."""
    if not A.grid.same_as(B.grid):
        raise GeometryError("star bodies live on different grids")
    for X in (A, B):
        if np.any(X.radial <= 0) or np.any(np.isinf(X.radial)):
            raise GeometryError("distance needs radial values in (0, inf)")
    ratio = B.radial / A.radial
    return float(ratio.max() / ratio.min())


# ---------------------------------------------------------------------------
# inequalities
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InequalityVerdict:
    name: str
    lhs: float
    rhs: float
    slack: float
    holds: bool
    tolerance: float

    def as_dict(self) -> dict:
        return {"name": self.name, "value": self.slack, "lhs": self.lhs, "rhs": self.rhs,
                "pass": self.holds, "tolerance": self.tolerance}


def verdict(name: str, lhs: float, rhs: float, tol: float = INEQ_TOL) -> InequalityVerdict:
    """lhs <= rhs with a tolerance relative to the size of the sides."""
    tolerance = tol * max(1.0, abs(lhs), abs(rhs))
    slack = rhs - lhs
    return InequalityVerdict(name, float(lhs), float(rhs), float(slack),
                             bool(slack >= -tolerance), tolerance)


def reverse_brunn_minkowski(K: Body, T: Body, grid: SphereGrid) -> InequalityVerdict:
    n = grid.dim
    hK, hT = _finite_support(K, grid), _finite_support(T, grid)
    vol = lambda h: unit_ball_volume(n) * grid.integrate(h ** n)
    return verdict("reverse_bm", vol(hK + hT) ** (1 / n),
                   vol(hK) ** (1 / n) + vol(hT) ** (1 / n))


def flower_af_pair(bodies, grid: SphereGrid) -> InequalityVerdict:
    """V♣(K1,K2,K3..)^2 <= V♣(K1,K1,K3..) V♣(K2,K2,K3..)."""
    K1, K2, *rest = bodies
    V = lambda *b: flower_mixed_volume(MixedVolumeRequest(b, grid))
    return verdict("flower_af_pair", V(K1, K2, *rest) ** 2,
                   V(K1, K1, *rest) * V(K2, K2, *rest))


def flower_af_product(bodies, grid: SphereGrid) -> InequalityVerdict:
    """V♣(K1..Kn) <= (Π |Ki♣|)^{1/n}."""
    n = grid.dim
    lhs = flower_mixed_volume(MixedVolumeRequest(bodies, grid))
    rhs = math.prod(flower_volume(K, grid) for K in bodies) ** (1 / n)
    return verdict("flower_af_product", lhs, rhs)


def quermass_chain(K: Body, grid: SphereGrid) -> list[InequalityVerdict]:
    """Adjacent links of the chain of normalized quermassintegrals.

    Classical links (W_i / |B|)^{1/(n-i)} <= (W_{i+1} / |B|)^{1/(n-i-1)} are
    available in the plane only; the mean-width equality W_{n-1} = W♣_{n-1} is
    reported as two opposite inequalities, then the flower links follow.
    """
    n = grid.dim
    b = unit_ball_volume(n)
    norm = lambda w, k: (w / b) ** (1.0 / k)
    out = []
    if n == 2:
        W = [quermass_classical_2d(K, i, grid) for i in range(n)]
        for i in range(n - 1):
            out.append(verdict(f"chain.classical.{i}", norm(W[i], n - i), norm(W[i + 1], n - i - 1)))
        Wf = quermass_flower(K, n - 1, grid)
        out.append(verdict("chain.mean_width.le", W[n - 1], Wf))
        out.append(verdict("chain.mean_width.ge", Wf, W[n - 1]))
    Wf = [quermass_flower(K, i, grid) for i in range(n)]
    for i in range(n - 1, 0, -1):
        out.append(verdict(f"chain.flower.{i}", norm(Wf[i], n - i), norm(Wf[i - 1], n - i + 1)))
    return out


def flower_dominates_classical(K: Body, grid: SphereGrid) -> list[InequalityVerdict]:
    """W♣_i >= W_i for i = 0..n in the plane."""
    if grid.dim != 2:
        raise UnsupportedRepresentation("classical quermassintegrals are planar only")
    return [verdict(f"flower_ge_classical.{i}", quermass_classical_2d(K, i, grid),
                    quermass_flower(K, i, grid)) for i in range(3)]


INEQUALITIES = {
    "reverse_bm": lambda bodies, grid: [reverse_brunn_minkowski(bodies[0], bodies[1], grid)],
    "flower_af_pair": lambda bodies, grid: [flower_af_pair(bodies, grid)],
    "flower_af_product": lambda bodies, grid: [flower_af_product(bodies, grid)],
    "quermass_chain": lambda bodies, grid: quermass_chain(bodies[0], grid),
    "flower_ge_classical": lambda bodies, grid: flower_dominates_classical(bodies[0], grid),
}


def verify_inequality(name: str, bodies, grid: SphereGrid) -> list[InequalityVerdict]:
    """Run one inequality family on ``bodies``; returns every verdict produced."""
    try:
        fn = INEQUALITIES[name]
    except KeyError:
        raise GeometryError(f"unknown inequality {name!r}") from None
    return fn(list(bodies), grid)
