"""Minkowski sum, radial sum, the flower addition ⊕ and homotheties."""
from __future__ import annotations

import numpy as np

from .bodies import (
    Ball,
    Body,
    Ellipse2,
    HRep,
    Polytope,
    Segment,
    StarBody,
    _same_grid,
    ball_radial,
)
from .dualities import core
from .numkit import GeometryError, SphereGrid, UnsupportedRepresentation, hull2


class ScaledSum(Body):
    """Lazy sum λ_1 K_1 + ... + λ_m K_m, evaluated through h = Σ λ_i h_{K_i}."""

    def __init__(self, terms):
        flat = []
        for lam, K in terms:
            lam = float(lam)
            if lam < 0:
                raise GeometryError("Minkowski coefficients must be >= 0")
            if isinstance(K, ScaledSum):
                flat.extend((lam * mu, T) for mu, T in K.terms)
            else:
                flat.append((lam, K))
        if not flat:
            raise GeometryError("a sum needs at least one term")
        dims = {K.dim for _, K in flat}
        if len(dims) != 1:
            raise GeometryError("summands live in different dimensions")
        self.terms = flat
        self.dim = dims.pop()

    def _h(self, U):
        out = np.zeros(len(U))
        for lam, K in self.terms:
            if lam:
                out = out + lam * K._h(U)
        return out

    def extreme_points(self, m: int = 256):
        if self.dim != 2:
            raise UnsupportedRepresentation("extreme points of a sum beyond 2-D")
        pts = np.zeros((1, 2))
        for lam, K in self.terms:
            if lam == 0:
                continue
            X = np.vstack([np.zeros((1, 2)), lam * K.extreme_points(m)])
            pts = hull2((pts[:, None, :] + X[None, :, :]).reshape(-1, 2))
        return pts[np.linalg.norm(pts, axis=1) > 0]

    def summary(self):
        return {"type": "sum", "terms": [[lam, K.summary()] for lam, K in self.terms]}


def polygon_minkowski(P, Q) -> np.ndarray:
    """Exact Minkowski sum of two CCW convex polygons by merging edge sequences."""
    P = np.asarray(P, dtype=float).reshape(-1, 2)
    Q = np.asarray(Q, dtype=float).reshape(-1, 2)
    if len(P) == 1 or len(Q) == 1:
        return hull2((P[:, None, :] + Q[None, :, :]).reshape(-1, 2))

    def from_lowest(V):
        k = min(range(len(V)), key=lambda t: (V[t, 1], V[t, 0]))
        return np.roll(V, -k, axis=0)

    P, Q = from_lowest(P), from_lowest(Q)
    n, m = len(P), len(Q)
    out = []
    i = j = 0
    while i < n or j < m:
        out.append(P[i % n] + Q[j % m])
        ep = P[(i + 1) % n] - P[i % n]
        eq = Q[(j + 1) % m] - Q[j % m]
        cross = ep[0] * eq[1] - ep[1] * eq[0]
        if j == m or (i < n and cross > 0):
            i += 1
        elif i == n or cross < 0:
            j += 1
        else:
            i += 1
            j += 1
    return hull2(np.array(out))


def minkowski(K: Body, T: Body) -> Body:
    """K + T; exact for pairs of balls and of planar polygons, lazy otherwise."""
    if K.dim != T.dim:
        raise GeometryError("summands live in different dimensions")
    if isinstance(K, Ball) and isinstance(T, Ball):
        return Ball(K.center + T.center, K.radius + T.radius)
    polys = (Polytope, Segment)
    if K.dim == 2 and isinstance(K, polys) and isinstance(T, polys):
        P = K.vertices if isinstance(K, Polytope) else np.vstack([[0.0, 0.0], K.x])
        Q = T.vertices if isinstance(T, Polytope) else np.vstack([[0.0, 0.0], T.x])
        return Polytope(polygon_minkowski(P, Q))
    return ScaledSum([(1.0, K), (1.0, T)])


def scale(K: Body, lam: float) -> Body:
    """λK for λ >= 0; 0·K = {0}."""
    lam = float(lam)
    if lam < 0:
        raise GeometryError("homothety factor must be >= 0 (use negate for -K)")
    if lam == 0:
        return Polytope(np.zeros((1, K.dim)))
    if isinstance(K, Ball):
        return Ball(lam * K.center, lam * K.radius)
    if isinstance(K, Segment):
        return Segment(lam * K.x)
    if isinstance(K, Polytope):
        return Polytope(lam * K.vertices)
    if isinstance(K, Ellipse2):
        return Ellipse2(lam * K.center, lam * K.a, lam * K.b, K.rot)
    if isinstance(K, HRep):
        return HRep(K.normals, lam * K.bounds)
    return ScaledSum([(lam, K)])


def negate(K: Polytope) -> Polytope:
    return Polytope(-K.vertices)


def radial_sum(A: StarBody, B: StarBody) -> StarBody:
    """Radial sum: r_{A +~ B} = r_A + r_B."""
    _same_grid(A, B)
    return StarBody(A.grid, A.radial + B.radial)


def _union_radial(centers, radii, U, chunk: int = 2048):
    """Radial function of a union of balls, with the maximizing ball per direction."""
    best = np.zeros(len(U))
    arg = np.zeros(len(U), dtype=int)
    for s in range(0, len(radii), chunk):
        r = ball_radial(centers[s:s + chunk], radii[s:s + chunk], U)
        j = r.argmax(axis=1)
        v = r[np.arange(len(U)), j]
        better = v > best
        best = np.where(better, v, best)
        arg = np.where(better, j + s, arg)
    return best, arg


class _BallFamily:
    """The balls making up one flower: a finite list, or B_x over a boundary curve."""

    def __init__(self, K: Body, m: int):
        curve = getattr(K, "boundary_curve", None) if K.dim == 2 else None
        centers, radii = K.flower_balls(m)
        if curve is None or len(radii) == 1:
            self.curve, self.centers, self.radii = None, centers, radii
        else:
            self.curve = curve
            self.params = 2 * np.pi * np.arange(m) / m
            X = curve(self.params)
            self.centers = X / 2.0
            self.radii = np.linalg.norm(X, axis=1) / 2.0
        self.step = 2 * np.pi / m

    def local(self, idx, s, window):
        """Ball centers and radii near the chosen members, shape (D, L, ...)."""
        if self.curve is None:
            return self.centers[idx][:, None, :], self.radii[idx][:, None]
        t = idx[:, None] + window * s[None, :]
        X = self.curve(t)
        return X / 2.0, np.linalg.norm(X, axis=-1) / 2.0


def _refine(fa: _BallFamily, fb: _BallFamily, U, ia, ib, rounds: int = 3, L: int = 17):
    """Local search around the best coarse pair for smooth boundaries."""
    ta = fa.params[ia] if fa.curve is not None else ia
    tb = fb.params[ib] if fb.curve is not None else ib
    s = np.linspace(-1.0, 1.0, L)
    window = max(fa.step, fb.step)
    best = None
    for _ in range(rounds):
        ca, ra = fa.local(ta, s, window)
        cb, rb = fb.local(tb, s, window)
        c = ca[:, :, None, :] + cb[:, None, :, :]
        rho = ra[:, :, None] + rb[:, None, :]
        proj = np.einsum("dabk,dk->dab", c, U)
        disc = rho ** 2 - np.sum(c ** 2, axis=-1) + proj ** 2
        r = np.maximum(proj + np.sqrt(np.maximum(disc, 0.0)), 0.0).reshape(len(U), -1)
        k = r.argmax(axis=1)
        best = r[np.arange(len(U)), k]
        ka, kb = np.divmod(k, rho.shape[2])
        if fa.curve is not None:
            ta = ta + window * s[ka]
        if fb.curve is not None:
            tb = tb + window * s[kb]
        window *= 2.0 / (L - 1)
    return best


def flower_sum_balls(K: Body, T: Body, m: int = 256):
    """Balls whose union is K♣ + T♣: B_x + B_y = B((x+y)/2, (|x|+|y|)/2)."""
    c1, r1 = K.flower_balls(m)
    c2, r2 = T.flower_balls(m)
    centers = (c1[:, None, :] + c2[None, :, :]).reshape(-1, K.dim)
    radii = (r1[:, None] + r2[None, :]).reshape(-1)
    return centers, radii


def flower_sum(K: Body, T: Body, grid: SphereGrid, m: int = 128) -> StarBody:
    """Minkowski sum of the flowers K♣ + T♣, sampled on ``grid``.

    The flowers are unions of balls B_x over extreme points, so their sum is
    the union of pairwise ball sums.  Finite extreme-point sets give the exact
    union.  Smooth planar boundaries are sampled at ``m`` points and the best
    pair in each direction is then refined by a local search.
    """
    if K.dim != T.dim or grid.dim != K.dim:
        raise GeometryError("dimension mismatch")
    fa, fb = _BallFamily(K, m), _BallFamily(T, m)
    centers = (fa.centers[:, None, :] + fb.centers[None, :, :]).reshape(-1, K.dim)
    radii = (fa.radii[:, None] + fb.radii[None, :]).reshape(-1)
    r, arg = _union_radial(centers, radii, grid.dirs)
    if fa.curve is not None or fb.curve is not None:
        ia, ib = np.divmod(arg, len(fb.radii))
        r = np.maximum(r, _refine(fa, fb, grid.dirs, ia, ib))
    return StarBody(grid, r)


def star_minkowski(A: StarBody, B: StarBody, m: int = 128) -> StarBody:
    """Minkowski sum of two sampled flowers, through their cores."""
    _same_grid(A, B)
    return flower_sum(core(A), core(B), A.grid, m)


def oplus(K: Body, T: Body, grid: SphereGrid, m: int = 128) -> HRep:
    """K ⊕ T, the body whose flower is K♣ + T♣."""
    return core(flower_sum(K, T, grid, m))
