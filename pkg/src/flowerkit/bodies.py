"""Convex bodies containing the origin and star bodies sampled on a grid.

Every convex body answers ``h(U)`` (support function) for a row-stack of unit
directions ``U``; most also answer ``r(U)`` (radial function).  Values live in
``[0, +inf]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .numkit import (
    GEOM_EPS,
    UNIT_EPS,
    GeometryError,
    LinearProgram,
    SphereGrid,
    Subspace,
    UnsupportedRepresentation,
    as_vec,
    hull2,
    inv_ext,
    lp_max,
    make_grid,
)

TWO_PI = 2.0 * math.pi
ANGLE_EPS = 1e-12


def _dirs(U, dim):
    U = np.atleast_2d(np.asarray(U, dtype=float))
    if U.shape[1] != dim:
        raise GeometryError(f"direction dimension {U.shape[1]} != body dimension {dim}")
    return U


def _check_unit(theta, dim):
    t = as_vec(theta, dim)
    if abs(np.linalg.norm(t) - 1.0) > UNIT_EPS:
        raise GeometryError("direction must be a unit vector")
    return t


class Body:
    """A closed convex set K with 0 in K."""

    dim: int

    def h(self, U) -> np.ndarray:
        return self._h(_dirs(U, self.dim))

    def r(self, U) -> np.ndarray:
        return self._r(_dirs(U, self.dim))

    def _h(self, U):
        raise NotImplementedError

    def _r(self, U):
        raise UnsupportedRepresentation(f"radial function of {type(self).__name__}")

    def extreme_points(self, m: int = 256) -> np.ndarray:
        """Points whose convex hull (with 0) is the body; exact where finite."""
        if self.dim != 2:
            raise UnsupportedRepresentation(f"extreme points of {type(self).__name__}")
        grid = make_grid(2, m)
        chain = WulffChain(grid.dirs, self._h(grid.dirs))
        if not chain.bounded:
            raise GeometryError("unbounded body has no finite extreme-point set")
        return chain.vertices

    def flower_balls(self, m: int = 256):
        """Balls B(x/2, |x|/2) over extreme points x; their union is the flower."""
        X = self.extreme_points(m).reshape(-1, self.dim)
        centers = np.vstack([np.zeros((1, self.dim)), X / 2.0])
        radii = np.concatenate([[0.0], np.linalg.norm(X, axis=1) / 2.0])
        return centers, radii

    def summary(self) -> dict:
        return {"type": type(self).__name__, "dim": self.dim}


def support(K: Body, theta) -> float:
    """h_K(theta) for one unit direction."""
    return float(K.h(_check_unit(theta, K.dim)[None, :])[0])


def radial(K: Body, theta) -> float:
    """r_K(theta) for one unit direction."""
    return float(K.r(_check_unit(theta, K.dim)[None, :])[0])


def ball_radial(centers, radii, U) -> np.ndarray:
    """Radial function of each ball B(c, rho) with 0 in B; shape (len(U), len(c))."""
    proj = U @ np.asarray(centers, dtype=float).T
    c2 = np.sum(np.asarray(centers, dtype=float) ** 2, axis=1)
    disc = np.asarray(radii, dtype=float) ** 2 - c2 + proj ** 2
    return np.maximum(proj + np.sqrt(np.maximum(disc, 0.0)), 0.0)


# ---------------------------------------------------------------------------
# closed-form primitives
# ---------------------------------------------------------------------------

class Ball(Body):
    def __init__(self, center, radius: float):
        self.center = as_vec(center)
        self.radius = float(radius)
        self.dim = self.center.shape[0]
        if self.radius < 0:
            raise GeometryError("ball radius must be >= 0")
        if np.linalg.norm(self.center) > self.radius + 1e-12:
            raise GeometryError("the origin must lie in the ball")

    def _h(self, U):
        return U @ self.center + self.radius

    def _r(self, U):
        return ball_radial(self.center[None, :], [self.radius], U)[:, 0]

    @property
    def is_centered(self) -> bool:
        return not np.any(self.center)

    def extreme_points(self, m: int = 256):
        d = make_grid(self.dim, m).dirs if self.dim >= 2 else np.array([[1.0], [-1.0]])
        return self.center + self.radius * d

    def boundary_curve(self, t):
        """Planar boundary point at angle parameter ``t``."""
        t = np.asarray(t, dtype=float)
        return self.center + self.radius * np.stack([np.cos(t), np.sin(t)], axis=-1)

    def flower_balls(self, m: int = 256):
        if self.is_centered:
            return self.center[None, :].copy(), np.array([self.radius])
        return super().flower_balls(m)

    def summary(self):
        return {"type": "ball", "center": self.center.tolist(), "radius": self.radius}


class Segment(Body):
    """[0, x]."""

    def __init__(self, x):
        self.x = as_vec(x)
        self.dim = self.x.shape[0]

    def _h(self, U):
        return np.maximum(U @ self.x, 0.0)

    def _r(self, U):
        n = np.linalg.norm(self.x)
        if n == 0:
            return np.zeros(len(U))
        aligned = U @ (self.x / n) >= 1.0 - 0.5 * GEOM_EPS ** 2
        return np.where(aligned, n, 0.0)

    def extreme_points(self, m: int = 256):
        return self.x[None, :].copy()

    def summary(self):
        return {"type": "segment", "x": self.x.tolist()}


def _edge_normals(poly):
    q = np.roll(poly, -1, axis=0)
    d = q - poly
    nrm = np.column_stack([d[:, 1], -d[:, 0]])
    length = np.linalg.norm(nrm, axis=1)
    nrm = nrm / length[:, None]
    return nrm, np.sum(nrm * poly, axis=1)


class Polytope(Body):
    """conv(vertices U {0}); in the plane stored as a CCW :func:`hull2` polygon."""

    def __init__(self, vertices):
        V = np.atleast_2d(np.asarray(vertices, dtype=float))
        if V.size == 0 or not np.all(np.isfinite(V)):
            raise GeometryError("polytope needs finite vertices")
        self.dim = V.shape[1]
        if self.dim == 2:
            self.vertices = hull2(np.vstack([V, [[0.0, 0.0]]]))
        else:
            self.vertices = V
        if self.dim == 1:
            lo, hi = min(0.0, V.min()), max(0.0, V.max())
            self.vertices = np.array([[lo], [hi]])

    def _h(self, U):
        return np.maximum(np.max(U @ self.vertices.T, axis=1), 0.0)

    @cached_property
    def _edges(self):
        return _edge_normals(self.vertices)

    def _r(self, U):
        if self.dim == 2:
            V = self.vertices
            if len(V) >= 3:
                nrm, off = self._edges
                dots = U @ nrm.T
                with np.errstate(divide="ignore", invalid="ignore"):
                    t = np.where(dots > 1e-15, off / dots, np.inf)
                return np.maximum(t.min(axis=1), 0.0)
            out = np.zeros(len(U))
            for v in V:
                nv = np.linalg.norm(v)
                if nv > 0:
                    out = np.where(U @ (v / nv) >= 1.0 - 1e-18, np.maximum(out, nv), out)
            return out
        if self.dim == 1:
            return np.where(U[:, 0] > 0, self.vertices[1, 0], -self.vertices[0, 0])
        return inv_ext(self.polar_hrep().h(U))

    def polar_hrep(self) -> "HRep":
        V = self.vertices
        nv = np.linalg.norm(V, axis=1)
        V, nv = V[nv > 0], nv[nv > 0]
        return HRep(V / nv[:, None], 1.0 / nv)

    @property
    def interior_origin(self) -> bool:
        if self.dim != 2 or len(self.vertices) < 3:
            return False
        return bool(np.all(self._edges[1] > GEOM_EPS))

    def extreme_points(self, m: int = 256):
        V = self.vertices
        return V[np.linalg.norm(V, axis=1) > 0]

    def summary(self):
        return {"type": "polytope", "vertices": self.vertices.tolist()}


class Ellipse2(Body):
    """Planar ellipse given by center, semi-axes a >= b > 0 and rotation angle."""

    def __init__(self, center, a: float, b: float, rot: float = 0.0):
        self.center = as_vec(center, 2)
        self.a, self.b, self.rot = float(a), float(b), float(rot)
        self.dim = 2
        if not self.a >= self.b > 0:
            raise GeometryError("ellipse semi-axes must satisfy a >= b > 0")
        c, s = math.cos(self.rot), math.sin(self.rot)
        self._R = np.array([[c, -s], [s, c]])
        q = self._R.T @ self.center
        if (q[0] / self.a) ** 2 + (q[1] / self.b) ** 2 > 1.0 + 1e-12:
            raise GeometryError("the origin must lie in the ellipse")

    @classmethod
    def focal(cls, center, ecc: float) -> "Ellipse2":
        """Ellipse with one focus at 0, center p and eccentricity e."""
        p = as_vec(center, 2)
        if not 0 < ecc < 1:
            raise GeometryError("eccentricity must lie in (0, 1)")
        norm_p = float(np.linalg.norm(p))
        if norm_p == 0:
            raise GeometryError("focal ellipse needs a nonzero center")
        a = norm_p / ecc
        return cls(p, a, a * math.sqrt(1.0 - ecc ** 2), math.atan2(p[1], p[0]))

    @property
    def eccentricity(self) -> float:
        return math.sqrt(1.0 - (self.b / self.a) ** 2)

    @property
    def has_focus_at_origin(self) -> bool:
        c = math.sqrt(max(self.a ** 2 - self.b ** 2, 0.0))
        q = self._R.T @ self.center
        return c > 0 and abs(abs(q[0]) - c) <= 1e-9 * self.a and abs(q[1]) <= 1e-9 * self.a

    def _h(self, U):
        W = U @ self._R
        return U @ self.center + np.sqrt((self.a * W[:, 0]) ** 2 + (self.b * W[:, 1]) ** 2)

    def _r(self, U):
        W = U @ self._R
        q = self._R.T @ self.center
        ia2, ib2 = 1.0 / self.a ** 2, 1.0 / self.b ** 2
        A = W[:, 0] ** 2 * ia2 + W[:, 1] ** 2 * ib2
        B = W[:, 0] * q[0] * ia2 + W[:, 1] * q[1] * ib2
        C = q[0] ** 2 * ia2 + q[1] ** 2 * ib2 - 1.0
        return np.maximum((B + np.sqrt(np.maximum(B * B - A * C, 0.0))) / A, 0.0)

    def boundary_curve(self, t):
        """Boundary point center + R (a cos t, b sin t)."""
        t = np.asarray(t, dtype=float)
        local = np.stack([self.a * np.cos(t), self.b * np.sin(t)], axis=-1)
        return self.center + local @ self._R.T

    def extreme_points(self, m: int = 256):
        return self.boundary_curve(TWO_PI * np.arange(m) / m)

    def flower_balls(self, m: int = 256):
        if self.has_focus_at_origin:
            return self.center[None, :].copy(), np.array([self.a])
        return super().flower_balls(m)

    def summary(self):
        return {"type": "ellipse", "center": self.center.tolist(),
                "a": self.a, "b": self.b, "rot": self.rot}


# ---------------------------------------------------------------------------
# H-representation and the exact planar Wulff chain
# ---------------------------------------------------------------------------

class WulffChain:
    """Planar half-plane intersection {x : <x, a_j> <= g_j} with all g_j >= 0.

    Non-redundant constraints are found by an angular stack scan in the
    homogeneous coordinates (a_j, g_j), so g_j = 0 needs no special case and
    g_j = +inf constraints are simply absent.  Consecutive kept normals whose
    angular gap is >= pi bound an unbounded direction sector.
    """

    def __init__(self, normals, bounds):
        A = np.asarray(normals, dtype=float).reshape(-1, 2)
        g = np.asarray(bounds, dtype=float).reshape(-1)
        finite = np.isfinite(g)
        A, g = A[finite], g[finite]
        phi = np.mod(np.arctan2(A[:, 1], A[:, 0]), TWO_PI)
        order = np.lexsort((g, phi))
        A, g, phi = A[order], g[order], phi[order]
        if len(phi):
            # identical normals: keep the tightest bound
            keep = np.ones(len(phi), bool)
            keep[1:] = np.diff(phi) > ANGLE_EPS
            A, g, phi = A[keep], g[keep], phi[keep]
        self.normals, self.bounds, self.angles = A, g, phi
        self._rows = np.column_stack([A, g]).tolist()
        self._phi = phi.tolist()
        self.kept = self._scan()
        self._build()

    def _span(self, i, k):
        s = (self._phi[k] - self._phi[i]) % TWO_PI
        return TWO_PI if s <= ANGLE_EPS else s

    def _redundant(self, i, j, k):
        if self._span(i, k) >= math.pi - ANGLE_EPS:
            return False
        (a, b, c), (d, e, f), (p, q, r) = self._rows[i], self._rows[j], self._rows[k]
        det = a * (e * r - f * q) - b * (d * r - f * p) + c * (d * q - e * p)
        return det <= 1e-14 * max(1.0, c, f, r)

    def _scan(self):
        m = len(self.bounds)
        if m <= 1:
            return list(range(m))
        start = int(np.argmin(self.bounds))
        seq = [(start + t) % m for t in range(m)] + [start]
        stack = [start]
        for k in seq[1:]:
            while len(stack) >= 2 and self._redundant(stack[-2], stack[-1], k):
                stack.pop()
            stack.append(k)
        stack.pop()
        # a second sweep settles the wrap-around at the start
        changed = True
        while changed and len(stack) >= 3:
            changed = False
            for t in range(len(stack)):
                i, j, k = stack[t - 1], stack[t], stack[(t + 1) % len(stack)]
                if self._redundant(i, j, k):
                    del stack[t]
                    changed = True
                    break
        return stack

    def _build(self):
        K = np.asarray(self.kept, dtype=int)
        A, g, phi = self.normals, self.bounds, self.angles
        self.full_plane = len(K) == 0
        self.vertices = np.zeros((0, 2))
        self.gaps = []
        self._arc_vertex = np.zeros(0, dtype=int)
        if len(K) == 0:
            self.bounded = False
            return
        L = np.roll(K, -1)
        span = np.mod(phi[L] - phi[K], TWO_PI)
        span = np.where(span <= ANGLE_EPS, TWO_PI, span)
        gap = span >= math.pi - ANGLE_EPS
        self.gaps = [(float(phi[i]), float(sp)) for i, sp in zip(K[gap], span[gap])]
        i, l = K[~gap], L[~gap]
        det = A[i, 0] * A[l, 1] - A[l, 0] * A[i, 1]
        x = (g[i] * A[l, 1] - g[l] * A[i, 1]) / det
        y = (A[i, 0] * g[l] - A[l, 0] * g[i]) / det
        self.vertices = np.column_stack([x, y])
        # arc t runs from kept normal K[t] to K[t+1]; -1 marks an unbounded sector
        arc_vertex = np.full(len(K), -1)
        arc_vertex[~gap] = np.arange(int((~gap).sum()))
        order = np.argsort(phi[K], kind="stable")
        self._arc_start = phi[K][order]
        self._arc_vertex = arc_vertex[order]
        self.bounded = not self.gaps

    def support(self, U) -> np.ndarray:
        U = np.atleast_2d(np.asarray(U, dtype=float))
        if self.full_plane:
            return np.where(np.any(U != 0, axis=1), np.inf, 0.0)
        psi = np.mod(np.arctan2(U[:, 1], U[:, 0]), TWO_PI)
        inf_mask = np.zeros(len(U), bool)
        for start, span in self.gaps:
            rel = np.mod(psi - start, TWO_PI)
            inf_mask |= (rel > 1e-10) & (rel < span - 1e-10)
        if len(self.vertices):
            # the maximizing vertex belongs to the arc containing psi; its
            # neighbours are included so that ties at arc ends are harmless
            n = len(self._arc_start)
            t = np.searchsorted(self._arc_start, psi, side="right") - 1
            val = np.full(len(U), -np.inf)
            for off in (-1, 0, 1):
                vi = self._arc_vertex[(t + off) % n]
                dots = np.einsum("ij,ij->i", U, self.vertices[np.maximum(vi, 0)])
                val = np.where(vi >= 0, np.maximum(val, dots), val)
            lost = np.isneginf(val)
            if np.any(lost):
                val[lost] = np.max(U[lost] @ self.vertices.T, axis=1)
        else:
            # a half-plane or a strip: finite only along the kept normals
            val = np.full(len(U), np.inf)
            for k in self.kept:
                hit = U @ self.normals[k] >= 1.0 - 1e-12
                val = np.where(hit, self.bounds[k], val)
        return np.where(inf_mask, np.inf, val)

    def radial(self, U) -> np.ndarray:
        U = np.atleast_2d(np.asarray(U, dtype=float))
        if not self.kept:
            return np.full(len(U), np.inf)
        A = self.normals[self.kept]
        g = self.bounds[self.kept]
        dots = U @ A.T
        with np.errstate(divide="ignore", invalid="ignore"):
            t = np.where(dots > 1e-15, g / dots, np.inf)
        return np.maximum(t.min(axis=1), 0.0)


class HRep(Body):
    """Intersection of half-spaces <x, a_j> <= b_j with unit normals and b_j in [0, inf]."""

    def __init__(self, normals, bounds):
        A = np.atleast_2d(np.asarray(normals, dtype=float))
        b = np.asarray(bounds, dtype=float).reshape(-1)
        if A.shape[0] != b.shape[0]:
            raise GeometryError("normals and bounds differ in length")
        if np.any(b < 0) or np.any(np.isnan(b)):
            raise GeometryError("H-representation bounds must be >= 0")
        nrm = np.linalg.norm(A, axis=1)
        if np.any(np.abs(nrm - 1.0) > 1e-9):
            raise GeometryError("H-representation normals must be unit vectors")
        self.normals, self.bounds = A, b
        self.dim = A.shape[1]

    @cached_property
    def chain(self) -> WulffChain:
        return WulffChain(self.normals, self.bounds)

    @cached_property
    def lp(self) -> LinearProgram:
        return LinearProgram(self.normals, self.bounds)

    @property
    def is_full_space(self) -> bool:
        return not np.any(np.isfinite(self.bounds))

    def _h(self, U):
        if self.dim == 1:
            return self._h_line(U)
        if self.dim == 2:
            return self.chain.support(U)
        return np.array([lp_max(self.lp, u) for u in U])

    def _h_line(self, U):
        out = np.empty(len(U))
        for k, u in enumerate(U[:, 0]):
            same = self.normals[:, 0] * u > 0
            out[k] = self.bounds[same].min() * abs(u) if np.any(same) else (
                math.inf if u != 0 else 0.0)
        return out

    def _r(self, U):
        if self.dim == 2:
            return self.chain.radial(U)
        out = np.full(len(U), np.inf)
        for s in range(0, len(U), 512):
            dots = U[s:s + 512] @ self.normals.T
            with np.errstate(divide="ignore", invalid="ignore"):
                t = np.where(dots > 1e-15, self.bounds / dots, np.inf)
            out[s:s + 512] = t.min(axis=1)
        return np.maximum(out, 0.0)

    def extreme_points(self, m: int = 256):
        if self.dim != 2:
            raise UnsupportedRepresentation("extreme points of an H-representation beyond 2-D")
        if not self.chain.bounded:
            raise GeometryError("unbounded body has no finite extreme-point set")
        return self.chain.vertices

    def summary(self):
        return {"type": "hrep", "rows": int(len(self.bounds)),
                "bounded": bool(self.dim != 2 or self.chain.bounded)}


class SampledSupport(Body):
    """Support values tabulated on a grid (interpolated in 2-D, nearest beyond)."""

    def __init__(self, grid: SphereGrid, values):
        v = np.asarray(values, dtype=float).reshape(-1)
        if v.shape[0] != grid.size:
            raise GeometryError("values do not match the grid")
        if np.any(v < 0) or np.any(np.isnan(v)):
            raise GeometryError("support samples must be >= 0")
        self.grid, self.values, self.dim = grid, v, grid.dim

    def _h(self, U):
        if self.dim == 2:
            M = self.grid.size
            psi = np.mod(np.arctan2(U[:, 1], U[:, 0]), TWO_PI) * M / TWO_PI
            j = np.floor(psi).astype(int) % M
            t = psi - np.floor(psi)
            lo, hi = self.values[j], self.values[(j + 1) % M]
            with np.errstate(invalid="ignore"):
                out = (1 - t) * lo + t * hi
            exact_lo = t < 1e-12
            return np.where(exact_lo, lo, np.where(t > 1 - 1e-12, hi, out))
        return self.values[np.argmax(U @ self.grid.dirs.T, axis=1)]

    def summary(self):
        return {"type": "sampled_support", "grid": self.grid.size}


# ---------------------------------------------------------------------------
# derived bodies
# ---------------------------------------------------------------------------

class PolarBody(Body):
    """K° evaluated exactly through h_{K°} = 1/r_K and r_{K°} = 1/h_K."""

    def __init__(self, inner: Body):
        self.inner, self.dim = inner, inner.dim

    def _h(self, U):
        return inv_ext(self.inner._r(U))

    def _r(self, U):
        return inv_ext(self.inner._h(U))

    def summary(self):
        return {"type": "polar", "of": self.inner.summary()}


class Projected(Body):
    """Orthogonal projection of K onto E, in E-coordinates."""

    def __init__(self, inner: Body, E: Subspace):
        if E.ambient_dim != inner.dim:
            raise GeometryError("subspace and body live in different dimensions")
        self.inner, self.E, self.dim = inner, E, E.dim

    def _h(self, U):
        return self.inner._h(self.E.lift(U))

    def _r(self, U):
        if self.dim == 1:
            return self._h(U)
        raise UnsupportedRepresentation("radial function of a projection")

    def summary(self):
        return {"type": "projection", "dim": self.dim, "of": self.inner.summary()}


# ---------------------------------------------------------------------------
# star bodies
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class StarBody:
    """Radial function sampled on a sphere grid, values in [0, +inf]."""

    grid: SphereGrid
    radial: np.ndarray

    def __post_init__(self):
        r = np.asarray(self.radial, dtype=float).reshape(-1)
        if r.shape[0] != self.grid.size:
            raise GeometryError("radial samples do not match the grid")
        if np.any(r < 0) or np.any(np.isnan(r)):
            raise GeometryError("radial samples must lie in [0, inf]")
        object.__setattr__(self, "radial", r)

    @property
    def dim(self) -> int:
        return self.grid.dim

    def boundary(self) -> np.ndarray:
        """Boundary points r(theta) theta for finite radial values."""
        fin = np.isfinite(self.radial)
        return self.radial[fin, None] * self.grid.dirs[fin]

    def summary(self) -> dict:
        fin = self.radial[np.isfinite(self.radial)]
        return {"type": "star", "dim": self.dim, "grid": self.grid.size,
                "r_min": float(self.radial.min()),
                "r_max": float(self.radial.max()),
                "finite": bool(fin.size == self.radial.size)}


def sample_support(K: Body, grid: SphereGrid) -> StarBody:
    """Star body with radial[j] = h_K(dirs[j]), i.e. the sampled flower of K."""
    if grid.dim != K.dim:
        raise GeometryError("grid and body dimensions differ")
    return StarBody(grid, K._h(grid.dirs))


def sample_radial(K: Body, grid: SphereGrid) -> StarBody:
    """K itself as a star body on the grid."""
    if grid.dim != K.dim:
        raise GeometryError("grid and body dimensions differ")
    return StarBody(grid, K._r(grid.dirs))


def _same_grid(A: StarBody, B: StarBody):
    if not A.grid.same_as(B.grid):
        raise GeometryError("star bodies live on different grids")


def star_contains(A: StarBody, B: StarBody, scale: float = 1.0, tol: float = GEOM_EPS) -> bool:
    """scale*A ⊆ B, decided by radial domination on the shared grid."""
    _same_grid(A, B)
    lhs = scale * A.radial
    with np.errstate(invalid="ignore"):
        ok = (lhs <= B.radial + tol) | np.isinf(B.radial)
    return bool(np.all(ok))


# ---------------------------------------------------------------------------
# JSON schema
# ---------------------------------------------------------------------------

def body_from_json(obj: dict) -> Body:
    kind = obj.get("type")
    try:
        if kind == "ball":
            return Ball(obj["center"], obj["radius"])
        if kind == "segment":
            return Segment(obj["x"])
        if kind == "polytope":
            return Polytope(obj["vertices"])
        if kind == "ellipse":
            return Ellipse2(obj["center"], obj["a"], obj["b"], obj.get("rot", 0.0))
        if kind == "ellipse_focal":
            return Ellipse2.focal(obj["center"], obj["ecc"])
        if kind == "hrep":
            rows = obj["rows"]
            return HRep([row["normal"] for row in rows],
                        [row["bound"] if row["bound"] is not None else math.inf
                         for row in rows])
    except KeyError as exc:
        raise GeometryError(f"body of type {kind!r} is missing field {exc}") from None
    raise GeometryError(f"unknown body type {kind!r}")
