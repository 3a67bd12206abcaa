"""Numeric substrate: sphere grids, planar hulls, a small LP solver, subspaces.

Everything here works on plain numpy arrays.  Directions are stored row-wise,
so an ``(M, n)`` array holds ``M`` unit vectors of ``R^n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

GEOM_EPS = 1e-9
UNIT_EPS = 1e-9


class GeometryError(ValueError):
    """Invalid argument to a geometric routine."""


class UnsupportedRepresentation(GeometryError):
    """The requested evaluation does not exist for this representation."""


class UnboundedBody(ArithmeticError):
    """A functional was asked for the volume of an unbounded set."""


def as_vec(x, dim: int | None = None) -> np.ndarray:
    v = np.atleast_1d(np.asarray(x, dtype=float))
    if v.ndim != 1:
        raise GeometryError(f"expected a vector, got shape {v.shape}")
    if dim is not None and v.shape[0] != dim:
        raise GeometryError(f"expected dimension {dim}, got {v.shape[0]}")
    if not np.all(np.isfinite(v)):
        raise GeometryError("vector entries must be finite")
    return v


def unit_ball_volume(n: int) -> float:
    """|B_2^n| = pi^(n/2) / Gamma(n/2 + 1)."""
    return math.pi ** (n / 2) / math.gamma(n / 2 + 1)


def inv_ext(x):
    """Inversion on [0, +inf] with 1/0 = inf and 1/inf = 0."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore"):
        out = np.where(x == 0.0, np.inf, 1.0 / np.where(x == 0.0, 1.0, x))
    return out


def ext_defect(a, b) -> float:
    """Sup of |a - b| / max(1, |a|, |b|) with inf == inf counted as agreement."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    both_inf = np.isinf(a) & np.isinf(b) & (np.sign(a) == np.sign(b))
    one_inf = (np.isinf(a) | np.isinf(b)) & ~both_inf
    if np.any(one_inf):
        return math.inf
    a = np.where(both_inf, 0.0, a)
    b = np.where(both_inf, 0.0, b)
    scale = np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b) / scale))


def pairwise_sum(x) -> float:
    # numpy's add.reduce is pairwise for contiguous float arrays
    return float(np.add.reduce(np.ascontiguousarray(x, dtype=float)))


# ---------------------------------------------------------------------------
# sphere grids
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SphereGrid:
    """Direction set with weights approximating the uniform probability on S^{n-1}."""

    dim: int
    dirs: np.ndarray
    weights: np.ndarray
    seed: int = 0
    angles: np.ndarray | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return self.dirs.shape[0]

    def integrate(self, values) -> float:
        """Weighted sum of ``values`` over the grid (the sigma-average)."""
        return pairwise_sum(self.weights * np.asarray(values, dtype=float))

    def same_as(self, other: "SphereGrid") -> bool:
        return self is other or (
            self.dim == other.dim
            and self.size == other.size
            and np.array_equal(self.dirs, other.dirs)
        )

    def index_of(self, theta, tol: float = 1e-9) -> int | None:
        """Index of the grid direction equal to ``theta`` (within tol), or None."""
        d = self.dirs @ as_vec(theta, self.dim)
        j = int(np.argmax(d))
        return j if d[j] >= 1.0 - tol else None


def make_grid(dim: int, M: int, seed: int = 0) -> SphereGrid:
    """Deterministic grid: equispaced circle for n = 2, spherical Fibonacci for
    n = 3, seeded normalized Gaussians beyond."""
    if dim < 2:
        raise GeometryError("grid dimension must be at least 2")
    if M < 8:
        raise GeometryError("grid needs at least 8 directions")
    weights = np.full(M, 1.0 / M)
    if dim == 2:
        angles = 2.0 * np.pi * np.arange(M) / M
        dirs = np.column_stack([np.cos(angles), np.sin(angles)])
        # exact zeros/ones on the axes keep symmetric grids symmetric
        dirs[np.abs(dirs) < 1e-15] = 0.0
        if M % 4 == 0:
            q = M // 4
            for k, (c, s) in enumerate([(1, 0), (0, 1), (-1, 0), (0, -1)]):
                dirs[k * q] = (c, s)
        return SphereGrid(2, dirs, weights, seed, angles)
    if dim == 3:
        i = np.arange(M) + 0.5
        polar = np.arccos(1.0 - 2.0 * i / M)
        golden = (1.0 + 5.0 ** 0.5) / 2.0
        azim = 2.0 * np.pi * i / golden
        dirs = np.column_stack([
            np.cos(azim) * np.sin(polar),
            np.sin(azim) * np.sin(polar),
            np.cos(polar),
        ])
    else:
        rng = np.random.default_rng(seed)
        dirs = rng.standard_normal((M, dim))
    dirs /= np.linalg.norm(dirs, axis=1)[:, None]
    return SphereGrid(dim, dirs, weights, seed)


def line_grid() -> SphereGrid:
    """S^0 = {+1, -1} with weights 1/2; used for one-dimensional subspaces."""
    return SphereGrid(1, np.array([[1.0], [-1.0]]), np.array([0.5, 0.5]))


# ---------------------------------------------------------------------------
# planar convex hull
# ---------------------------------------------------------------------------

def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull2(points) -> np.ndarray:
    """Counter-clockwise extreme points of a planar point set (monotone chain).

    Collinear boundary points are dropped.  One distinct point gives a
    one-row array; collinear input gives the two endpoints.
    """
    pts = np.asarray(points, dtype=float)
    if pts.size == 0:
        raise GeometryError("hull of an empty point set")
    pts = pts.reshape(-1, 2)
    if not np.all(np.isfinite(pts)):
        raise GeometryError("hull input must be finite")
    uniq = sorted(set(map(tuple, pts)))
    if len(uniq) == 1:
        return np.array(uniq)
    scale = max(1.0, max(abs(c) for p in uniq for c in p))
    eps = 1e-14 * scale * scale

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0.0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(uniq)
    upper = half(reversed(uniq))
    hull = lower[:-1] + upper[:-1]
    # drop vertices lying (within eps) on the segment between their neighbours
    while len(hull) >= 3:
        kept = []
        for t in range(len(hull)):
            a = kept[-1] if kept else hull[t - 1]
            p, b = hull[t], hull[(t + 1) % len(hull)]
            between = (a[0] - p[0]) * (b[0] - p[0]) + (a[1] - p[1]) * (b[1] - p[1]) <= 0
            if not (between and _cross(a, p, b) <= eps):
                kept.append(p)
        if len(kept) == len(hull):
            break
        hull = kept
    return np.array(hull)


def polygon_area(vertices) -> float:
    """Shoelace area of a CCW vertex list (0 for points and segments)."""
    v = np.asarray(vertices, dtype=float).reshape(-1, 2)
    if len(v) < 3:
        return 0.0
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def polygon_perimeter(vertices) -> float:
    v = np.asarray(vertices, dtype=float).reshape(-1, 2)
    if len(v) == 1:
        return 0.0
    return float(np.sum(np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1)))


# ---------------------------------------------------------------------------
# linear programming
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LinearProgram:
    """Feasible set {x : <a_j, x> <= b_j}; 0 is feasible because every b_j >= 0."""

    normals: np.ndarray
    bounds: np.ndarray

    def __post_init__(self):
        a = np.atleast_2d(np.asarray(self.normals, dtype=float))
        b = np.asarray(self.bounds, dtype=float).reshape(-1)
        if a.shape[0] != b.shape[0]:
            raise GeometryError("normals and bounds differ in length")
        if np.any(b < 0) or np.any(np.isnan(b)):
            raise GeometryError("0 must be feasible: every bound must be >= 0")
        object.__setattr__(self, "normals", a)
        object.__setattr__(self, "bounds", b)

    @property
    def dim(self) -> int:
        return self.normals.shape[1]


def _pivot(T, basis, row, col):
    T[row] /= T[row, col]
    colv = T[:, col].copy()
    colv[row] = 0.0
    T -= np.outer(colv, T[row])
    basis[row] = col


def _simplex(T, basis, ncols, eps, max_iter):
    # minimize; objective row is T[-1], reduced costs T[-1, :ncols]
    for _ in range(max_iter):
        cost = T[-1, :ncols]
        cand = np.nonzero(cost < -eps)[0]
        if cand.size == 0:
            return True
        col = int(cand[0])                     # Bland: smallest index enters
        colv = T[:-1, col]
        pos = colv > eps
        if not np.any(pos):
            return False
        ratios = np.full(colv.shape, np.inf)
        ratios[pos] = T[:-1, -1][pos] / colv[pos]
        best = ratios.min()
        ties = np.nonzero(ratios <= best + eps * max(1.0, abs(best)))[0]
        row = int(ties[np.argmin(np.asarray(basis)[ties])])  # Bland: smallest leaving index
        _pivot(T, basis, row, col)
    raise RuntimeError("simplex iteration limit reached")


def lp_max(lp: LinearProgram, direction, eps: float = 1e-12) -> float:
    """sup <direction, x> over the feasible set, +inf when unbounded.

    Solved through the dual ``min b.lam  s.t.  A^T lam = u, lam >= 0`` with a
    two-phase dense tableau simplex under Bland's rule; an infeasible dual
    means the primal is unbounded in ``direction``.
    """
    u = as_vec(direction, lp.dim)
    keep = np.isfinite(lp.bounds)
    A = lp.normals[keep]
    b = lp.bounds[keep]
    n, m = lp.dim, A.shape[0]
    if not np.any(u):
        return 0.0
    if m == 0:
        return math.inf
    sign = np.where(u < 0, -1.0, 1.0)
    # tableau rows: n equality rows, then objective; cols: m lambdas, n artificials, rhs
    T = np.zeros((n + 1, m + n + 1))
    T[:n, :m] = (A.T) * sign[:, None]
    T[:n, m:m + n] = np.eye(n)
    T[:n, -1] = u * sign
    basis = list(range(m, m + n))
    # phase 1: minimize the sum of artificials
    T[-1, :m] = -T[:n, :m].sum(axis=0)
    T[-1, -1] = -T[:n, -1].sum()
    _simplex(T, basis, m + n, eps, 50 * (m + n) + 100)
    scale = max(1.0, float(np.abs(u).max()))
    if -T[-1, -1] > 1e-9 * scale:
        return math.inf
    # drive remaining artificials out of the basis
    for r in range(n):
        if basis[r] >= m:
            nz = np.nonzero(np.abs(T[r, :m]) > eps)[0]
            if nz.size:
                _pivot(T, basis, r, int(nz[0]))
    # phase 2 over the lambda columns only
    T[-1, :] = 0.0
    T[-1, :m] = b
    for r in range(n):
        if basis[r] < m:
            T[-1] -= b[basis[r]] * T[r]
    T[:, m:m + n] = 0.0
    _simplex(T, basis, m, eps, 50 * m + 100)
    return float(-T[-1, -1])


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Subspace:
    """Linear subspace E of R^n given by an orthonormal basis (rows)."""

    basis: np.ndarray

    def __post_init__(self):
        B = np.atleast_2d(np.asarray(self.basis, dtype=float))
        if B.shape[0] < 1 or B.shape[0] > B.shape[1]:
            raise GeometryError("subspace dimension must satisfy 1 <= i <= n")
        if np.max(np.abs(B @ B.T - np.eye(B.shape[0]))) > 1e-10:
            raise GeometryError("subspace basis must be orthonormal")
        object.__setattr__(self, "basis", B)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[1]

    def lift(self, w) -> np.ndarray:
        """E-coordinates -> ambient vectors (row-wise)."""
        return np.asarray(w, dtype=float) @ self.basis

    def coords(self, x) -> np.ndarray:
        """Ambient vectors -> coordinates of their projection onto E."""
        return np.asarray(x, dtype=float) @ self.basis.T

    @classmethod
    def spanned_by(cls, vectors) -> "Subspace":
        V = np.atleast_2d(np.asarray(vectors, dtype=float))
        q, r = np.linalg.qr(V.T)
        if np.min(np.abs(np.diag(r))) < 1e-12:
            raise GeometryError("spanning vectors are linearly dependent")
        q = q * np.sign(np.diag(r))
        return cls(q.T)


def sample_grassmannian(n: int, i: int, count: int, seed: int = 0) -> list[Subspace]:
    """Haar-distributed i-dimensional subspaces of R^n via QR of Gaussian matrices."""
    if not 1 <= i <= n:
        raise GeometryError("subspace dimension must satisfy 1 <= i <= n")
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        q, r = np.linalg.qr(rng.standard_normal((n, i)))
        q = q * np.where(np.diag(r) < 0, -1.0, 1.0)
        out.append(Subspace(q.T))
    return out


def grassmannian_frames(n: int, i: int, count: int, seed: int = 0) -> np.ndarray:
    """Same distribution as :func:`sample_grassmannian`, as a (count, i, n) array."""
    rng = np.random.default_rng(seed)
    G = rng.standard_normal((count, n, i))
    q, r = np.linalg.qr(G)
    d = np.sign(np.diagonal(r, axis1=1, axis2=2))
    d[d == 0] = 1.0
    q = q * d[:, None, :]
    return np.transpose(q, (0, 2, 1))
