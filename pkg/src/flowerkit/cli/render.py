"""Deterministic SVG drawings of planar bodies and star bodies."""
from __future__ import annotations

from pathlib import Path

import numpy as np

from ..bodies import Body, Ellipse2, HRep, Polytope, StarBody, sample_radial
from ..dualities import flower, reciprocal
from ..fleet import square
from ..numkit import UnsupportedRepresentation, make_grid

PANEL = 240.0
STYLES = {
    "solid": 'fill="none" stroke="black" stroke-width="1.5"',
    "dashed": 'fill="none" stroke="black" stroke-width="1.2" stroke-dasharray="6 4"',
}


def boundary_points(X, m: int = 1024) -> np.ndarray:
    """Boundary of a planar body or star body sampled at equispaced directions."""
    if X.dim != 2:
        raise UnsupportedRepresentation("rendering is planar only")
    if isinstance(X, StarBody):
        return X.boundary()
    grid = make_grid(2, m)
    try:
        return sample_radial(X, grid).boundary()
    except UnsupportedRepresentation:
        W = HRep(grid.dirs, X._h(grid.dirs))
        return sample_radial(W, grid).boundary()


def _fmt(v: float) -> str:
    s = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _path(points, to_px, style: str) -> str:
    if len(points) == 0:
        return ""
    px = [to_px(p) for p in points]
    d = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in px) + " Z"
    return f'  <path d="{d}" {STYLES[style]}/>'


def render_panels(panels, path=None, m: int = 1024) -> str:
    """Panels of (shape, style) pairs side by side; returns the SVG text.

    Each panel fits its shapes and the origin with a 10% margin; the origin is
    marked by a small dot.
    """
    width = PANEL * max(1, len(panels))
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{_fmt(width)}" height="{_fmt(PANEL)}" '
           f'viewBox="0 0 {_fmt(width)} {_fmt(PANEL)}">']
    for k, shapes in enumerate(panels):
        for style in (s for _, s in shapes):
            if style not in STYLES:
                raise ValueError(f"unknown style {style!r}")
        pts = [boundary_points(X, m) for X, _ in shapes]
        allp = np.vstack(pts + [np.zeros((1, 2))])
        lo, hi = allp.min(axis=0), allp.max(axis=0)
        span = max(float(np.max(hi - lo)), 1e-12)
        scale = PANEL / (1.2 * span)
        mid = (lo + hi) / 2
        x0 = k * PANEL + PANEL / 2

        def to_px(p, mid=mid, scale=scale, x0=x0):
            return x0 + scale * (p[0] - mid[0]), PANEL / 2 - scale * (p[1] - mid[1])

        out.append(f'  <g id="panel{k}">')
        for P, (_, style) in zip(pts, shapes):
            line = _path(P, to_px, style)
            if line:
                out.append("  " + line)
        ox, oy = to_px((0.0, 0.0))
        out.append(f'    <circle cx="{_fmt(ox)}" cy="{_fmt(oy)}" r="2" fill="black"/>')
        out.append("  </g>")
    out.append("</svg>")
    text = "\n".join(out) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def render_svg(shapes, path=None, m: int = 1024) -> str:
    """A single panel; an empty shape list gives a valid empty drawing."""
    return render_panels([shapes] if shapes else [], path, m)


def archetypes() -> list[Body]:
    """The three bodies drawn in the figures: a square, a triangle, a focal ellipse."""
    tri = Polytope([[1.2, -0.6], [-0.6, 1.0], [-0.8, -0.9]])
    return [square(), tri, Ellipse2.focal([0.6, 0.2], 0.6)]


def figure(which: int, grid_size: int = 4096) -> list:
    """Panels for figure 1 (bodies and reciprocals) or figure 2 (bodies and flowers)."""
    if which not in (1, 2):
        raise ValueError("figure must be 1 or 2")
    g = make_grid(2, grid_size)
    panels = []
    for K in archetypes():
        partner = reciprocal(K, g) if which == 1 else flower(K, g)
        panels.append([(K, "solid"), (partner, "dashed")])
    return panels
