"""Post-order evaluation of parsed body expressions."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .. import arithmetic as ar
from .. import dualities as du
from ..bodies import Body, StarBody, body_from_json, sample_radial
from ..fleet import default_fleet
from ..numkit import Subspace, line_grid, make_grid
from .parser import Apply, ExprError, Primitive


@dataclass
class RunConfig:
    dim: int = 2
    grid: int = 4096
    seed: int = 0
    tol: dict = field(default_factory=dict)
    out: str | None = None
    fleet: str = "default"

    def as_dict(self) -> dict:
        return asdict(self)

    def sphere(self, dim: int | None = None):
        dim = self.dim if dim is None else dim
        return line_grid() if dim == 1 else make_grid(dim, self.grid, self.seed)


@dataclass
class Evaluation:
    value: object
    steps: list

    def report(self) -> dict:
        return {"output": summarize(self.value), "steps": self.steps}


def summarize(X) -> dict:
    return X.summary()


def _primitive(p: Primitive) -> Body:
    a = p.params
    if p.kind == "ball":
        return body_from_json({"type": "ball", "center": a[0], "radius": a[1]})
    if p.kind == "segment":
        return body_from_json({"type": "segment", "x": a[0]})
    if p.kind == "polytope":
        return body_from_json({"type": "polytope", "vertices": a[0]})
    if p.kind == "ellipse":
        obj = {"type": "ellipse", "center": a[0], "a": a[1], "b": a[2]}
        if len(a) == 4:
            obj["rot"] = a[3]
        return body_from_json(obj)
    if p.kind == "ellipse_focal":
        return body_from_json({"type": "ellipse_focal", "center": a[0], "ecc": a[1]})
    if p.kind == "json":
        return body_from_json(json.loads(a[0]))
    if p.kind == "file":
        try:
            return body_from_json(json.loads(Path(a[0]).read_text()))
        except (OSError, json.JSONDecodeError) as exc:
            raise ExprError(f"cannot read body file {a[0]!r}: {exc}") from None
    if p.kind == "ref":
        fleet = default_fleet()
        if a[0] not in fleet:
            raise ExprError(f"unknown body name {a[0]!r}")
        return fleet[a[0]]
    raise ExprError(f"unknown primitive {p.kind!r}")


def _as_star(X, cfg: RunConfig) -> StarBody:
    return X if isinstance(X, StarBody) else sample_radial(X, cfg.sphere(X.dim))


def _as_body(X) -> Body:
    """Star bodies enter body operations through their core."""
    return du.core(X) if isinstance(X, StarBody) else X


def _apply(op: str, args: list, cfg: RunConfig):
    X = args[0]
    g = cfg.sphere(X.dim)
    if op == "polar":
        return du.polar_star(X) if isinstance(X, StarBody) else du.polar(X, g)
    if op == "reciprocal":
        return du.reciprocal(_as_body(X), g)
    if op == "flower":
        return du.flower(_as_body(X), g)
    if op == "core":
        return du.core(_as_star(X, cfg))
    if op == "phi":
        return du.phi(_as_star(X, cfg))
    if op == "inns":
        if isinstance(X, StarBody):
            return du.phi(du.star_conv(du.phi(X)))
        return du.inner_hull(X, g)
    if op == "conv":
        return du.star_conv(_as_star(X, cfg))
    if op == "scale":
        lam = args[1]
        if isinstance(X, StarBody):
            if lam < 0:
                raise ExprError("scale factor must be >= 0")
            return StarBody(X.grid, lam * X.radial)
        return ar.scale(X, lam)
    if op == "project":
        basis = np.atleast_2d(np.asarray(args[1], dtype=float))
        E = Subspace.spanned_by(basis)
        return du.project(X, E, cfg.grid)
    Y = args[1]
    if X.dim != Y.dim:
        raise ExprError(f"{op} of bodies in dimensions {X.dim} and {Y.dim}")
    if op == "radialsum":
        return ar.radial_sum(_as_star(X, cfg), _as_star(Y, cfg))
    if op == "oplus":
        return ar.oplus(_as_body(X), _as_body(Y), g)
    if op == "minkowski":
        if isinstance(X, StarBody) and isinstance(Y, StarBody):
            return ar.star_minkowski(X, Y)
        if isinstance(X, StarBody) or isinstance(Y, StarBody):
            raise ExprError("minkowski mixes a star body with a convex body")
        return ar.minkowski(X, Y)
    raise ExprError(f"unknown operation {op!r}")


def eval_expr(e, cfg: RunConfig | None = None) -> Evaluation:
    """Evaluate an expression tree; every applied operator is logged in ``steps``."""
    cfg = cfg or RunConfig()
    steps: list = []

    def walk(node):
        if isinstance(node, Primitive):
            return _primitive(node)
        if not isinstance(node, Apply):
            return node
        args = [walk(a) for a in node.args]
        out = _apply(node.op, args, cfg)
        steps.append(du.OperatorReport(
            node.op, [summarize(a) if hasattr(a, "summary") else a for a in args],
            summarize(out), grid=cfg.grid).as_dict())
        return out

    return Evaluation(walk(e), steps)
