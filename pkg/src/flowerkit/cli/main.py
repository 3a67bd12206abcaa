"""Command-line entry point: ``flowerkit <command> ...``.

Every command prints one JSON document
``{"command", "config", "results": [{"name", "value", "pass", "tolerance"}]}``.
Exit codes: 0 success, 1 numeric-domain error or failed check, 2 parse or
configuration error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .. import functionals as fn
from ..bodies import Ball, StarBody, sample_radial
from ..dualities import flower
from ..numkit import GeometryError, UnboundedBody
from . import checks
from .evaluate import RunConfig, eval_expr
from .parser import ExprError, parse_expr
from .render import figure, render_panels


def _jsonable(x):
    if isinstance(x, float) and not math.isfinite(x):
        return "inf" if x > 0 else ("-inf" if x < 0 else "nan")
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _rec(name, value, ok=True, tol=None):
    return {"name": name, "value": value, "pass": bool(ok), "tolerance": tol}


def _exprs(args) -> list[str]:
    texts = list(getattr(args, "exprs", None) or [])
    texts += ["@" + p for p in (getattr(args, "bodies", None) or [])]
    if not texts:
        raise ExprError("no bodies given")
    return texts


def _evaluate(text, cfg):
    return eval_expr(parse_expr(text), cfg).value


def cmd_eval(args, cfg):
    ev = eval_expr(parse_expr(args.expr), cfg)
    out = [_rec("result", ev.value.summary())]
    out.append(_rec("steps", ev.steps))
    if args.print_radial:
        X = ev.value
        star = X if isinstance(X, StarBody) else sample_radial(X, cfg.sphere(X.dim))
        out.append(_rec("radial", star.radial.tolist()))
    return out


def cmd_check(args, cfg):
    fleet = checks.resolve_fleet(cfg.fleet)
    grid = cfg.sphere(2)
    suites = list(checks.SUITES) if args.suite == "all" else [args.suite]
    out = []
    for name in suites:
        fn_ = checks.SUITES[name]
        tol = cfg.tol.get("default")
        out += fn_(fleet, grid) if tol is None else fn_(fleet, grid, tol)
    return out


def cmd_volume(args, cfg):
    out = []
    for text in _exprs(args):
        X = _evaluate(text, cfg)
        if isinstance(X, StarBody):
            out.append(_rec(f"{text}:volume", fn.star_volume(X)))
        else:
            out.append(_rec(f"{text}:flower_volume", fn.flower_volume(X, cfg.sphere(X.dim))))
    return out


def cmd_mixed(args, cfg):
    texts = _exprs(args)
    bodies = [_evaluate(t, cfg) for t in texts]
    grid = cfg.sphere(bodies[0].dim)
    out = [_rec("V_flower", fn.flower_mixed_volume(fn.MixedVolumeRequest(bodies, grid)))]
    if len(bodies) == 2 and grid.dim == 2:
        try:
            out.append(_rec("V_classical", fn.classical_mixed_area_2d(*bodies)))
        except GeometryError:
            pass
    return out


def cmd_quermass(args, cfg):
    out = []
    for text in _exprs(args):
        K = _evaluate(text, cfg)
        grid = cfg.sphere(K.dim)
        for i in range(K.dim + 1):
            out.append(_rec(f"{text}:W_flower_{i}", fn.quermass_flower(K, i, grid)))
        if K.dim == 2:
            for i in range(3):
                out.append(_rec(f"{text}:W_{i}", fn.quermass_classical_2d(K, i, grid)))
        if args.kubota:
            for i in range(1, K.dim):
                est, se = fn.quermass_kubota_mc(K, i, args.kubota, cfg.seed)
                direct = fn.quermass_flower(K, K.dim - i, grid)
                ok = abs(est - direct) <= 3 * se
                out.append(_rec(f"{text}:kubota_{i}", {"estimate": est, "std_error": se,
                                                       "direct": direct}, ok, 3 * se))
    return out


def cmd_distance(args, cfg):
    X = _evaluate(args.a, cfg)
    grid = cfg.sphere(X.dim)
    Y = _evaluate(args.b, cfg) if args.b else Ball([0.0] * X.dim, 1.0)
    star = lambda Z: Z if isinstance(Z, StarBody) else (
        flower(Z, grid) if args.flowers else sample_radial(Z, grid))
    return [_rec("distance", fn.geometric_distance(star(X), star(Y)))]


def cmd_render(args, cfg):
    if args.figure:
        panels = figure(args.figure, cfg.grid)
    else:
        shapes = []
        for k, text in enumerate(_exprs(args)):
            shapes.append((_evaluate(text, cfg), "solid" if k == 0 else "dashed"))
        panels = [shapes]
    path = args.svg or "figure.svg"
    text = render_panels(panels, path)
    return [_rec("svg", path), _rec("paths", text.count("<path"))]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int, default=2)
    common.add_argument("--grid", type=int, default=4096, help="sphere grid size M")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float, default=None, help="override check tolerance")
    common.add_argument("--out", default=None, help="write JSON here instead of stdout")
    common.add_argument("--fleet", default="default",
                        help="'default' or comma-separated fleet member names")
    common.add_argument("--config", default=None, help="JSON file with RunConfig fields")

    p = argparse.ArgumentParser(prog="flowerkit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", parents=[common], help="evaluate a body expression")
    s.add_argument("expr")
    s.add_argument("--print-radial", action="store_true")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("check", parents=[common], help="run a named check suite")
    s.add_argument("suite", choices=sorted(checks.SUITES) + ["all"])
    s.set_defaults(func=cmd_check)

    for name, func, helptext in (("volume", cmd_volume, "flower or star volumes"),
                                 ("mixed", cmd_mixed, "flower mixed volume"),
                                 ("quermass", cmd_quermass, "quermassintegrals")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("exprs", nargs="*")
        s.add_argument("--bodies", nargs="+", default=None, help="body JSON files")
        if name == "quermass":
            s.add_argument("--kubota", type=int, default=0,
                           help="also run a Kubota estimate with this many subspaces")
        s.set_defaults(func=func)

    s = sub.add_parser("distance", parents=[common], help="geometric distance")
    s.add_argument("a")
    s.add_argument("b", nargs="?", default=None, help="defaults to the unit ball")
    s.add_argument("--flowers", action="store_true", help="compare the flowers of both")
    s.set_defaults(func=cmd_distance)

    s = sub.add_parser("render", parents=[common], help="write an SVG drawing")
    s.add_argument("exprs", nargs="*")
    s.add_argument("--bodies", nargs="+", default=None)
    s.add_argument("--figure", type=int, choices=(1, 2), default=None)
    s.add_argument("--svg", default=None, help="SVG output path")
    s.set_defaults(func=cmd_render)
    return p


def _config(args) -> RunConfig:
    cfg = RunConfig(dim=args.dim, grid=args.grid, seed=args.seed, out=args.out,
                    fleet=args.fleet)
    if args.tol is not None:
        cfg.tol = {"default": args.tol}
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ExprError(f"cannot read config: {exc}") from None
        unknown = set(data) - set(cfg.as_dict())
        if unknown:
            raise ExprError(f"unknown config keys: {sorted(unknown)}")
        for k, v in data.items():
            setattr(cfg, k, v)
    if cfg.grid < 8 or cfg.dim < 1:
        raise ExprError("grid must be >= 8 and dim >= 1")
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(args)
        results = args.func(args, cfg)
        code = 0 if all(r["pass"] for r in results) else 1
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GeometryError, ArithmeticError, UnboundedBody) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    doc = {"command": args.command, "config": cfg.as_dict(), "results": _jsonable(results)}
    text = json.dumps(doc, indent=1)
    if cfg.out:
        Path(cfg.out).write_text(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
